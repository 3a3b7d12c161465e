#include "eisres/cli.hpp"

#include "CLI11.hpp"

#include <iostream>

int main(int argc, char** argv) {
    using namespace eisres;

    CLI::App app{"Symbolic residue bookkeeping for Siegel-type Eisenstein series"};
    app.require_subcommand(1);

    cli::Request req;
    std::string type = "symplectic";
    std::string format = "text";
    std::string n0 = "unknown";
    int b = 0;
    int i = 0;
    int depth = 0;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--a", req.a, "block size a (rank of GL_a)")->capture_default_str();
        sub->add_option("--b", b, "number of blocks b");
        sub->add_option("--type", type, "tau type")->check(CLI::IsMember({"symplectic", "orthogonal"}))->capture_default_str();
        sub->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
        sub->add_option("--i", i, "residue point index");
        sub->add_option("--n0", n0, "order of vanishing at the origin, or 'unknown'")->capture_default_str();
        sub->add_option("--depth", depth, "tree depth (default b-1)");
        sub->add_option("--vector", req.vector, "relative exponent, comma separated");
    };

    std::vector<CLI::App*> subs;
    for (auto c : {cli::Command::Poles, cli::Command::Normalizers, cli::Command::Gamma, cli::Command::Constterm,
                   cli::Command::Exponents, cli::Command::CheckL2, cli::Command::Verify}) {
        auto* sub = app.add_subcommand(cli::to_string(c));
        add_common(sub);
        subs.push_back(sub);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    for (auto* sub : subs) {
        if (!sub->parsed()) continue;
        req.command = cli::parse_command(sub->get_name());
        if (sub->count("--b")) req.b = b;
        if (sub->count("--i")) req.i = i;
        if (sub->count("--depth")) req.depth = depth;
    }
    req.type = parse_tau_type(type);
    req.format = format == "json" ? cli::Format::Json : cli::Format::Text;
    try {
        req.n0 = cli::parse_n0(n0);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return cli::run(req, std::cout, std::cerr);
}
