#include "eisres/cli.hpp"

#include "eisres/consterm.hpp"
#include "eisres/exponents.hpp"
#include "eisres/normalize.hpp"

#include <fmt/format.h>

#include <ostream>
#include <stdexcept>

namespace eisres::cli {

using nlohmann::json;

namespace {

struct ArgumentError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

constexpr const char* usage =
    "usage: eisres <poles|normalizers|gamma|constterm|exponents|check-l2|verify> "
    "[--a A] [--b B] [--type symplectic|orthogonal] [--i I] [--n0 N|unknown] [--depth D] "
    "[--format text|json] [--vector V]";

int need_b(const Request& r, int min) {
    if (!r.b) throw ArgumentError(fmt::format("{} requires --b", to_string(r.command)));
    if (*r.b < min) throw ArgumentError(fmt::format("{} requires --b >= {}", to_string(r.command), min));
    return *r.b;
}

json rationals(const consterm::RationalSet& xs) {
    json out = json::array();
    for (auto it = xs.rbegin(); it != xs.rend(); ++it) out.push_back(it->str());
    return out;
}

std::string braces(const consterm::RationalSet& xs) {
    std::string out;
    for (auto it = xs.rbegin(); it != xs.rend(); ++it) out += (out.empty() ? "" : ", ") + it->str();
    return "{" + out + "}";
}

void emit(const Request& r, std::ostream& out, const json& j, const std::string& text) {
    if (r.format == Format::Json) out << j.dump(2) << "\n";
    else out << text;
}

void poles(const Request& r, std::ostream& out) {
    const int b = need_b(r, 1);
    TauProfile profile{r.a, r.type, true};
    auto x = consterm::closed_X(b, profile);
    auto cand = consterm::pole_candidates(b, profile);
    json points = json::array();
    std::string text = fmt::format("X_b: {}\ncandidates: {}\n", braces(x), braces(cand));
    for (const auto& p : consterm::residue_points(b, profile)) {
        points.push_back({{"i", p.i}, {"value", p.value.str()}});
        text += fmt::format("s_{}^({}) = {}\n", p.i, b, p.value.str());
    }
    json j{{"b", b}, {"type", to_string(r.type)}, {"x_b", rationals(x)}, {"candidates", rationals(cand)},
           {"residue_points", points}};
    emit(r, out, j, text);
}

void normalizers(const Request& r, std::ostream& out, bool gamma_only) {
    const int b = need_b(r, gamma_only ? 2 : 1);
    std::vector<std::pair<std::string, lformal::LExpr>> rows;
    if (!gamma_only) {
        rows.emplace_back(fmt::format("a_{}", b), normalize::a_factor(b));
        rows.emplace_back(fmt::format("b_{}", b), normalize::b_factor(b));
    }
    if (b >= 2) {
        rows.emplace_back(fmt::format("gamma_{}", b), normalize::gamma_factor(b));
        if (!gamma_only) {
            rows.emplace_back(fmt::format("r_N_{}", b), normalize::r_N(b));
            rows.emplace_back(fmt::format("r_M_{}", b), normalize::r_M(b));
            rows.emplace_back(fmt::format("lambda_{}", b), normalize::lambda_holo(b));
        }
    }
    json j{{"b", b}};
    std::string text;
    for (const auto& [name, e] : rows) {
        j[name] = e.str();
        text += fmt::format("{} = {}\n", name, e.str());
    }
    emit(r, out, j, text);
}

void constterm(const Request& r, std::ostream& out) {
    const int b = need_b(r, 1);
    TauProfile profile{r.a, r.type, true};
    auto root = consterm::EisDescriptor::root(r.a, b, profile);
    auto tree = consterm::expand_constant_term(root, r.depth.value_or(b - 1));
    json j{{"tree", consterm::to_json(tree)}};
    std::string text = consterm::render_text(tree);
    if (r.i) {
        auto report = consterm::laurent_analysis(r.a, b, profile, *r.i, r.n0);
        j["laurent"] = consterm::to_json(report);
        text += consterm::render_text(report);
    }
    emit(r, out, j, text);
}

void exponent_sets(const Request& r, std::ostream& out) {
    const int b = need_b(r, 1);
    if (!r.i) throw ArgumentError("exponents requires --i");
    auto sets = exponents::residue_exponent_sets(r.a, b, *r.i, TauProfile{r.a, r.type, true}, r.n0);
    emit(r, out, exponents::to_json(sets), exponents::render_text(sets));
}

void check_l2(const Request& r, std::ostream& out) {
    if (r.vector.empty()) throw ArgumentError("check-l2 requires --vector");
    auto v = parse_block_vector(r.vector);
    if (v.size() == 0) throw ArgumentError("--vector is empty");
    bool ok = exponents::square_integrable(v);
    json sums = json::array();
    for (const auto& x : prefix_sums(v)) sums.push_back(x.str());
    emit(r, out, json{{"prefix_sums", sums}, {"square_integrable", ok}},
         fmt::format("square-integrable: {}\n", ok ? "true" : "false"));
}

int verify_all(const Request& r, std::ostream& out) {
    auto outcome = verify::run_all();
    json j{{"checks", outcome.checks}, {"passed", !outcome.first_failure}};
    if (outcome.first_failure) j["counterexample"] = *outcome.first_failure;
    std::string text = outcome.first_failure
                           ? fmt::format("FAIL after {} checks: {}\n", outcome.checks, *outcome.first_failure)
                           : fmt::format("verify: {} checks passed\n", outcome.checks);
    emit(r, out, j, text);
    return outcome.first_failure ? 1 : 0;
}

} // namespace

Command parse_command(std::string_view name) {
    for (auto c : {Command::Poles, Command::Normalizers, Command::Gamma, Command::Constterm, Command::Exponents,
                   Command::CheckL2, Command::Verify}) {
        if (to_string(c) == name) return c;
    }
    throw std::invalid_argument(fmt::format("unknown command '{}'", name));
}

std::string to_string(Command c) {
    switch (c) {
    case Command::Poles: return "poles";
    case Command::Normalizers: return "normalizers";
    case Command::Gamma: return "gamma";
    case Command::Constterm: return "constterm";
    case Command::Exponents: return "exponents";
    case Command::CheckL2: return "check-l2";
    case Command::Verify: return "verify";
    }
    return "?";
}

std::optional<int> parse_n0(std::string_view text) {
    if (text == "unknown") return std::nullopt;
    auto v = Rational::parse(text);
    if (!v.is_integer() || v.sign() < 0) throw std::invalid_argument(fmt::format("n0 must be a nonnegative integer or 'unknown', got '{}'", text));
    return static_cast<int>(v.num());
}

int run(const Request& r, std::ostream& out, std::ostream& err) {
    try {
        if (r.a < 1) throw ArgumentError("--a must be >= 1");
        switch (r.command) {
        case Command::Poles: poles(r, out); return 0;
        case Command::Normalizers: normalizers(r, out, false); return 0;
        case Command::Gamma: normalizers(r, out, true); return 0;
        case Command::Constterm: constterm(r, out); return 0;
        case Command::Exponents: exponent_sets(r, out); return 0;
        case Command::CheckL2: check_l2(r, out); return 0;
        case Command::Verify: return verify_all(r, out);
        }
    } catch (const std::logic_error& e) {
        // invalid_argument, out_of_range and domain_error all mean bad input here
        err << "error: " << e.what() << "\n" << usage << "\n";
        return 2;
    }
    return 2;
}

} // namespace eisres::cli
