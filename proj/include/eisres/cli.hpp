#pragma once

#include "eisres/lformal.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace eisres::cli {

enum class Command { Poles, Normalizers, Gamma, Constterm, Exponents, CheckL2, Verify };
enum class Format { Text, Json };

Command parse_command(std::string_view name);
std::string to_string(Command c);

struct Request {
    Command command = Command::Verify;
    int a = 2;
    std::optional<int> b;
    TauType type = TauType::Symplectic;
    std::optional<int> i;
    std::optional<int> n0; // empty: unknown
    std::optional<int> depth;
    Format format = Format::Text;
    std::string vector; // check-l2 input, "x1,x2,..."
};

/// Parses "unknown" or a nonnegative integer.
std::optional<int> parse_n0(std::string_view text);

/// Exit status: 0 success, 1 verification failure, 2 argument error.
int run(const Request& request, std::ostream& out, std::ostream& err);

} // namespace eisres::cli

namespace eisres::verify {

struct Outcome {
    int checks = 0;
    std::optional<std::string> first_failure;
};

/// Oracle equivalences and invariants over the standard parameter ranges.
/// Stops at the first counterexample.
Outcome run_all();

} // namespace eisres::verify
