#include "eisres/exponents.hpp"

#include "eisres/rootsys.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <stdexcept>

namespace eisres::exponents {

using nlohmann::json;

BlockVector CuspidalExponent::absolute(int a) const { return add(relative, rootsys::rho_siegel_levi(a, b)); }

BlockVector chi_formula(int b, int i, TauType type) {
    if (b < 1 || i < 0 || i > b) throw std::out_of_range(fmt::format("no exponent chi_{}^({})", i, b));
    std::vector<Rational> out;
    // Two descending runs ending at 1/2 (symplectic) or at 1 and 0 (orthogonal).
    if (type == TauType::Symplectic) {
        for (int k = i; k >= 1; --k) out.push_back(-half(2 * k - 1));
        for (int k = b - i; k >= 1; --k) out.push_back(-half(2 * k - 1));
    } else {
        for (int k = i; k >= 1; --k) out.push_back(Rational(-k));
        for (int k = b - 1 - i; k >= 0; --k) out.push_back(Rational(-k));
    }
    return BlockVector(std::move(out));
}

CuspidalExponent chi_vec(int b, int i, TauType type) {
    if (b < 1 || i < 0 || i > (b + 1) / 2 - 1) {
        throw std::out_of_range(fmt::format("i must be in [0, {}] for b={}, got {}", (b + 1) / 2 - 1, b, i));
    }
    return {chi_formula(b, i, type), b, fmt::format("chi_{}", i)};
}

std::vector<ShuffleMove> shuffle_moves(const BlockVector& v, std::size_t designated) {
    if (designated >= v.size()) throw std::out_of_range("designated entry out of range");
    std::vector<ShuffleMove> out;
    auto entries = v.entries();
    for (std::size_t pos = designated; pos < entries.size(); ++pos) {
        if (pos > designated) std::swap(entries[pos - 1], entries[pos]);
        out.push_back({BlockVector(entries), pos == designated ? "stay" : fmt::format("to {}", pos + 1)});
    }
    entries.back() = -entries.back();
    out.push_back({BlockVector(entries), fmt::format("to {}, sign flipped", entries.size())});
    return out;
}

std::set<BlockVector> allowable_shuffles(const BlockVector& v, std::size_t designated) {
    std::set<BlockVector> out;
    for (auto& m : shuffle_moves(v, designated)) out.insert(m.vector);
    return out;
}

BlockVector shuffle_base(int b, TauType type) {
    if (b < 2) throw std::invalid_argument("shuffle base needs b >= 2");
    std::vector<Rational> out{-consterm::residue_value(b, 1, type) + half(1 - b)};
    for (const auto& x : chi_formula(b - 1, 1, type)) out.push_back(x);
    return BlockVector(std::move(out));
}

bool square_integrable(const BlockVector& relative) {
    auto sums = prefix_sums(relative);
    return std::all_of(sums.begin(), sums.end(), [](const Rational& x) { return x < Rational(0); });
}

ExponentSets residue_exponent_sets(int a, int b, int i, const TauProfile& profile, std::optional<int> n0) {
    if (a < 1) throw std::invalid_argument("a must be >= 1");
    ExponentSets sets;
    sets.certain.push_back(chi_vec(b, i, profile.type));
    if (i == 0) {
        sets.rule = "endpoint: single exponent";
        return sets;
    }
    if (i >= 2) {
        sets.possible_status = PossibleStatus::Unknown;
        sets.rule = "shuffles for i >= 2 are not determined";
        return sets;
    }
    auto report = consterm::laurent_analysis(a, b, profile, i, n0);
    const auto& src = report.leading_term_sources;
    sets.rule = "rightward move of the designated entry, sign flip in the final slot (interpretation)";
    if (std::find(src.begin(), src.end(), "right") == src.end()) return sets;
    for (auto& m : shuffle_moves(shuffle_base(b, profile.type), shuffle_designated)) {
        bool seen = std::any_of(sets.possible.begin(), sets.possible.end(),
                                [&](const CuspidalExponent& c) { return c.relative == m.vector; });
        if (!seen) sets.possible.push_back({m.vector, b, "shuffle: " + m.move});
    }
    return sets;
}

namespace {

json vectors(const std::vector<CuspidalExponent>& xs) {
    json out = json::array();
    for (const auto& x : xs) {
        json entries = json::array();
        for (const auto& r : x.relative) entries.push_back(r.str());
        out.push_back({{"relative", entries}, {"provenance", x.provenance}});
    }
    return out;
}

} // namespace

json to_json(const ExponentSets& sets) {
    json possible = sets.possible_status == PossibleStatus::Unknown ? json("unknown") : vectors(sets.possible);
    return {{"certain", vectors(sets.certain)}, {"possible", possible}, {"rule", sets.rule}};
}

std::string render_text(const ExponentSets& sets) {
    std::string out;
    for (const auto& c : sets.certain) out += fmt::format("certain: {} [{}]\n", c.relative.str(), c.provenance);
    if (sets.possible_status == PossibleStatus::Unknown) {
        out += "possible: unknown\n";
    } else if (sets.possible.empty()) {
        out += "possible: none\n";
    } else {
        for (const auto& c : sets.possible) out += fmt::format("possible: {} [{}]\n", c.relative.str(), c.provenance);
    }
    out += "rule: " + sets.rule + "\n";
    return out;
}

} // namespace eisres::exponents
