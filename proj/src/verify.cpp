#include "eisres/cli.hpp"
#include "eisres/consterm.hpp"
#include "eisres/exponents.hpp"
#include "eisres/normalize.hpp"
#include "eisres/rootsys.hpp"

#include <fmt/format.h>

#include <algorithm>

namespace eisres::verify {

using lformal::LExpr;
using lformal::LKind;
using lformal::LTerm;

namespace {

class Checker {
public:
    bool ok() const { return !outcome_.first_failure; }

    void check(bool cond, const std::string& what) {
        if (!ok()) return;
        ++outcome_.checks;
        if (!cond) outcome_.first_failure = what;
    }

    Outcome result() const { return outcome_; }

private:
    Outcome outcome_;
};

LExpr L2(LKind kind, int offset) { return LExpr(LTerm::cusp(kind, lformal::AffineArg::of_s(2, offset))); }

bool share_factor(const LExpr& num, const LExpr& den) {
    for (const auto& f : num.factors()) {
        for (const auto& g : den.factors()) {
            if (f.term == g.term) return true;
        }
    }
    return false;
}

void normalizing_factors(Checker& c) {
    using namespace normalize;
    for (int b = 1; b <= 8; ++b) {
        auto ratio = spherical_ratio_oracle(b);
        c.check(ratio.numerator == a_factor(b) && ratio.denominator == b_factor(b),
                fmt::format("chart expansion b={}: got {} / {}, closed form {} / {}", b, ratio.numerator.str(),
                            ratio.denominator.str(), a_factor(b).str(), b_factor(b).str()));
        c.check(!share_factor(ratio.numerator, ratio.denominator), fmt::format("chart ratio b={} not reduced", b));
    }
    for (int b = 2; b <= 8; ++b) {
        auto lhs = a_factor(b) / b_factor(b) * b_factor(b - 1).shifted(-half(1)) / a_factor(b - 1).shifted(-half(1));
        c.check(lhs == gamma_factor(b), fmt::format("gamma consistency b={}: {}", b, lformal::cancel(lhs).str()));

        auto expected_kind = parity(b, LKind::SymSq, LKind::ExtSq);
        auto r1 = b_factor(b) / b_factor(b - 1).shifted(half(1));
        c.check(r1 == L2(expected_kind, 1), fmt::format("ratio identity I b={}: {}", b, lformal::cancel(r1).str()));
        auto r2 = b_factor(b) / b_factor(b - 1).shifted(-half(1)) * gamma_factor(b);
        c.check(r2 == L2(expected_kind, 0), fmt::format("ratio identity II b={}: {}", b, lformal::cancel(r2).str()));

        auto sigma = BlockPermutation::cycle(b);
        c.check(gk_normalizer(sigma, t_s(b)) == r_M(b), fmt::format("GK product b={}", b));
        std::vector<std::pair<int, int>> expected;
        for (int i = 1; i < b; ++i) expected.emplace_back(i, b);
        c.check(flipped_roots(sigma) == expected, fmt::format("GK flipped set b={}", b));
    }
}

void pole_sets(Checker& c) {
    for (auto type : {TauType::Symplectic, TauType::Orthogonal}) {
        TauProfile profile{2, type, true};
        for (int b = 1; b <= 10; ++b) {
            auto cand = consterm::pole_candidates(b, profile);
            auto x = consterm::closed_X(b, profile);
            bool contained = std::includes(x.begin(), x.end(), cand.begin(), cand.end());
            c.check(contained, fmt::format("pole candidates b={} {} not inside X_b", b, to_string(type)));
            auto pts = consterm::residue_points(b, profile);
            if (!cand.empty() && *cand.rbegin() > Rational(0)) {
                c.check(!pts.empty() && *cand.rbegin() == pts.front().value,
                        fmt::format("endpoint b={} {}", b, to_string(type)));
            }
        }
        for (int b = 2; b <= 20; ++b) {
            for (int i = 0; i <= (b + 1) / 2 - 1; ++i) {
                c.check(consterm::shift_relations_check(b, i, type), fmt::format("shift relation b={} i={}", b, i));
            }
        }
    }
}

void exponent_checks(Checker& c) {
    for (auto type : {TauType::Symplectic, TauType::Orthogonal}) {
        TauProfile profile{2, type, true};
        for (int b = 2; b <= 10; ++b) {
            auto head = exponents::chi_formula(b, 1, type)[0];
            std::vector<Rational> expect{head};
            for (const auto& x : exponents::chi_formula(b - 1, 0, type)) expect.push_back(x);
            c.check(exponents::chi_formula(b, 1, type) == BlockVector(expect),
                    fmt::format("chi recursion b={} {}", b, to_string(type)));
            for (int a = 2; a <= 10; ++a) {
                profile.a = a;
                for (const auto& p : consterm::residue_points(b, profile)) {
                    if (p.i > 1) continue;
                    for (std::optional<int> n0 : {std::optional<int>{}, std::optional<int>{0}, std::optional<int>{2}}) {
                        auto sets = exponents::residue_exponent_sets(a, b, p.i, profile, n0);
                        for (const auto* group : {&sets.certain, &sets.possible}) {
                            for (const auto& e : *group) {
                                c.check(exponents::square_integrable(e.relative),
                                        fmt::format("not square integrable: {} (a={}, b={}, i={})", e.relative.str(), a, b, p.i));
                            }
                        }
                    }
                }
            }
        }
    }
}

void laurent_monotone(Checker& c) {
    for (auto type : {TauType::Symplectic, TauType::Orthogonal}) {
        TauProfile profile{2, type, true};
        for (int b = 2; b <= 8; ++b) {
            for (const auto& p : consterm::residue_points(b, profile)) {
                int prev = -1000;
                for (int n0 = 0; n0 <= 4; ++n0) {
                    auto order = consterm::laurent_analysis(2, b, profile, p.i, n0).pole_order;
                    if (order.is_unknown()) continue;
                    c.check(order.value() >= prev, fmt::format("monotonicity b={} i={} n0={}", b, p.i, n0));
                    prev = order.value();
                }
            }
        }
    }
}

void rho_checks(Checker& c) {
    for (int a = 1; a <= 20; ++a) {
        for (int b = 1; b <= 20; ++b) {
            auto rho = rootsys::rho_siegel_levi(a, b);
            auto shifted = add(rootsys::rho_gl_blocks(a, b), BlockVector::constant(static_cast<std::size_t>(b), rootsys::rho_siegel(a, b)));
            c.check(rho == shifted, fmt::format("rho identity a={} b={}", a, b));
            c.check(Rational(a * b) - half(a + b) + Rational(1) == half(1 - b) + rho[0],
                    fmt::format("det exponent identity a={} b={}", a, b));
        }
    }
}

} // namespace

Outcome run_all() {
    Checker c;
    normalizing_factors(c);
    pole_sets(c);
    exponent_checks(c);
    laurent_monotone(c);
    rho_checks(c);
    return c.result();
}

} // namespace eisres::verify
