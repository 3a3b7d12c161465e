#include "support/printers.hpp"

#include "doctest.h"

#include "eisres/exponents.hpp"
#include "eisres/rootsys.hpp"

using namespace eisres;
using namespace eisres::exponents;

namespace {

const auto symp = TauProfile::symplectic();
const auto orth = TauProfile::orthogonal();

BlockVector halves(std::initializer_list<int> twice) {
    std::vector<Rational> out;
    for (int k : twice) out.push_back(half(k));
    return BlockVector(std::move(out));
}

std::set<BlockVector> relatives(const std::vector<CuspidalExponent>& xs) {
    std::set<BlockVector> out;
    for (const auto& x : xs) out.insert(x.relative);
    return out;
}

} // namespace

TEST_CASE("cuspidal exponents") {
    CHECK(chi_vec(4, 1, TauType::Symplectic).relative == halves({-1, -5, -3, -1}));
    CHECK(chi_vec(4, 1, TauType::Orthogonal).relative == BlockVector{-1, -2, -1, 0});
    CHECK(chi_vec(2, 0, TauType::Orthogonal).relative == BlockVector{-1, 0});
    CHECK(chi_vec(2, 0, TauType::Symplectic).relative == halves({-3, -1}));
    CHECK(chi_vec(3, 0, TauType::Orthogonal).relative == BlockVector{-2, -1, 0});
    CHECK(chi_vec(3, 0, TauType::Symplectic).relative == halves({-5, -3, -1}));
    CHECK_THROWS_AS(chi_vec(4, 2, TauType::Symplectic), std::out_of_range);
    CHECK_THROWS_AS(chi_vec(3, -1, TauType::Symplectic), std::out_of_range);
}

TEST_CASE("absolute exponents add rho") {
    auto chi = chi_vec(2, 0, TauType::Orthogonal);
    CHECK(chi.absolute(2) == add(chi.relative, rootsys::rho_siegel_levi(2, 2)));
    CHECK(chi.absolute(2) == BlockVector{Rational(5, 2), Rational(3, 2)});
}

TEST_CASE("recursion: chi_1^(b) is its first entry followed by chi_0^(b-1)") {
    for (auto type : {TauType::Symplectic, TauType::Orthogonal}) {
        for (int b = 2; b <= 10; ++b) {
            auto v = chi_formula(b, 1, type);
            std::vector<Rational> expect{v[0]};
            for (const auto& x : chi_formula(b - 1, 0, type)) expect.push_back(x);
            CHECK(v == BlockVector(expect));
        }
    }
}

TEST_CASE("shuffles") {
    auto base3 = shuffle_base(3, TauType::Symplectic);
    CHECK(base3 == halves({-3, -1, -1}));
    CHECK(allowable_shuffles(base3, shuffle_designated) == std::set<BlockVector>{halves({-3, -1, -1}), halves({-3, -1, 1})});

    auto base4 = shuffle_base(4, TauType::Orthogonal);
    CHECK(base4 == BlockVector{-2, -1, -1, 0});
    CHECK(allowable_shuffles(base4, shuffle_designated) ==
          std::set<BlockVector>{{-2, -1, -1, 0}, {-2, -1, 0, 1}, {-2, -1, 0, -1}});

    BlockVector last{-3, -2, -1};
    CHECK(allowable_shuffles(last, 2) == std::set<BlockVector>{{-3, -2, -1}, {-3, -2, 1}});
    CHECK_THROWS_AS(allowable_shuffles(last, 3), std::out_of_range);
}

TEST_CASE("shuffle structure") {
    for (auto type : {TauType::Symplectic, TauType::Orthogonal}) {
        for (int b = 3; b <= 10; ++b) {
            auto base = shuffle_base(b, type);
            auto moves = shuffle_moves(base, shuffle_designated);
            CHECK(moves.size() == base.size() - shuffle_designated + 1);
            for (const auto& m : moves) {
                CHECK(m.vector[0] == base[0]); // the prefix never moves
                CHECK(m.vector.size() == base.size());
            }
            // chi_1 and its shuffles are told apart by the first entry
            if ((b + 1) / 2 - 1 >= 1 && consterm::residue_value(b, 1, type) > Rational(0)) {
                auto chi = chi_formula(b, 1, type);
                for (const auto& m : moves) CHECK(m.vector != chi);
                CHECK(chi[0] != base[0]);
            }
        }
    }
}

TEST_CASE("square integrability") {
    CHECK(square_integrable(BlockVector{-1, 0}));
    CHECK(square_integrable(BlockVector{-2, -1, 0, 1}));
    CHECK_FALSE(square_integrable(BlockVector{1, -5}));
    CHECK_FALSE(square_integrable(BlockVector{-1, 1}));
}

TEST_CASE("residue exponent sets") {
    auto s0 = residue_exponent_sets(2, 3, 0, symp, std::nullopt);
    CHECK(relatives(s0.certain) == std::set<BlockVector>{halves({-5, -3, -1})});
    CHECK(s0.possible.empty());

    auto big = residue_exponent_sets(2, 4, 1, orth, 2);
    CHECK(relatives(big.certain) == std::set<BlockVector>{{-1, -2, -1, 0}});
    CHECK(big.possible.empty());

    auto zero = residue_exponent_sets(2, 4, 1, orth, 0);
    CHECK(relatives(zero.possible) == std::set<BlockVector>{{-2, -1, -1, 0}, {-2, -1, 0, 1}, {-2, -1, 0, -1}});

    auto b3 = residue_exponent_sets(2, 3, 1, symp, std::nullopt);
    CHECK(relatives(b3.possible) == std::set<BlockVector>{halves({-3, -1, -1}), halves({-3, -1, 1})});

    auto far = residue_exponent_sets(2, 6, 2, symp, 0);
    CHECK(far.possible_status == PossibleStatus::Unknown);
    CHECK(to_json(far)["possible"] == "unknown");
}

TEST_CASE("every certain or possible exponent at i = 0, 1 is square integrable") {
    int count = 0;
    for (const auto& base : {symp, orth}) {
        for (int a = 2; a <= 10; ++a) {
            for (int b = 2; b <= 10; ++b) {
                TauProfile p = base;
                p.a = a;
                for (const auto& pt : consterm::residue_points(b, p)) {
                    if (pt.i > 1) continue;
                    for (std::optional<int> n0 : {std::optional<int>{}, std::optional<int>{0}, std::optional<int>{1}, std::optional<int>{3}}) {
                        auto sets = residue_exponent_sets(a, b, pt.i, p, n0);
                        for (const auto* group : {&sets.certain, &sets.possible}) {
                            for (const auto& e : *group) {
                                ++count;
                                CHECK(square_integrable(e.relative));
                            }
                        }
                    }
                }
            }
        }
    }
    CHECK(count > 500);
}
