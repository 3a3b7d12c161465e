#include "support/printers.hpp"

#include "doctest.h"

#include "eisres/consterm.hpp"
#include "eisres/normalize.hpp"
#include "eisres/rootsys.hpp"

#include <algorithm>

using namespace eisres;
using namespace eisres::consterm;
using lformal::AnalyticOrder;

namespace {

const auto symp = TauProfile::symplectic();
const auto orth = TauProfile::orthogonal();

std::vector<Rational> values(const std::vector<ResiduePoint>& pts) {
    std::vector<Rational> out;
    for (const auto& p : pts) out.push_back(p.value);
    return out;
}

RationalSet set_of(std::initializer_list<Rational> xs) { return RationalSet(xs); }

} // namespace

TEST_CASE("residue points") {
    CHECK(values(residue_points(4, symp)) == std::vector<Rational>{2, 1});
    CHECK(values(residue_points(4, orth)) == std::vector<Rational>{Rational(3, 2), half(1)});
    CHECK(residue_points(1, orth).empty());
    CHECK(values(residue_points(1, symp)) == std::vector<Rational>{half(1)});
    CHECK(values(residue_points(3, symp)) == std::vector<Rational>{Rational(3, 2), half(1)});
}

TEST_CASE("shift relations") {
    CHECK(shift_relations_check(4, 1, TauType::Symplectic));
    CHECK(shift_relations_check(3, 1, TauType::Symplectic));
    CHECK(shift_relations_check(2, 0, TauType::Orthogonal));
    for (auto type : {TauType::Symplectic, TauType::Orthogonal}) {
        for (int b = 2; b <= 20; ++b) {
            for (int i = 0; i <= (b + 1) / 2 - 1; ++i) CHECK(shift_relations_check(b, i, type));
        }
    }
    CHECK_THROWS_AS(shift_relations_check(4, 2), std::out_of_range);
    CHECK_THROWS_AS(shift_relations_check(1, 0), std::out_of_range);
}

TEST_CASE("closed X") {
    CHECK(closed_X(2, symp) == set_of({1, 0, -1}));
    CHECK(closed_X(2, orth) == set_of({half(1), -half(1)}));
    CHECK(closed_X(1, orth) == set_of({0}));
    CHECK(closed_X(3, orth) == set_of({1, 0, -1}));
}

TEST_CASE("pole candidates") {
    CHECK(pole_candidates(1, symp) == set_of({half(1), -half(1)}));
    CHECK(pole_candidates(1, orth).empty());
    for (const auto& p : {symp, orth}) {
        for (int b = 1; b <= 10; ++b) {
            CAPTURE(b);
            auto cand = pole_candidates(b, p);
            auto x = closed_X(b, p);
            CHECK(std::includes(x.begin(), x.end(), cand.begin(), cand.end()));
            for (const auto& c : cand) {
                CHECK(cand.contains(-c));
                CHECK(c != Rational(0));
            }
            auto pts = residue_points(b, p);
            if (!pts.empty()) CHECK(*cand.rbegin() == pts.front().value);
            else CHECK(cand.empty());
        }
    }
}

TEST_CASE("constant-term tree") {
    const int a = 3;
    auto root = EisDescriptor::root(a, 2, orth);
    auto tree = expand_constant_term(root, 1);
    REQUIRE(tree.terms.size() == 2);
    const auto& left = tree.terms[0];
    const auto& right = tree.terms[1];
    CHECK(left.coeff.str() == "L_S(2s+1, tau, sym2)^+1");
    CHECK(right.coeff.str() == "L_S(2s, tau, sym2)^+1");
    auto off = Rational(2 * a) - half(a + 2) + Rational(1);
    CHECK(left.det_exponent == lformal::AffineArg::of_s(1, off));
    CHECK(right.det_exponent == lformal::AffineArg::of_s(-1, off));
    CHECK(left.child.at(0).desc.b == 1);
    CHECK(left.child.at(0).desc.data_tag == DataTag::Pushed);
    CHECK(left.child.at(0).desc.shift == half(1));
    CHECK(right.child.at(0).desc.data_tag == DataTag::Twisted);
    CHECK(right.child.at(0).desc.shift == -half(1));

    CHECK(expand_constant_term(root, 0).terms.empty());
    CHECK(leaf_term_count(expand_constant_term(EisDescriptor::root(2, 4, symp), 3)) == 16);
    CHECK_THROWS_AS(expand_constant_term(root, 2), std::invalid_argument);
    CHECK_THROWS_AS(expand_constant_term(root, -1), std::invalid_argument);
}

TEST_CASE("tree invariants") {
    for (int a = 1; a <= 6; ++a) {
        for (int b = 1; b <= 6; ++b) {
            // ab - (a+b)/2 + 1 = (1-b)/2 + (rho_b^(a))_1
            CHECK(Rational(a * b) - half(a + b) + 1 == half(1 - b) + rootsys::rho_siegel_levi(a, b)[0]);
            auto tree = expand_constant_term(EisDescriptor::root(a, b, symp), b - 1);
            CHECK(leaf_term_count(tree) == (1 << b));
            std::vector<const SeriesNode*> stack{&tree};
            while (!stack.empty()) {
                const auto* node = stack.back();
                stack.pop_back();
                REQUIRE(node->terms.size() == 2);
                const auto& l = node->terms[0].det_exponent;
                const auto& r = node->terms[1].det_exponent;
                CHECK(l.slope == Rational(1));
                CHECK(r.slope == Rational(-1));
                // siblings agree once the shift is taken out of s' = s + shift
                CHECK(l.offset - node->desc.shift == r.offset + node->desc.shift);
                for (const auto& t : node->terms) {
                    for (const auto& c : t.child) {
                        CHECK(c.desc.b == node->desc.b - 1);
                        stack.push_back(&c);
                    }
                }
            }
        }
    }
}

TEST_CASE("tree serialisation") {
    auto tree = expand_constant_term(EisDescriptor::root(2, 2, symp), 1);
    auto j = to_json(tree);
    CHECK(j["b"] == 2);
    CHECK(j["terms"][0]["child"]["data_tag"] == "pushed");
    CHECK(j["terms"][0]["child"]["terms"][0]["child"].is_null());
    CHECK(nlohmann::json::parse(j.dump()).dump() == j.dump());
    auto text = render_text(tree);
    CHECK(text.find("E*[a=2, b=2, original, shift=0]") == 0);
    CHECK(text.find("[right] L_S(2s, tau, sym2)^+1 * |det|^(-s+3)") != std::string::npos);
}

TEST_CASE("Laurent analysis at the rank-three interior point") {
    auto r = laurent_analysis(2, 3, symp, 1, std::nullopt);
    CHECK(r.point == half(1));
    CHECK(r.pole_order == AnalyticOrder::known(-1));
    CHECK(r.leading_term_sources == std::vector<std::string>{"left", "right"});
    CHECK(r.terms[1].total == AnalyticOrder::at_least(-1));
}

TEST_CASE("Laurent analysis at s_1 for b = 4, orthogonal") {
    auto big = laurent_analysis(2, 4, orth, 1, 2);
    CHECK(big.pole_order == AnalyticOrder::known(-1));
    CHECK(big.leading_term_sources == std::vector<std::string>{"left"});
    auto one = laurent_analysis(2, 4, orth, 1, 1);
    CHECK(one.pole_order == AnalyticOrder::known(-1));
    CHECK(one.leading_term_sources == std::vector<std::string>{"left"});
    CHECK_FALSE(one.notes.empty());
    // With the denominator b_3 read from the Speh factorisation the second
    // term is only a simple pole when n0 = 0.
    auto zero = laurent_analysis(2, 4, orth, 1, 0);
    CHECK(zero.pole_order == AnalyticOrder::known(-1));
    CHECK(zero.leading_term_sources == std::vector<std::string>{"left", "right"});
    CHECK(zero.terms[1].coefficient == AnalyticOrder::known(-1));
    CHECK(zero.terms[1].child == AnalyticOrder::known(0));
}

TEST_CASE("Laurent analysis is monotone in n0") {
    for (const auto& p : {symp, orth}) {
        for (int b = 2; b <= 8; ++b) {
            for (const auto& pt : residue_points(b, p)) {
                int prev = -100;
                for (int n0 = 0; n0 <= 4; ++n0) {
                    auto o = laurent_analysis(2, b, p, pt.i, n0).pole_order;
                    REQUIRE_FALSE(o.is_unknown());
                    CHECK(o.value() >= prev);
                    prev = o.value();
                }
            }
        }
    }
}

TEST_CASE("Laurent analysis rejects bad input") {
    CHECK_THROWS_AS(laurent_analysis(2, 4, orth, 2, 0), std::out_of_range);
    CHECK_THROWS_AS(laurent_analysis(2, 1, orth, 0, 0), std::out_of_range);
    CHECK_THROWS_AS(laurent_analysis(2, 4, orth, 1, -1), std::invalid_argument);
}
