#include "eisres/normalize.hpp"

#include "eisres/rootsys.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <stdexcept>

namespace eisres::normalize {

using lformal::LKind;
using lformal::LTerm;

namespace {

void require_rank(int b, int min) {
    if (b < min) throw std::invalid_argument(fmt::format("b must be >= {}, got {}", min, b));
}

LExpr L(LKind kind, Rational slope, Rational offset) {
    return LExpr(LTerm::cusp(kind, AffineArg::of_s(slope, offset)));
}

LExpr ext(Rational offset) { return L(LKind::ExtSq, 2, offset); }
LExpr sym(Rational offset) { return L(LKind::SymSq, 2, offset); }
LExpr rs(Rational offset) { return L(LKind::RankinSelberg, 2, offset); }
LExpr std_s(Rational offset) { return L(LKind::Standard, 1, offset); }

} // namespace

LExpr a_factor(int b) {
    require_rank(b, 1);
    LExpr out;
    for (int i = 1; i <= (b + 1) / 2; ++i) out *= ext(2 * i - b - 1);
    for (int i = 1; i <= b / 2; ++i) out *= sym(2 * i - b);
    out *= std_s(half(1 - b));
    return lformal::cancel(out);
}

LExpr b_factor(int b) {
    require_rank(b, 1);
    LExpr out;
    for (int i = 1; i <= (b + 1) / 2; ++i) out *= ext(b + 2 - 2 * i);
    for (int i = 1; i <= b / 2; ++i) out *= sym(b + 1 - 2 * i);
    out *= std_s(half(b + 1));
    return lformal::cancel(out);
}

Ratio spherical_ratio_oracle(int b) {
    require_rank(b, 1);
    auto speh = [b](LKind kind, Rational slope, Rational offset) {
        return LExpr(LTerm::speh_level(kind, AffineArg::of_s(slope, offset), b));
    };
    LExpr ratio = speh(LKind::Standard, 1, 0) * speh(LKind::ExtSq, 2, 0);
    ratio /= speh(LKind::Standard, 1, 1) * speh(LKind::ExtSq, 2, 1);
    auto reduced = lformal::cancel(lformal::expand_all(ratio));
    return {reduced.numerator(), reduced.denominator()};
}

LExpr gamma_factor(int b) {
    require_rank(b, 2);
    LExpr num = sym(0) * ext(0) * std_s(half(b - 1));
    LExpr den = sym(b - 1) * ext(b) * std_s(half(b + 1));
    return lformal::cancel(num / den);
}

BlockPermutation::BlockPermutation(std::vector<int> images) : images_(std::move(images)) {
    auto sorted = images_;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t k = 0; k < sorted.size(); ++k) {
        if (sorted[k] != static_cast<int>(k) + 1) throw std::invalid_argument("block permutation is not a bijection");
    }
}

BlockPermutation BlockPermutation::identity(int b) {
    require_rank(b, 1);
    std::vector<int> images;
    for (int k = 1; k <= b; ++k) images.push_back(k);
    return BlockPermutation(std::move(images));
}

BlockPermutation BlockPermutation::cycle(int b) {
    require_rank(b, 1);
    std::vector<int> images{b};
    for (int k = 2; k <= b; ++k) images.push_back(k - 1);
    return BlockPermutation(std::move(images));
}

BlockPermutation BlockPermutation::adjacent_transposition(int b, int i) {
    if (i < 1 || i >= b) throw std::invalid_argument(fmt::format("no adjacent transposition ({}, {}) in rank {}", i, i + 1, b));
    auto images = identity(b).images_;
    std::swap(images[static_cast<std::size_t>(i - 1)], images[static_cast<std::size_t>(i)]);
    return BlockPermutation(std::move(images));
}

BlockPermutation BlockPermutation::inverse() const {
    std::vector<int> inv(images_.size());
    for (std::size_t k = 0; k < images_.size(); ++k) inv[static_cast<std::size_t>(images_[k] - 1)] = static_cast<int>(k) + 1;
    return BlockPermutation(std::move(inv));
}

ParameterVector t_s(int b) {
    auto lam = rootsys::lambda_vec(b);
    ParameterVector t;
    for (int k = 0; k + 1 < b; ++k) t.push_back(AffineArg::of_s(1, -lam[static_cast<std::size_t>(k)]));
    t.push_back(AffineArg::of_s(-1, -lam[0]));
    return t;
}

std::vector<std::pair<int, int>> flipped_roots(const BlockPermutation& sigma) {
    auto inv = sigma.inverse();
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= sigma.size(); ++i) {
        for (int j = i + 1; j <= sigma.size(); ++j) {
            // sigma^{-1}(f_i - f_j) = f_{inv(i)} - f_{inv(j)}
            if (inv(i) > inv(j)) out.emplace_back(i, j);
        }
    }
    return out;
}

LExpr gk_normalizer(const BlockPermutation& sigma, const ParameterVector& t) {
    if (static_cast<int>(t.size()) != sigma.size()) {
        throw DimensionError(fmt::format("parameter has length {}, permutation acts on {} blocks", t.size(), sigma.size()));
    }
    LExpr out;
    for (auto [i, j] : flipped_roots(sigma)) {
        auto pairing = t[static_cast<std::size_t>(i - 1)] - t[static_cast<std::size_t>(j - 1)];
        out *= LExpr(LTerm::cusp(LKind::RankinSelberg, pairing));
        out /= LExpr(LTerm::cusp(LKind::RankinSelberg, pairing.plus(1)));
    }
    return lformal::cancel(out);
}

LExpr r_N(int b) {
    require_rank(b, 2);
    return std_s(half(b - 1)) * ext(b - 1) / (std_s(half(b + 1)) * ext(b));
}

LExpr r_M(int b) {
    require_rank(b, 2);
    LExpr out;
    for (int i = 1; i <= b - 1; ++i) out *= rs(i - 1) / rs(i);
    return out; // left uncancelled: the product telescopes
}

LExpr lambda_holo(int b) {
    require_rank(b, 2);
    LExpr out = ext(b - 1);
    for (int i = 1; i <= b - 1; ++i) out *= rs(i - 1);
    return out;
}

LExpr displayed_numerator(const LExpr& e) {
    std::vector<lformal::Factor> out;
    for (const auto& f : e.factors()) {
        if (f.exponent > 0) out.push_back(f);
    }
    return LExpr(std::move(out));
}

} // namespace eisres::normalize
