#pragma once

#include "eisres/lformal.hpp"

#include <utility>
#include <vector>

namespace eisres::normalize {

using lformal::AffineArg;
using lformal::LExpr;

/// The brace selector {x / y}_b: x for even b, y for odd b.
template <class T>
const T& parity(int b, const T& even, const T& odd) {
    return b % 2 == 0 ? even : odd;
}

/// Numerator and denominator of the spherical normalising factor a_b / b_b.
LExpr a_factor(int b);
LExpr b_factor(int b);

struct Ratio {
    LExpr numerator;
    LExpr denominator;
};

/// Expands L(s,D)L(2s,D,wedge2) / L(s+1,D)L(2s+1,D,wedge2) for D = Delta(tau,b)
/// down to cusp level and cancels.
Ratio spherical_ratio_oracle(int b);

/// gamma_b = L(2s,sym2)L(2s,wedge2)L(s+(b-1)/2) / L(2s+b-1,sym2)L(2s+b,wedge2)L(s+(b+1)/2)
LExpr gamma_factor(int b);

/// Permutation of the blocks 1..b. w_sigma sends f_i to f_{sigma(i)}.
class BlockPermutation {
public:
    /// images[k-1] = sigma(k)
    explicit BlockPermutation(std::vector<int> images);

    static BlockPermutation identity(int b);
    /// (1 b b-1 ... 2): 1 -> b, k -> k-1.
    static BlockPermutation cycle(int b);
    /// Swaps blocks i and i+1.
    static BlockPermutation adjacent_transposition(int b, int i);

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int k) const { return images_.at(static_cast<std::size_t>(k - 1)); }
    BlockPermutation inverse() const;
    const std::vector<int>& images() const { return images_; }

private:
    std::vector<int> images_;
};

using ParameterVector = std::vector<AffineArg>;

/// t_s = (s - L_1, ..., s - L_{b-1}, -s - L_1) with L = lambda_vec(b).
ParameterVector t_s(int b);

/// Positive roots f_i - f_j (i < j) made negative by sigma^{-1}, as pairs (i, j).
std::vector<std::pair<int, int>> flipped_roots(const BlockPermutation& sigma);

/// prod over flipped alpha of L(<alpha,t>, tau x tau) / L(<alpha,t>+1, tau x tau).
LExpr gk_normalizer(const BlockPermutation& sigma, const ParameterVector& t);

/// Rank-one normalising factors, returned in displayed (uncancelled) form.
LExpr r_N(int b);
LExpr r_M(int b);
LExpr lambda_holo(int b);

/// Factors with positive exponent as stored, without cancelling.
LExpr displayed_numerator(const LExpr& e);

} // namespace eisres::normalize
