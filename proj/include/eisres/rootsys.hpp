#pragma once

#include "eisres/core.hpp"

#include <vector>

namespace eisres::rootsys {

/// Ambient group of a standard parabolic.
enum class Ambient { Symplectic, GeneralLinear };

/// A standard parabolic described by its Levi block sizes. For the symplectic
/// ambient Sp_{2n} the blocks are the GL factors on the Siegel side, so they
/// sum to n in both cases.
struct ParabolicDescriptor {
    Ambient ambient;
    int rank; // n
    std::vector<int> block_sizes;

    static ParabolicDescriptor blocks(Ambient ambient, int a, int b);
    void validate() const;
};

/// Convergence cones that appear for the block parabolics.
enum class ConeKind {
    CuspidalSymplectic, // r_b > (a+1)/2, r_i - r_{i+1} > a; dimension b
    GeneralLinearBlock, // r_i - r_{i+1} > a; dimension b
    SiegelDelta,        // Re s > (ab+1)/2; dimension 1
    MinimalGL,          // mu_i - mu_{i+1} > 1; dimension ab
};

/// rho(Sp_{2ab}, P_{a^b}) in f-coordinates.
BlockVector rho_siegel_levi(int a, int b);

/// rho(GL_{ab}, P_{a^b}) in f-coordinates.
BlockVector rho_gl_blocks(int a, int b);

/// rho of the Borel of GL_n in e-coordinates.
CoordVector rho_minimal_gl(int n);

/// rho_{ab} = (ab+1)/2, the Siegel-parabolic constant.
Rational rho_siegel(int a, int b);

/// ((b-1)/2, (b-3)/2, ..., (1-b)/2)
BlockVector lambda_vec(int b);

int cone_dimension(ConeKind kind, int a, int b);

/// Strict membership; the boundary is excluded. The vector is given as plain
/// entries because the SiegelDelta cone is one-dimensional and MinimalGL lives
/// in e-coordinates.
bool cone_contains(ConeKind kind, int a, int b, const std::vector<Rational>& v);
bool cone_contains(ConeKind kind, int a, int b, const BlockVector& v);

/// {f_1-f_2, ..., f_{b-1}-f_b, 2f_b} for Symplectic, {f_i-f_{i+1}} for GeneralLinear.
std::vector<BlockVector> simple_restricted_roots(Ambient ambient, int b);

} // namespace eisres::rootsys
