#include "eisres/rootsys.hpp"

#include <fmt/format.h>

#include <numeric>

namespace eisres::rootsys {

namespace {

void require_positive(int value, const char* name) {
    if (value < 1) throw std::invalid_argument(fmt::format("{} must be >= 1, got {}", name, value));
}

} // namespace

ParabolicDescriptor ParabolicDescriptor::blocks(Ambient ambient, int a, int b) {
    require_positive(a, "a");
    require_positive(b, "b");
    ParabolicDescriptor p{ambient, a * b, std::vector<int>(static_cast<std::size_t>(b), a)};
    p.validate();
    return p;
}

void ParabolicDescriptor::validate() const {
    for (int s : block_sizes) require_positive(s, "block size");
    if (std::accumulate(block_sizes.begin(), block_sizes.end(), 0) != rank) {
        throw std::invalid_argument(fmt::format("block sizes do not sum to rank {}", rank));
    }
}

BlockVector rho_siegel_levi(int a, int b) {
    require_positive(a, "a");
    require_positive(b, "b");
    std::vector<Rational> out;
    for (int k = 1; k <= b; ++k) {
        // a(b - k + 1/2) + 1/2
        out.push_back(Rational(a) * (Rational(b - k) + half(1)) + half(1));
    }
    return BlockVector(std::move(out));
}

BlockVector rho_gl_blocks(int a, int b) {
    require_positive(a, "a");
    require_positive(b, "b");
    std::vector<Rational> out;
    for (int k = 1; k <= b; ++k) out.push_back(Rational(a) * half(b + 1 - 2 * k));
    return BlockVector(std::move(out));
}

CoordVector rho_minimal_gl(int n) {
    require_positive(n, "n");
    std::vector<Rational> out;
    for (int k = 1; k <= n; ++k) out.push_back(half(n + 1 - 2 * k));
    return CoordVector(std::move(out));
}

Rational rho_siegel(int a, int b) { return half(a * b + 1); }

BlockVector lambda_vec(int b) {
    require_positive(b, "b");
    std::vector<Rational> out;
    for (int k = 1; k <= b; ++k) out.push_back(half(b + 1 - 2 * k));
    return BlockVector(std::move(out));
}

int cone_dimension(ConeKind kind, int a, int b) {
    switch (kind) {
    case ConeKind::CuspidalSymplectic:
    case ConeKind::GeneralLinearBlock: return b;
    case ConeKind::SiegelDelta: return 1;
    case ConeKind::MinimalGL: return a * b;
    }
    throw std::invalid_argument("unknown cone kind");
}

namespace {

bool gaps_exceed(const std::vector<Rational>& v, const Rational& gap) {
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        if (!(v[i] - v[i + 1] > gap)) return false;
    }
    return true;
}

} // namespace

bool cone_contains(ConeKind kind, int a, int b, const std::vector<Rational>& v) {
    require_positive(a, "a");
    require_positive(b, "b");
    auto expected = static_cast<std::size_t>(cone_dimension(kind, a, b));
    if (v.size() != expected) {
        throw DimensionError(fmt::format("cone expects dimension {}, got {}", expected, v.size()));
    }
    switch (kind) {
    case ConeKind::CuspidalSymplectic: return v.back() > half(a + 1) && gaps_exceed(v, Rational(a));
    case ConeKind::GeneralLinearBlock: return gaps_exceed(v, Rational(a));
    case ConeKind::SiegelDelta: return v.front() > rho_siegel(a, b);
    case ConeKind::MinimalGL: return gaps_exceed(v, Rational(1));
    }
    throw std::invalid_argument("unknown cone kind");
}

bool cone_contains(ConeKind kind, int a, int b, const BlockVector& v) {
    return cone_contains(kind, a, b, v.entries());
}

std::vector<BlockVector> simple_restricted_roots(Ambient ambient, int b) {
    require_positive(b, "b");
    std::vector<BlockVector> roots;
    auto n = static_cast<std::size_t>(b);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        roots.push_back(BlockVector::zero(n).with_entry(i, 1).with_entry(i + 1, -1));
    }
    if (ambient == Ambient::Symplectic) roots.push_back(BlockVector::zero(n).with_entry(n - 1, 2));
    return roots;
}

} // namespace eisres::rootsys
