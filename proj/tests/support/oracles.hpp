#pragma once

// Reference computations kept apart from the library so that agreement is
// evidence, not tautology. None of these call into eisres beyond the value types.

#include "eisres/core.hpp"
#include "eisres/lformal.hpp"

#include <map>
#include <tuple>
#include <vector>

namespace testsupport {

using eisres::half;
using eisres::Rational;

/// Half-sum of the positive roots of Sp_{2n} (n = ab) outside the Levi GL_a^b,
/// enumerated in e-coordinates, then read off per block. Returns the f-vector.
inline std::vector<Rational> rho_symplectic_by_roots(int a, int b) {
    const int n = a * b;
    std::vector<Rational> e(static_cast<std::size_t>(n));
    auto block = [a](int p) { return p / a; };
    for (int p = 0; p < n; ++p) {
        for (int q = p + 1; q < n; ++q) {
            if (block(p) != block(q)) { // e_p - e_q
                e[p] += 1;
                e[q] -= 1;
            }
            e[p] += 1; // e_p + e_q
            e[q] += 1;
        }
        e[p] += 2; // 2 e_p
    }
    std::vector<Rational> f;
    for (int k = 0; k < b; ++k) {
        Rational sum;
        for (int p = k * a; p < (k + 1) * a; ++p) sum += e[p];
        f.push_back(sum / Rational(2 * a));
    }
    return f;
}

/// The same half-sum read off the restricted roots with their multiplicities:
/// f_i - f_j and f_i + f_j each a^2, 2 f_i with a(a+1)/2. Divided by a to pass
/// from the restricted pairing to f-coordinates.
inline std::vector<Rational> rho_symplectic_by_restricted_roots(int a, int b) {
    std::vector<Rational> f(static_cast<std::size_t>(b));
    const Rational sq(a * a);
    for (int i = 0; i < b; ++i) {
        for (int j = i + 1; j < b; ++j) {
            f[i] += sq; // f_i - f_j
            f[j] -= sq;
            f[i] += sq; // f_i + f_j
            f[j] += sq;
        }
        f[i] += Rational(2) * Rational(a * (a + 1), 2);
    }
    for (auto& x : f) x /= Rational(2 * a);
    return f;
}

/// Half-sum of the positive roots of GL_{ab} outside the Levi, per block.
inline std::vector<Rational> rho_gl_by_roots(int a, int b) {
    const int n = a * b;
    std::vector<Rational> e(static_cast<std::size_t>(n));
    for (int p = 0; p < n; ++p) {
        for (int q = p + 1; q < n; ++q) {
            if (p / a != q / a) {
                e[p] += 1;
                e[q] -= 1;
            }
        }
    }
    std::vector<Rational> f;
    for (int k = 0; k < b; ++k) {
        Rational sum;
        for (int p = k * a; p < (k + 1) * a; ++p) sum += e[p];
        f.push_back(sum / Rational(2 * a));
    }
    return f;
}

/// Multiset of cusp-level symbols: (kind, slope, offset, partial) -> exponent.
using Key = std::tuple<int, Rational, Rational, bool>;
using Multiset = std::map<Key, int>;

inline void add(Multiset& m, eisres::lformal::LKind kind, Rational slope, Rational offset, int exponent,
                bool partial = false) {
    auto& slot = m[Key{static_cast<int>(kind), slope, offset, partial}];
    slot += exponent;
    if (slot == 0) m.erase(Key{static_cast<int>(kind), slope, offset, partial});
}

/// Speh expansion from the exponents of Delta(tau,b) = tau|.|^{x_1} + ... + tau|.|^{x_b},
/// x_k = (b+1-2k)/2: the standard L-function is the product over k, the
/// exterior square is prod_k wedge2(2x_k) * prod_{k<l} (tau x tau)(x_k + x_l),
/// and tau x tau = wedge2 * sym2.
inline void add_speh(Multiset& m, eisres::lformal::LKind kind, int b, Rational slope, Rational offset, int exponent) {
    using eisres::lformal::LKind;
    std::vector<Rational> x;
    for (int k = 1; k <= b; ++k) x.push_back(half(b + 1 - 2 * k));
    if (kind == LKind::Standard) {
        for (const auto& xk : x) add(m, LKind::Standard, slope, offset + xk, exponent);
        return;
    }
    for (std::size_t k = 0; k < x.size(); ++k) {
        add(m, LKind::ExtSq, slope, offset + x[k] + x[k], exponent);
        for (std::size_t l = k + 1; l < x.size(); ++l) {
            add(m, LKind::ExtSq, slope, offset + x[k] + x[l], exponent);
            add(m, LKind::SymSq, slope, offset + x[k] + x[l], exponent);
        }
    }
}

inline Multiset to_multiset(const eisres::lformal::LExpr& e) {
    Multiset m;
    for (const auto& f : e.factors()) {
        add(m, f.term.kind, f.term.arg.slope, f.term.arg.offset, f.exponent, f.term.partial);
    }
    return m;
}

/// a_b / b_b computed by multiset counting of the Speh exponents.
inline Multiset spherical_ratio(int b) {
    using eisres::lformal::LKind;
    Multiset m;
    add_speh(m, LKind::Standard, b, 1, 0, +1);
    add_speh(m, LKind::ExtSq, b, 2, 0, +1);
    add_speh(m, LKind::Standard, b, 1, 1, -1);
    add_speh(m, LKind::ExtSq, b, 2, 1, -1);
    return m;
}

} // namespace testsupport
