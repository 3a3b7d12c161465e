#pragma once

#include "eisres/core.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace eisres {

/// Which of L(s,tau,wedge2), L(s,tau,sym2) carries the pole at s = 1.
enum class TauType { Symplectic, Orthogonal };

/// Discrete data of the inducing cusp form tau on GL_a. No automorphic data is
/// ever read; the engine only needs the type and the stated nonvanishing facts.
struct TauProfile {
    int a = 2;
    TauType type = TauType::Symplectic;
    bool central_value_nonzero = true; // L(1/2, tau) != 0

    static TauProfile symplectic(int a = 2) { return {a, TauType::Symplectic, true}; }
    static TauProfile orthogonal(int a = 2) { return {a, TauType::Orthogonal, true}; }
};

std::string to_string(TauType t);
TauType parse_tau_type(std::string_view text);

namespace lformal {

/// slope * s + offset.
struct AffineArg {
    Rational slope;
    Rational offset;

    static AffineArg of_s(Rational slope, Rational offset = {}) { return {slope, offset}; }
    static AffineArg constant(Rational c) { return {Rational(0), c}; }

    Rational at(const Rational& s) const { return slope * s + offset; }
    /// Substitutes s -> s + ds.
    AffineArg shifted(const Rational& ds) const { return {slope, offset + slope * ds}; }
    AffineArg plus(const Rational& c) const { return {slope, offset + c}; }
    AffineArg operator-(const AffineArg& o) const { return {slope - o.slope, offset - o.offset}; }
    AffineArg operator+(const AffineArg& o) const { return {slope + o.slope, offset + o.offset}; }

    /// "2s+1", "s-1/2", "-s", "3/2"
    std::string str() const;
    static AffineArg parse(std::string_view text);

    friend bool operator==(const AffineArg&, const AffineArg&) = default;
    friend auto operator<=>(const AffineArg&, const AffineArg&) = default;
};

enum class LKind { Standard, ExtSq, SymSq, RankinSelberg };

std::string to_string(LKind k);

/// One formal L-function symbol. `speh` holds b for a symbol attached to the
/// Speh representation Delta(tau, b); empty means the cusp form tau itself.
struct LTerm {
    LKind kind = LKind::Standard;
    AffineArg arg;
    std::optional<int> speh;
    bool partial = false; // L_S versus the completed L

    static LTerm cusp(LKind kind, AffineArg arg, bool partial = false) { return {kind, arg, std::nullopt, partial}; }
    static LTerm speh_level(LKind kind, AffineArg arg, int b, bool partial = false) { return {kind, arg, b, partial}; }

    bool is_cusp() const { return !speh.has_value(); }
    LTerm with_arg(AffineArg a) const { return {kind, a, speh, partial}; }

    /// "L(2s+1, tau, wedge2)", "L_S(s, Delta_2, std)"
    std::string str() const;

    friend bool operator==(const LTerm&, const LTerm&) = default;
};

/// Canonical display order: wedge2, sym2, tauxtau, std; then level, then
/// descending argument.
bool canonical_less(const LTerm& x, const LTerm& y);

struct Factor {
    LTerm term;
    int exponent = 1;
    friend bool operator==(const Factor&, const Factor&) = default;
};

/// Formal product of L-symbols with signed integer exponents. Factors are kept
/// in the order they were multiplied in; `cancel` produces the canonical form.
/// Equality compares canonical forms.
class LExpr {
public:
    LExpr() = default;
    explicit LExpr(LTerm t, int exponent = 1) { factors_.push_back({std::move(t), exponent}); }
    explicit LExpr(std::vector<Factor> factors) : factors_(std::move(factors)) {}

    const std::vector<Factor>& factors() const { return factors_; }
    std::size_t size() const { return factors_.size(); }
    bool has_speh() const;

    LExpr& operator*=(const LExpr& o);
    LExpr& operator/=(const LExpr& o);
    friend LExpr operator*(LExpr a, const LExpr& b) { return a *= b; }
    friend LExpr operator/(LExpr a, const LExpr& b) { return a /= b; }
    LExpr inverse() const;

    /// Substitutes s -> s + ds in every argument.
    LExpr shifted(const Rational& ds) const;

    /// Canonical positive and negative parts, both returned with positive exponents.
    LExpr numerator() const;
    LExpr denominator() const;
    bool is_unit() const;
    /// Sum of absolute exponents of the stored factors.
    int factor_count() const;

    /// `L(2s+1, tau, wedge2)^+1 * L(s+3/2, tau, std)^-1`, or "1" for the empty product.
    std::string str() const;
    static LExpr parse(std::string_view text);

    friend bool operator==(const LExpr& a, const LExpr& b);

private:
    std::vector<Factor> factors_;
};

/// L(x, tau x tau) -> L(x, tau, wedge2) L(x, tau, sym2).
LExpr rs_split(const LTerm& t);

/// Replaces every cusp-level Rankin-Selberg symbol by its split.
LExpr split_rankin_selberg(const LExpr& e);

/// Factorises a Speh-level symbol into cusp-level symbols.
///   L(x, Delta_b)         = prod_i L(x + (b+1-2i)/2, tau)
///   L(x, Delta_b, wedge2) = prod_i L(x + b+1-2i, tau, wedge2)
///                           * prod_{i<j} L(x + b+1-(i+j), tau x tau)
/// Rankin-Selberg factors are split unless `split_rs` is false.
LExpr expand_speh(const LTerm& t, bool split_rs = true);

/// Expands every Speh-level factor of `e`.
LExpr expand_all(const LExpr& e, bool split_rs = true);

/// Merges equal symbols, drops zero exponents and sorts into canonical order
/// (numerator factors first).
LExpr cancel(const LExpr& e);

/// Pole/zero order at a point. Known(k): zero of order k (k > 0), pole of
/// order -k (k < 0), regular nonzero (k = 0). AtLeast(k): the order is >= k.
class AnalyticOrder {
public:
    enum class Tag { Known, AtLeast, Unknown };

    static AnalyticOrder known(int k) { return {Tag::Known, k}; }
    static AnalyticOrder at_least(int k) { return {Tag::AtLeast, k}; }
    static AnalyticOrder unknown() { return {Tag::Unknown, 0}; }

    Tag tag() const { return tag_; }
    /// The order for Known, the lower bound for AtLeast.
    int value() const { return value_; }
    bool is_known() const { return tag_ == Tag::Known; }
    bool is_unknown() const { return tag_ == Tag::Unknown; }
    /// True unless the order is provably >= 0.
    bool may_be_pole() const { return tag_ == Tag::Unknown || value_ < 0; }

    AnalyticOrder operator+(const AnalyticOrder& o) const;
    AnalyticOrder scaled(int m) const;

    /// "Known(-1)", "AtLeast(0)", "Unknown"
    std::string str() const;

    friend bool operator==(const AnalyticOrder&, const AnalyticOrder&) = default;

private:
    AnalyticOrder(Tag t, int v) : tag_(t), value_(v) {}
    Tag tag_;
    int value_;
};

/// Order of a single cusp-level symbol at s = point.
AnalyticOrder order_at(const LTerm& t, const Rational& point, const TauProfile& profile);

/// Sum of per-factor orders weighted by exponent. Throws on Speh-level factors.
AnalyticOrder order_at(const LExpr& e, const Rational& point, const TauProfile& profile);

} // namespace lformal
} // namespace eisres
