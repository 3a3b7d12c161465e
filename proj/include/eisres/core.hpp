#pragma once

#include <boost/rational.hpp>

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace eisres {

/// Raised when two vectors of different length are combined.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Exact rational number, always reduced with a positive denominator.
class Rational {
public:
    using Int = std::int64_t;

    constexpr Rational() = default;
    Rational(Int n) : v_(n) {} // NOLINT: implicit from integers is intended
    Rational(Int n, Int d);

    Int num() const { return v_.numerator(); }
    Int den() const { return v_.denominator(); }

    bool is_integer() const { return den() == 1; }
    bool is_half_integer() const { return den() <= 2; }
    int sign() const { return num() > 0 ? 1 : (num() < 0 ? -1 : 0); }

    Rational operator-() const { return Rational(-v_); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    /// "p/q", or "n" when integral.
    std::string str() const;
    /// Accepts "n", "-n", "p/q"; the result is reduced.
    static Rational parse(std::string_view text);

    /// Re-reduces the stored value. Storage is always reduced, so this is the identity.
    Rational reduced() const { return Rational(num(), den()); }

private:
    explicit Rational(boost::rational<Int> v) : v_(v) {}
    boost::rational<Int> v_;
};

Rational half(Rational::Int n);

/// Coordinate system a vector lives in: the block coordinates f_1..f_b or the
/// individual coordinates e_1..e_{ab}.
enum class Basis { Block, Coordinate };

/// Immutable exact vector tagged with its basis. Vectors in different bases
/// have different types and cannot be combined.
template <Basis B>
class RationalVector {
public:
    static constexpr Basis basis = B;

    RationalVector() = default;
    explicit RationalVector(std::vector<Rational> entries) : entries_(std::move(entries)) {}
    RationalVector(std::initializer_list<Rational> entries) : entries_(entries) {}

    static RationalVector zero(std::size_t n) { return RationalVector(std::vector<Rational>(n)); }
    static RationalVector constant(std::size_t n, Rational c) { return RationalVector(std::vector<Rational>(n, c)); }

    std::size_t size() const { return entries_.size(); }
    const Rational& operator[](std::size_t i) const { return entries_.at(i); }
    const std::vector<Rational>& entries() const { return entries_; }
    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

    RationalVector negated() const;
    RationalVector reversed() const { return RationalVector(std::vector<Rational>(entries_.rbegin(), entries_.rend())); }
    RationalVector scaled(const Rational& c) const;
    RationalVector with_entry(std::size_t i, Rational value) const;

    /// "(a, b, c)"
    std::string str() const;

    friend bool operator==(const RationalVector&, const RationalVector&) = default;
    friend auto operator<=>(const RationalVector& a, const RationalVector& b) { return a.entries_ <=> b.entries_; }

private:
    std::vector<Rational> entries_;
};

using BlockVector = RationalVector<Basis::Block>;
using CoordVector = RationalVector<Basis::Coordinate>;

template <Basis B>
RationalVector<B> add(const RationalVector<B>& u, const RationalVector<B>& v);

template <Basis B>
RationalVector<B> subtract(const RationalVector<B>& u, const RationalVector<B>& v);

template <Basis B>
Rational dot(const RationalVector<B>& u, const RationalVector<B>& v);

/// (v_1, v_1+v_2, ..., v_1+...+v_n)
template <Basis B>
std::vector<Rational> prefix_sums(const RationalVector<B>& v);

/// Parses "a,b,c" (optionally wrapped in parentheses, whitespace ignored).
BlockVector parse_block_vector(std::string_view text);

} // namespace eisres
