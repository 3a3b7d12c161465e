#include "eisres/core.hpp"

#include <charconv>
#include <fmt/format.h>

namespace eisres {

Rational::Rational(Int n, Int d) {
    if (d == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    v_ = boost::rational<Int>(n, d);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num() == 0) {
        throw std::domain_error("division by zero rational");
    }
    v_ /= o.v_;
    return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.v_ == b.v_) return std::strong_ordering::equal;
    return a.v_ < b.v_ ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::string Rational::str() const {
    if (is_integer()) return fmt::format("{}", num());
    return fmt::format("{}/{}", num(), den());
}

namespace {

Rational::Int parse_int(std::string_view s, std::string_view whole) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    Rational::Int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
        throw std::invalid_argument(fmt::format("not a rational: '{}'", whole));
    }
    return value;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

} // namespace

Rational Rational::parse(std::string_view text) {
    auto t = trim(text);
    auto slash = t.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(t, text));
    return Rational(parse_int(trim(t.substr(0, slash)), text), parse_int(trim(t.substr(slash + 1)), text));
}

Rational half(Rational::Int n) { return Rational(n, 2); }

template <Basis B>
RationalVector<B> RationalVector<B>::negated() const {
    return scaled(Rational(-1));
}

template <Basis B>
RationalVector<B> RationalVector<B>::scaled(const Rational& c) const {
    std::vector<Rational> out;
    out.reserve(entries_.size());
    for (const auto& x : entries_) out.push_back(x * c);
    return RationalVector(std::move(out));
}

template <Basis B>
RationalVector<B> RationalVector<B>::with_entry(std::size_t i, Rational value) const {
    auto out = entries_;
    out.at(i) = value;
    return RationalVector(std::move(out));
}

template <Basis B>
std::string RationalVector<B>::str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) out += ", ";
        out += entries_[i].str();
    }
    return out + ")";
}

namespace {

template <Basis B>
void require_same_size(const RationalVector<B>& u, const RationalVector<B>& v) {
    if (u.size() != v.size()) {
        throw DimensionError(fmt::format("vector lengths differ: {} vs {}", u.size(), v.size()));
    }
}

} // namespace

template <Basis B>
RationalVector<B> add(const RationalVector<B>& u, const RationalVector<B>& v) {
    require_same_size(u, v);
    std::vector<Rational> out;
    out.reserve(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) out.push_back(u[i] + v[i]);
    return RationalVector<B>(std::move(out));
}

template <Basis B>
RationalVector<B> subtract(const RationalVector<B>& u, const RationalVector<B>& v) {
    return add(u, v.negated());
}

template <Basis B>
Rational dot(const RationalVector<B>& u, const RationalVector<B>& v) {
    require_same_size(u, v);
    Rational acc;
    for (std::size_t i = 0; i < u.size(); ++i) acc += u[i] * v[i];
    return acc;
}

template <Basis B>
std::vector<Rational> prefix_sums(const RationalVector<B>& v) {
    std::vector<Rational> out;
    out.reserve(v.size());
    Rational acc;
    for (const auto& x : v) {
        acc += x;
        out.push_back(acc);
    }
    return out;
}

BlockVector parse_block_vector(std::string_view text) {
    auto t = trim(text);
    if (!t.empty() && t.front() == '(' && t.back() == ')') t = t.substr(1, t.size() - 2);
    std::vector<Rational> out;
    if (trim(t).empty()) return BlockVector(std::move(out));
    std::size_t start = 0;
    while (true) {
        auto comma = t.find(',', start);
        out.push_back(Rational::parse(t.substr(start, comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return BlockVector(std::move(out));
}

#define EISRES_INSTANTIATE(B)                                                                 \
    template class RationalVector<B>;                                                         \
    template RationalVector<B> add(const RationalVector<B>&, const RationalVector<B>&);       \
    template RationalVector<B> subtract(const RationalVector<B>&, const RationalVector<B>&);  \
    template Rational dot(const RationalVector<B>&, const RationalVector<B>&);                \
    template std::vector<Rational> prefix_sums(const RationalVector<B>&);

EISRES_INSTANTIATE(Basis::Block)
EISRES_INSTANTIATE(Basis::Coordinate)

#undef EISRES_INSTANTIATE

} // namespace eisres
