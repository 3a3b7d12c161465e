#include "eisres/lformal.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cctype>
#include <map>

namespace eisres {

std::string to_string(TauType t) { return t == TauType::Symplectic ? "symplectic" : "orthogonal"; }

TauType parse_tau_type(std::string_view text) {
    if (text == "symplectic") return TauType::Symplectic;
    if (text == "orthogonal") return TauType::Orthogonal;
    throw std::invalid_argument(fmt::format("unknown tau type '{}'", text));
}

namespace lformal {

// ---------------------------------------------------------------------------
// AffineArg

std::string AffineArg::str() const {
    std::string out;
    if (slope != Rational(0)) {
        if (slope == Rational(1)) out = "s";
        else if (slope == Rational(-1)) out = "-s";
        else out = slope.str() + "s";
        if (offset.sign() > 0) out += "+" + offset.str();
        else if (offset.sign() < 0) out += offset.str();
        return out;
    }
    return offset.str();
}

namespace {

std::string strip_spaces(std::string_view s) {
    std::string out;
    for (char c : s) {
        if (!std::isspace(static_cast<unsigned char>(c))) out += c;
    }
    return out;
}

} // namespace

AffineArg AffineArg::parse(std::string_view text) {
    auto t = strip_spaces(text);
    auto spos = t.find('s');
    if (spos == std::string::npos) return constant(Rational::parse(t));
    std::string coeff = t.substr(0, spos);
    Rational slope;
    if (coeff.empty() || coeff == "+") slope = 1;
    else if (coeff == "-") slope = -1;
    else slope = Rational::parse(coeff);
    std::string rest = t.substr(spos + 1);
    Rational offset;
    if (!rest.empty()) {
        if (rest.front() != '+' && rest.front() != '-') {
            throw std::invalid_argument(fmt::format("bad affine argument '{}'", text));
        }
        offset = Rational::parse(rest);
    }
    return of_s(slope, offset);
}

// ---------------------------------------------------------------------------
// LTerm

std::string to_string(LKind k) {
    switch (k) {
    case LKind::Standard: return "std";
    case LKind::ExtSq: return "wedge2";
    case LKind::SymSq: return "sym2";
    case LKind::RankinSelberg: return "tauxtau";
    }
    return "?";
}

namespace {

LKind parse_kind(std::string_view s) {
    if (s == "std") return LKind::Standard;
    if (s == "wedge2") return LKind::ExtSq;
    if (s == "sym2") return LKind::SymSq;
    if (s == "tauxtau") return LKind::RankinSelberg;
    throw std::invalid_argument(fmt::format("unknown L-function kind '{}'", s));
}

int display_rank(LKind k) {
    switch (k) {
    case LKind::ExtSq: return 0;
    case LKind::SymSq: return 1;
    case LKind::RankinSelberg: return 2;
    case LKind::Standard: return 3;
    }
    return 4;
}

} // namespace

std::string LTerm::str() const {
    std::string level = speh ? fmt::format("Delta_{}", *speh) : std::string("tau");
    return fmt::format("{}({}, {}, {})", partial ? "L_S" : "L", arg.str(), level, to_string(kind));
}

bool canonical_less(const LTerm& x, const LTerm& y) {
    auto key = [](const LTerm& t) {
        return std::make_tuple(display_rank(t.kind), t.speh.value_or(0), -t.arg.slope, -t.arg.offset, t.partial);
    };
    return key(x) < key(y);
}

// ---------------------------------------------------------------------------
// LExpr

bool LExpr::has_speh() const {
    return std::any_of(factors_.begin(), factors_.end(), [](const Factor& f) { return !f.term.is_cusp(); });
}

LExpr& LExpr::operator*=(const LExpr& o) {
    factors_.insert(factors_.end(), o.factors_.begin(), o.factors_.end());
    return *this;
}

LExpr& LExpr::operator/=(const LExpr& o) { return *this *= o.inverse(); }

LExpr LExpr::inverse() const {
    auto out = factors_;
    for (auto& f : out) f.exponent = -f.exponent;
    return LExpr(std::move(out));
}

LExpr LExpr::shifted(const Rational& ds) const {
    auto out = factors_;
    for (auto& f : out) f.term.arg = f.term.arg.shifted(ds);
    return LExpr(std::move(out));
}

LExpr LExpr::numerator() const {
    std::vector<Factor> out;
    const auto reduced = cancel(*this);
    for (const auto& f : reduced.factors()) {
        if (f.exponent > 0) out.push_back(f);
    }
    return LExpr(std::move(out));
}

LExpr LExpr::denominator() const {
    std::vector<Factor> out;
    const auto reduced = cancel(*this);
    for (const auto& f : reduced.factors()) {
        if (f.exponent < 0) out.push_back({f.term, -f.exponent});
    }
    return LExpr(std::move(out));
}

bool LExpr::is_unit() const { return cancel(*this).factors().empty(); }

int LExpr::factor_count() const {
    int n = 0;
    for (const auto& f : factors_) n += std::abs(f.exponent);
    return n;
}

std::string LExpr::str() const {
    if (factors_.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) out += " * ";
        out += fmt::format("{}^{:+d}", factors_[i].term.str(), factors_[i].exponent);
    }
    return out;
}

namespace {

class ExprParser {
public:
    explicit ExprParser(std::string_view text) : text_(text) {}

    LExpr parse() {
        skip_ws();
        if (rest() == "1") return LExpr();
        std::vector<Factor> factors;
        while (true) {
            factors.push_back(factor());
            skip_ws();
            if (pos_ == text_.size()) break;
            expect('*');
        }
        return LExpr(std::move(factors));
    }

private:
    Factor factor() {
        skip_ws();
        expect('L');
        bool partial = false;
        if (peek() == '_') {
            ++pos_;
            expect('S');
            partial = true;
        }
        expect('(');
        auto arg = AffineArg::parse(until(','));
        expect(',');
        auto level = strip_spaces(until(','));
        expect(',');
        auto kind = parse_kind(strip_spaces(until(')')));
        expect(')');
        expect('^');
        auto exp_text = strip_spaces(until_any(" *"));
        int exponent = static_cast<int>(Rational::parse(exp_text).num());

        LTerm term{kind, arg, std::nullopt, partial};
        if (level != "tau") {
            if (level.rfind("Delta_", 0) != 0) fail("level must be 'tau' or 'Delta_<b>'");
            term.speh = static_cast<int>(Rational::parse(level.substr(6)).num());
        }
        return {term, exponent};
    }

    std::string_view rest() const { return text_.substr(pos_); }
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    void expect(char c) {
        skip_ws();
        if (peek() != c) fail(fmt::format("expected '{}'", c));
        ++pos_;
    }
    std::string_view until(char c) {
        auto end = text_.find(c, pos_);
        if (end == std::string_view::npos) fail(fmt::format("missing '{}'", c));
        auto out = text_.substr(pos_, end - pos_);
        pos_ = end;
        return out;
    }
    std::string_view until_any(std::string_view cs) {
        auto end = text_.find_first_of(cs, pos_);
        if (end == std::string_view::npos) end = text_.size();
        auto out = text_.substr(pos_, end - pos_);
        pos_ = end;
        return out;
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw std::invalid_argument(fmt::format("cannot parse L-expression at {}: {}", pos_, msg));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

LExpr LExpr::parse(std::string_view text) { return ExprParser(text).parse(); }

bool operator==(const LExpr& a, const LExpr& b) { return cancel(a).factors_ == cancel(b).factors_; }

// ---------------------------------------------------------------------------
// Expansion and cancellation

LExpr rs_split(const LTerm& t) {
    if (t.kind != LKind::RankinSelberg) {
        throw std::invalid_argument("rs_split expects a Rankin-Selberg symbol, got " + t.str());
    }
    if (!t.is_cusp()) throw std::invalid_argument("rs_split expects a cusp-level symbol, got " + t.str());
    LExpr out(LTerm::cusp(LKind::ExtSq, t.arg, t.partial));
    out *= LExpr(LTerm::cusp(LKind::SymSq, t.arg, t.partial));
    return out;
}

LExpr split_rankin_selberg(const LExpr& e) {
    LExpr out;
    for (const auto& f : e.factors()) {
        if (f.term.kind == LKind::RankinSelberg && f.term.is_cusp()) {
            auto split = rs_split(f.term);
            for (const auto& g : split.factors()) out *= LExpr(g.term, g.exponent * f.exponent);
        } else {
            out *= LExpr(f.term, f.exponent);
        }
    }
    return out;
}

LExpr expand_speh(const LTerm& t, bool split_rs) {
    if (t.is_cusp()) throw std::invalid_argument("expand_speh expects a Speh-level symbol, got " + t.str());
    const int b = *t.speh;
    if (b < 1) throw std::invalid_argument("Speh rank must be >= 1");

    LExpr out;
    switch (t.kind) {
    case LKind::Standard:
        for (int i = 1; i <= b; ++i) {
            out *= LExpr(LTerm::cusp(LKind::Standard, t.arg.plus(half(b + 1 - 2 * i)), t.partial));
        }
        return out;
    case LKind::ExtSq:
        for (int i = 1; i <= b; ++i) {
            out *= LExpr(LTerm::cusp(LKind::ExtSq, t.arg.plus(Rational(b + 1 - 2 * i)), t.partial));
        }
        for (int i = 1; i <= b; ++i) {
            for (int j = i + 1; j <= b; ++j) {
                out *= LExpr(LTerm::cusp(LKind::RankinSelberg, t.arg.plus(Rational(b + 1 - i - j)), t.partial));
            }
        }
        return split_rs ? split_rankin_selberg(out) : out;
    case LKind::SymSq:
    case LKind::RankinSelberg: break;
    }
    throw std::invalid_argument("no Speh-level factorisation for " + t.str());
}

LExpr expand_all(const LExpr& e, bool split_rs) {
    LExpr out;
    for (const auto& f : e.factors()) {
        if (f.term.is_cusp()) {
            out *= LExpr(f.term, f.exponent);
            continue;
        }
        auto expanded = expand_speh(f.term, split_rs);
        for (const auto& g : expanded.factors()) {
            out *= LExpr(g.term, g.exponent * f.exponent);
        }
    }
    return out;
}

namespace {

struct CanonicalLess {
    bool operator()(const LTerm& x, const LTerm& y) const { return canonical_less(x, y); }
};

} // namespace

LExpr cancel(const LExpr& e) {
    std::map<LTerm, int, CanonicalLess> merged;
    for (const auto& f : e.factors()) merged[f.term] += f.exponent;
    std::vector<Factor> num, den;
    for (const auto& [term, exponent] : merged) {
        if (exponent > 0) num.push_back({term, exponent});
        else if (exponent < 0) den.push_back({term, exponent});
    }
    num.insert(num.end(), den.begin(), den.end());
    return LExpr(std::move(num));
}

// ---------------------------------------------------------------------------
// Analytic orders

AnalyticOrder AnalyticOrder::operator+(const AnalyticOrder& o) const {
    if (tag_ == Tag::Unknown || o.tag_ == Tag::Unknown) return unknown();
    if (tag_ == Tag::Known && o.tag_ == Tag::Known) return known(value_ + o.value_);
    return at_least(value_ + o.value_);
}

AnalyticOrder AnalyticOrder::scaled(int m) const {
    if (m == 0) return known(0);
    if (tag_ == Tag::Unknown) return unknown();
    if (tag_ == Tag::Known) return known(value_ * m);
    // A lower bound flips into an upper bound under negation, which the tags cannot express.
    return m > 0 ? at_least(value_ * m) : unknown();
}

std::string AnalyticOrder::str() const {
    switch (tag_) {
    case Tag::Known: return fmt::format("Known({})", value_);
    case Tag::AtLeast: return fmt::format("AtLeast({})", value_);
    case Tag::Unknown: return "Unknown";
    }
    return "?";
}

AnalyticOrder order_at(const LTerm& t, const Rational& point, const TauProfile& profile) {
    if (!t.is_cusp()) throw std::invalid_argument("order_at needs cusp-level symbols; expand " + t.str());
    const Rational x = t.arg.at(point);
    if (x > Rational(1)) return AnalyticOrder::known(0);
    if (x == Rational(1)) {
        switch (t.kind) {
        case LKind::Standard: return AnalyticOrder::known(0);
        case LKind::ExtSq: return AnalyticOrder::known(profile.type == TauType::Symplectic ? -1 : 0);
        case LKind::SymSq: return AnalyticOrder::known(profile.type == TauType::Orthogonal ? -1 : 0);
        case LKind::RankinSelberg: return AnalyticOrder::known(-1);
        }
    }
    if (x == half(1) && t.kind == LKind::Standard && profile.central_value_nonzero) return AnalyticOrder::known(0);
    return AnalyticOrder::unknown();
}

AnalyticOrder order_at(const LExpr& e, const Rational& point, const TauProfile& profile) {
    auto total = AnalyticOrder::known(0);
    for (const auto& f : e.factors()) total = total + order_at(f.term, point, profile).scaled(f.exponent);
    return total;
}

} // namespace lformal
} // namespace eisres
