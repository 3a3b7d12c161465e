#include "eisres/consterm.hpp"

#include "eisres/normalize.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <stdexcept>

namespace eisres::consterm {

using lformal::LKind;
using lformal::LTerm;
using nlohmann::json;

std::string to_string(DataTag t) {
    switch (t) {
    case DataTag::Original: return "original";
    case DataTag::Pushed: return "pushed";
    case DataTag::Twisted: return "twisted";
    }
    return "?";
}

EisDescriptor EisDescriptor::root(int a, int b, const TauProfile& profile) {
    if (a < 1 || b < 1) throw std::invalid_argument(fmt::format("need a, b >= 1, got a={}, b={}", a, b));
    return {a, b, profile, DataTag::Original, Rational(0)};
}

namespace {

LExpr partial_at(LKind kind, Rational slope, Rational offset, bool partial = true) {
    return LExpr(LTerm::cusp(kind, AffineArg::of_s(slope, offset), partial));
}

LKind parity_kind(int b) { return normalize::parity(b, LKind::SymSq, LKind::ExtSq); }

/// ab - (a+b)/2 + 1
Rational det_offset(int a, int b) { return Rational(a * b) - half(a + b) + Rational(1); }

LExpr shifted_coefficient(int b, CuspSlot slot, const Rational& shift) {
    return inductive_coefficient(b, slot).shifted(shift);
}

// Base-case coefficients for rank one: b_1(s) on the left, a_1(s) on the right.
LExpr leaf_coefficient(CuspSlot slot, const Rational& shift) {
    LExpr e = slot == CuspSlot::Left
                  ? partial_at(LKind::Standard, 1, 1) * partial_at(LKind::ExtSq, 2, 1)
                  : partial_at(LKind::Standard, 1, 0, false) * partial_at(LKind::ExtSq, 2, 0, false);
    return e.shifted(shift);
}

SeriesNode expand(const EisDescriptor& desc, int depth) {
    SeriesNode node{desc, {}};
    const int a = desc.a;
    const int b = desc.b;
    if (b == 1) {
        auto rho = half(a + 1);
        node.terms.push_back({leaf_coefficient(CuspSlot::Left, desc.shift),
                              AffineArg::of_s(1, desc.shift + rho), CuspSlot::Left, {}});
        node.terms.push_back({leaf_coefficient(CuspSlot::Right, desc.shift),
                              AffineArg::of_s(-1, -desc.shift + rho), CuspSlot::Right, {}});
        return node;
    }
    if (depth == 0) return node;

    const auto off = det_offset(a, b);
    EisDescriptor left{a, b - 1, desc.profile, DataTag::Pushed, desc.shift + half(1)};
    EisDescriptor right{a, b - 1, desc.profile, DataTag::Twisted, desc.shift - half(1)};
    node.terms.push_back({shifted_coefficient(b, CuspSlot::Left, desc.shift),
                          AffineArg::of_s(1, desc.shift + off), CuspSlot::Left, {expand(left, depth - 1)}});
    node.terms.push_back({shifted_coefficient(b, CuspSlot::Right, desc.shift),
                          AffineArg::of_s(-1, -desc.shift + off), CuspSlot::Right, {expand(right, depth - 1)}});
    return node;
}

std::string slot_name(CuspSlot s) { return s == CuspSlot::Left ? "left" : "right"; }

void render(const SeriesNode& node, int indent, std::string& out) {
    const auto& d = node.desc;
    out += fmt::format("{:{}}E*[a={}, b={}, {}, shift={}]\n", "", indent, d.a, d.b, to_string(d.data_tag), d.shift.str());
    for (const auto& t : node.terms) {
        out += fmt::format("{:{}}+ [{}] {} * |det|^({})\n", "", indent + 2, slot_name(t.cusp_slot), t.coeff.str(),
                           t.det_exponent.str());
        for (const auto& c : t.child) render(c, indent + 4, out);
    }
}

} // namespace

LExpr inductive_coefficient(int b, CuspSlot slot) {
    if (b < 2) throw std::invalid_argument("inductive coefficients exist for b >= 2");
    return partial_at(parity_kind(b), 2, slot == CuspSlot::Left ? 1 : 0);
}

SeriesNode expand_constant_term(const EisDescriptor& root, int depth) {
    if (depth < 0 || depth > root.b - 1) {
        throw std::invalid_argument(fmt::format("depth must be in [0, {}], got {}", root.b - 1, depth));
    }
    return expand(root, depth);
}

int leaf_term_count(const SeriesNode& node) {
    int n = node.desc.b == 1 ? static_cast<int>(node.terms.size()) : 0;
    for (const auto& t : node.terms) {
        for (const auto& c : t.child) n += leaf_term_count(c);
    }
    return n;
}

std::string render_text(const SeriesNode& node) {
    std::string out;
    render(node, 0, out);
    return out;
}

json to_json(const SeriesNode& node) {
    json terms = json::array();
    for (const auto& t : node.terms) {
        terms.push_back({{"coeff", t.coeff.str()},
                         {"det_exponent", t.det_exponent.str()},
                         {"cusp_slot", slot_name(t.cusp_slot)},
                         {"child", t.child.empty() ? json(nullptr) : to_json(t.child.front())}});
    }
    const auto& d = node.desc;
    return {{"a", d.a},
            {"b", d.b},
            {"data_tag", to_string(d.data_tag)},
            {"shift", d.shift.str()},
            {"tau_type", eisres::to_string(d.profile.type)},
            {"terms", terms}};
}

// ---------------------------------------------------------------------------
// Residue points and pole sets

Rational residue_value(int b, int i, TauType type) {
    return half(b) - Rational(i) - (type == TauType::Orthogonal ? half(1) : Rational(0));
}

std::vector<ResiduePoint> residue_points(int b, const TauProfile& profile) {
    if (b < 1) throw std::invalid_argument("b must be >= 1");
    std::vector<ResiduePoint> out;
    for (int i = 0; i <= (b + 1) / 2 - 1; ++i) {
        auto v = residue_value(b, i, profile.type);
        if (v > Rational(0)) out.push_back({b, i, v});
    }
    return out;
}

bool shift_relations_check(int b, int i, TauType type) {
    if (b < 2 || i < 0 || i > (b + 1) / 2 - 1) {
        throw std::out_of_range(fmt::format("no residue point s_{}^({})", i, b));
    }
    const auto s = residue_value(b, i, type);
    bool ok = residue_value(b - 1, i, type) == s - half(1);
    if (i >= 1) ok = ok && residue_value(b - 1, i - 1, type) == s + half(1);
    return ok;
}

RationalSet closed_X(int b, const TauProfile& profile) {
    if (b < 1) throw std::invalid_argument("b must be >= 1");
    RationalSet out;
    const Rational top = profile.type == TauType::Symplectic ? half(b) : half(b - 1);
    for (Rational x = top; x >= -top; x -= Rational(1)) out.insert(x);
    return out;
}

namespace {

bool coefficient_may_pole(int b, const TauProfile& profile, const Rational& p) {
    for (auto slot : {CuspSlot::Left, CuspSlot::Right}) {
        auto coeff = b == 1 ? leaf_coefficient(slot, 0) : inductive_coefficient(b, slot);
        if (lformal::order_at(coeff, p, profile).may_be_pole()) return true;
    }
    return false;
}

} // namespace

RationalSet pole_candidates(int b, const TauProfile& profile) {
    if (b < 1) throw std::invalid_argument("b must be >= 1");
    RationalSet positive;
    for (int k = 1; k <= 2 * (b + 1); ++k) {
        if (coefficient_may_pole(b, profile, half(k))) positive.insert(half(k));
    }
    if (b >= 2) {
        for (const auto& q : pole_candidates(b - 1, profile)) {
            for (const auto& p : {q - half(1), q + half(1)}) {
                if (p > Rational(0)) positive.insert(p);
            }
        }
    }
    RationalSet out = positive;
    for (const auto& p : positive) out.insert(-p);
    return out;
}

// ---------------------------------------------------------------------------
// Laurent analysis

namespace {

struct Combined {
    AnalyticOrder order = AnalyticOrder::unknown();
    std::vector<std::size_t> sources;
};

// Terms carry distinct |det| exponents, so their leading parts never cancel.
Combined combine(const std::vector<AnalyticOrder>& terms) {
    Combined c;
    if (std::any_of(terms.begin(), terms.end(), [](const auto& t) { return t.is_unknown(); })) {
        for (std::size_t k = 0; k < terms.size(); ++k) {
            if (terms[k].is_unknown()) c.sources.push_back(k);
        }
        return c;
    }
    int m = std::min_element(terms.begin(), terms.end(), [](const auto& x, const auto& y) {
                return x.value() < y.value();
            })->value();
    bool exact = false;
    for (std::size_t k = 0; k < terms.size(); ++k) {
        if (terms[k].value() != m) continue;
        c.sources.push_back(k);
        exact = exact || terms[k].is_known();
    }
    c.order = exact ? AnalyticOrder::known(m) : AnalyticOrder::at_least(m);
    return c;
}

class Analyzer {
public:
    Analyzer(const TauProfile& profile, std::optional<int> n0) : profile_(profile), n0_(n0) {}

    std::vector<TermOrder> term_orders(int b, const Rational& p) {
        std::vector<TermOrder> out;
        if (b == 1) {
            for (auto slot : {CuspSlot::Left, CuspSlot::Right}) {
                auto c = lformal::order_at(leaf_coefficient(slot, 0), p, profile_);
                out.push_back({slot_name(slot), c, AnalyticOrder::known(0), c});
            }
            return out;
        }
        for (auto slot : {CuspSlot::Left, CuspSlot::Right}) {
            auto c = lformal::order_at(inductive_coefficient(b, slot), p, profile_);
            auto q = slot == CuspSlot::Left ? p + half(1) : p - half(1);
            auto child = child_order(b - 1, q);
            out.push_back({slot_name(slot), c, child, c + child});
        }
        return out;
    }

    AnalyticOrder series_order(int b, const Rational& p) {
        std::vector<AnalyticOrder> totals;
        for (const auto& t : term_orders(b, p)) totals.push_back(t.total);
        return combine(totals).order;
    }

private:
    AnalyticOrder child_order(int b, const Rational& q) {
        if (q == Rational(0)) {
            // Rank one, orthogonal: the normalised series is regular and nonzero at the origin.
            if (b == 1 && profile_.type == TauType::Orthogonal) return AnalyticOrder::known(0);
            auto norm = lformal::order_at(normalize::b_factor(b), q, profile_);
            return norm + (n0_ ? AnalyticOrder::known(*n0_) : AnalyticOrder::at_least(0));
        }
        if (q < Rational(0)) return AnalyticOrder::unknown();
        if (!pole_candidates(b, profile_).contains(q)) return AnalyticOrder::at_least(0);
        return series_order(b, q);
    }

    TauProfile profile_;
    std::optional<int> n0_;
};

} // namespace

LaurentReport laurent_analysis(int a, int b, const TauProfile& profile, int i, std::optional<int> n0) {
    if (a < 1) throw std::invalid_argument("a must be >= 1");
    auto points = residue_points(b, profile);
    auto it = std::find_if(points.begin(), points.end(), [i](const ResiduePoint& r) { return r.i == i; });
    if (it == points.end()) throw std::out_of_range(fmt::format("no residue point s_{}^({}) for {} tau", i, b, eisres::to_string(profile.type)));
    if (n0 && *n0 < 0) throw std::invalid_argument("n0 must be nonnegative");

    LaurentReport report{b, i, it->value, n0, AnalyticOrder::unknown(), {}, {}, {}};
    Analyzer analyzer(profile, n0);
    report.terms = analyzer.term_orders(b, it->value);
    std::vector<AnalyticOrder> totals;
    for (const auto& t : report.terms) totals.push_back(t.total);
    auto c = combine(totals);
    report.pole_order = c.order;
    for (auto k : c.sources) report.leading_term_sources.push_back(report.terms[k].path);
    if (n0 && *n0 == 1) {
        report.notes.push_back("n0 = 1 is ruled out by a separate argument in some configurations; it is not excluded here");
    }
    if (!n0) report.notes.push_back("n0 unspecified: only n0 >= 0 is assumed");
    return report;
}

std::string render_text(const LaurentReport& r) {
    std::string out = fmt::format("point: s_{}^({}) = {}\n", r.i, r.b, r.point.str());
    out += fmt::format("n0: {}\n", r.n0 ? std::to_string(*r.n0) : std::string("unspecified"));
    for (const auto& t : r.terms) {
        out += fmt::format("term {}: coefficient {}, child {}, total {}\n", t.path, t.coefficient.str(), t.child.str(),
                           t.total.str());
    }
    out += fmt::format("pole order: {}\n", r.pole_order.str());
    std::string sources;
    for (const auto& s : r.leading_term_sources) sources += (sources.empty() ? "" : ", ") + s;
    out += fmt::format("leading terms: {}\n", sources);
    for (const auto& n : r.notes) out += "note: " + n + "\n";
    return out;
}

json to_json(const LaurentReport& r) {
    json terms = json::array();
    for (const auto& t : r.terms) {
        terms.push_back({{"path", t.path},
                         {"coefficient", t.coefficient.str()},
                         {"child", t.child.str()},
                         {"total", t.total.str()}});
    }
    return {{"b", r.b},
            {"i", r.i},
            {"point", r.point.str()},
            {"n0", r.n0 ? json(*r.n0) : json(nullptr)},
            {"pole_order", r.pole_order.str()},
            {"terms", terms},
            {"leading_term_sources", r.leading_term_sources},
            {"notes", r.notes}};
}

} // namespace eisres::consterm
