#pragma once

#include "eisres/lformal.hpp"

#include "json.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace eisres::consterm {

using lformal::AffineArg;
using lformal::AnalyticOrder;
using lformal::LExpr;

/// Which series a tree node stands for: the root Delta(tau,b), the pushed-down
/// data i*Delta, or its image under the normalised intertwining operator.
enum class DataTag { Original, Pushed, Twisted };

std::string to_string(DataTag t);

struct EisDescriptor {
    int a = 2;
    int b = 1;
    TauProfile profile;
    DataTag data_tag = DataTag::Original;
    Rational shift; // s' = s + shift

    static EisDescriptor root(int a, int b, const TauProfile& profile);
};

enum class CuspSlot { Left, Right };

struct TermNode;

/// A node of the constant-term tree. Unexpanded nodes of rank >= 2 have no terms.
struct SeriesNode {
    EisDescriptor desc;
    std::vector<TermNode> terms;
};

struct TermNode {
    LExpr coeff;
    AffineArg det_exponent;
    CuspSlot cusp_slot = CuspSlot::Left;
    std::vector<SeriesNode> child; // empty for rank-one leaves, otherwise one node
};

/// Expands `depth` levels of the inductive constant-term formula. Rank-one
/// nodes always carry the two base-case terms.
SeriesNode expand_constant_term(const EisDescriptor& root, int depth);

/// Number of terms sitting in rank-one nodes.
int leaf_term_count(const SeriesNode& node);

std::string render_text(const SeriesNode& node);
nlohmann::json to_json(const SeriesNode& node);

struct ResiduePoint {
    int b;
    int i;
    Rational value;
};

/// b/2 - i (symplectic) or b/2 - i - 1/2 (orthogonal), without the positivity filter.
Rational residue_value(int b, int i, TauType type);

/// s_i^(b) for i = 0..ceil(b/2)-1 with positive value, in descending order.
std::vector<ResiduePoint> residue_points(int b, const TauProfile& profile);

/// s_{i-1}^(b-1) = s_i^(b) + 1/2 (for i >= 1) and s_i^(b-1) = s_i^(b) - 1/2.
bool shift_relations_check(int b, int i, TauType type = TauType::Symplectic);

using RationalSet = std::set<Rational>;

/// Possible poles of the normalised series of rank b.
RationalSet pole_candidates(int b, const TauProfile& profile);

/// {b/2, ..., -b/2} (symplectic) or {(b-1)/2, ..., (1-b)/2} (orthogonal).
RationalSet closed_X(int b, const TauProfile& profile);

/// Coefficient of the left or right term at a node of rank b and shift 0.
LExpr inductive_coefficient(int b, CuspSlot slot);

struct TermOrder {
    std::string path; // "left" or "right"
    AnalyticOrder coefficient;
    AnalyticOrder child;
    AnalyticOrder total;
};

struct LaurentReport {
    int b;
    int i;
    Rational point;
    std::optional<int> n0;
    AnalyticOrder pole_order = AnalyticOrder::unknown();
    std::vector<TermOrder> terms;
    std::vector<std::string> leading_term_sources;
    std::vector<std::string> notes;
};

/// Order of the normalised series of rank b at s_i^(b). `n0` is the order of
/// vanishing at the origin of the unnormalised lower-rank series; unset means
/// only n0 >= 0 is assumed.
LaurentReport laurent_analysis(int a, int b, const TauProfile& profile, int i, std::optional<int> n0);

std::string render_text(const LaurentReport& report);
nlohmann::json to_json(const LaurentReport& report);

} // namespace eisres::consterm
