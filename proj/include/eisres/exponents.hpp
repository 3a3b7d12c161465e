#pragma once

#include "eisres/consterm.hpp"
#include "eisres/core.hpp"

#include "json.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace eisres::exponents {

/// Cuspidal exponent stored relative to rho_b^(a).
struct CuspidalExponent {
    BlockVector relative;
    int b = 0;
    std::string provenance; // "chi_i" or "shuffle of chi_i: ..."

    /// relative + rho_b^(a)
    BlockVector absolute(int a) const;
};

/// chi_i^(b). Symplectic, i > 0: -((2i-1)/2, ..., 1/2, (2(b-i)-1)/2, ..., 1/2).
/// Orthogonal, i > 0: -(i, ..., 1, b-1-i, ..., 0). The i = 0 vectors are the
/// i = 0 case of the same pattern without the empty leading run.
CuspidalExponent chi_vec(int b, int i, TauType type);

/// The formula above evaluated without checking that s_i^(b) is a residue point.
BlockVector chi_formula(int b, int i, TauType type);

struct ShuffleMove {
    BlockVector vector;
    std::string move; // "stay", "to k", "to k, sign flipped"
};

/// Moves the designated entry rightward one slot at a time; in the final slot
/// it also appears with flipped sign. Entries left of it stay fixed.
std::vector<ShuffleMove> shuffle_moves(const BlockVector& v, std::size_t designated);
std::set<BlockVector> allowable_shuffles(const BlockVector& v, std::size_t designated);

/// Exponent of the second term at s_1^(b): the leading entry -s_1^(b) + (1-b)/2
/// followed by chi_formula(b-1, 1). The designated entry is index 1.
BlockVector shuffle_base(int b, TauType type);
inline constexpr std::size_t shuffle_designated = 1;

/// Every prefix sum strictly negative.
bool square_integrable(const BlockVector& relative);

enum class PossibleStatus { Computed, Unknown };

struct ExponentSets {
    std::vector<CuspidalExponent> certain;
    std::vector<CuspidalExponent> possible;
    PossibleStatus possible_status = PossibleStatus::Computed;
    std::string rule;
};

ExponentSets residue_exponent_sets(int a, int b, int i, const TauProfile& profile, std::optional<int> n0);

nlohmann::json to_json(const ExponentSets& sets);
std::string render_text(const ExponentSets& sets);

} // namespace eisres::exponents
