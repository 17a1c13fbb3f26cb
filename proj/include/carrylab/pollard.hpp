#pragma once

#include "carrylab/carry.hpp"

#include <optional>
#include <set>

namespace carrylab {

// Chowla property: every difference of two distinct elements is a unit of
// Z_q. Vacuously true for fewer than two elements; modular domains only.
bool has_chowla(const ElementSet& a);

// t * min(q, nA + nB - t). Requires 1 <= t <= min(nA, nB), else BadT.
Int pollard_bound(const Int& q, const Int& n_a, const Int& n_b, const Int& t);

struct PollardCheck {
    Int sum;          // S(A, B, t)
    Int bound;        // t * min(q, |A| + |B| - t)
    bool tight;       // sum == bound
    bool applicable;  // some side has the Chowla property, so the bound is guaranteed
};

// Computes S and the bound unconditionally; `applicable` flags whether the
// inequality is actually promised for this pair.
PollardCheck pollard_check(const ElementSet& a, const ElementSet& b, const Int& t);

enum class TightnessCondition { BEqualsT, SizesExceedQ, Reflection, SameDiffAps };

// Stable wire tags, e.g. "B_EQUALS_T".
const char* condition_tag(TightnessCondition c);

struct TightnessClassification {
    Int sum;
    Int bound;
    bool tight;
    // Every equality condition that holds for (A, B, t), tight or not.
    std::set<TightnessCondition> conditions;
    std::optional<Int> reflection_g;       // least g with B = g - A
    std::optional<Int> common_difference;  // least canonical shared AP difference
};

// Requires 2 <= t <= |B| <= |A| with B Chowla (HypothesesNotMet otherwise).
TightnessClassification classify_tightness(const ElementSet& a, const ElementSet& b, const Int& t);

// Every difference d for which the set is an arithmetic progression of
// difference d. Closed under d -> q - d in a modular domain; over Z the
// ascending reading {d} is reported. Size <= 1 yields {0} by convention.
std::set<Int> ap_differences(const ElementSet& a);

// Canonical difference: the least representative min(d, q - d) over all
// valid differences (the positive gap over Z). nullopt when not an AP;
// 0 for sets of size <= 1. Sets of size <= 2 are always progressions.
std::optional<Int> is_ap(const ElementSet& a);

// The triangular profile max(0, L - |x|): the rep function shape of two
// equal-length progressions with a shared difference.
Int triangular_psi(const Int& big_l, const Int& x);

}  // namespace carrylab
