#pragma once

#include "carrylab/ring.hpp"

#include <string>
#include <vector>

namespace carrylab {

enum class MuRegime { OddP, EvenP };

/**
 * The closed-form lower bound mu(m) on the carry frequency C2 of any digital
 * set for modulus m, together with the decomposition it is computed from.
 * With p^alpha the maximal prime power of m and delta the parity indicator:
 *
 *   p odd:  mu(m) = (1 - p^(-2 alpha) - 2 p^(-alpha) + 2 delta / m) / 4
 *   p = 2:  mu(m) = 1/4
 */
struct BoundSpec {
    Int m;
    PrimePowerDecomposition decomposition;
    Rat mu;
    MuRegime regime;
};

BoundSpec mu(const Int& m);

// (p^2 - 1) / (4 p^2) for an odd prime p; NotOddPrime otherwise.
Rat alon_bound(const Int& p);

enum class ThresholdSide { Minus, Plus };

struct ThresholdSpec {
    Int t;          // the layer count the threshold applies to
    Int threshold;  // lower bound for S(A, B, t)
};

// Odd-p digital pair thresholds: t = (p^alpha -+ 1) / 2 with
// S >= (3 p^(2 alpha) -+ 2 p^alpha - 1) / 4. Both values are integers for
// every odd p; integrality is asserted, not assumed.
ThresholdSpec thm22_threshold(const Int& p, unsigned alpha, ThresholdSide side);

// p = 2 counterpart: t = 2^(alpha - 1), S >= 3 * 4^(alpha - 1). Requires
// alpha >= 1.
ThresholdSpec thm23_threshold(unsigned alpha);

// floor(m^2 / 4): the minimal number of carrying pairs of an integer-case
// digital set, attained by the centered interval (-m/2, m/2].
Int interval_carry_count(const Int& m);

struct MuTableRow {
    Int m;
    Rat mu;
    Rat interval_ratio;  // floor(m^2 / 4) / m^2
    Rat gap;             // 1/4 - mu(m)
};

std::vector<MuTableRow> mu_table(const std::vector<Int>& ms);

// CSV rendering: exact rationals as "num/den" plus one decimal column per
// rational, headed *_approx to mark it inexact.
std::string mu_table_csv(const std::vector<MuTableRow>& rows);

}  // namespace carrylab
