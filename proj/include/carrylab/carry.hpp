#pragma once

#include "carrylab/ring.hpp"

#include <map>
#include <set>
#include <vector>

namespace carrylab {

// A plain finite subset of a domain: the common currency of the sumset
// operations, which do not need digital structure.
struct ElementSet {
    Domain domain;
    std::vector<Int> elements;  // sorted, distinct

    static ElementSet of(std::vector<Int> elements, const Domain& domain);
    static ElementSet of(const DigitalSet& a);

    std::size_t size() const { return elements.size(); }
};

/**
 * Representation counts r_{A+B}(x) = #{(a, b) in A x B : a + b = x}, indexed
 * by x in Z_q or Z. Only nonzero counts are stored; accumulation is dense for
 * small moduli and sparse otherwise, with identical observable content.
 */
struct SumsetProfile {
    Domain domain;
    std::map<Int, Int> counts;
    Int total;  // |A| * |B|

    Int count_at(const Int& x) const;
};

SumsetProfile rep_function(const ElementSet& a, const ElementSet& b);

// |A +_i B| = #{x : r_{A+B}(x) >= i}, the i-th layered sumset size.
Int layered_size(const SumsetProfile& profile, const Int& i);

// S(A, B, t) = sum_x min(t, r(x)). Computed both directly and as the layered
// sum over i <= t of |A +_i B|; the two must agree before the value returns.
Int pollard_sum(const ElementSet& a, const ElementSet& b, const Int& t);

Int digit_of(const DigitalSet& a, const Int& x);

// The carry of an ordered pair: (a1 + a2 - digit) / m, valued in Z_{q/m} for
// a modular domain and in Z over the integers.
Int carry_of(const DigitalSet& a, const Int& a1, const Int& a2);

struct CarryReport {
    std::set<Int> carry_set;  // distinct carries over all ordered pairs
    Int c1;                   // number of distinct carries
    Int carry_count;          // ordered pairs whose carry is nonzero
    Rat c2;                   // carry_count / m^2, exact
};

// A pair carries precisely when its sum leaves the set; the report counts
// both ways and insists they match.
CarryReport carry_report(const DigitalSet& a);

}  // namespace carrylab
