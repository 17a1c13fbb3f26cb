#pragma once

#include "carrylab/error.hpp"
#include "carrylab/numeric.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace carrylab {

/**
 * Ambient domain for digital sets: either the residue ring Z_q for a modulus
 * q >= 2, or the rational integers Z. All element values in a Modular domain
 * are kept reduced to [0, q).
 */
struct Domain {
    enum class Kind { Modular, Integers };

    Kind kind = Kind::Modular;
    Int q;  // modulus; meaningful only when kind == Modular

    static Domain modular(Int modulus);
    static Domain integers();

    bool is_modular() const { return kind == Kind::Modular; }

    friend bool operator==(const Domain& a, const Domain& b) {
        if (a.kind != b.kind) return false;
        return a.kind == Kind::Integers || a.q == b.q;
    }
};

struct PrimePower {
    Int p;
    unsigned alpha = 0;

    Int value() const { return pow_int(p, alpha); }

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/**
 * Factorization of m together with its maximal prime power p^alpha, the
 * cofactor m' = m / p^alpha, and the parity indicator delta (1 for odd m,
 * 0 for even m) used by the closed-form carry bounds.
 */
struct PrimePowerDecomposition {
    Int m;
    std::vector<PrimePower> factors;  // ascending by prime
    Int p;
    unsigned alpha = 0;
    Int p_alpha;
    Int m_prime;
    int delta = 0;
};

// Factorization via trial division handing off to Brent-cycle splitting with
// a Miller-Rabin primality gate; returns prime powers ascending by prime.
std::vector<PrimePower> factor(const Int& n);

bool is_prime(const Int& n);

// Requires m >= 2. The maximal prime power is unique by unique factorization.
PrimePowerDecomposition decompose(const Int& m);

// True when q and m share the same prime support and every exponent in q
// strictly exceeds the corresponding exponent in m.
bool is_admissible(const Int& q, const Int& m);

/**
 * A digital set for modulus m: exactly m elements forming a complete residue
 * system mod m, living either in Z_q (which requires m | q) or in Z. The
 * class invariant is enforced at construction, so holding a DigitalSet is
 * proof of digitality. Instances are immutable value types.
 */
class DigitalSet {
  public:
    // Sole constructor path. Modular elements are reduced into [0, q) first.
    // Throws MDoesNotDivideQ, WrongCardinality, or NotCompleteResidueSystem.
    static DigitalSet validate(std::vector<Int> elements, const Domain& domain, const Int& m);

    const Domain& domain() const { return domain_; }
    const Int& m() const { return m_; }
    const std::vector<Int>& elements() const { return elements_; }

    // The unique element congruent to `residue` mod m.
    const Int& digit_for_class(const Int& residue) const;

    bool contains(const Int& x) const;

    // Wire form, e.g. "q=9 m=3 A=0,1,8" or "Z m=3 A=-1,0,1".
    std::string literal() const;

    friend bool operator==(const DigitalSet& a, const DigitalSet& b) {
        return a.domain_ == b.domain_ && a.m_ == b.m_ && a.elements_ == b.elements_;
    }

  private:
    DigitalSet() = default;

    Domain domain_;
    Int m_;
    std::vector<Int> elements_;  // sorted ascending
    std::vector<Int> by_class_;  // residue class -> element
};

// c must be a unit of Z_q (NotAUnit otherwise); domain must be Modular.
DigitalSet dilate(const DigitalSet& a, const Int& c);

struct TranslateResult {
    DigitalSet set;
    // Whether d lies in the subgroup mZ_q. A general translate is still a
    // complete residue system, but only offsets from mZ_q keep the set inside
    // the symmetry orbit under which the carry spectrum is invariant.
    bool offset_in_m_subgroup = false;
};

// Translate by any d in Z_q; domain must be Modular.
TranslateResult translate(const DigitalSet& a, const Int& d);

enum class CanonicalRelation { DilationOnly, Affine };

// Least representative (lexicographic on the sorted element tuple) of the
// orbit of `a` under dilations by units, optionally combined with
// translations by mZ_q. Idempotent; domain must be Modular.
DigitalSet canonical_form(const DigitalSet& a, CanonicalRelation relation);

// Reduction of a subset of Z_bigq onto its p-part Z_target: target must be a
// maximal prime-power divisor of bigq (BadTarget otherwise). When the input
// is digital with prime-power m dividing target, the image is digital too.
std::vector<Int> project(const std::vector<Int>& elements, const Int& bigq, const Int& target);

// Units of Z_q in ascending order.
std::vector<Int> units_mod(const Int& q);

// Parses the wire form accepted by the CLI. Whitespace-insensitive and exact;
// Modular elements may be given as any integers and are reduced mod q.
DigitalSet parse_set_literal(std::string_view text);

}  // namespace carrylab
