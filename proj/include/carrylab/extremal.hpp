#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "carrylab/carry.hpp"
#include "carrylab/ring.hpp"
#include "json.hpp"

// Enumeration of digital sets with symmetry reduction, exhaustive and
// randomized minimization of the carry statistics, structural classification
// of witnesses, and the theorem sweeps. Heavy counting runs on the int64
// kernels; every value that ends up in a result is re-derived through the
// exact layer first.

namespace carrylab {

// FixZeroRep pins the class-0 digit to the element 0. Translating by m shifts
// every digit uniformly and leaves the distinct-carry count alone but changes
// the carry frequency ({8,0,1} vs {2,3,4} in Z_9: both have three distinct
// carries, frequencies 2/9 vs 8/9), so the reduction is sound for c1 searches
// only. DilationCanonical keeps the lexicographically smallest unit dilate and
// is sound for both statistics.
enum class Reduction { None, FixZeroRep, DilationCanonical };

struct EnumerationPlan {
    Int q;
    Int m;
    Reduction reduction = Reduction::None;
    std::uint32_t partition_index = 0;
    std::uint32_t partition_total = 1;
};

// Candidates visited before any canonical filter: (q/m)^m, or (q/m)^(m-1)
// under FixZeroRep. DilationCanonical visits the full space and skips
// non-representatives, so its yield is smaller than this value.
Int plan_space_size(const EnumerationPlan& plan);

// Streams the plan's partition slice in odometer order (class-0 lift most
// significant, lifts ascending within each class) without materializing the
// space. Each digital set of the reduced space is yielded exactly once across
// all partitions.
void enumerate(const EnumerationPlan& plan, const std::function<void(const DigitalSet&)>& yield);

struct SearchMode {
    enum class Kind { Exhaustive, Random, HillClimb };
    Kind kind = Kind::Exhaustive;
    std::uint64_t samples = 0;   // Random: candidate draws
    std::uint64_t restarts = 0;  // HillClimb: independent descents
    std::uint64_t seed = 0;

    static SearchMode exhaustive();
    static SearchMode random(std::uint64_t samples, std::uint64_t seed);
    static SearchMode hill_climb(std::uint64_t restarts, std::uint64_t seed);
};

struct SearchOptions {
    std::uint64_t budget = 100'000'000;  // max statistic evaluations, exhaustive mode
    int workers = 1;
    Reduction reduction = Reduction::None;
    std::string checkpoint_path;  // empty: no checkpointing
    bool force_sample = false;    // over-budget exhaustive falls back to Random
    std::size_t witness_cap = 4096;
};

// Shared result shape of the two searches. minimizers holds the optimal
// candidates exactly as examined (orbit representatives when a reduction was
// active); witnesses is their deduplicated canonical closure under the
// statistic's symmetry group. All listed sets re-verify through the exact
// carry computation before the result is returned.
struct SearchWitnesses {
    std::vector<DigitalSet> minimizers;
    std::vector<DigitalSet> witnesses;
    std::uint64_t minimizer_total = 0;    // exact, even when lists are capped
    std::uint64_t candidates_examined = 0;
    Int space_size;                        // unreduced (q/m)^m
    bool certified = false;                // true only for completed exhaustive runs
    bool truncated = false;                // witness cap was hit
    std::vector<std::string> warnings;
};

struct MinC2Result : SearchWitnesses {
    Rat min;
};

struct MinC1Result : SearchWitnesses {
    Int min;
};

// Global minimum of the carry frequency over digital sets in Z_q. Rejects
// FixZeroRep (frequency is not translation-invariant); Random and HillClimb
// require Reduction::None. Witness canonicalization is by dilation.
MinC2Result min_c2(const Int& q, const Int& m, const SearchMode& mode,
                   const SearchOptions& opts = {});

// Global minimum of the distinct-carry count. All three reductions are valid;
// witness canonicalization is by the affine maps a -> c*a + d with c a unit
// and d a multiple of m.
MinC1Result min_c1(const Int& q, const Int& m, const SearchMode& mode,
                   const SearchOptions& opts = {});

enum class ClassifyPurpose { ForC1, ForC2 };

enum class StructureKind { SymmetricIntervalDilation, IntervalAffine, APSameDifference, Other };

enum class IntervalVariant { ZeroToMMinusOne, OneToM };

struct StructureClass {
    StructureKind kind = StructureKind::Other;
    std::optional<Int> c;           // dilation factor (first match, units ascending)
    std::optional<Int> d;           // translation offset (IntervalAffine, Z intervals)
    std::optional<Int> difference;  // APSameDifference: canonical common difference
    std::optional<IntervalVariant> variant;

    bool operator==(const StructureClass&) const = default;
};

// Matches A against the extremal shapes relevant to the given statistic.
//
// ForC2, modular: is A = c * I for a unit c, with I the centered interval
// ([-(m-1)/2, (m-1)/2] for odd m; either half-open variant for even m)?
// ForC1, modular: is c*A + d = [0, m-1] or [1, m] for a unit c and d a
// multiple of m? Search order is c ascending, then d ascending, with the
// [0, m-1] variant tried first, so the reported witness map is deterministic.
// Over Z the interval tests are against translates by multiples of m and
// reflection. Falls back to APSameDifference, then Other.
StructureClass classify_structure(const DigitalSet& a, ClassifyPurpose purpose);

std::string structure_to_string(const StructureClass& cls);

struct VerifyParams {
    std::optional<Int> q;
    std::optional<Int> m;
    std::optional<Int> p;
    std::optional<unsigned> alpha;
    std::optional<unsigned> beta;
    std::optional<Int> window;
    // 0 runs the sweep exhaustively (SpaceTooLarge if it exceeds the budget);
    // otherwise the pair stage draws this many seeded samples and the
    // deterministic equality-candidate passes still run in full.
    std::uint64_t samples = 0;
};

struct VerifyOptions {
    std::uint64_t budget = 100'000'000;
    int workers = 1;
    std::uint64_t seed = 0;
    std::string checkpoint_path;
    std::size_t witness_cap = 256;
};

struct VerificationReport {
    std::string theorem_id;
    nlohmann::ordered_json parameters;  // resolved parameter echo
    std::string mode;                   // "exhaustive", "sampled", or "window-complete"
    std::uint64_t candidates_examined = 0;
    std::uint64_t seed = 0;
    nlohmann::ordered_json violations = nlohmann::ordered_json::array();
    std::uint64_t violation_count = 0;  // exact even when the stored list is capped
    nlohmann::ordered_json equality_witnesses = nlohmann::ordered_json::array();
    std::uint64_t equality_count = 0;
    std::optional<Rat> min_observed;  // statistic sweeps: min value; pair sweeps: min slack
    nlohmann::ordered_json details = nlohmann::ordered_json::object();
    double elapsed_seconds = 0.0;
    std::vector<std::string> warnings;

    bool passed() const { return violation_count == 0; }
};

// The checkable claims, dispatched by id:
//   "pollard-chowla"       S(A,B,t) >= t*min(q, |A|+|B|-t) over subset pairs
//                          where A or B has pairwise-unit differences (q)
//   "naz-equality"         every tight case above with 2 <= t <= |B| <= |A|
//                          satisfies one of the four structural conditions (q)
//   "thm22"                odd-p digital pair thresholds at both layer counts
//                          (p, alpha, beta), equality exactly at
//                          same-difference progression pairs
//   "thm23"                p = 2 counterpart (alpha, beta)
//   "c1-structure"         min distinct-carry count is 2 and the minimizers
//                          are exactly the affine classes of [0, m-1] (q, m)
//   "c2-mu"                carry frequency >= mu(m) for every digital set (q, m)
//   "z-case"               integer-case carry count >= floor(m^2/4) and
//                          distinct count >= 2 over a digit window (m, window)
//   "prime-power-extremal" carry count >= floor(p^(2*alpha)/4) in Z_{p^beta},
//                          reporting which floor reading the sweep supports
VerificationReport verify_theorem(const std::string& theorem_id, const VerifyParams& params,
                                  const VerifyOptions& opts = {});

std::vector<std::string> theorem_ids();

}  // namespace carrylab
