#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "carrylab/error.hpp"

// Machine-word sweep kernels. Everything in this header trades the exact
// arbitrary-precision types for int64 so that exhaustive sweeps over 10^4..10^8
// candidates stay cheap. The exact layer (carry.hpp) is the reference
// implementation; tests assert the two agree candidate-by-candidate, and every
// witness a sweep reports is re-verified through the exact path before it
// reaches a report.
//
// Each kernel folds a contiguous index range serially and returns an
// accumulator; the engine in sweep.hpp partitions the full range into shards
// and merges the per-shard accumulators in shard order, which is what makes
// results independent of the worker count.

namespace carrylab::kernels {

// Candidate spaces are capped so per-thread workspaces (membership bitmap of
// size q, pair buffer of size m^2) stay small; sweeps beyond this are out of
// scope for the kernel layer.
inline constexpr std::int64_t kMaxKernelModulus = std::int64_t{1} << 20;
inline constexpr std::int64_t kMaxKernelDigits = 512;

// The space of digital sets in Z_q with m | q: one lift choice out of n = q/m
// per residue class. Index order is an odometer over the per-class lift
// indices with class 0 most significant, so index ranges shard the space by
// prefix. With fix_zero_rep the class-0 digit is pinned to the element 0 and
// only classes 1..m-1 vary.
struct DigitalSpace {
    std::int64_t q = 0;
    std::int64_t m = 0;
    std::int64_t n = 0;
    bool fix_zero_rep = false;

    static DigitalSpace make(std::int64_t q, std::int64_t m, bool fix_zero_rep = false);

    int varying_digits() const { return static_cast<int>(fix_zero_rep ? m - 1 : m); }

    // n^digits, saturated at UINT64_MAX (callers budget-check long before).
    std::uint64_t size() const;

    // Writes the m digits indexed by residue class: out[r] is the class-r digit.
    void decode(std::uint64_t index, std::int32_t* out) const;

    // Inverse of decode; digits must be given by residue class.
    std::uint64_t encode(const std::int32_t* digits) const;
};

// The space of digital sets over Z with digits restricted to [-w, w]: class r
// picks one value from {x in [-w,w] : x ≡ r (mod m)}, mixed-radix odometer,
// class 0 most significant.
struct WindowSpace {
    std::int64_t m = 0;
    std::int64_t w = 0;
    std::vector<std::int32_t> lifts;    // per-class candidate values, class-major
    std::vector<std::int32_t> offsets;  // class r occupies [offsets[r], offsets[r+1])

    static WindowSpace make(std::int64_t m, std::int64_t w);

    std::int64_t radix(std::int64_t r) const { return offsets[r + 1] - offsets[r]; }
    std::uint64_t size() const;
    void decode(std::uint64_t index, std::int32_t* out) const;
};

// Scratch buffers reused across candidates within one shard.
struct Workspace {
    std::vector<std::uint8_t> member;
    std::vector<std::int32_t> digits;
    std::vector<std::int64_t> pair_values;
    std::vector<std::int32_t> sorted_a;
    std::vector<std::int32_t> sorted_b;
    std::vector<std::int16_t> counts;
    std::vector<std::int32_t> touched;
    std::vector<std::int64_t> hist;
};

// Minimum tracker with capped witness storage. Lists hold at most `cap`
// entries; the *_total counters stay exact. merge() keeps shard order, so the
// surviving capped prefix is deterministic.
struct MinAcc {
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    std::vector<std::uint64_t> argmin;
    std::uint64_t argmin_total = 0;

    struct Violation {
        std::uint64_t index;
        std::int64_t value;
    };
    std::vector<Violation> violations;
    std::uint64_t violation_total = 0;

    void consider(std::uint64_t index, std::int64_t value, std::size_t cap);
    void record_violation(std::uint64_t index, std::int64_t value, std::size_t cap);
    void merge(const MinAcc& other, std::size_t cap);
};

enum class Stat { CarryCount, DistinctCarries };

struct SetSweepAcc {
    MinAcc stat;
    std::uint64_t examined = 0;
    void merge(const SetSweepAcc& other, std::size_t cap);
};

// Folds the statistic over space indices [begin, end). A violation is
// recorded when the statistic falls below violation_below (pass INT64_MIN to
// disable). canonical_units, when non-null, restricts the fold to candidates
// that are lexicographically minimal in their dilation orbit.
SetSweepAcc sweep_digital_range(const DigitalSpace& space, Stat stat,
                                std::int64_t violation_below,
                                const std::vector<std::int32_t>* canonical_units,
                                std::uint64_t begin, std::uint64_t end,
                                std::size_t cap, Workspace& ws);

// Same fold over draws k in [begin_draw, end_draw): candidate index is
// draw_below(seed, k, space.size()). Duplicates are possible and counted.
SetSweepAcc sweep_digital_samples(const DigitalSpace& space, Stat stat,
                                  std::int64_t violation_below, std::uint64_t seed,
                                  std::uint64_t begin_draw, std::uint64_t end_draw,
                                  std::size_t cap, Workspace& ws);

// Steepest-descent restarts r in [begin_restart, end_restart): start at a
// seeded random candidate, move to the best strictly-improving single-class
// change (ties broken by lowest candidate index) until locally minimal.
// examined counts statistic evaluations.
SetSweepAcc hill_climb_range(const DigitalSpace& space, Stat stat, std::uint64_t seed,
                             std::uint64_t begin_restart, std::uint64_t end_restart,
                             std::size_t cap, Workspace& ws);

int64_t statistic_of(const DigitalSpace& space, Stat stat, const std::int32_t* digits,
                     Workspace& ws);

struct WindowSweepAcc {
    MinAcc carry_count;
    MinAcc distinct;
    std::uint64_t examined = 0;
    void merge(const WindowSweepAcc& other, std::size_t cap);
};

// Sweeps both statistics over the window space; violations are carry counts
// below cc_below and distinct-carry counts below distinct_below.
WindowSweepAcc sweep_window_range(const WindowSpace& space, std::int64_t cc_below,
                                  std::int64_t distinct_below, std::uint64_t begin,
                                  std::uint64_t end, std::size_t cap, Workspace& ws);

// Context for the layered-sum pair sweeps: every digital set decoded once,
// with a per-set bitmask (over words of 64) of the differences d for which the
// set is an arithmetic progression. A pair is a same-difference AP pair when
// the masks intersect.
struct PairContext {
    DigitalSpace space;
    std::uint64_t set_count = 0;
    int words = 0;
    std::vector<std::int32_t> digits;   // set_count * m, class-major
    std::vector<std::uint64_t> ap_mask; // set_count * words

    // Layer counts and the claimed thresholds; side 2 is optional (t2 < 0).
    std::int64_t t1 = 0, threshold1 = 0;
    std::int64_t t2 = -1, threshold2 = 0;

    static PairContext build(const DigitalSpace& space, std::int64_t t1,
                             std::int64_t threshold1, std::int64_t t2,
                             std::int64_t threshold2);

    bool ap_pair(std::uint64_t ia, std::uint64_t ib) const;
};

struct PairViolation {
    std::uint64_t ia;
    std::uint64_t ib;
    int side;            // 1 or 2
    std::int64_t sum;
    std::int64_t threshold;
    // 0: sum below threshold; 1: equality at a non-AP pair; 2: AP pair missing
    // equality.
    int kind;
};

struct PairEquality {
    std::uint64_t ia;
    std::uint64_t ib;
    int side;
    std::int64_t sum;
};

struct PairSweepAcc {
    std::int64_t min_slack = std::numeric_limits<std::int64_t>::max();
    std::vector<PairViolation> violations;
    std::uint64_t violation_total = 0;
    std::uint64_t violation_kinds[3] = {0, 0, 0};  // exact totals, indexed by kind
    std::vector<PairEquality> equalities;
    std::uint64_t equality_total[2] = {0, 0};
    std::uint64_t ap_pair_seen = 0;
    std::uint64_t examined = 0;
    void merge(const PairSweepAcc& other, std::size_t cap);
};

PairSweepAcc pair_sweep_range(const PairContext& ctx, std::uint64_t begin,
                              std::uint64_t end, std::size_t cap, Workspace& ws);
PairSweepAcc pair_sweep_samples(const PairContext& ctx, std::uint64_t seed,
                                std::uint64_t begin_draw, std::uint64_t end_draw,
                                std::size_t cap, Workspace& ws);
PairSweepAcc pair_sweep_list(const PairContext& ctx,
                             const std::vector<std::pair<std::uint64_t, std::uint64_t>>& pairs,
                             std::size_t begin, std::size_t end, std::size_t cap,
                             Workspace& ws);

// All (start, difference) arithmetic progressions of length m that are digital
// in Z_q, as deduplicated space indices grouped per difference class.
std::vector<std::pair<std::uint64_t, std::uint64_t>> same_difference_ap_pairs(
    const DigitalSpace& space);

// Context for subset sweeps over Z_q (q small): per-mask cardinality, Chowla
// flag and AP-difference mask. Masks run over 1..2^q-1.
struct SubsetContext {
    int q = 0;
    std::vector<std::uint8_t> size;
    std::vector<std::uint8_t> chowla;
    std::vector<std::uint32_t> ap_mask;

    static SubsetContext build(int q);
    std::uint64_t mask_count() const { return (std::uint64_t{1} << q) - 1; }
};

struct SubsetViolation {
    std::uint32_t mask_a;
    std::uint32_t mask_b;
    std::int64_t t;
    std::int64_t sum;
    std::int64_t bound;
    int kind;  // 0: sum below bound; 1: equality with no covering condition
};

struct SubsetEquality {
    std::uint32_t mask_a;
    std::uint32_t mask_b;
    std::int64_t t;
    std::int64_t sum;
    std::uint8_t conditions;  // bit 0: |B|=t, 1: sizes exceed q, 2: reflection, 3: same-diff APs
};

struct SubsetSweepAcc {
    std::int64_t min_slack = std::numeric_limits<std::int64_t>::max();
    std::vector<SubsetViolation> violations;
    std::uint64_t violation_total = 0;
    std::vector<SubsetEquality> equalities;
    std::uint64_t equality_total = 0;
    std::uint64_t examined = 0;  // (A, B, t) triples checked
    void merge(const SubsetSweepAcc& other, std::size_t cap);
};

// Pollard sweep: ordered subset pairs where A or B has the Chowla property,
// t in [1, min(|A|, |B|)], checking S(A,B,t) >= t*min(q, |A|+|B|-t).
// Equalities are recorded without condition bits.
SubsetSweepAcc chowla_pair_range(const SubsetContext& ctx, std::uint64_t begin_pair,
                                 std::uint64_t end_pair, std::size_t cap, Workspace& ws);

// Equality-condition sweep: ordered subset pairs with 2 <= t <= |B| <= |A| and
// B Chowla; every equality must satisfy at least one of the four structural
// conditions, otherwise it is recorded as a violation.
SubsetSweepAcc equality_pair_range(const SubsetContext& ctx, std::uint64_t begin_pair,
                                   std::uint64_t end_pair, std::size_t cap, Workspace& ws);

SubsetSweepAcc chowla_pair_samples(const SubsetContext& ctx, std::uint64_t seed,
                                   std::uint64_t begin_draw, std::uint64_t end_draw,
                                   std::size_t cap, Workspace& ws);
SubsetSweepAcc equality_pair_samples(const SubsetContext& ctx, std::uint64_t seed,
                                     std::uint64_t begin_draw, std::uint64_t end_draw,
                                     std::size_t cap, Workspace& ws);

}  // namespace carrylab::kernels
