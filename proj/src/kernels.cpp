#include "carrylab/kernels.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "carrylab/kernel_serde.hpp"
#include "carrylab/rng.hpp"

namespace carrylab::kernels {

namespace {

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
    while (b != 0) {
        std::int64_t t = a % b;
        a = b;
        b = t;
    }
    return a < 0 ? -a : a;
}

void ensure_size(std::vector<std::uint8_t>& v, std::size_t n) {
    if (v.size() < n) v.assign(n, 0);
}

template <class T>
void ensure_size(std::vector<T>& v, std::size_t n) {
    if (v.size() < n) v.resize(n);
}

}  // namespace

DigitalSpace DigitalSpace::make(std::int64_t q, std::int64_t m, bool fix_zero_rep) {
    if (q < 2 || m < 2) throw Error(Errc::BadArgument, "sweep space needs q >= 2 and m >= 2");
    if (q % m != 0) throw Error(Errc::MDoesNotDivideQ, "sweep space needs m | q");
    if (q > kMaxKernelModulus)
        throw Error(Errc::BadArgument, "modulus too large for sweep kernels");
    if (m > kMaxKernelDigits)
        throw Error(Errc::BadArgument, "digit count too large for sweep kernels");
    DigitalSpace sp;
    sp.q = q;
    sp.m = m;
    sp.n = q / m;
    sp.fix_zero_rep = fix_zero_rep;
    return sp;
}

std::uint64_t DigitalSpace::size() const {
    unsigned __int128 total = 1;
    for (int i = 0; i < varying_digits(); ++i) {
        total *= static_cast<unsigned __int128>(n);
        if (total > std::numeric_limits<std::uint64_t>::max())
            return std::numeric_limits<std::uint64_t>::max();
    }
    return static_cast<std::uint64_t>(total);
}

void DigitalSpace::decode(std::uint64_t index, std::int32_t* out) const {
    const std::uint64_t base = static_cast<std::uint64_t>(n);
    const int lo = fix_zero_rep ? 1 : 0;
    if (fix_zero_rep) out[0] = 0;
    for (std::int64_t r = m - 1; r >= lo; --r) {
        std::uint64_t lift = index % base;
        index /= base;
        out[r] = static_cast<std::int32_t>(r + m * static_cast<std::int64_t>(lift));
    }
}

std::uint64_t DigitalSpace::encode(const std::int32_t* digits) const {
    const std::uint64_t base = static_cast<std::uint64_t>(n);
    const int lo = fix_zero_rep ? 1 : 0;
    std::uint64_t index = 0;
    for (std::int64_t r = lo; r < m; ++r) {
        std::int64_t lift = (digits[r] - r) / m;
        index = index * base + static_cast<std::uint64_t>(lift);
    }
    return index;
}

WindowSpace WindowSpace::make(std::int64_t m, std::int64_t w) {
    if (m < 2) throw Error(Errc::BadArgument, "window space needs m >= 2");
    if (w < 1 || w > (std::int64_t{1} << 19))
        throw Error(Errc::BadArgument, "window radius out of range");
    if (m > kMaxKernelDigits)
        throw Error(Errc::BadArgument, "digit count too large for sweep kernels");
    WindowSpace sp;
    sp.m = m;
    sp.w = w;
    sp.offsets.assign(m + 1, 0);
    for (std::int64_t r = 0; r < m; ++r) {
        sp.offsets[r] = static_cast<std::int32_t>(sp.lifts.size());
        for (std::int64_t x = -w; x <= w; ++x)
            if (((x % m) + m) % m == r) sp.lifts.push_back(static_cast<std::int32_t>(x));
        if (static_cast<std::int32_t>(sp.lifts.size()) == sp.offsets[r])
            throw Error(Errc::BadArgument, "window too narrow: a residue class has no digit");
    }
    sp.offsets[m] = static_cast<std::int32_t>(sp.lifts.size());
    return sp;
}

std::uint64_t WindowSpace::size() const {
    unsigned __int128 total = 1;
    for (std::int64_t r = 0; r < m; ++r) {
        total *= static_cast<unsigned __int128>(radix(r));
        if (total > std::numeric_limits<std::uint64_t>::max())
            return std::numeric_limits<std::uint64_t>::max();
    }
    return static_cast<std::uint64_t>(total);
}

void WindowSpace::decode(std::uint64_t index, std::int32_t* out) const {
    for (std::int64_t r = m - 1; r >= 0; --r) {
        std::uint64_t base = static_cast<std::uint64_t>(radix(r));
        std::uint64_t pos = index % base;
        index /= base;
        out[r] = lifts[offsets[r] + static_cast<std::int32_t>(pos)];
    }
}

void MinAcc::consider(std::uint64_t index, std::int64_t value, std::size_t cap) {
    if (value < best) {
        best = value;
        argmin.clear();
        argmin.push_back(index);
        argmin_total = 1;
    } else if (value == best) {
        ++argmin_total;
        if (argmin.size() < cap) argmin.push_back(index);
    }
}

void MinAcc::record_violation(std::uint64_t index, std::int64_t value, std::size_t cap) {
    ++violation_total;
    if (violations.size() < cap) violations.push_back({index, value});
}

void MinAcc::merge(const MinAcc& other, std::size_t cap) {
    if (other.best < best) {
        best = other.best;
        argmin = other.argmin;
        argmin_total = other.argmin_total;
    } else if (other.best == best && best != std::numeric_limits<std::int64_t>::max()) {
        argmin_total += other.argmin_total;
        for (std::uint64_t idx : other.argmin) {
            if (argmin.size() >= cap) break;
            argmin.push_back(idx);
        }
    }
    violation_total += other.violation_total;
    for (const Violation& v : other.violations) {
        if (violations.size() >= cap) break;
        violations.push_back(v);
    }
}

void SetSweepAcc::merge(const SetSweepAcc& other, std::size_t cap) {
    stat.merge(other.stat, cap);
    examined += other.examined;
}

void WindowSweepAcc::merge(const WindowSweepAcc& other, std::size_t cap) {
    carry_count.merge(other.carry_count, cap);
    distinct.merge(other.distinct, cap);
    examined += other.examined;
}

std::int64_t statistic_of(const DigitalSpace& space, Stat stat, const std::int32_t* digits,
                          Workspace& ws) {
    const std::int64_t q = space.q;
    const std::int64_t m = space.m;
    ensure_size(ws.member, static_cast<std::size_t>(q));
    if (stat == Stat::CarryCount) {
        for (std::int64_t i = 0; i < m; ++i) ws.member[digits[i]] = 1;
        std::int64_t cc = 0;
        for (std::int64_t i = 0; i < m; ++i) {
            const std::int64_t di = digits[i];
            for (std::int64_t j = 0; j < m; ++j) {
                std::int64_t s = di + digits[j];
                if (s >= q) s -= q;
                cc += ws.member[s] == 0;
            }
        }
        for (std::int64_t i = 0; i < m; ++i) ws.member[digits[i]] = 0;
        return cc;
    }
    ensure_size(ws.pair_values, static_cast<std::size_t>(m * m));
    std::size_t k = 0;
    for (std::int64_t i = 0; i < m; ++i) {
        const std::int64_t di = digits[i];
        for (std::int64_t j = 0; j < m; ++j) {
            std::int64_t s = di + digits[j];
            if (s >= q) s -= q;
            std::int64_t diff = s - digits[s % m];
            if (diff < 0) diff += q;
            ws.pair_values[k++] = diff / m;
        }
    }
    std::sort(ws.pair_values.begin(), ws.pair_values.begin() + k);
    std::int64_t distinct = 0;
    for (std::size_t i = 0; i < k; ++i)
        if (i == 0 || ws.pair_values[i] != ws.pair_values[i - 1]) ++distinct;
    return distinct;
}

namespace {

// True when `digits` is lexicographically minimal (as a sorted tuple) within
// its orbit under dilation by the given units.
bool dilation_canonical(const DigitalSpace& space, const std::int32_t* digits,
                        const std::vector<std::int32_t>& units, Workspace& ws) {
    const std::int64_t q = space.q;
    const std::int64_t m = space.m;
    ensure_size(ws.sorted_a, static_cast<std::size_t>(m));
    ensure_size(ws.sorted_b, static_cast<std::size_t>(m));
    std::copy(digits, digits + m, ws.sorted_a.begin());
    std::sort(ws.sorted_a.begin(), ws.sorted_a.begin() + m);
    for (std::int32_t c : units) {
        if (c == 1) continue;
        for (std::int64_t i = 0; i < m; ++i)
            ws.sorted_b[i] =
                static_cast<std::int32_t>((static_cast<std::int64_t>(c) * digits[i]) % q);
        std::sort(ws.sorted_b.begin(), ws.sorted_b.begin() + m);
        if (std::lexicographical_compare(ws.sorted_b.begin(), ws.sorted_b.begin() + m,
                                         ws.sorted_a.begin(), ws.sorted_a.begin() + m))
            return false;
    }
    return true;
}

void sweep_one(const DigitalSpace& space, Stat stat, std::int64_t violation_below,
               const std::vector<std::int32_t>* canonical_units, std::uint64_t index,
               SetSweepAcc& acc, std::size_t cap, Workspace& ws) {
    space.decode(index, ws.digits.data());
    if (canonical_units != nullptr &&
        !dilation_canonical(space, ws.digits.data(), *canonical_units, ws))
        return;
    std::int64_t value = statistic_of(space, stat, ws.digits.data(), ws);
    acc.stat.consider(index, value, cap);
    if (value < violation_below) acc.stat.record_violation(index, value, cap);
    ++acc.examined;
}

}  // namespace

SetSweepAcc sweep_digital_range(const DigitalSpace& space, Stat stat,
                                std::int64_t violation_below,
                                const std::vector<std::int32_t>* canonical_units,
                                std::uint64_t begin, std::uint64_t end, std::size_t cap,
                                Workspace& ws) {
    SetSweepAcc acc;
    ensure_size(ws.digits, static_cast<std::size_t>(space.m));
    for (std::uint64_t idx = begin; idx < end; ++idx)
        sweep_one(space, stat, violation_below, canonical_units, idx, acc, cap, ws);
    return acc;
}

SetSweepAcc sweep_digital_samples(const DigitalSpace& space, Stat stat,
                                  std::int64_t violation_below, std::uint64_t seed,
                                  std::uint64_t begin_draw, std::uint64_t end_draw,
                                  std::size_t cap, Workspace& ws) {
    SetSweepAcc acc;
    ensure_size(ws.digits, static_cast<std::size_t>(space.m));
    const std::uint64_t total = space.size();
    for (std::uint64_t k = begin_draw; k < end_draw; ++k)
        sweep_one(space, stat, violation_below, nullptr, draw_below(seed, k, total), acc, cap,
                  ws);
    return acc;
}

SetSweepAcc hill_climb_range(const DigitalSpace& space, Stat stat, std::uint64_t seed,
                             std::uint64_t begin_restart, std::uint64_t end_restart,
                             std::size_t cap, Workspace& ws) {
    SetSweepAcc acc;
    const std::int64_t m = space.m;
    const std::int64_t n = space.n;
    const std::uint64_t total = space.size();
    std::vector<std::int32_t> cur(static_cast<std::size_t>(m));
    // Place values of each residue class in the odometer index, class 0 most
    // significant, so neighbor indices can be formed arithmetically.
    std::vector<std::uint64_t> place(static_cast<std::size_t>(m), 1);
    for (std::int64_t r = m - 2; r >= 0; --r)
        place[r] = place[r + 1] * static_cast<std::uint64_t>(n);
    for (std::uint64_t r = begin_restart; r < end_restart; ++r) {
        std::uint64_t idx = draw_below(seed, r, total);
        space.decode(idx, cur.data());
        std::int64_t cur_val = statistic_of(space, stat, cur.data(), ws);
        ++acc.examined;
        bool moved = true;
        while (moved) {
            moved = false;
            std::int64_t best_val = cur_val;
            std::uint64_t best_idx = idx;
            std::int64_t best_class = -1;
            std::int32_t best_digit = 0;
            for (std::int64_t i = 0; i < m; ++i) {
                const std::int32_t keep = cur[i];
                const std::int64_t cur_lift = (keep - i) / m;
                for (std::int64_t lift = 0; lift < n; ++lift) {
                    if (lift == cur_lift) continue;
                    cur[i] = static_cast<std::int32_t>(i + m * lift);
                    std::int64_t v = statistic_of(space, stat, cur.data(), ws);
                    ++acc.examined;
                    std::uint64_t nidx = idx + (lift - cur_lift) * place[i];
                    if (v < best_val || (v == best_val && best_class >= 0 && nidx < best_idx)) {
                        best_val = v;
                        best_idx = nidx;
                        best_class = i;
                        best_digit = cur[i];
                    }
                }
                cur[i] = keep;
            }
            if (best_val < cur_val) {
                cur[best_class] = best_digit;
                cur_val = best_val;
                idx = best_idx;
                moved = true;
            }
        }
        acc.stat.consider(idx, cur_val, cap);
    }
    return acc;
}

WindowSweepAcc sweep_window_range(const WindowSpace& space, std::int64_t cc_below,
                                  std::int64_t distinct_below, std::uint64_t begin,
                                  std::uint64_t end, std::size_t cap, Workspace& ws) {
    WindowSweepAcc acc;
    const std::int64_t m = space.m;
    const std::int64_t w = space.w;
    const std::int64_t off = 2 * w;
    ensure_size(ws.digits, static_cast<std::size_t>(m));
    ensure_size(ws.member, static_cast<std::size_t>(4 * w + 1));
    ensure_size(ws.pair_values, static_cast<std::size_t>(m * m));
    for (std::uint64_t idx = begin; idx < end; ++idx) {
        space.decode(idx, ws.digits.data());
        const std::int32_t* d = ws.digits.data();
        for (std::int64_t i = 0; i < m; ++i) ws.member[d[i] + off] = 1;
        std::int64_t cc = 0;
        std::size_t k = 0;
        for (std::int64_t i = 0; i < m; ++i) {
            for (std::int64_t j = 0; j < m; ++j) {
                const std::int64_t s = static_cast<std::int64_t>(d[i]) + d[j];
                cc += ws.member[s + off] == 0;
                const std::int64_t cls = ((s % m) + m) % m;
                ws.pair_values[k++] = (s - d[cls]) / m;
            }
        }
        for (std::int64_t i = 0; i < m; ++i) ws.member[d[i] + off] = 0;
        std::sort(ws.pair_values.begin(), ws.pair_values.begin() + k);
        std::int64_t distinct = 0;
        for (std::size_t t = 0; t < k; ++t)
            if (t == 0 || ws.pair_values[t] != ws.pair_values[t - 1]) ++distinct;
        acc.carry_count.consider(idx, cc, cap);
        if (cc < cc_below) acc.carry_count.record_violation(idx, cc, cap);
        acc.distinct.consider(idx, distinct, cap);
        if (distinct < distinct_below) acc.distinct.record_violation(idx, distinct, cap);
        ++acc.examined;
    }
    return acc;
}

namespace {

// AP test for one difference over a membership predicate. `size` is the
// element count.
template <class MemberFn>
bool is_ap_with_difference(std::int64_t q, std::int64_t size,
                           const std::vector<std::int32_t>& elements, std::int64_t d,
                           MemberFn member) {
    // Runs start at elements whose predecessor is absent.
    std::int64_t start = -1;
    int starts = 0;
    for (std::int64_t i = 0; i < size; ++i) {
        std::int64_t pred = elements[i] - d;
        if (pred < 0) pred += q;
        if (!member(pred)) {
            ++starts;
            if (starts > 1) return false;
            start = elements[i];
        }
    }
    if (starts == 0) {
        // Every element has a predecessor: the set is a union of full cycles
        // of d, an AP exactly when it is one cycle of length `size`.
        if (q / gcd64(d, q) != size) return false;
        start = elements[0];
    }
    std::int64_t x = start;
    for (std::int64_t i = 1; i < size; ++i) {
        x += d;
        if (x >= q) x -= q;
        if (!member(x)) return false;
    }
    return true;
}

}  // namespace

PairContext PairContext::build(const DigitalSpace& space, std::int64_t t1,
                               std::int64_t threshold1, std::int64_t t2,
                               std::int64_t threshold2) {
    PairContext ctx;
    ctx.space = space;
    ctx.set_count = space.size();
    if (ctx.set_count > (std::uint64_t{1} << 24))
        throw Error(Errc::SpaceTooLarge, "too many digital sets for a pair-sweep context");
    ctx.words = static_cast<int>((space.q + 63) / 64);
    ctx.t1 = t1;
    ctx.threshold1 = threshold1;
    ctx.t2 = t2;
    ctx.threshold2 = threshold2;
    const std::int64_t m = space.m;
    const std::int64_t q = space.q;
    ctx.digits.resize(ctx.set_count * static_cast<std::uint64_t>(m));
    ctx.ap_mask.assign(ctx.set_count * static_cast<std::uint64_t>(ctx.words), 0);
    std::vector<std::uint8_t> member(static_cast<std::size_t>(q), 0);
    std::vector<std::int32_t> sorted(static_cast<std::size_t>(m));
    for (std::uint64_t idx = 0; idx < ctx.set_count; ++idx) {
        std::int32_t* d = &ctx.digits[idx * static_cast<std::uint64_t>(m)];
        space.decode(idx, d);
        std::copy(d, d + m, sorted.begin());
        std::sort(sorted.begin(), sorted.end());
        for (std::int64_t i = 0; i < m; ++i) member[sorted[i]] = 1;
        std::uint64_t* mask = &ctx.ap_mask[idx * static_cast<std::uint64_t>(ctx.words)];
        for (std::int64_t diff = 1; diff < q; ++diff) {
            if (is_ap_with_difference(q, m, sorted, diff,
                                      [&](std::int64_t x) { return member[x] != 0; }))
                mask[diff >> 6] |= std::uint64_t{1} << (diff & 63);
        }
        for (std::int64_t i = 0; i < m; ++i) member[sorted[i]] = 0;
    }
    return ctx;
}

bool PairContext::ap_pair(std::uint64_t ia, std::uint64_t ib) const {
    const std::uint64_t* a = &ap_mask[ia * static_cast<std::uint64_t>(words)];
    const std::uint64_t* b = &ap_mask[ib * static_cast<std::uint64_t>(words)];
    for (int i = 0; i < words; ++i)
        if ((a[i] & b[i]) != 0) return true;
    return false;
}

void PairSweepAcc::merge(const PairSweepAcc& other, std::size_t cap) {
    min_slack = std::min(min_slack, other.min_slack);
    violation_total += other.violation_total;
    for (int k = 0; k < 3; ++k) violation_kinds[k] += other.violation_kinds[k];
    for (const PairViolation& v : other.violations) {
        if (violations.size() >= cap) break;
        violations.push_back(v);
    }
    equality_total[0] += other.equality_total[0];
    equality_total[1] += other.equality_total[1];
    for (const PairEquality& e : other.equalities) {
        if (equalities.size() >= cap) break;
        equalities.push_back(e);
    }
    ap_pair_seen += other.ap_pair_seen;
    examined += other.examined;
}

namespace {

void pair_eval(const PairContext& ctx, std::uint64_t ia, std::uint64_t ib, PairSweepAcc& acc,
               std::size_t cap, Workspace& ws) {
    const std::int64_t q = ctx.space.q;
    const std::int64_t m = ctx.space.m;
    const std::int32_t* a = &ctx.digits[ia * static_cast<std::uint64_t>(m)];
    const std::int32_t* b = &ctx.digits[ib * static_cast<std::uint64_t>(m)];
    std::size_t tc = 0;
    for (std::int64_t i = 0; i < m; ++i) {
        const std::int64_t ai = a[i];
        for (std::int64_t j = 0; j < m; ++j) {
            std::int64_t s = ai + b[j];
            if (s >= q) s -= q;
            if (ws.counts[s]++ == 0) ws.touched[tc++] = static_cast<std::int32_t>(s);
        }
    }
    const bool ap = ctx.ap_pair(ia, ib);
    if (ap) ++acc.ap_pair_seen;
    const int sides = ctx.t2 >= 0 ? 2 : 1;
    for (int side = 1; side <= sides; ++side) {
        const std::int64_t t = side == 1 ? ctx.t1 : ctx.t2;
        const std::int64_t thr = side == 1 ? ctx.threshold1 : ctx.threshold2;
        std::int64_t sum = 0;
        for (std::size_t i = 0; i < tc; ++i)
            sum += std::min<std::int64_t>(t, ws.counts[ws.touched[i]]);
        acc.min_slack = std::min(acc.min_slack, sum - thr);
        int kind = -1;
        if (sum < thr)
            kind = 0;
        else if (sum == thr && !ap)
            kind = 1;
        else if (sum != thr && ap)
            kind = 2;
        if (kind >= 0) {
            ++acc.violation_total;
            ++acc.violation_kinds[kind];
            if (acc.violations.size() < cap) acc.violations.push_back({ia, ib, side, sum, thr, kind});
        }
        if (sum == thr) {
            ++acc.equality_total[side - 1];
            if (acc.equalities.size() < cap) acc.equalities.push_back({ia, ib, side, sum});
        }
    }
    for (std::size_t i = 0; i < tc; ++i) ws.counts[ws.touched[i]] = 0;
    ++acc.examined;
}

void pair_ws_init(const PairContext& ctx, Workspace& ws) {
    ensure_size(ws.counts, static_cast<std::size_t>(ctx.space.q));
    std::fill(ws.counts.begin(), ws.counts.end(), 0);
    ensure_size(ws.touched, static_cast<std::size_t>(ctx.space.m * ctx.space.m));
}

}  // namespace

PairSweepAcc pair_sweep_range(const PairContext& ctx, std::uint64_t begin, std::uint64_t end,
                              std::size_t cap, Workspace& ws) {
    PairSweepAcc acc;
    pair_ws_init(ctx, ws);
    const std::uint64_t n = ctx.set_count;
    for (std::uint64_t idx = begin; idx < end; ++idx) pair_eval(ctx, idx / n, idx % n, acc, cap, ws);
    return acc;
}

PairSweepAcc pair_sweep_samples(const PairContext& ctx, std::uint64_t seed,
                                std::uint64_t begin_draw, std::uint64_t end_draw,
                                std::size_t cap, Workspace& ws) {
    PairSweepAcc acc;
    pair_ws_init(ctx, ws);
    const std::uint64_t n = ctx.set_count;
    const std::uint64_t total = n * n;
    for (std::uint64_t k = begin_draw; k < end_draw; ++k) {
        std::uint64_t idx = draw_below(seed, k, total);
        pair_eval(ctx, idx / n, idx % n, acc, cap, ws);
    }
    return acc;
}

PairSweepAcc pair_sweep_list(const PairContext& ctx,
                             const std::vector<std::pair<std::uint64_t, std::uint64_t>>& pairs,
                             std::size_t begin, std::size_t end, std::size_t cap,
                             Workspace& ws) {
    PairSweepAcc acc;
    pair_ws_init(ctx, ws);
    for (std::size_t i = begin; i < end; ++i)
        pair_eval(ctx, pairs[i].first, pairs[i].second, acc, cap, ws);
    return acc;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> same_difference_ap_pairs(
    const DigitalSpace& space) {
    const std::int64_t q = space.q;
    const std::int64_t m = space.m;
    std::vector<std::int32_t> digits(static_cast<std::size_t>(m));
    std::set<std::pair<std::uint64_t, std::uint64_t>> pairs;
    for (std::int64_t d = 1; d < q; ++d) {
        if (gcd64(d, m) != 1) continue;  // i*d must cover all residue classes mod m
        std::vector<std::uint64_t> family;
        for (std::int64_t a = 0; a < q; ++a) {
            for (std::int64_t i = 0; i < m; ++i) {
                std::int64_t x = (a + i * d) % q;
                digits[x % m] = static_cast<std::int32_t>(x);
            }
            family.push_back(space.encode(digits.data()));
        }
        std::sort(family.begin(), family.end());
        family.erase(std::unique(family.begin(), family.end()), family.end());
        for (std::uint64_t ia : family)
            for (std::uint64_t ib : family) pairs.emplace(ia, ib);
    }
    return {pairs.begin(), pairs.end()};
}

SubsetContext SubsetContext::build(int q) {
    if (q < 2 || q > 20)
        throw Error(Errc::BadArgument, "subset sweeps support 2 <= q <= 20");
    SubsetContext ctx;
    ctx.q = q;
    const std::uint64_t count = (std::uint64_t{1} << q);
    std::vector<std::uint8_t> unit(static_cast<std::size_t>(q), 0);
    for (int d = 1; d < q; ++d) unit[d] = gcd64(d, q) == 1;
    ctx.size.assign(count, 0);
    ctx.chowla.assign(count, 0);
    ctx.ap_mask.assign(count, 0);
    std::vector<std::int32_t> elements;
    for (std::uint64_t mask = 1; mask < count; ++mask) {
        elements.clear();
        for (int x = 0; x < q; ++x)
            if (mask >> x & 1) elements.push_back(x);
        ctx.size[mask] = static_cast<std::uint8_t>(elements.size());
        bool chowla = true;
        for (std::size_t i = 0; i < elements.size() && chowla; ++i)
            for (std::size_t j = i + 1; j < elements.size(); ++j)
                if (!unit[elements[j] - elements[i]]) {
                    chowla = false;
                    break;
                }
        ctx.chowla[mask] = chowla;
        // Size <= 1 keeps an empty mask, matching the exact layer's convention
        // of reporting no difference in [1, q) for such sets.
        if (elements.size() <= 1) continue;
        for (int d = 1; d < q; ++d) {
            if (is_ap_with_difference(q, static_cast<std::int64_t>(elements.size()), elements, d,
                                      [&](std::int64_t x) { return (mask >> x & 1) != 0; }))
                ctx.ap_mask[mask] |= std::uint32_t{1} << d;
        }
    }
    return ctx;
}

void SubsetSweepAcc::merge(const SubsetSweepAcc& other, std::size_t cap) {
    min_slack = std::min(min_slack, other.min_slack);
    violation_total += other.violation_total;
    for (const SubsetViolation& v : other.violations) {
        if (violations.size() >= cap) break;
        violations.push_back(v);
    }
    equality_total += other.equality_total;
    for (const SubsetEquality& e : other.equalities) {
        if (equalities.size() >= cap) break;
        equalities.push_back(e);
    }
    examined += other.examined;
}

namespace {

// Layered sums for one subset pair: layers[i] = |{x : r_{A+B}(x) >= i}|.
// Returns the number of distinct sums touched; ws.counts is left zeroed.
void subset_layers(const SubsetContext& ctx, std::uint32_t mask_a, std::uint32_t mask_b,
                   Workspace& ws, std::vector<std::int64_t>& layers) {
    const int q = ctx.q;
    std::size_t tc = 0;
    for (int x = 0; x < q; ++x) {
        if (!(mask_a >> x & 1)) continue;
        for (int y = 0; y < q; ++y) {
            if (!(mask_b >> y & 1)) continue;
            int s = x + y;
            if (s >= q) s -= q;
            if (ws.counts[s]++ == 0) ws.touched[tc++] = s;
        }
    }
    std::fill(layers.begin(), layers.end(), 0);
    for (std::size_t i = 0; i < tc; ++i) {
        const std::int32_t s = ws.touched[i];
        layers[ws.counts[s]] += 1;  // histogram of multiplicities
        ws.counts[s] = 0;
    }
    // Suffix-sum the histogram into layer sizes.
    for (int i = q; i >= 1; --i) layers[i] += i < q ? layers[i + 1] : 0;
}

bool subset_reflection_exists(const SubsetContext& ctx, std::uint32_t mask_a,
                              std::uint32_t mask_b) {
    const int q = ctx.q;
    int a0 = 0;
    while (!(mask_a >> a0 & 1)) ++a0;
    for (int b = 0; b < q; ++b) {
        if (!(mask_b >> b & 1)) continue;
        const int g = a0 + b >= q ? a0 + b - q : a0 + b;
        std::uint32_t reflected = 0;
        for (int x = 0; x < q; ++x)
            if (mask_a >> x & 1) {
                int y = g - x;
                if (y < 0) y += q;
                reflected |= std::uint32_t{1} << y;
            }
        if (reflected == mask_b) return true;
    }
    return false;
}

void subset_ws_init(const SubsetContext& ctx, Workspace& ws) {
    ensure_size(ws.counts, static_cast<std::size_t>(ctx.q));
    std::fill(ws.counts.begin(), ws.counts.end(), 0);
    ensure_size(ws.touched, static_cast<std::size_t>(ctx.q));
    ensure_size(ws.hist, static_cast<std::size_t>(ctx.q) + 2);
}

void chowla_pair_eval(const SubsetContext& ctx, std::uint32_t mask_a, std::uint32_t mask_b,
                      SubsetSweepAcc& acc, std::size_t cap, Workspace& ws) {
    if (!ctx.chowla[mask_a] && !ctx.chowla[mask_b]) return;
    const std::int64_t na = ctx.size[mask_a];
    const std::int64_t nb = ctx.size[mask_b];
    subset_layers(ctx, mask_a, mask_b, ws, ws.hist);
    const std::int64_t tmax = std::min(na, nb);
    std::int64_t sum = 0;
    for (std::int64_t t = 1; t <= tmax; ++t) {
        sum += ws.hist[t];
        const std::int64_t bound = t * std::min<std::int64_t>(ctx.q, na + nb - t);
        acc.min_slack = std::min(acc.min_slack, sum - bound);
        if (sum < bound) {
            ++acc.violation_total;
            if (acc.violations.size() < cap)
                acc.violations.push_back({mask_a, mask_b, t, sum, bound, 0});
        } else if (sum == bound) {
            ++acc.equality_total;
            if (acc.equalities.size() < cap)
                acc.equalities.push_back({mask_a, mask_b, t, sum, 0});
        }
        ++acc.examined;
    }
}

void equality_pair_eval(const SubsetContext& ctx, std::uint32_t mask_a, std::uint32_t mask_b,
                        SubsetSweepAcc& acc, std::size_t cap, Workspace& ws) {
    const std::int64_t na = ctx.size[mask_a];
    const std::int64_t nb = ctx.size[mask_b];
    if (nb < 2 || nb > na || !ctx.chowla[mask_b]) return;
    subset_layers(ctx, mask_a, mask_b, ws, ws.hist);
    std::int64_t sum = ws.hist[1];  // S at t=1; the checked range starts at t=2
    for (std::int64_t t = 2; t <= nb; ++t) {
        sum += ws.hist[t];
        const std::int64_t bound = t * std::min<std::int64_t>(ctx.q, na + nb - t);
        acc.min_slack = std::min(acc.min_slack, sum - bound);
        if (sum < bound) {
            ++acc.violation_total;
            if (acc.violations.size() < cap)
                acc.violations.push_back({mask_a, mask_b, t, sum, bound, 0});
        } else if (sum == bound) {
            std::uint8_t conditions = 0;
            if (nb == t) conditions |= 1;
            if (na + nb >= ctx.q + t) conditions |= 2;
            if (na == t + 1 && nb == t + 1 && subset_reflection_exists(ctx, mask_a, mask_b))
                conditions |= 4;
            if ((ctx.ap_mask[mask_a] & ctx.ap_mask[mask_b]) != 0) conditions |= 8;
            ++acc.equality_total;
            if (acc.equalities.size() < cap)
                acc.equalities.push_back({mask_a, mask_b, t, sum, conditions});
            if (conditions == 0) {
                ++acc.violation_total;
                if (acc.violations.size() < cap)
                    acc.violations.push_back({mask_a, mask_b, t, sum, bound, 1});
            }
        }
        ++acc.examined;
    }
}

}  // namespace

SubsetSweepAcc chowla_pair_range(const SubsetContext& ctx, std::uint64_t begin_pair,
                                 std::uint64_t end_pair, std::size_t cap, Workspace& ws) {
    SubsetSweepAcc acc;
    subset_ws_init(ctx, ws);
    const std::uint64_t count = ctx.mask_count();
    for (std::uint64_t idx = begin_pair; idx < end_pair; ++idx)
        chowla_pair_eval(ctx, static_cast<std::uint32_t>(1 + idx / count),
                         static_cast<std::uint32_t>(1 + idx % count), acc, cap, ws);
    return acc;
}

SubsetSweepAcc equality_pair_range(const SubsetContext& ctx, std::uint64_t begin_pair,
                                   std::uint64_t end_pair, std::size_t cap, Workspace& ws) {
    SubsetSweepAcc acc;
    subset_ws_init(ctx, ws);
    const std::uint64_t count = ctx.mask_count();
    for (std::uint64_t idx = begin_pair; idx < end_pair; ++idx)
        equality_pair_eval(ctx, static_cast<std::uint32_t>(1 + idx / count),
                           static_cast<std::uint32_t>(1 + idx % count), acc, cap, ws);
    return acc;
}

SubsetSweepAcc chowla_pair_samples(const SubsetContext& ctx, std::uint64_t seed,
                                   std::uint64_t begin_draw, std::uint64_t end_draw,
                                   std::size_t cap, Workspace& ws) {
    SubsetSweepAcc acc;
    subset_ws_init(ctx, ws);
    const std::uint64_t count = ctx.mask_count();
    const std::uint64_t total = count * count;
    for (std::uint64_t k = begin_draw; k < end_draw; ++k) {
        std::uint64_t idx = draw_below(seed, k, total);
        chowla_pair_eval(ctx, static_cast<std::uint32_t>(1 + idx / count),
                         static_cast<std::uint32_t>(1 + idx % count), acc, cap, ws);
    }
    return acc;
}

SubsetSweepAcc equality_pair_samples(const SubsetContext& ctx, std::uint64_t seed,
                                     std::uint64_t begin_draw, std::uint64_t end_draw,
                                     std::size_t cap, Workspace& ws) {
    SubsetSweepAcc acc;
    subset_ws_init(ctx, ws);
    const std::uint64_t count = ctx.mask_count();
    const std::uint64_t total = count * count;
    for (std::uint64_t k = begin_draw; k < end_draw; ++k) {
        std::uint64_t idx = draw_below(seed, k, total);
        equality_pair_eval(ctx, static_cast<std::uint32_t>(1 + idx / count),
                           static_cast<std::uint32_t>(1 + idx % count), acc, cap, ws);
    }
    return acc;
}

namespace {

using nlohmann::ordered_json;

ordered_json min_acc_to_json(const MinAcc& acc) {
    ordered_json j;
    j["best"] = acc.best;
    j["argmin"] = acc.argmin;
    j["argmin_total"] = acc.argmin_total;
    ordered_json viols = ordered_json::array();
    for (const MinAcc::Violation& v : acc.violations)
        viols.push_back({{"index", v.index}, {"value", v.value}});
    j["violations"] = std::move(viols);
    j["violation_total"] = acc.violation_total;
    return j;
}

MinAcc min_acc_from_json(const ordered_json& j) {
    MinAcc acc;
    acc.best = j.at("best").get<std::int64_t>();
    acc.argmin = j.at("argmin").get<std::vector<std::uint64_t>>();
    acc.argmin_total = j.at("argmin_total").get<std::uint64_t>();
    for (const auto& v : j.at("violations"))
        acc.violations.push_back(
            {v.at("index").get<std::uint64_t>(), v.at("value").get<std::int64_t>()});
    acc.violation_total = j.at("violation_total").get<std::uint64_t>();
    return acc;
}

}  // namespace

ordered_json acc_to_json(const SetSweepAcc& acc) {
    return ordered_json{{"stat", min_acc_to_json(acc.stat)}, {"examined", acc.examined}};
}

SetSweepAcc set_acc_from_json(const ordered_json& j) {
    SetSweepAcc acc;
    acc.stat = min_acc_from_json(j.at("stat"));
    acc.examined = j.at("examined").get<std::uint64_t>();
    return acc;
}

ordered_json acc_to_json(const WindowSweepAcc& acc) {
    return ordered_json{{"carry_count", min_acc_to_json(acc.carry_count)},
                        {"distinct", min_acc_to_json(acc.distinct)},
                        {"examined", acc.examined}};
}

WindowSweepAcc window_acc_from_json(const ordered_json& j) {
    WindowSweepAcc acc;
    acc.carry_count = min_acc_from_json(j.at("carry_count"));
    acc.distinct = min_acc_from_json(j.at("distinct"));
    acc.examined = j.at("examined").get<std::uint64_t>();
    return acc;
}

ordered_json acc_to_json(const PairSweepAcc& acc) {
    ordered_json j;
    j["min_slack"] = acc.min_slack;
    ordered_json viols = ordered_json::array();
    for (const PairViolation& v : acc.violations)
        viols.push_back({{"ia", v.ia},
                         {"ib", v.ib},
                         {"side", v.side},
                         {"sum", v.sum},
                         {"threshold", v.threshold},
                         {"kind", v.kind}});
    j["violations"] = std::move(viols);
    j["violation_total"] = acc.violation_total;
    j["violation_kinds"] = {acc.violation_kinds[0], acc.violation_kinds[1],
                            acc.violation_kinds[2]};
    ordered_json eqs = ordered_json::array();
    for (const PairEquality& e : acc.equalities)
        eqs.push_back({{"ia", e.ia}, {"ib", e.ib}, {"side", e.side}, {"sum", e.sum}});
    j["equalities"] = std::move(eqs);
    j["equality_total"] = {acc.equality_total[0], acc.equality_total[1]};
    j["ap_pair_seen"] = acc.ap_pair_seen;
    j["examined"] = acc.examined;
    return j;
}

PairSweepAcc pair_acc_from_json(const ordered_json& j) {
    PairSweepAcc acc;
    acc.min_slack = j.at("min_slack").get<std::int64_t>();
    for (const auto& v : j.at("violations"))
        acc.violations.push_back({v.at("ia").get<std::uint64_t>(), v.at("ib").get<std::uint64_t>(),
                                  v.at("side").get<int>(), v.at("sum").get<std::int64_t>(),
                                  v.at("threshold").get<std::int64_t>(),
                                  v.at("kind").get<int>()});
    acc.violation_total = j.at("violation_total").get<std::uint64_t>();
    for (int k = 0; k < 3; ++k)
        acc.violation_kinds[k] = j.at("violation_kinds").at(k).get<std::uint64_t>();
    for (const auto& e : j.at("equalities"))
        acc.equalities.push_back({e.at("ia").get<std::uint64_t>(), e.at("ib").get<std::uint64_t>(),
                                  e.at("side").get<int>(), e.at("sum").get<std::int64_t>()});
    acc.equality_total[0] = j.at("equality_total").at(0).get<std::uint64_t>();
    acc.equality_total[1] = j.at("equality_total").at(1).get<std::uint64_t>();
    acc.ap_pair_seen = j.at("ap_pair_seen").get<std::uint64_t>();
    acc.examined = j.at("examined").get<std::uint64_t>();
    return acc;
}

ordered_json acc_to_json(const SubsetSweepAcc& acc) {
    ordered_json j;
    j["min_slack"] = acc.min_slack;
    ordered_json viols = ordered_json::array();
    for (const SubsetViolation& v : acc.violations)
        viols.push_back({{"mask_a", v.mask_a},
                         {"mask_b", v.mask_b},
                         {"t", v.t},
                         {"sum", v.sum},
                         {"bound", v.bound},
                         {"kind", v.kind}});
    j["violations"] = std::move(viols);
    j["violation_total"] = acc.violation_total;
    ordered_json eqs = ordered_json::array();
    for (const SubsetEquality& e : acc.equalities)
        eqs.push_back({{"mask_a", e.mask_a},
                       {"mask_b", e.mask_b},
                       {"t", e.t},
                       {"sum", e.sum},
                       {"conditions", e.conditions}});
    j["equalities"] = std::move(eqs);
    j["equality_total"] = acc.equality_total;
    j["examined"] = acc.examined;
    return j;
}

SubsetSweepAcc subset_acc_from_json(const ordered_json& j) {
    SubsetSweepAcc acc;
    acc.min_slack = j.at("min_slack").get<std::int64_t>();
    for (const auto& v : j.at("violations"))
        acc.violations.push_back({v.at("mask_a").get<std::uint32_t>(),
                                  v.at("mask_b").get<std::uint32_t>(),
                                  v.at("t").get<std::int64_t>(), v.at("sum").get<std::int64_t>(),
                                  v.at("bound").get<std::int64_t>(), v.at("kind").get<int>()});
    acc.violation_total = j.at("violation_total").get<std::uint64_t>();
    for (const auto& e : j.at("equalities"))
        acc.equalities.push_back({e.at("mask_a").get<std::uint32_t>(),
                                  e.at("mask_b").get<std::uint32_t>(),
                                  e.at("t").get<std::int64_t>(), e.at("sum").get<std::int64_t>(),
                                  e.at("conditions").get<std::uint8_t>()});
    acc.equality_total = j.at("equality_total").get<std::uint64_t>();
    acc.examined = j.at("examined").get<std::uint64_t>();
    return acc;
}

}  // namespace carrylab::kernels
