#include "carrylab/extremal.hpp"

#include <algorithm>
#include <chrono>
#include <memory>
#include <set>
#include <sstream>

#include "carrylab/bounds.hpp"
#include "carrylab/kernel_serde.hpp"
#include "carrylab/kernels.hpp"
#include "carrylab/pollard.hpp"
#include "carrylab/report.hpp"
#include "carrylab/sweep.hpp"

namespace carrylab {

namespace {

namespace k = kernels;
using nlohmann::ordered_json;

constexpr std::int64_t kNoThreshold = std::numeric_limits<std::int64_t>::min();

// The sweep kernels hold candidates in int64; anything beyond their range is
// out of scope for searches (exact single-set analysis still works there).
k::DigitalSpace kernel_space(const Int& q, const Int& m, bool fix_zero_rep) {
    if (q > Int(k::kMaxKernelModulus))
        throw Error(Errc::SpaceTooLarge, "modulus " + q.str() + " exceeds the sweep limit");
    if (m > Int(k::kMaxKernelDigits))
        throw Error(Errc::SpaceTooLarge, "digit count " + m.str() + " exceeds the sweep limit");
    return k::DigitalSpace::make(to_i64(q), to_i64(m), fix_zero_rep);
}

DigitalSet decode_digital(const k::DigitalSpace& sp, std::uint64_t index) {
    std::vector<std::int32_t> digits(static_cast<std::size_t>(sp.m));
    sp.decode(index, digits.data());
    std::vector<Int> elements(digits.begin(), digits.end());
    return DigitalSet::validate(std::move(elements), Domain::modular(Int(sp.q)), Int(sp.m));
}

DigitalSet decode_window(const k::WindowSpace& sp, std::uint64_t index) {
    std::vector<std::int32_t> digits(static_cast<std::size_t>(sp.m));
    sp.decode(index, digits.data());
    std::vector<Int> elements(digits.begin(), digits.end());
    return DigitalSet::validate(std::move(elements), Domain::integers(), Int(sp.m));
}

ElementSet mask_set(int q, std::uint32_t mask) {
    std::vector<Int> elements;
    for (int x = 0; x < q; ++x)
        if (mask >> x & 1) elements.push_back(x);
    return ElementSet::of(std::move(elements), Domain::modular(q));
}

ordered_json set_json(const DigitalSet& a) { return digital_set_to_json(a); }

ordered_json mask_json(int q, std::uint32_t mask) {
    ordered_json arr = ordered_json::array();
    for (int x = 0; x < q; ++x)
        if (mask >> x & 1) arr.push_back(x);
    return arr;
}

std::vector<std::int32_t> unit_list(const Int& q) {
    std::vector<std::int32_t> out;
    for (const Int& u : units_mod(q)) out.push_back(static_cast<std::int32_t>(to_i64(u)));
    return out;
}

[[noreturn]] void kernel_mismatch(const char* what) {
    throw std::logic_error(std::string("sweep kernel disagrees with the exact recount: ") + what);
}

// Engine plumbing: bind the per-type deserializer so one template runs every
// accumulator kind through run_sweep with optional checkpointing.
template <class Acc>
Acc acc_from(const ordered_json& j);
template <>
k::SetSweepAcc acc_from(const ordered_json& j) {
    return k::set_acc_from_json(j);
}
template <>
k::WindowSweepAcc acc_from(const ordered_json& j) {
    return k::window_acc_from_json(j);
}
template <>
k::PairSweepAcc acc_from(const ordered_json& j) {
    return k::pair_acc_from_json(j);
}
template <>
k::SubsetSweepAcc acc_from(const ordered_json& j) {
    return k::subset_acc_from_json(j);
}

template <class Acc, class Fold>
Acc run_engine(std::uint64_t total, int workers, std::size_t cap, Fold&& fold,
               const std::string& checkpoint_path, const std::string& config_text) {
    SweepJob<Acc> job;
    job.layout = ShardLayout::for_total(total);
    job.workers = workers;
    job.fold = std::forward<Fold>(fold);
    job.merge = [cap](Acc& into, const Acc& part) { into.merge(part, cap); };
    job.to_json = [](const Acc& acc) { return k::acc_to_json(acc); };
    job.from_json = [](const ordered_json& j) { return acc_from<Acc>(j); };
    if (checkpoint_path.empty()) return run_sweep(job, nullptr);
    CheckpointFile checkpoint(checkpoint_path, fingerprint(config_text));
    return run_sweep(job, &checkpoint);
}

const char* reduction_name(Reduction r) {
    switch (r) {
        case Reduction::None: return "none";
        case Reduction::FixZeroRep: return "fix-zero-rep";
        case Reduction::DilationCanonical: return "dilation-canonical";
    }
    return "?";
}

}  // namespace

Int plan_space_size(const EnumerationPlan& plan) {
    if (plan.m < 2) throw Error(Errc::BadArgument, "enumeration needs m >= 2");
    if (plan.q < plan.m || plan.q % plan.m != 0)
        throw Error(Errc::MDoesNotDivideQ, "enumeration needs m | q");
    const Int n = plan.q / plan.m;
    const std::int64_t digits =
        to_i64(plan.m) - (plan.reduction == Reduction::FixZeroRep ? 1 : 0);
    Int size = 1;
    for (std::int64_t i = 0; i < digits; ++i) size *= n;
    return size;
}

void enumerate(const EnumerationPlan& plan, const std::function<void(const DigitalSet&)>& yield) {
    if (plan.partition_total == 0 || plan.partition_index >= plan.partition_total)
        throw Error(Errc::BadArgument, "enumeration partition index out of range");
    const Int total = plan_space_size(plan);
    const Int begin = total * plan.partition_index / plan.partition_total;
    const Int end = total * (plan.partition_index + 1) / plan.partition_total;
    const Int n = plan.q / plan.m;
    const std::int64_t m = to_i64(plan.m);
    const bool fix = plan.reduction == Reduction::FixZeroRep;
    const std::int64_t lo = fix ? 1 : 0;
    std::vector<Int> elements(static_cast<std::size_t>(m));
    for (Int index = begin; index < end; ++index) {
        Int rem = index;
        if (fix) elements[0] = 0;
        for (std::int64_t r = m - 1; r >= lo; --r) {
            elements[static_cast<std::size_t>(r)] = Int(r) + plan.m * (rem % n);
            rem /= n;
        }
        DigitalSet a = DigitalSet::validate(elements, Domain::modular(plan.q), plan.m);
        if (plan.reduction == Reduction::DilationCanonical &&
            canonical_form(a, CanonicalRelation::DilationOnly).elements() != a.elements())
            continue;
        yield(a);
    }
}

SearchMode SearchMode::exhaustive() { return {}; }

SearchMode SearchMode::random(std::uint64_t samples, std::uint64_t seed) {
    SearchMode mode;
    mode.kind = Kind::Random;
    mode.samples = samples;
    mode.seed = seed;
    return mode;
}

SearchMode SearchMode::hill_climb(std::uint64_t restarts, std::uint64_t seed) {
    SearchMode mode;
    mode.kind = Kind::HillClimb;
    mode.restarts = restarts;
    mode.seed = seed;
    return mode;
}

namespace {

// Shared body of min_c1/min_c2: sweep, then re-derive everything reported
// from the exact layer. Returns the kernel minimum; the caller converts it to
// the statistic's value type.
std::int64_t run_search(const Int& q, const Int& m, k::Stat stat, CanonicalRelation relation,
                        SearchMode mode, const SearchOptions& opts, const char* label,
                        SearchWitnesses& out) {
    {
        const Int n = q / m;
        Int size = 1;
        for (Int i = 0; i < m; ++i) size *= n;
        out.space_size = size;
    }
    if (!is_admissible(q, m))
        out.warnings.push_back(
            "(q, m) is not admissible; the closed-form bound guarantees do not apply");
    if (mode.kind != SearchMode::Kind::Exhaustive && opts.reduction != Reduction::None)
        throw Error(Errc::BadArgument,
                    "random and hill-climb searches index the unreduced space; use "
                    "Reduction::None");

    const auto sp = kernel_space(q, m, opts.reduction == Reduction::FixZeroRep);
    std::shared_ptr<const std::vector<std::int32_t>> units;
    if (opts.reduction == Reduction::DilationCanonical)
        units = std::make_shared<const std::vector<std::int32_t>>(unit_list(q));

    if (mode.kind == SearchMode::Kind::Exhaustive && sp.size() > opts.budget) {
        if (!opts.force_sample)
            throw Error(Errc::SpaceTooLarge,
                        std::string(label) + ": " + std::to_string(sp.size()) +
                            " candidates exceed the budget of " + std::to_string(opts.budget));
        const std::uint64_t draws = std::min<std::uint64_t>(opts.budget, 1'000'000);
        out.warnings.push_back("space exceeds the budget; drew " + std::to_string(draws) +
                               " random candidates instead and the result is not certified");
        mode = SearchMode::random(draws, mode.seed);
    }

    std::uint64_t total = 0;
    switch (mode.kind) {
        case SearchMode::Kind::Exhaustive: total = sp.size(); break;
        case SearchMode::Kind::Random: total = mode.samples; break;
        case SearchMode::Kind::HillClimb: total = mode.restarts; break;
    }
    if (total == 0) throw Error(Errc::BadArgument, "search requires a nonzero candidate count");
    if (mode.kind != SearchMode::Kind::Exhaustive && total > opts.budget)
        throw Error(Errc::SpaceTooLarge, "requested draws exceed the evaluation budget");

    std::ostringstream cfg;
    cfg << label << "|q=" << q << "|m=" << m
        << "|stat=" << (stat == k::Stat::CarryCount ? "cc" : "c1")
        << "|reduction=" << reduction_name(opts.reduction) << "|kind=" << static_cast<int>(mode.kind)
        << "|samples=" << mode.samples << "|restarts=" << mode.restarts << "|seed=" << mode.seed
        << "|cap=" << opts.witness_cap;

    const std::size_t cap = opts.witness_cap;
    const auto fold = [sp, stat, units, mode, cap](std::uint32_t, std::uint64_t b,
                                                   std::uint64_t e) {
        k::Workspace ws;
        switch (mode.kind) {
            case SearchMode::Kind::Random:
                return k::sweep_digital_samples(sp, stat, kNoThreshold, mode.seed, b, e, cap, ws);
            case SearchMode::Kind::HillClimb:
                return k::hill_climb_range(sp, stat, mode.seed, b, e, cap, ws);
            case SearchMode::Kind::Exhaustive:
            default:
                return k::sweep_digital_range(sp, stat, kNoThreshold, units ? units.get() : nullptr,
                                              b, e, cap, ws);
        }
    };
    const auto acc = run_engine<k::SetSweepAcc>(total, opts.workers, cap, fold,
                                                opts.checkpoint_path, cfg.str());

    out.candidates_examined = acc.examined;
    out.minimizer_total = acc.stat.argmin_total;
    out.truncated = acc.stat.argmin.size() < acc.stat.argmin_total;
    out.certified = mode.kind == SearchMode::Kind::Exhaustive;
    if (!out.certified)
        out.warnings.push_back("non-exhaustive search: the minimum is a best-found value");

    std::set<std::vector<Int>> canonical_seen;
    for (std::uint64_t index : acc.stat.argmin) {
        DigitalSet a = decode_digital(sp, index);
        const CarryReport report = carry_report(a);
        const Int value = stat == k::Stat::CarryCount ? report.carry_count : report.c1;
        if (value != Int(acc.stat.best)) kernel_mismatch("minimizer value");
        DigitalSet canon = canonical_form(a, relation);
        if (canonical_seen.insert(canon.elements()).second)
            out.witnesses.push_back(std::move(canon));
        out.minimizers.push_back(std::move(a));
    }
    std::sort(out.witnesses.begin(), out.witnesses.end(),
              [](const DigitalSet& a, const DigitalSet& b) { return a.elements() < b.elements(); });
    return acc.stat.best;
}

}  // namespace

MinC2Result min_c2(const Int& q, const Int& m, const SearchMode& mode,
                   const SearchOptions& opts) {
    if (opts.reduction == Reduction::FixZeroRep)
        throw Error(Errc::BadArgument,
                    "FixZeroRep is unsound for the carry frequency: translating by m "
                    "changes it, so pinned representatives skip valid minima");
    MinC2Result result;
    const std::int64_t best =
        run_search(q, m, k::Stat::CarryCount, CanonicalRelation::DilationOnly, mode, opts,
                   "min-c2", result);
    result.min = Rat(Int(best), m * m);
    return result;
}

MinC1Result min_c1(const Int& q, const Int& m, const SearchMode& mode,
                   const SearchOptions& opts) {
    MinC1Result result;
    const std::int64_t best = run_search(q, m, k::Stat::DistinctCarries,
                                         CanonicalRelation::Affine, mode, opts, "min-c1", result);
    result.min = Int(best);
    return result;
}

namespace {

// Centered digit windows, widest-accepted first: for odd m the symmetric
// interval, for even m the half-open variant (-m/2, m/2] and then its mirror
// [-m/2, m/2). Returned as raw integer vectors, ascending.
std::vector<std::vector<Int>> centered_intervals(const Int& m) {
    std::vector<std::vector<Int>> out;
    if (mod_floor(m, 2) == 1) {
        const Int h = (m - 1) / 2;
        std::vector<Int> v;
        for (Int x = -h; x <= h; ++x) v.push_back(x);
        out.push_back(std::move(v));
    } else {
        const Int h = m / 2;
        std::vector<Int> hi, lo;
        for (Int x = -h + 1; x <= h; ++x) hi.push_back(x);
        for (Int x = -h; x <= h - 1; ++x) lo.push_back(x);
        out.push_back(std::move(hi));
        out.push_back(std::move(lo));
    }
    return out;
}

std::vector<Int> reduce_sorted(const Int& q, const std::vector<Int>& raw) {
    std::vector<Int> out;
    out.reserve(raw.size());
    for (const Int& x : raw) out.push_back(mod_floor(x, q));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Int> interval_elements(const Int& first, const Int& m) {
    std::vector<Int> out;
    for (Int x = first; x < first + m; ++x) out.push_back(x);
    return out;
}

bool is_integer_interval(const std::vector<Int>& sorted) {
    return sorted.back() - sorted.front() == Int(sorted.size()) - 1;
}

StructureClass classify_modular(const DigitalSet& a, ClassifyPurpose purpose) {
    const Int& q = a.domain().q;
    const Int& m = a.m();
    StructureClass cls;
    if (purpose == ClassifyPurpose::ForC2) {
        std::vector<std::vector<Int>> targets;
        for (const auto& raw : centered_intervals(m)) targets.push_back(reduce_sorted(q, raw));
        for (const Int& c : units_mod(q)) {
            for (const auto& target : targets) {
                std::vector<Int> dilated;
                dilated.reserve(target.size());
                for (const Int& x : target) dilated.push_back(mod_floor(c * x, q));
                std::sort(dilated.begin(), dilated.end());
                if (dilated == a.elements()) {
                    cls.kind = StructureKind::SymmetricIntervalDilation;
                    cls.c = c;
                    return cls;
                }
            }
        }
    } else {
        const std::vector<Int> zero_interval = reduce_sorted(q, interval_elements(0, m));
        const std::vector<Int> one_interval = reduce_sorted(q, interval_elements(1, m));
        for (const Int& c : units_mod(q)) {
            const DigitalSet ca = dilate(a, c);
            for (Int d = 0; d < q; d += m) {
                const std::vector<Int> image = translate(ca, d).set.elements();
                if (image == zero_interval || image == one_interval) {
                    cls.kind = StructureKind::IntervalAffine;
                    cls.c = c;
                    cls.d = d;
                    cls.variant = image == zero_interval ? IntervalVariant::ZeroToMMinusOne
                                                         : IntervalVariant::OneToM;
                    return cls;
                }
            }
        }
    }
    if (auto d = is_ap(ElementSet::of(a))) {
        cls.kind = StructureKind::APSameDifference;
        cls.difference = *d;
    }
    return cls;
}

StructureClass classify_integer(const DigitalSet& a, ClassifyPurpose purpose) {
    StructureClass cls;
    const std::vector<Int>& elements = a.elements();
    if (is_integer_interval(elements)) {
        if (purpose == ClassifyPurpose::ForC1) {
            cls.kind = StructureKind::IntervalAffine;
            cls.c = 1;
            cls.d = elements.front();
            cls.variant = IntervalVariant::ZeroToMMinusOne;
            return cls;
        }
        for (const auto& raw : centered_intervals(a.m())) {
            const Int offset = elements.front() - raw.front();
            if (mod_floor(offset, a.m()) != 0) continue;
            cls.kind = StructureKind::SymmetricIntervalDilation;
            cls.c = 1;
            cls.d = offset;
            return cls;
        }
    }
    if (auto d = is_ap(ElementSet::of(a))) {
        cls.kind = StructureKind::APSameDifference;
        cls.difference = *d;
    }
    return cls;
}

}  // namespace

StructureClass classify_structure(const DigitalSet& a, ClassifyPurpose purpose) {
    return a.domain().is_modular() ? classify_modular(a, purpose) : classify_integer(a, purpose);
}

std::string structure_to_string(const StructureClass& cls) {
    std::ostringstream out;
    switch (cls.kind) {
        case StructureKind::SymmetricIntervalDilation:
            out << "SymmetricIntervalDilation(c=" << *cls.c;
            if (cls.d) out << ", d=" << *cls.d;
            out << ")";
            break;
        case StructureKind::IntervalAffine:
            out << "IntervalAffine(c=" << *cls.c << ", d=" << *cls.d << ", "
                << (*cls.variant == IntervalVariant::ZeroToMMinusOne ? "0..m-1" : "1..m") << ")";
            break;
        case StructureKind::APSameDifference:
            out << "APSameDifference(d=" << *cls.difference << ")";
            break;
        case StructureKind::Other:
            out << "Other";
            break;
    }
    return out.str();
}

namespace {

Int need(const std::optional<Int>& v, const char* name, const std::string& id) {
    if (!v) throw Error(Errc::BadArgument, "theorem '" + id + "' requires parameter " + name);
    return *v;
}

unsigned need_u(const std::optional<unsigned>& v, const char* name, const std::string& id) {
    if (!v) throw Error(Errc::BadArgument, "theorem '" + id + "' requires parameter " + name);
    return *v;
}

void check_budget(std::uint64_t total, std::uint64_t budget, const std::string& id) {
    if (total > budget)
        throw Error(Errc::SpaceTooLarge, "theorem '" + id + "': " + std::to_string(total) +
                                             " candidates exceed the budget of " +
                                             std::to_string(budget));
}

// ---- c2-mu --------------------------------------------------------------

void verify_c2_mu(const VerifyParams& params, const VerifyOptions& opts, VerificationReport& r) {
    const Int q = need(params.q, "q", r.theorem_id);
    const Int m = need(params.m, "m", r.theorem_id);
    const BoundSpec bound = mu(m);
    const std::int64_t threshold = to_i64(ceil_rat(bound.mu * Rat(m * m)));
    const auto sp = kernel_space(q, m, false);
    const bool sampled = params.samples > 0;
    const std::uint64_t total = sampled ? params.samples : sp.size();
    if (!sampled) check_budget(sp.size(), opts.budget, r.theorem_id);

    r.parameters = {{"q", to_i64(q)}, {"m", to_i64(m)}};
    r.mode = sampled ? "sampled" : "exhaustive";
    if (!is_admissible(q, m))
        r.warnings.push_back("(q, m) is not admissible; the bound is still checked");

    std::ostringstream cfg;
    cfg << "c2-mu|q=" << q << "|m=" << m << "|sampled=" << sampled << "|total=" << total
        << "|seed=" << opts.seed << "|cap=" << opts.witness_cap;
    const std::size_t cap = opts.witness_cap;
    const std::uint64_t seed = opts.seed;
    const auto fold = [sp, threshold, sampled, seed, cap](std::uint32_t, std::uint64_t b,
                                                          std::uint64_t e) {
        k::Workspace ws;
        return sampled
                   ? k::sweep_digital_samples(sp, k::Stat::CarryCount, threshold, seed, b, e, cap,
                                              ws)
                   : k::sweep_digital_range(sp, k::Stat::CarryCount, threshold, nullptr, b, e, cap,
                                            ws);
    };
    const auto acc = run_engine<k::SetSweepAcc>(total, opts.workers, cap, fold,
                                                opts.checkpoint_path, cfg.str());

    r.candidates_examined = acc.examined;
    r.min_observed = Rat(Int(acc.stat.best), m * m);
    r.violation_count = acc.stat.violation_total;
    for (const auto& v : acc.stat.violations) {
        const DigitalSet a = decode_digital(sp, v.index);
        if (carry_report(a).carry_count != Int(v.value)) kernel_mismatch("violation value");
        r.violations.push_back(
            {{"set", set_json(a)}, {"carry_count", v.value}, {"threshold_pairs", threshold}});
    }

    // Witnesses are the minimum's attaining sets whether or not the minimum
    // touches the bound; bound_attained below records which case holds.
    const bool attained = *r.min_observed == bound.mu;
    r.equality_count = acc.stat.argmin_total;
    for (std::uint64_t index : acc.stat.argmin) {
        const DigitalSet a = decode_digital(sp, index);
        if (carry_report(a).carry_count != Int(acc.stat.best)) kernel_mismatch("minimizer");
        r.equality_witnesses.push_back(
            {{"set", set_json(a)},
             {"carry_count", acc.stat.best},
             {"structure", structure_to_string(classify_structure(a, ClassifyPurpose::ForC2))}});
    }
    r.details = {{"mu", rat_to_json(bound.mu)},
                 {"threshold_pairs", threshold},
                 {"min_carry_count", acc.stat.best},
                 {"bound_attained", attained},
                 {"minimizer_count", acc.stat.argmin_total}};
}

// ---- c1-structure -------------------------------------------------------

void verify_c1_structure(const VerifyParams& params, const VerifyOptions& opts,
                         VerificationReport& r) {
    const Int q = need(params.q, "q", r.theorem_id);
    const Int m = need(params.m, "m", r.theorem_id);
    if (params.samples > 0)
        throw Error(Errc::BadArgument,
                    "c1-structure needs the complete minimizer set and runs exhaustively");
    const auto sp = kernel_space(q, m, false);
    check_budget(sp.size(), opts.budget, r.theorem_id);
    r.parameters = {{"q", to_i64(q)}, {"m", to_i64(m)}};
    r.mode = "exhaustive";

    // The claimed minimizer set: the orbit of [0, m-1] under a -> c*a + d
    // with c a unit and d a multiple of m. It contains [1, m] through
    // c = -1, d = m.
    const DigitalSet zero_interval =
        DigitalSet::validate(interval_elements(0, m), Domain::modular(q), m);
    std::set<std::vector<Int>> orbit;
    for (const Int& c : units_mod(q)) {
        const DigitalSet ca = dilate(zero_interval, c);
        for (Int d = 0; d < q; d += m) orbit.insert(translate(ca, d).set.elements());
    }

    const std::size_t cap = std::max(opts.witness_cap, orbit.size() + 16);
    std::ostringstream cfg;
    cfg << "c1-structure|q=" << q << "|m=" << m << "|cap=" << cap;
    const auto fold = [sp, cap](std::uint32_t, std::uint64_t b, std::uint64_t e) {
        k::Workspace ws;
        return k::sweep_digital_range(sp, k::Stat::DistinctCarries, 2, nullptr, b, e, cap, ws);
    };
    const auto acc = run_engine<k::SetSweepAcc>(sp.size(), opts.workers, cap, fold,
                                                opts.checkpoint_path, cfg.str());

    r.candidates_examined = acc.examined;
    r.min_observed = Rat(Int(acc.stat.best));
    r.violation_count = acc.stat.violation_total;
    for (const auto& v : acc.stat.violations)
        r.violations.push_back({{"set", set_json(decode_digital(sp, v.index))},
                                {"distinct_carries", v.value},
                                {"reason", "fewer than two distinct carries"}});

    if (acc.stat.best != 2) {
        ++r.violation_count;
        r.violations.push_back({{"reason", "minimum distinct-carry count is not 2"},
                                {"min_distinct_carries", acc.stat.best}});
    }

    // Two-direction comparison of minimizers and the affine orbit.
    bool matches = acc.stat.argmin_total == orbit.size();
    for (const auto& elements : orbit) {
        const DigitalSet member = DigitalSet::validate(elements, Domain::modular(q), m);
        if (carry_report(member).c1 != 2) {
            matches = false;
            ++r.violation_count;
            r.violations.push_back({{"set", set_json(member)},
                                    {"reason", "interval-class member is not a minimizer"}});
        }
    }
    for (std::uint64_t index : acc.stat.argmin) {
        const DigitalSet a = decode_digital(sp, index);
        if (carry_report(a).c1 != Int(acc.stat.best)) kernel_mismatch("minimizer");
        if (acc.stat.best == 2 && orbit.find(a.elements()) == orbit.end()) {
            matches = false;
            ++r.violation_count;
            r.violations.push_back({{"set", set_json(a)},
                                    {"reason", "minimizer outside the affine interval classes"}});
        }
    }
    if (acc.stat.argmin_total != orbit.size()) {
        ++r.violation_count;
        r.violations.push_back({{"reason", "minimizer count differs from the orbit size"},
                                {"minimizer_count", acc.stat.argmin_total},
                                {"orbit_size", orbit.size()}});
    }

    const DigitalSet canonical = canonical_form(zero_interval, CanonicalRelation::Affine);
    r.equality_count = acc.stat.argmin_total;
    r.equality_witnesses.push_back(
        {{"set", set_json(canonical)},
         {"distinct_carries", 2},
         {"structure",
          structure_to_string(classify_structure(canonical, ClassifyPurpose::ForC1))},
         {"orbit_size", orbit.size()}});

    const std::vector<Int> one_interval = reduce_sorted(q, interval_elements(1, m));
    r.details = {{"min_distinct_carries", acc.stat.best},
                 {"orbit_size", orbit.size()},
                 {"minimizer_count", acc.stat.argmin_total},
                 {"orbit_matches_minimizers", matches},
                 {"orbit_contains_zero_interval", orbit.count(zero_interval.elements()) > 0},
                 {"orbit_contains_one_interval", orbit.count(one_interval) > 0}};
}

// ---- z-case -------------------------------------------------------------

void verify_z_case(const VerifyParams& params, const VerifyOptions& opts, VerificationReport& r) {
    const Int m = need(params.m, "m", r.theorem_id);
    const Int window = params.window ? *params.window : m;
    if (params.samples > 0)
        throw Error(Errc::BadArgument, "z-case sweeps its digit window completely");
    const auto sp = k::WindowSpace::make(to_i64(m), to_i64(window));
    check_budget(sp.size(), opts.budget, r.theorem_id);
    r.parameters = {{"m", to_i64(m)}, {"window", to_i64(window)}};
    r.mode = "window-complete";

    const std::int64_t carry_floor = to_i64(interval_carry_count(m));
    std::ostringstream cfg;
    cfg << "z-case|m=" << m << "|window=" << window << "|cap=" << opts.witness_cap;
    const std::size_t cap = opts.witness_cap;
    const auto fold = [sp, carry_floor, cap](std::uint32_t, std::uint64_t b, std::uint64_t e) {
        k::Workspace ws;
        return k::sweep_window_range(sp, carry_floor, 2, b, e, cap, ws);
    };
    const auto acc = run_engine<k::WindowSweepAcc>(sp.size(), opts.workers, cap, fold,
                                                   opts.checkpoint_path, cfg.str());

    r.candidates_examined = acc.examined;
    r.min_observed = Rat(Int(acc.carry_count.best), m * m);
    r.violation_count = acc.carry_count.violation_total + acc.distinct.violation_total;
    for (const auto& v : acc.carry_count.violations) {
        const DigitalSet a = decode_window(sp, v.index);
        if (carry_report(a).carry_count != Int(v.value)) kernel_mismatch("violation value");
        r.violations.push_back(
            {{"set", set_json(a)}, {"carry_count", v.value}, {"floor", carry_floor}});
    }
    for (const auto& v : acc.distinct.violations)
        r.violations.push_back({{"set", set_json(decode_window(sp, v.index))},
                                {"distinct_carries", v.value},
                                {"floor", 2}});

    r.equality_count = acc.carry_count.argmin_total;
    for (std::uint64_t index : acc.carry_count.argmin) {
        const DigitalSet a = decode_window(sp, index);
        if (carry_report(a).carry_count != Int(acc.carry_count.best)) kernel_mismatch("minimizer");
        r.equality_witnesses.push_back(
            {{"set", set_json(a)},
             {"carry_count", acc.carry_count.best},
             {"structure", structure_to_string(classify_structure(a, ClassifyPurpose::ForC2))}});
    }

    // The centered interval attains the floor whenever it fits the window.
    const std::vector<Int> centered_raw = centered_intervals(m).front();
    bool centered_minimal = false;
    bool centered_in_window = -window <= centered_raw.front() && centered_raw.back() <= window;
    if (centered_in_window) {
        const DigitalSet centered = DigitalSet::validate(centered_raw, Domain::integers(), m);
        if (carry_report(centered).carry_count != Int(carry_floor))
            kernel_mismatch("centered interval carry count");
        centered_minimal = Int(acc.carry_count.best) == Int(carry_floor);
    }
    const bool zero_in_window = m - 1 <= window;
    bool zero_interval_minimal = false;
    if (zero_in_window) {
        const DigitalSet zero_interval =
            DigitalSet::validate(interval_elements(0, m), Domain::integers(), m);
        zero_interval_minimal =
            carry_report(zero_interval).c1 == Int(acc.distinct.best) && acc.distinct.best == 2;
    } else {
        r.warnings.push_back("window is too narrow to contain [0, m-1]");
    }

    r.details = {{"window", to_i64(window)},
                 {"carry_floor", carry_floor},
                 {"min_carry_count", acc.carry_count.best},
                 {"carry_floor_attained", Int(acc.carry_count.best) == Int(carry_floor)},
                 {"centered_interval_in_window", centered_in_window},
                 {"centered_interval_minimal", centered_minimal},
                 {"min_distinct_carries", acc.distinct.best},
                 {"distinct_floor_attained", acc.distinct.best == 2},
                 {"zero_interval_in_window", zero_in_window},
                 {"zero_interval_minimal", zero_interval_minimal},
                 {"carry_minimizer_count", acc.carry_count.argmin_total},
                 {"distinct_minimizer_count", acc.distinct.argmin_total}};
}

// ---- digital pair sweeps (odd and even prime branches) -------------------

// Least g with B = g - A, if any.
std::optional<Int> reflection_offset(const ElementSet& a, const ElementSet& b) {
    const Int& q = a.domain.q;
    std::set<Int> candidates;
    for (const auto& bb : b.elements) candidates.insert(mod_floor(a.elements.front() + bb, q));
    for (const auto& g : candidates) {
        std::vector<Int> reflected;
        reflected.reserve(a.elements.size());
        for (const auto& x : a.elements) reflected.push_back(mod_floor(g - x, q));
        std::sort(reflected.begin(), reflected.end());
        if (reflected == b.elements) return g;
    }
    return std::nullopt;
}

const char* pair_kind_text(int kind) {
    switch (kind) {
        case 0: return "sum-below-threshold";
        case 1: return "equality-at-non-progression-pair";
        case 2: return "progression-pair-without-equality";
    }
    return "?";
}

void run_pair_theorem(const k::DigitalSpace& sp, std::int64_t t1, std::int64_t thr1,
                      std::int64_t t2, std::int64_t thr2, const VerifyParams& params,
                      const VerifyOptions& opts, VerificationReport& r) {
    const auto ctx = std::make_shared<const k::PairContext>(
        k::PairContext::build(sp, t1, thr1, t2, thr2));
    const auto ap_pairs = std::make_shared<const std::vector<std::pair<std::uint64_t, std::uint64_t>>>(
        k::same_difference_ap_pairs(sp));
    const std::uint64_t set_count = ctx->set_count;
    const std::uint64_t pairs_total = set_count * set_count;
    const bool sampled = params.samples > 0;
    const std::size_t cap = opts.witness_cap;

    k::PairSweepAcc acc;
    if (!sampled) {
        check_budget(pairs_total, opts.budget, r.theorem_id);
        std::ostringstream cfg;
        cfg << r.theorem_id << "|q=" << sp.q << "|m=" << sp.m << "|stage=full|cap=" << cap;
        const auto fold = [ctx, cap](std::uint32_t, std::uint64_t b, std::uint64_t e) {
            k::Workspace ws;
            return k::pair_sweep_range(*ctx, b, e, cap, ws);
        };
        acc = run_engine<k::PairSweepAcc>(pairs_total, opts.workers, cap, fold,
                                          opts.checkpoint_path, cfg.str());
        r.mode = "exhaustive";
    } else {
        check_budget(params.samples, opts.budget, r.theorem_id);
        std::ostringstream cfg;
        cfg << r.theorem_id << "|q=" << sp.q << "|m=" << sp.m << "|stage=draws|draws="
            << params.samples << "|seed=" << opts.seed << "|cap=" << cap;
        const std::uint64_t seed = opts.seed;
        const auto fold = [ctx, seed, cap](std::uint32_t, std::uint64_t b, std::uint64_t e) {
            k::Workspace ws;
            return k::pair_sweep_samples(*ctx, seed, b, e, cap, ws);
        };
        acc = run_engine<k::PairSweepAcc>(params.samples, opts.workers, cap, fold,
                                          opts.checkpoint_path, cfg.str());
        // The sampled stage can miss equality candidates, so the deterministic
        // stages cover them completely: every same-difference progression pair,
        // then every set against itself.
        k::Workspace ws;
        acc.merge(k::pair_sweep_list(*ctx, *ap_pairs, 0, ap_pairs->size(), cap, ws), cap);
        std::vector<std::pair<std::uint64_t, std::uint64_t>> diagonal;
        diagonal.reserve(set_count);
        for (std::uint64_t i = 0; i < set_count; ++i) diagonal.emplace_back(i, i);
        acc.merge(k::pair_sweep_list(*ctx, diagonal, 0, diagonal.size(), cap, ws), cap);
        r.mode = "sampled";
    }

    r.candidates_examined = acc.examined;
    if (acc.examined > 0) r.min_observed = Rat(Int(acc.min_slack));
    r.violation_count = acc.violation_total;
    const auto shared_differences = [](const ElementSet& ea, const ElementSet& eb) {
        const std::set<Int> da = ap_differences(ea), db = ap_differences(eb);
        std::vector<Int> shared;
        std::set_intersection(da.begin(), da.end(), db.begin(), db.end(),
                              std::back_inserter(shared));
        return shared;
    };
    for (const auto& v : acc.violations) {
        const DigitalSet a = decode_digital(sp, v.ia);
        const DigitalSet b = decode_digital(sp, v.ib);
        const ElementSet ea = ElementSet::of(a), eb = ElementSet::of(b);
        if (pollard_sum(ea, eb, Int(v.side == 1 ? t1 : t2)) != Int(v.sum))
            kernel_mismatch("pair violation sum");
        const bool ap = !shared_differences(ea, eb).empty();
        if (v.kind == 1 && ap) kernel_mismatch("non-progression violation on a progression pair");
        if (v.kind == 2 && !ap) kernel_mismatch("progression violation on a non-progression pair");
        r.violations.push_back({{"a", set_json(a)},
                                {"b", set_json(b)},
                                {"t", v.side == 1 ? t1 : t2},
                                {"sum", v.sum},
                                {"threshold", v.threshold},
                                {"kind", pair_kind_text(v.kind)}});
    }

    r.equality_count = acc.equality_total[0] + acc.equality_total[1];
    for (const auto& e : acc.equalities) {
        const DigitalSet a = decode_digital(sp, e.ia);
        const DigitalSet b = decode_digital(sp, e.ib);
        const ElementSet ea = ElementSet::of(a), eb = ElementSet::of(b);
        const Int t = Int(e.side == 1 ? t1 : t2);
        if (pollard_sum(ea, eb, t) != Int(e.sum)) kernel_mismatch("pair equality sum");
        const std::vector<Int> shared = shared_differences(ea, eb);
        if (shared.empty() == ctx->ap_pair(e.ia, e.ib))
            kernel_mismatch("progression-pair flag disagrees with the exact differences");
        ordered_json witness = {
            {"a", set_json(a)}, {"b", set_json(b)}, {"t", to_i64(t)}, {"sum", e.sum}};
        if (!shared.empty()) {
            witness["common_difference"] = to_i64(shared.front());
        } else if (const auto g = reflection_offset(ea, eb)) {
            // Tight without a shared difference: record the reflection B = g - A
            // (the sweep has already flagged the pair as an equality-direction
            // violation; this witnesses what the pair is instead).
            witness["reflection_g"] = to_i64(*g);
        } else {
            witness["structure"] = "unexplained";
        }
        r.equality_witnesses.push_back(std::move(witness));
    }

    r.details = {{"q", sp.q},
                 {"m", sp.m},
                 {"pairs", pairs_total},
                 {"progression_pairs", ap_pairs->size()},
                 {"progression_pairs_seen", acc.ap_pair_seen},
                 {"violations_below_bound", acc.violation_kinds[0]},
                 {"equality_without_progression", acc.violation_kinds[1]},
                 {"progression_without_equality", acc.violation_kinds[2]},
                 {"t_low", t1},
                 {"threshold_low", thr1},
                 {"equality_count_low", acc.equality_total[0]}};
    if (t2 >= 0) {
        r.details["t_high"] = t2;
        r.details["threshold_high"] = thr2;
        r.details["equality_count_high"] = acc.equality_total[1];
    }
    if (sampled) {
        r.details["sampled_draws"] = params.samples;
        r.details["deterministic_stages"] = "progression-pairs, diagonal";
    }
}

void verify_thm22(const VerifyParams& params, const VerifyOptions& opts, VerificationReport& r) {
    const Int p = need(params.p, "p", r.theorem_id);
    const unsigned alpha = need_u(params.alpha, "alpha", r.theorem_id);
    const unsigned beta = need_u(params.beta, "beta", r.theorem_id);
    if (alpha < 1 || beta < alpha)
        throw Error(Errc::BadArgument, "thm22 requires 1 <= alpha <= beta");
    const ThresholdSpec low = thm22_threshold(p, alpha, ThresholdSide::Minus);
    const ThresholdSpec high = thm22_threshold(p, alpha, ThresholdSide::Plus);
    const Int q = pow_int(p, beta);
    const Int m = pow_int(p, alpha);
    const auto sp = kernel_space(q, m, false);
    r.parameters = {{"p", to_i64(p)}, {"alpha", alpha}, {"beta", beta},
                    {"q", to_i64(q)},  {"m", to_i64(m)}};
    if (params.samples > 0) r.parameters["samples"] = params.samples;
    run_pair_theorem(sp, to_i64(low.t), to_i64(low.threshold), to_i64(high.t),
                     to_i64(high.threshold), params, opts, r);
}

void verify_thm23(const VerifyParams& params, const VerifyOptions& opts, VerificationReport& r) {
    const unsigned alpha = need_u(params.alpha, "alpha", r.theorem_id);
    const unsigned beta = need_u(params.beta, "beta", r.theorem_id);
    if (alpha < 1 || beta < alpha)
        throw Error(Errc::BadArgument, "thm23 requires 1 <= alpha <= beta");
    const ThresholdSpec spec = thm23_threshold(alpha);
    const Int q = pow_int(2, beta);
    const Int m = pow_int(2, alpha);
    const auto sp = kernel_space(q, m, false);
    r.parameters = {{"alpha", alpha}, {"beta", beta}, {"q", to_i64(q)}, {"m", to_i64(m)}};
    if (params.samples > 0) r.parameters["samples"] = params.samples;
    run_pair_theorem(sp, to_i64(spec.t), to_i64(spec.threshold), -1, 0, params, opts, r);
}

// ---- subset sweeps -------------------------------------------------------

void run_subset_theorem(bool equality_mode, const VerifyParams& params, const VerifyOptions& opts,
                        VerificationReport& r) {
    const Int q_int = need(params.q, "q", r.theorem_id);
    const int q = static_cast<int>(to_i64(q_int));
    const auto ctx = std::make_shared<const k::SubsetContext>(k::SubsetContext::build(q));
    const std::uint64_t count = ctx->mask_count();
    const std::uint64_t pairs_total = count * count;
    const bool sampled = params.samples > 0;
    const std::uint64_t total = sampled ? params.samples : pairs_total;
    check_budget(total, opts.budget, r.theorem_id);
    r.parameters = {{"q", q}};
    if (sampled) r.parameters["samples"] = params.samples;
    r.mode = sampled ? "sampled" : "exhaustive";

    std::ostringstream cfg;
    cfg << r.theorem_id << "|q=" << q << "|sampled=" << sampled << "|total=" << total
        << "|seed=" << opts.seed << "|cap=" << opts.witness_cap;
    const std::size_t cap = opts.witness_cap;
    const std::uint64_t seed = opts.seed;
    const auto fold = [ctx, equality_mode, sampled, seed, cap](std::uint32_t, std::uint64_t b,
                                                               std::uint64_t e) {
        k::Workspace ws;
        if (equality_mode)
            return sampled ? k::equality_pair_samples(*ctx, seed, b, e, cap, ws)
                           : k::equality_pair_range(*ctx, b, e, cap, ws);
        return sampled ? k::chowla_pair_samples(*ctx, seed, b, e, cap, ws)
                       : k::chowla_pair_range(*ctx, b, e, cap, ws);
    };
    const auto acc = run_engine<k::SubsetSweepAcc>(total, opts.workers, cap, fold,
                                                   opts.checkpoint_path, cfg.str());

    r.candidates_examined = acc.examined;
    if (acc.examined > 0) r.min_observed = Rat(Int(acc.min_slack));
    r.violation_count = acc.violation_total;
    for (const auto& v : acc.violations) {
        const ElementSet a = mask_set(q, v.mask_a);
        const ElementSet b = mask_set(q, v.mask_b);
        if (pollard_sum(a, b, Int(v.t)) != Int(v.sum)) kernel_mismatch("subset violation sum");
        r.violations.push_back({{"a", mask_json(q, v.mask_a)},
                                {"b", mask_json(q, v.mask_b)},
                                {"t", v.t},
                                {"sum", v.sum},
                                {"bound", v.bound},
                                {"kind", v.kind == 0 ? "sum-below-bound" : "unexplained-tight-case"}});
    }

    r.equality_count = acc.equality_total;
    for (const auto& e : acc.equalities) {
        const ElementSet a = mask_set(q, e.mask_a);
        const ElementSet b = mask_set(q, e.mask_b);
        ordered_json entry = {{"a", mask_json(q, e.mask_a)},
                              {"b", mask_json(q, e.mask_b)},
                              {"t", e.t},
                              {"sum", e.sum}};
        if (equality_mode) {
            const TightnessClassification cls = classify_tightness(a, b, Int(e.t));
            if (!cls.tight || cls.sum != Int(e.sum)) kernel_mismatch("subset equality sum");
            std::uint8_t exact_bits = 0;
            ordered_json tags = ordered_json::array();
            for (const TightnessCondition c : cls.conditions) {
                tags.push_back(condition_tag(c));
                switch (c) {
                    case TightnessCondition::BEqualsT: exact_bits |= 1; break;
                    case TightnessCondition::SizesExceedQ: exact_bits |= 2; break;
                    case TightnessCondition::Reflection: exact_bits |= 4; break;
                    case TightnessCondition::SameDiffAps: exact_bits |= 8; break;
                }
            }
            if (exact_bits != e.conditions) kernel_mismatch("tightness conditions");
            entry["conditions"] = tags;
            if (cls.reflection_g) entry["reflection_g"] = to_i64(*cls.reflection_g);
            if (cls.common_difference) entry["common_difference"] = to_i64(*cls.common_difference);
        } else {
            const PollardCheck check = pollard_check(a, b, Int(e.t));
            if (!check.applicable || !check.tight || check.sum != Int(e.sum))
                kernel_mismatch("subset equality");
        }
        r.equality_witnesses.push_back(std::move(entry));
    }

    r.details = {{"q", q}, {"pairs", pairs_total}, {"triples_examined", acc.examined}};
}

// ---- prime-power extremal ------------------------------------------------

void verify_prime_power(const VerifyParams& params, const VerifyOptions& opts,
                        VerificationReport& r) {
    const Int p = need(params.p, "p", r.theorem_id);
    const unsigned alpha = need_u(params.alpha, "alpha", r.theorem_id);
    const unsigned beta = need_u(params.beta, "beta", r.theorem_id);
    if (alpha < 1 || beta < alpha)
        throw Error(Errc::BadArgument, "prime-power-extremal requires 1 <= alpha <= beta");
    if (!is_prime(p)) throw Error(Errc::BadArgument, "p must be prime");
    const Int q = pow_int(p, beta);
    const Int m = pow_int(p, alpha);
    const auto sp = kernel_space(q, m, false);
    const std::int64_t pair_floor = to_i64(interval_carry_count(m));
    const std::int64_t literal_floor = to_i64(m / 4);
    const bool sampled = params.samples > 0;
    const std::uint64_t total = sampled ? params.samples : sp.size();
    if (!sampled) check_budget(sp.size(), opts.budget, r.theorem_id);
    r.parameters = {{"p", to_i64(p)}, {"alpha", alpha}, {"beta", beta},
                    {"q", to_i64(q)},  {"m", to_i64(m)}};
    r.mode = sampled ? "sampled" : "exhaustive";

    std::ostringstream cfg;
    cfg << "prime-power-extremal|q=" << q << "|m=" << m << "|sampled=" << sampled
        << "|total=" << total << "|seed=" << opts.seed << "|cap=" << opts.witness_cap;
    const std::size_t cap = opts.witness_cap;
    const std::uint64_t seed = opts.seed;
    const auto fold = [sp, pair_floor, sampled, seed, cap](std::uint32_t, std::uint64_t b,
                                                           std::uint64_t e) {
        k::Workspace ws;
        return sampled
                   ? k::sweep_digital_samples(sp, k::Stat::CarryCount, pair_floor, seed, b, e, cap,
                                              ws)
                   : k::sweep_digital_range(sp, k::Stat::CarryCount, pair_floor, nullptr, b, e,
                                            cap, ws);
    };
    const auto acc = run_engine<k::SetSweepAcc>(total, opts.workers, cap, fold,
                                                opts.checkpoint_path, cfg.str());

    r.candidates_examined = acc.examined;
    r.min_observed = Rat(Int(acc.stat.best), m * m);
    r.violation_count = acc.stat.violation_total;
    for (const auto& v : acc.stat.violations) {
        const DigitalSet a = decode_digital(sp, v.index);
        if (carry_report(a).carry_count != Int(v.value)) kernel_mismatch("violation value");
        r.violations.push_back(
            {{"set", set_json(a)}, {"carry_count", v.value}, {"floor", pair_floor}});
    }

    const bool pair_tight = acc.stat.best == pair_floor;
    if (pair_tight) {
        r.equality_count = acc.stat.argmin_total;
        for (std::uint64_t index : acc.stat.argmin) {
            const DigitalSet a = decode_digital(sp, index);
            if (carry_report(a).carry_count != Int(acc.stat.best)) kernel_mismatch("minimizer");
            r.equality_witnesses.push_back(
                {{"set", set_json(a)},
                 {"carry_count", acc.stat.best},
                 {"structure",
                  structure_to_string(classify_structure(a, ClassifyPurpose::ForC2))}});
        }
    }

    // Two readings of the claimed floor are compared; the sweep decides which
    // one the data supports, and neither is asserted.
    const bool pair_holds = acc.stat.violation_total == 0;
    const bool literal_holds = acc.stat.best >= literal_floor;
    std::string supported;
    if (pair_holds && pair_tight)
        supported = "pair-count";
    else if (pair_holds)
        supported = "pair-count-loose";
    else if (literal_holds)
        supported = acc.stat.best == literal_floor ? "literal" : "literal-loose";
    else
        supported = "neither";
    r.details = {{"pair_count_floor", pair_floor},
                 {"literal_floor", literal_floor},
                 {"min_carry_count", acc.stat.best},
                 {"pair_count_reading_holds", pair_holds},
                 {"pair_count_reading_tight", pair_tight},
                 {"literal_reading_holds", literal_holds},
                 {"literal_reading_tight", acc.stat.best == literal_floor},
                 {"supported_reading", supported}};
}

}  // namespace

VerificationReport verify_theorem(const std::string& theorem_id, const VerifyParams& params,
                                  const VerifyOptions& opts) {
    const auto start = std::chrono::steady_clock::now();
    VerificationReport r;
    r.theorem_id = theorem_id;
    r.seed = opts.seed;

    if (theorem_id == "c2-mu")
        verify_c2_mu(params, opts, r);
    else if (theorem_id == "c1-structure")
        verify_c1_structure(params, opts, r);
    else if (theorem_id == "z-case")
        verify_z_case(params, opts, r);
    else if (theorem_id == "thm22")
        verify_thm22(params, opts, r);
    else if (theorem_id == "thm23")
        verify_thm23(params, opts, r);
    else if (theorem_id == "pollard-chowla")
        run_subset_theorem(false, params, opts, r);
    else if (theorem_id == "naz-equality")
        run_subset_theorem(true, params, opts, r);
    else if (theorem_id == "prime-power-extremal")
        verify_prime_power(params, opts, r);
    else
        throw Error(Errc::UnknownTheorem, "unknown theorem id '" + theorem_id + "'");

    r.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

std::vector<std::string> theorem_ids() {
    return {"pollard-chowla", "naz-equality",  "thm22",  "thm23",
            "c1-structure",   "c2-mu",         "z-case", "prime-power-extremal"};
}

}  // namespace carrylab
