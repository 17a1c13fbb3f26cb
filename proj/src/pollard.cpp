#include "carrylab/pollard.hpp"

#include <algorithm>

namespace carrylab {

bool has_chowla(const ElementSet& a) {
    if (!a.domain.is_modular())
        throw Error(Errc::DomainMismatch, "the Chowla property is defined over Z_q only");
    const Int& q = a.domain.q;
    for (std::size_t i = 0; i < a.elements.size(); ++i) {
        for (std::size_t j = i + 1; j < a.elements.size(); ++j) {
            if (gcd(a.elements[j] - a.elements[i], q) != 1) return false;
        }
    }
    return true;
}

Int pollard_bound(const Int& q, const Int& n_a, const Int& n_b, const Int& t) {
    if (t < 1 || t > std::min(n_a, n_b))
        throw Error(Errc::BadT, "t must lie in [1, min(" + n_a.str() + ", " + n_b.str() +
                                    ")], got " + t.str());
    return t * std::min(q, Int(n_a + n_b - t));
}

PollardCheck pollard_check(const ElementSet& a, const ElementSet& b, const Int& t) {
    if (!a.domain.is_modular() || !(a.domain == b.domain))
        throw Error(Errc::DomainMismatch, "Pollard checks need both sets in one Z_q");
    PollardCheck r;
    r.sum = pollard_sum(a, b, t);
    r.bound = pollard_bound(a.domain.q, Int(static_cast<std::uint64_t>(a.size())),
                            Int(static_cast<std::uint64_t>(b.size())), t);
    r.tight = r.sum == r.bound;
    r.applicable = has_chowla(a) || has_chowla(b);
    return r;
}

const char* condition_tag(TightnessCondition c) {
    switch (c) {
        case TightnessCondition::BEqualsT: return "B_EQUALS_T";
        case TightnessCondition::SizesExceedQ: return "SIZES_EXCEED_Q";
        case TightnessCondition::Reflection: return "REFLECTION";
        case TightnessCondition::SameDiffAps: return "SAME_DIFF_APS";
    }
    return "UNKNOWN";
}

namespace {

bool set_equals(const std::vector<Int>& sorted, std::vector<Int> candidate) {
    std::sort(candidate.begin(), candidate.end());
    return sorted == candidate;
}

// Least g with B = g - A, if any. B = g - A and A = g - B are equivalent
// statements (apply x -> g - x to either), so one direction suffices.
std::optional<Int> reflection_witness(const ElementSet& a, const ElementSet& b) {
    const Int& q = a.domain.q;
    std::set<Int> candidates;
    for (const auto& bb : b.elements) candidates.insert(mod_floor(a.elements.front() + bb, q));
    for (const auto& g : candidates) {
        std::vector<Int> reflected;
        reflected.reserve(a.elements.size());
        for (const auto& x : a.elements) reflected.push_back(mod_floor(g - x, q));
        if (set_equals(b.elements, std::move(reflected))) return g;
    }
    return std::nullopt;
}

}  // namespace

std::set<Int> ap_differences(const ElementSet& a) {
    std::set<Int> out;
    const auto& e = a.elements;
    if (!a.domain.is_modular()) {
        if (e.size() <= 1) {
            out.insert(0);
            return out;
        }
        Int d = e[1] - e[0];
        for (std::size_t i = 2; i < e.size(); ++i) {
            if (e[i] - e[i - 1] != d) return out;
        }
        out.insert(d);
        return out;
    }
    const Int& q = a.domain.q;
    if (e.size() <= 1) {
        out.insert(0);
        return out;
    }
    auto member = [&](const Int& x) { return std::binary_search(e.begin(), e.end(), x); };
    for (Int d = 1; d < q; ++d) {
        // A progression of difference d has exactly one start without a
        // predecessor, unless it wraps into a full coset cycle.
        std::vector<Int> starts;
        for (const auto& x : e) {
            if (!member(mod_floor(x - d, q))) starts.push_back(x);
        }
        if (starts.size() > 1) continue;
        Int start = starts.empty() ? e.front() : starts.front();
        std::vector<Int> walk;
        walk.reserve(e.size());
        Int cur = start;
        bool ok = true;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (!member(cur)) {
                ok = false;
                break;
            }
            walk.push_back(cur);
            cur = mod_floor(cur + d, q);
        }
        if (!ok) continue;
        std::sort(walk.begin(), walk.end());
        walk.erase(std::unique(walk.begin(), walk.end()), walk.end());
        if (walk == e) out.insert(d);
    }
    return out;
}

std::optional<Int> is_ap(const ElementSet& a) {
    if (a.elements.size() <= 1) return Int(0);
    auto diffs = ap_differences(a);
    if (diffs.empty()) return std::nullopt;
    if (!a.domain.is_modular()) return *diffs.begin();
    const Int& q = a.domain.q;
    Int best = q;
    for (const auto& d : diffs) best = std::min(best, std::min(d, Int(q - d)));
    return best;
}

TightnessClassification classify_tightness(const ElementSet& a, const ElementSet& b, const Int& t) {
    if (!a.domain.is_modular() || !(a.domain == b.domain))
        throw Error(Errc::DomainMismatch, "tightness classification needs both sets in one Z_q");
    Int n_a(static_cast<std::uint64_t>(a.size())), n_b(static_cast<std::uint64_t>(b.size()));
    if (!(t >= 2 && t <= n_b && n_b <= n_a))
        throw Error(Errc::HypothesesNotMet,
                    "need 2 <= t <= |B| <= |A|, got t = " + t.str() + ", |B| = " + n_b.str() +
                        ", |A| = " + n_a.str());
    if (!has_chowla(b))
        throw Error(Errc::HypothesesNotMet, "B lacks the Chowla property");

    const Int& q = a.domain.q;
    TightnessClassification r;
    r.sum = pollard_sum(a, b, t);
    r.bound = pollard_bound(q, n_a, n_b, t);
    r.tight = r.sum == r.bound;

    if (n_b == t) r.conditions.insert(TightnessCondition::BEqualsT);
    if (n_a + n_b >= q + t) r.conditions.insert(TightnessCondition::SizesExceedQ);
    if (n_a == n_b && n_a == t + 1) {
        if (auto g = reflection_witness(a, b)) {
            r.conditions.insert(TightnessCondition::Reflection);
            r.reflection_g = *g;
        }
    }
    auto da = ap_differences(a);
    auto db = ap_differences(b);
    std::vector<Int> shared;
    std::set_intersection(da.begin(), da.end(), db.begin(), db.end(), std::back_inserter(shared));
    if (!shared.empty()) {
        r.conditions.insert(TightnessCondition::SameDiffAps);
        Int best = q;
        for (const auto& d : shared) best = std::min(best, std::min(d, Int(q - d)));
        r.common_difference = best;
    }
    return r;
}

Int triangular_psi(const Int& big_l, const Int& x) {
    Int v = big_l - boost::multiprecision::abs(x);
    return v > 0 ? v : Int(0);
}

}  // namespace carrylab
