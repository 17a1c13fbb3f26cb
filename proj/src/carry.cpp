#include "carrylab/carry.hpp"

#include <algorithm>

namespace carrylab {

namespace {

// Dense accumulation pays off only while the count array stays cache-friendly.
const Int kDenseModulusCap = Int(1) << 20;

}  // namespace

ElementSet ElementSet::of(std::vector<Int> elements, const Domain& domain) {
    if (domain.is_modular()) {
        for (auto& e : elements) e = mod_floor(e, domain.q);
    }
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    return ElementSet{domain, std::move(elements)};
}

ElementSet ElementSet::of(const DigitalSet& a) {
    return ElementSet{a.domain(), a.elements()};
}

Int SumsetProfile::count_at(const Int& x) const {
    Int key = domain.is_modular() ? mod_floor(x, domain.q) : x;
    auto it = counts.find(key);
    return it == counts.end() ? Int(0) : it->second;
}

SumsetProfile rep_function(const ElementSet& a, const ElementSet& b) {
    if (!(a.domain == b.domain))
        throw Error(Errc::DomainMismatch, "rep function needs both sets in one domain");
    SumsetProfile profile;
    profile.domain = a.domain;
    profile.total = Int(static_cast<std::uint64_t>(a.size())) * Int(static_cast<std::uint64_t>(b.size()));
    if (a.domain.is_modular() && a.domain.q <= kDenseModulusCap) {
        auto q = static_cast<std::size_t>(to_u64(a.domain.q));
        std::vector<std::int64_t> dense(q, 0);
        for (const auto& x : a.elements) {
            for (const auto& y : b.elements) {
                Int s = x + y;
                if (s >= a.domain.q) s -= a.domain.q;
                ++dense[static_cast<std::size_t>(to_u64(s))];
            }
        }
        for (std::size_t i = 0; i < q; ++i) {
            if (dense[i]) profile.counts.emplace(Int(static_cast<std::uint64_t>(i)), dense[i]);
        }
        return profile;
    }
    for (const auto& x : a.elements) {
        for (const auto& y : b.elements) {
            Int s = x + y;
            if (a.domain.is_modular()) s = mod_floor(s, a.domain.q);
            ++profile.counts[s];
        }
    }
    return profile;
}

Int layered_size(const SumsetProfile& profile, const Int& i) {
    if (i < 1) throw Error(Errc::BadArgument, "layer index must be >= 1, got " + i.str());
    Int n = 0;
    for (const auto& [x, r] : profile.counts) {
        (void)x;
        if (r >= i) ++n;
    }
    return n;
}

Int pollard_sum(const ElementSet& a, const ElementSet& b, const Int& t) {
    Int cap = std::min(a.size(), b.size());
    if (t < 1 || t > cap)
        throw Error(Errc::BadT, "t must lie in [1, " + cap.str() + "], got " + t.str());
    auto profile = rep_function(a, b);
    Int direct = 0;
    for (const auto& [x, r] : profile.counts) {
        (void)x;
        direct += std::min(t, r);
    }
    Int layered = 0;
    for (Int i = 1; i <= t; ++i) layered += layered_size(profile, i);
    if (direct != layered)
        throw std::logic_error("layered decomposition of S(A,B,t) disagrees with the direct sum");
    return direct;
}

Int digit_of(const DigitalSet& a, const Int& x) {
    return a.digit_for_class(x);
}

Int carry_of(const DigitalSet& a, const Int& a1, const Int& a2) {
    if (!a.contains(a1) || !a.contains(a2))
        throw Error(Errc::BadArgument, "carry_of arguments must be elements of the set");
    const Int& m = a.m();
    if (a.domain().is_modular()) {
        const Int& q = a.domain().q;
        Int s = a1 + a2;
        if (s >= q) s -= q;
        Int diff = mod_floor(s - a.digit_for_class(s), q);
        return diff / m;
    }
    Int s = a1 + a2;
    return (s - a.digit_for_class(s)) / m;
}

CarryReport carry_report(const DigitalSet& a) {
    CarryReport report;
    report.carry_count = 0;
    const auto& elems = a.elements();
    for (const auto& a1 : elems) {
        for (const auto& a2 : elems) {
            Int carry = carry_of(a, a1, a2);
            Int s = a1 + a2;
            if (a.domain().is_modular()) s = mod_floor(s, a.domain().q);
            bool in_set = a.contains(s);
            if (in_set != (carry == 0))
                throw std::logic_error("zero carry must coincide with the sum staying in the set");
            if (carry != 0) ++report.carry_count;
            report.carry_set.insert(std::move(carry));
        }
    }
    report.c1 = Int(static_cast<std::uint64_t>(report.carry_set.size()));
    report.c2 = Rat(report.carry_count, a.m() * a.m());
    return report;
}

}  // namespace carrylab
