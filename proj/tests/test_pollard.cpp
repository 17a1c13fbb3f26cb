#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "carrylab/pollard.hpp"
#include "test_util.hpp"

#include <random>

using namespace carrylab;
using testutil::ints;
using testutil::thrown_errc;

namespace {

ElementSet mset(long long q, std::initializer_list<long long> xs) {
    return ElementSet::of(ints(xs), Domain::modular(q));
}

}  // namespace

TEST_CASE("Chowla property") {
    CHECK(has_chowla(mset(7, {0, 1, 3})));
    CHECK(has_chowla(mset(9, {0, 1, 2})));
    CHECK_FALSE(has_chowla(mset(9, {0, 1, 3})));  // difference 3
    CHECK_FALSE(has_chowla(mset(9, {0, 3, 6})));
    CHECK(has_chowla(mset(9, {5})));
    CHECK(has_chowla(ElementSet::of({}, Domain::modular(9))));
    CHECK(thrown_errc([] { has_chowla(ElementSet::of(ints({0, 1}), Domain::integers())); }) ==
          Errc::DomainMismatch);
}

TEST_CASE("Pollard bound arithmetic") {
    CHECK(pollard_bound(9, 3, 3, 2) == 8);
    CHECK(pollard_bound(9, 3, 3, 3) == 9);
    CHECK(pollard_bound(7, 3, 3, 2) == 8);
    CHECK(pollard_bound(5, 4, 4, 2) == 10);  // min(q, ...) saturates at q
    CHECK(thrown_errc([] { pollard_bound(9, 3, 3, 0); }) == Errc::BadT);
    CHECK(thrown_errc([] { pollard_bound(9, 3, 3, 4); }) == Errc::BadT);
    CHECK(thrown_errc([] { pollard_bound(9, 2, 3, 3); }) == Errc::BadT);
}

TEST_CASE("Pollard checks compute S, bound, and applicability") {
    auto a = mset(9, {0, 1, 2});
    auto r = pollard_check(a, a, 2);
    CHECK(r.sum == 8);
    CHECK(r.bound == 8);
    CHECK(r.tight);
    CHECK(r.applicable);

    // Without the Chowla property the inequality can genuinely fail, and the
    // check must say so rather than reject the input.
    auto sub = mset(9, {0, 3, 6});
    auto bad = pollard_check(sub, sub, 2);
    CHECK(bad.sum == 6);
    CHECK(bad.bound == 8);
    CHECK_FALSE(bad.tight);
    CHECK_FALSE(bad.applicable);

    auto x = mset(7, {0, 1, 3});
    auto y = mset(7, {0, 4, 6});
    auto cross = pollard_check(x, y, 2);
    CHECK(cross.sum == 8);
    CHECK(cross.bound == 8);
    CHECK(cross.tight);
    CHECK(cross.applicable);
}

TEST_CASE("AP recognition") {
    CHECK(*is_ap(mset(9, {0, 4, 8})) == 4);
    CHECK(*is_ap(mset(9, {0, 1, 2})) == 1);
    CHECK(*is_ap(mset(9, {5})) == 0);
    CHECK(*is_ap(mset(9, {2, 5})) == 3);
    CHECK(*is_ap(mset(9, {0, 3, 6})) == 3);  // wraps into a coset cycle
    CHECK(*is_ap(mset(6, {0, 2, 4})) == 2);
    CHECK(*is_ap(mset(9, {0, 1, 5})) == 4);  // 0, 5, 10 = 1 wraps around
    CHECK_FALSE(is_ap(mset(7, {0, 1, 3})).has_value());
    CHECK_FALSE(is_ap(mset(9, {0, 1, 3})).has_value());

    auto dz = ap_differences(ElementSet::of(ints({3, 5, 7, 9}), Domain::integers()));
    CHECK(dz == std::set<Int>{2});
    CHECK(*is_ap(ElementSet::of(ints({3, 5, 7, 9}), Domain::integers())) == 2);
    CHECK_FALSE(is_ap(ElementSet::of(ints({0, 1, 3}), Domain::integers())).has_value());

    // Difference sets are symmetric under d -> q - d.
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        long long q = 5 + static_cast<long long>(rng() % 20);
        std::vector<Int> elems;
        for (long long v = 0; v < q; ++v)
            if (rng() % 3 == 0) elems.push_back(v);
        auto s = ElementSet::of(elems, Domain::modular(q));
        if (s.size() <= 1) continue;
        auto diffs = ap_differences(s);
        for (const auto& d : diffs) CHECK(diffs.count(mod_floor(Int(q) - d, q)) == 1);
    }
}

TEST_CASE("tightness classification reports every holding condition") {
    auto a = mset(9, {0, 1, 2});

    // t = 2: tight; the pair is a shared-difference progression pair and
    // also a reflection pair, since |A| = |B| = t + 1 and B = 2 - A.
    auto t2 = classify_tightness(a, a, 2);
    CHECK(t2.sum == 8);
    CHECK(t2.bound == 8);
    CHECK(t2.tight);
    CHECK(t2.conditions ==
          std::set<TightnessCondition>{TightnessCondition::Reflection,
                                       TightnessCondition::SameDiffAps});
    CHECK(*t2.reflection_g == 2);
    CHECK(*t2.common_difference == 1);

    // t = 3: tight via |B| = t; the reflection clause no longer applies
    // because it would need |A| = |B| = 4.
    auto t3 = classify_tightness(a, a, 3);
    CHECK(t3.sum == 9);
    CHECK(t3.bound == 9);
    CHECK(t3.tight);
    CHECK(t3.conditions ==
          std::set<TightnessCondition>{TightnessCondition::BEqualsT,
                                       TightnessCondition::SameDiffAps});

    auto x = mset(7, {0, 1, 3});
    auto y = mset(7, {0, 4, 6});
    auto c = classify_tightness(x, y, 2);
    CHECK(c.tight);
    CHECK(c.conditions == std::set<TightnessCondition>{TightnessCondition::Reflection});
    CHECK(*c.reflection_g == 0);

    // Sizes exceeding q + t.
    auto big_a = mset(5, {0, 1, 2, 3, 4});
    auto big_b = mset(5, {0, 1, 2, 3});
    auto cb = classify_tightness(big_a, big_b, 2);
    CHECK(cb.conditions.count(TightnessCondition::SizesExceedQ) == 1);

    CHECK(thrown_errc([&] { classify_tightness(a, a, 1); }) == Errc::HypothesesNotMet);
    CHECK(thrown_errc([&] { classify_tightness(mset(9, {0, 1}), a, 2); }) ==
          Errc::HypothesesNotMet);
    CHECK(thrown_errc([&] { classify_tightness(a, mset(9, {0, 3, 6}), 2); }) ==
          Errc::HypothesesNotMet);

    CHECK(condition_tag(TightnessCondition::BEqualsT) == std::string("B_EQUALS_T"));
    CHECK(condition_tag(TightnessCondition::SizesExceedQ) == std::string("SIZES_EXCEED_Q"));
    CHECK(condition_tag(TightnessCondition::Reflection) == std::string("REFLECTION"));
    CHECK(condition_tag(TightnessCondition::SameDiffAps) == std::string("SAME_DIFF_APS"));
}

TEST_CASE("triangular profile") {
    CHECK(triangular_psi(3, 0) == 3);
    CHECK(triangular_psi(3, 2) == 1);
    CHECK(triangular_psi(3, -2) == 1);
    CHECK(triangular_psi(3, 3) == 0);
    CHECK(triangular_psi(3, -7) == 0);

    // Two progressions with one difference produce a triangular rep function
    // after aligning by the base offset and dilating the argument by d.
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 50; ++trial) {
        long long q = 29 + 2 * static_cast<long long>(rng() % 30);
        long long big_l = 2 + static_cast<long long>(rng() % 5);
        Int d = 1 + static_cast<long long>(rng() % (q - 1));
        if (gcd(d, Int(q)) != 1) continue;
        Int a0 = static_cast<long long>(rng() % q), b0 = static_cast<long long>(rng() % q);
        std::vector<Int> av, bv;
        for (long long i = 0; i < big_l; ++i) {
            av.push_back(mod_floor(a0 + i * d, q));
            bv.push_back(mod_floor(b0 + i * d, q));
        }
        auto a = ElementSet::of(av, Domain::modular(q));
        auto b = ElementSet::of(bv, Domain::modular(q));
        auto profile = rep_function(a, b);
        for (long long k = -(big_l + 1); k <= 2 * big_l + 1; ++k) {
            Int x = mod_floor(a0 + b0 + k * d, q);
            CHECK(profile.count_at(x) == triangular_psi(big_l, Int(k) - (big_l - 1)));
        }
    }
}

TEST_CASE("layered sizes decrease and S is concave in t") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        long long q = 8 + static_cast<long long>(rng() % 25);
        std::vector<Int> av, bv;
        for (long long v = 0; v < q; ++v) {
            if (rng() % 2) av.push_back(v);
            if (rng() % 2) bv.push_back(v);
        }
        auto a = ElementSet::of(av, Domain::modular(q));
        auto b = ElementSet::of(bv, Domain::modular(q));
        if (a.size() == 0 || b.size() == 0) continue;
        auto profile = rep_function(a, b);
        Int cap(static_cast<std::uint64_t>(std::min(a.size(), b.size())));
        Int prev_layer = layered_size(profile, 1);
        Int prev_s = 0;
        for (Int t = 1; t <= cap; ++t) {
            Int layer = layered_size(profile, t);
            CHECK(layer <= prev_layer);
            Int s = pollard_sum(a, b, t);
            CHECK(s >= prev_s);
            CHECK(s - prev_s == layer);  // increments are the layered sizes
            prev_layer = layer;
            prev_s = s;
        }
    }
}
