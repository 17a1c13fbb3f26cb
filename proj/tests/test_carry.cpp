#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "carrylab/carry.hpp"
#include "test_util.hpp"

#include <random>

using namespace carrylab;
using testutil::ints;
using testutil::mod_set;
using testutil::thrown_errc;
using testutil::z_set;

namespace {

SumsetProfile self_profile(const DigitalSet& a) {
    auto e = ElementSet::of(a);
    return rep_function(e, e);
}

std::map<Int, Int> counts_of(std::initializer_list<std::pair<long long, long long>> kv) {
    std::map<Int, Int> m;
    for (auto [k, v] : kv) m.emplace(k, v);
    return m;
}

}  // namespace

TEST_CASE("rep function profiles") {
    auto p1 = self_profile(mod_set(9, 3, {0, 1, 2}));
    CHECK(p1.counts == counts_of({{0, 1}, {1, 2}, {2, 3}, {3, 2}, {4, 1}}));
    CHECK(p1.total == 9);

    auto p2 = self_profile(mod_set(9, 3, {8, 0, 1}));
    CHECK(p2.counts == counts_of({{7, 1}, {8, 2}, {0, 3}, {1, 2}, {2, 1}}));
    CHECK(p2.count_at(0) == 3);
    CHECK(p2.count_at(3) == 0);

    auto pz = self_profile(z_set(3, {0, 1, 2}));
    CHECK(pz.counts == counts_of({{0, 1}, {1, 2}, {2, 3}, {3, 2}, {4, 1}}));

    auto zneg = self_profile(z_set(3, {-1, 0, 1}));
    CHECK(zneg.counts == counts_of({{-2, 1}, {-1, 2}, {0, 3}, {1, 2}, {2, 1}}));

    auto a = ElementSet::of(ints({0, 1, 3}), Domain::modular(7));
    auto b = ElementSet::of(ints({0, 4, 6}), Domain::modular(7));
    auto cross = rep_function(a, b);
    CHECK(cross.count_at(0) == 3);
    for (long long x : {1, 2, 3, 4, 5, 6}) CHECK(cross.count_at(x) == 1);

    CHECK(thrown_errc([&] {
              rep_function(a, ElementSet::of(ints({0, 1}), Domain::modular(9)));
          }) == Errc::DomainMismatch);
    CHECK(thrown_errc([&] {
              rep_function(a, ElementSet::of(ints({0, 1}), Domain::integers()));
          }) == Errc::DomainMismatch);
}

TEST_CASE("dense and sparse accumulation agree") {
    // 2^20 is the dense cap; a modulus just above it takes the sparse path.
    Int big = (Int(1) << 20) + 3;
    auto dom_sparse = Domain::modular(big);
    auto dom_dense = Domain::modular(Int(1) << 20);
    auto mk = [](const Domain& d) {
        return ElementSet::of(ints({0, 1, 5, 1000, 99999}), d);
    };
    auto ps = rep_function(mk(dom_sparse), mk(dom_sparse));
    auto pd = rep_function(mk(dom_dense), mk(dom_dense));
    CHECK(ps.total == 25);
    CHECK(pd.total == 25);
    CHECK(ps.count_at(2) == 1);
    CHECK(pd.count_at(2) == 1);
    CHECK(ps.count_at(1001) == 2);
    CHECK(pd.count_at(1001) == 2);
    Int sum_s = 0, sum_d = 0;
    for (const auto& [x, r] : ps.counts) (void)x, sum_s += r;
    for (const auto& [x, r] : pd.counts) (void)x, sum_d += r;
    CHECK(sum_s == 25);
    CHECK(sum_d == 25);
}

TEST_CASE("layered sizes and the Pollard sum") {
    auto a = ElementSet::of(ints({0, 1, 2}), Domain::modular(9));
    auto p = rep_function(a, a);
    CHECK(layered_size(p, 1) == 5);
    CHECK(layered_size(p, 2) == 3);
    CHECK(layered_size(p, 3) == 1);
    CHECK(layered_size(p, 4) == 0);
    CHECK(thrown_errc([&] { layered_size(p, 0); }) == Errc::BadArgument);

    CHECK(pollard_sum(a, a, 1) == 5);
    CHECK(pollard_sum(a, a, 2) == 8);
    CHECK(pollard_sum(a, a, 3) == 9);
    CHECK(thrown_errc([&] { pollard_sum(a, a, 0); }) == Errc::BadT);
    CHECK(thrown_errc([&] { pollard_sum(a, a, 4); }) == Errc::BadT);

    auto x = ElementSet::of(ints({0, 1, 3}), Domain::modular(7));
    auto y = ElementSet::of(ints({0, 4, 6}), Domain::modular(7));
    CHECK(pollard_sum(x, y, 2) == 8);
}

TEST_CASE("digits and carries") {
    auto a = mod_set(9, 3, {8, 0, 1});
    CHECK(digit_of(a, 2) == 8);
    CHECK(digit_of(a, 7) == 1);  // 7 = 1 mod 3
    CHECK(carry_of(a, 1, 1) == 1);
    CHECK(carry_of(a, 8, 8) == 2);
    CHECK(carry_of(a, 8, 1) == 0);
    CHECK(thrown_errc([&] { carry_of(a, 2, 1); }) == Errc::BadArgument);

    auto b = mod_set(9, 3, {0, 1, 2});
    CHECK(carry_of(b, 2, 2) == 1);
    CHECK(carry_of(b, 1, 2) == 1);
    CHECK(carry_of(b, 0, 2) == 0);

    auto z = z_set(3, {0, 1, 5});
    CHECK(carry_of(z, 1, 1) == -1);  // digit 5, (2 - 5) / 3
    CHECK(carry_of(z, 5, 5) == 3);   // digit 1, (10 - 1) / 3
    CHECK(carry_of(z, 1, 5) == 2);   // digit 0, (6 - 0) / 3
}

TEST_CASE("carry reports, frozen small cases") {
    auto r1 = carry_report(mod_set(9, 3, {0, 1, 2}));
    CHECK(r1.carry_set == std::set<Int>{0, 1});
    CHECK(r1.c1 == 2);
    CHECK(r1.carry_count == 3);
    CHECK(r1.c2 == Rat(1, 3));

    auto r2 = carry_report(mod_set(9, 3, {8, 0, 1}));
    CHECK(r2.carry_set == std::set<Int>{0, 1, 2});
    CHECK(r2.c1 == 3);
    CHECK(r2.carry_count == 2);
    CHECK(r2.c2 == Rat(2, 9));

    // Translating {8,0,1} by 3 keeps the carry spectrum size but not the
    // carry frequency: c2 jumps from 2/9 to 8/9.
    auto r3 = carry_report(mod_set(9, 3, {2, 3, 4}));
    CHECK(r3.c1 == 3);
    CHECK(r3.carry_count == 8);
    CHECK(r3.c2 == Rat(8, 9));

    auto rz = carry_report(z_set(5, {-2, -1, 0, 1, 2}));
    CHECK(rz.carry_count == 6);
    CHECK(rz.c2 == Rat(6, 25));
    CHECK(rz.carry_set == std::set<Int>{-1, 0, 1});

    auto rz2 = carry_report(z_set(5, {0, 1, 2, 3, 4}));
    CHECK(rz2.carry_set == std::set<Int>{0, 1});
    CHECK(rz2.c1 == 2);
    CHECK(rz2.carry_count == 10);

    auto rz3 = carry_report(z_set(3, {0, 1, 5}));
    CHECK(rz3.carry_set == std::set<Int>{-1, 0, 2, 3});
    CHECK(rz3.c1 == 4);
}

TEST_CASE("profile invariants across the (9,3) space") {
    for (long long l0 : {0, 3, 6}) {
        for (long long l1 : {1, 4, 7}) {
            for (long long l2 : {2, 5, 8}) {
                auto s = mod_set(9, 3, {l0, l1, l2});
                auto p = self_profile(s);
                Int mass = 0;
                for (const auto& [x, r] : p.counts) (void)x, mass += r;
                CHECK(mass == 9);

                // Each residue class mod m carries total mass m, and at most
                // one member of a class can have multiplicity above m / 2.
                for (long long cls = 0; cls < 3; ++cls) {
                    Int class_mass = 0;
                    int heavy = 0;
                    for (Int y = cls; y < 9; y += 3) {
                        Int r = p.count_at(y);
                        class_mass += r;
                        if (2 * r > 3) ++heavy;
                    }
                    CHECK(class_mass == 3);
                    CHECK(heavy <= 1);
                }
            }
        }
    }
}

TEST_CASE("carry count equals the pairs leaving the set") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        long long q = 36, m = 6;
        std::vector<Int> elems;
        for (long long cls = 0; cls < m; ++cls)
            elems.push_back(cls + m * static_cast<long long>(rng() % (q / m)));
        auto s = DigitalSet::validate(elems, Domain::modular(q), m);
        auto rep = carry_report(s);
        Int direct = 0;
        for (const auto& x : s.elements())
            for (const auto& y : s.elements())
                if (!s.contains(mod_floor(x + y, q))) ++direct;
        CHECK(rep.carry_count == direct);
        CHECK(rep.c2 == Rat(direct, m * m));
    }
}
