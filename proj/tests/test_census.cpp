#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oacensus/census.hpp"

using namespace oac;

namespace {

OrthogonalArray schur_z(long n) { return schur_triples(cayley_table(AbelianGroup({n}))); }

} // namespace

TEST_CASE("census of a 1-coloring is concentrated at v = (d)") {
    auto oa = schur_z(6);
    Coloring c(6, 1, std::vector<int>(6, 0));
    auto pc = full_census(oa, c);
    CHECK(pc.total == 36);
    CHECK(pc.mono == 36);
    CHECK(pc.at({3}) == 36);
    CHECK(pc.r_strict == 0);
    CHECK(pc.r_covering == 36);
    CHECK(pc.t21 == 0);
}

TEST_CASE("schur Z_4 with even/odd classes has M = 4") {
    auto oa = schur_z(4);
    Coloring c(4, 2, {0, 1, 0, 1});
    auto pc = full_census(oa, c);
    CHECK(pc.mono == 4);
    // |X_1|^2 - |X_1||X_2| + |X_2|^2 = 4 - 4 + 4
    CHECK(pc.r_strict == 0); // r < d
    CHECK(pc.mono + pc.r_strict + pc.t21 == 16);
}

TEST_CASE("Example-1 array on Y = Z_4 with the layer coloring: M = 48, R = 96") {
    auto y = as_quasigroup(cayley_table(AbelianGroup({4})));
    auto l = build_z3_extension(y);
    auto oa = schur_triples(l);
    std::vector<int> layers(12);
    for (int e = 0; e < 12; ++e) layers[size_t(e)] = e % 3;
    Coloring c(12, 3, layers);
    auto pc = full_census(oa, c);
    CHECK(pc.mono == 48);
    CHECK(pc.r_strict == 96);

    // stage 1 full swap drops M to 16, stage 2 to 0 (and R to 0)
    std::vector<int> all = {0, 1, 2, 3};
    auto l1 = swap_block(l, {all, all, 0, 1});
    auto pc1 = full_census(schur_triples(l1), c);
    CHECK(pc1.mono == 16);
    auto l2 = swap_block(l1, {all, all, 0, 2});
    auto pc2 = full_census(schur_triples(l2), c);
    CHECK(pc2.mono == 0);
    CHECK(pc2.r_strict == 0);
}

TEST_CASE("partial swap matches the 3|Y|^2 - 2|U||V| formula") {
    auto y = as_quasigroup(cayley_table(AbelianGroup({4})));
    auto l = build_z3_extension(y);
    std::vector<int> layers(12);
    for (int e = 0; e < 12; ++e) layers[size_t(e)] = e % 3;
    Coloring c(12, 3, layers);
    SwapSpec spec;
    spec.u = {0, 1};
    spec.v = {0, 1, 2};
    auto pc = full_census(schur_triples(swap_block(l, spec)), c);
    CHECK(pc.mono == 3 * 16 - 2 * 2 * 3);

    // after the full stage-1 swap, a partial (0,2) swap gives |Y|^2 - |U'||V'|
    std::vector<int> all = {0, 1, 2, 3};
    auto l1 = swap_block(l, {all, all, 0, 1});
    SwapSpec stage2;
    stage2.u = {0, 3};
    stage2.v = {1, 2, 3};
    stage2.layer_a = 0;
    stage2.layer_b = 2;
    auto pc2 = full_census(schur_triples(swap_block(l1, stage2)), c);
    CHECK(pc2.mono == 16 - 2 * 3);
}

TEST_CASE("census totals and derived aggregates are consistent") {
    auto oa = schur_z(10);
    for (uint64_t seed = 0; seed < 10; ++seed) {
        auto c = random_coloring(10, {4, 3, 3}, seed);
        auto pc = full_census(oa, c);
        CHECK(pc.total == 100);
        CHECK(pc.mono + pc.r_strict + pc.t21 == 100); // d = 3 partition
        i128 msum = 0;
        for (auto m : pc.mono_color) msum += m;
        CHECK(msum == pc.mono);
    }
}

TEST_CASE("parallel census equals serial census") {
    auto oa = schur_z(40);
    auto c = random_coloring(40, {15, 15, 10}, 5);
    auto serial = full_census(oa, c, 1);
    for (int workers : {2, 3, 8}) {
        auto par = full_census(oa, c, workers);
        CHECK(par.counts == serial.counts);
        CHECK(par.mono == serial.mono);
        CHECK(par.r_strict == serial.r_strict);
    }
}

TEST_CASE("census rejects mismatched ground sizes") {
    auto oa = schur_z(4);
    Coloring c(5, 2, {0, 0, 0, 1, 1});
    CHECK_THROWS_AS(full_census(oa, c), Error);
}

TEST_CASE("convolution census matches the worked Z_5 example") {
    AbelianGroup z5({5});
    Coloring c(5, 2, {0, 0, 0, 1, 1});
    auto pc = census_via_convolution(z5, {1, 1, -1}, 0, c);
    CHECK(pc.mono == 7);
    CHECK(pc.at({0, 0}) == 0);
    auto brute = full_census(from_linear_equation(z5, {1, 1, -1}, 0), c);
    CHECK(pc.counts == brute.counts);
}

TEST_CASE("convolution census on x+y+z=5 over Z_6 with the interval coloring") {
    AbelianGroup z6({6});
    auto c = rainbow_free_ap_coloring(6, 1);
    auto pc = census_via_convolution(z6, {1, 1, 1}, 5, c);
    CHECK(pc.mono == 0);
    CHECK(pc.r_strict == 0);
    auto brute = full_census(from_linear_equation(z6, {1, 1, 1}, 5), c);
    CHECK(pc.counts == brute.counts);
}

TEST_CASE("convolution census equals full census on seeded random instances") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        long n = 3 + long(rng() % 30);
        AbelianGroup g({n});
        auto coprime = [&] {
            while (true) {
                long a = 1 + long(rng() % uint64_t(2 * n));
                if (std::gcd(a, n) == 1) return rng() & 1 ? a : -a;
            }
        };
        std::vector<long> coeffs = {coprime(), coprime(), coprime()};
        long t = long(rng() % uint64_t(n));
        int r = 1 + int(rng() % 5);
        std::vector<long> sizes(size_t(r), 0);
        for (long i = 0; i < n; ++i) sizes[size_t(rng() % uint64_t(r))]++;
        auto c = random_coloring(n, sizes, rng());
        auto conv = census_via_convolution(g, coeffs, t, c);
        auto brute = full_census(from_linear_equation(g, coeffs, t), c);
        REQUIRE(conv.counts == brute.counts);
        CHECK(conv.mono == brute.mono);
        CHECK(conv.r_strict == brute.r_strict);
        CHECK(conv.r_covering == brute.r_covering);
    }
}

TEST_CASE("convolution census rejects unsupported inputs") {
    AbelianGroup g({2, 2});
    Coloring c(4, 2, {0, 1, 0, 1});
    CHECK_THROWS_AS(census_via_convolution(g, {1, 1, 1}, 0, c), Error);
    AbelianGroup z5({5});
    Coloring c5(5, 2, {0, 0, 0, 1, 1});
    CHECK_THROWS_AS(census_via_convolution(z5, {1, 1, 1, 1}, 0, c5), Error);
}

TEST_CASE("interval schur census worked values") {
    // n=4, all one color: solutions (1,1),(1,2),(2,1),(1,3),(3,1),(2,2)
    Coloring c1(4, 1, {0, 0, 0, 0});
    auto r1 = interval_schur_census(c1);
    CHECK(r1.mono == 6);
    CHECK(r1.solutions == 6);

    // n=3, three singleton classes: rainbow (1,2,3) and (2,1,3)
    Coloring c2(3, 3, {0, 1, 2});
    auto r2 = interval_schur_census(c2);
    CHECK(r2.rainbow_strict == 2);
    CHECK(r2.mono == 0);

    // n=2: single solution (1,1,2)
    Coloring c3(2, 2, {0, 1});
    auto r3 = interval_schur_census(c3);
    CHECK(r3.solutions == 1);
    CHECK(r3.mono == 0);
    Coloring c4(2, 1, {0, 0});
    CHECK(interval_schur_census(c4).mono == 1);
}

TEST_CASE("embedding an interval coloring into Z_2n") {
    Coloring c(3, 3, {0, 1, 2});
    auto e = embed_interval_coloring(c);
    CHECK(e.n() == 6);
    CHECK(e.r() == 4);
    CHECK(e.class_sizes() == std::vector<long>{1, 1, 1, 3});
    // fourth class = {4, 5, 0 (= 6 mod 6)}
    CHECK(e.color(4) == 3);
    CHECK(e.color(5) == 3);
    CHECK(e.color(0) == 3);
    CHECK(e.color(1) == 0);
    CHECK(e.color(2) == 1);
    CHECK(e.color(3) == 2);

    Coloring one(1, 1, {0});
    auto e1 = embed_interval_coloring(one);
    CHECK(e1.n() == 2);
    CHECK(e1.class_sizes() == std::vector<long>{1, 1});
}
