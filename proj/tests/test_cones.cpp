#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "shintani/cones.hpp"
#include "support.hpp"

using namespace shintani;
using testsupport::Rng;

namespace {

const Mat kFib(2, {Rat(0), Rat(1), Rat(1), Rat(1)}); // X^2 - X - 1

Vec v2(long a, long b) { return Vec{Rat(a), Rat(b)}; }

} // namespace

TEST_CASE("dual_decomposition examples") {
    // standard basis is self-dual
    auto d = dual_decomposition(Cone({v2(1, 0), v2(0, 1)}));
    CHECK(d.alpha_star[0] == v2(1, 0));
    CHECK(d.alpha_star[1] == v2(0, 1));
    CHECK(d.beta_star.empty());

    // I = ((1,0),(1,1)) -> alpha* = ((1,-1),(0,1))
    d = dual_decomposition(Cone({v2(1, 0), v2(1, 1)}));
    CHECK(d.alpha_star[0] == v2(1, -1));
    CHECK(d.alpha_star[1] == v2(0, 1));

    // I = ((1,1)) in g=2 -> alpha* = ((1/2,1/2)), beta* spans (1,-1)
    d = dual_decomposition(Cone({v2(1, 1)}));
    REQUIRE(d.alpha_star.size() == 1);
    CHECK(d.alpha_star[0] == Vec{Rat(1, 2), Rat(1, 2)});
    REQUIRE(d.beta_star.size() == 1);
    CHECK(dot(d.beta_star[0], v2(1, 1)) == 0);

    CHECK_THROWS_AS(dual_decomposition(Cone({v2(1, 1), v2(2, 2)})), domain_error);
}

TEST_CASE("dual_decomposition duality relations hold on random cones") {
    Rng rng(101);
    for (int t = 0; t < 100; ++t) {
        int g = 2 + static_cast<int>(rng.integer(0, 1));
        int r = 1 + static_cast<int>(rng.integer(0, g - 1));
        std::vector<Vec> gens;
        for (int i = 0; i < r; ++i) gens.push_back(rng.rat_vector(g, 5));
        if (rank(gens, g) != r) continue;
        auto d = dual_decomposition(Cone(gens));
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j)
                CHECK(dot(gens[static_cast<size_t>(i)], d.alpha_star[static_cast<size_t>(j)]) ==
                      (i == j ? 1 : 0));
        for (const auto& b : d.beta_star)
            for (const auto& a : gens) CHECK(dot(a, b) == 0);
        CHECK(static_cast<int>(d.beta_star.size()) == g - r);
    }
}

TEST_CASE("lex_sign examples") {
    CHECK(lex_sign(v2(3, 1), v2(1, 0), kFib) == 1);
    CHECK(lex_sign(v2(0, 0), v2(1, 0), kFib) == 0);
    // <x,v> = 0, <x, Q^T v> = 1 -> +1
    CHECK(lex_sign(v2(0, 1), v2(1, 0), kFib) == 1);
}

TEST_CASE("lex trichotomy and antisymmetry") {
    Rng rng(7);
    for (int t = 0; t < 400; ++t) {
        int g = 2 + static_cast<int>(rng.integer(0, 1));
        Mat Q = rng.random_irreducible_companion(g);
        Vec x = rng.rat_vector(g, 9);
        Vec v = rng.rat_vector(g, 9);
        int s = lex_sign(x, v, Q);
        CHECK(s != 0);
        CHECK(lex_sign(-x, v, Q) == -s);
    }
}

TEST_CASE("in_q_closure examples") {
    Cone quadrant({v2(1, 0), v2(0, 1)});
    QClosureTester t(quadrant, kFib);
    CHECK(t.contains(v2(1, 1)));   // interior
    CHECK(t.contains(v2(1, 0)));   // boundary ray picked up by the lex test
    CHECK(!t.contains(v2(-1, 0))); // first lex entry negative
    CHECK(!t.contains(v2(0, 0)));  // full-dim closure misses the origin

    // r < g: empty except for membership of 0 in the r = 0 convention;
    // with one generator no point passes.
    QClosureTester ray(Cone({v2(1, 1)}), kFib);
    CHECK(!ray.contains(v2(1, 1)));
    CHECK(!ray.contains(v2(0, 0)));
}

TEST_CASE("boundary rays split between adjacent cones") {
    // wall x_2 = 0 between the upper and lower half is assigned to exactly
    // one of the two adjacent quadrant closures
    QClosureTester upper(Cone({v2(1, 0), v2(0, 1)}), kFib);
    QClosureTester lower(Cone({v2(1, 0), v2(0, -1)}), kFib);
    Vec wall = v2(5, 0);
    int count = (upper.contains(wall) ? 1 : 0) + (lower.contains(wall) ? 1 : 0);
    CHECK(count == 1);
}

TEST_CASE("scaling invariance of membership") {
    Rng rng(13);
    for (int t = 0; t < 50; ++t) {
        int g = 2 + static_cast<int>(rng.integer(0, 1));
        Mat Q = rng.random_irreducible_companion(g);
        std::vector<Vec> gens;
        for (int i = 0; i < g; ++i) gens.push_back(rng.int_vector(g, 4));
        Cone c(gens);
        if (!c.full_dimensional()) continue;
        auto scaled = gens;
        scaled[0] = Rat(1 + rng.integer(1, 7)) * scaled[0];
        QClosureTester t1(c, Q, false), t2(Cone(scaled), Q, false);
        for (int s = 0; s < 10; ++s) {
            Vec x = rng.int_vector(g, 9);
            CHECK(t1.contains(x) == t2.contains(x));
        }
    }
}

TEST_CASE("equivariance under SL_g(Z)") {
    Rng rng(17);
    int done = 0;
    while (done < 60) {
        int g = 2 + static_cast<int>(rng.integer(0, 1));
        Mat Q = rng.random_irreducible_companion(g);
        Mat gamma = rng.random_slg(g);
        Mat gamma_inv = *inverse(gamma);
        std::vector<Vec> gens;
        for (int i = 0; i < g; ++i) gens.push_back(rng.int_vector(g, 4));
        Cone cI(gens);
        if (!cI.full_dimensional()) continue;
        std::vector<Vec> gens_pre;
        for (const auto& a : gens) gens_pre.push_back(gamma_inv * a);
        QClosureTester conj(cI, gamma * Q * gamma_inv, false);
        QClosureTester base(Cone(gens_pre), Q, false);
        for (int s = 0; s < 10; ++s) {
            Vec x = rng.rat_vector(g, 9);
            CHECK(conj.contains(gamma * x) == base.contains(x));
        }
        ++done;
    }
}

TEST_CASE("cocycle defect: worked example") {
    std::vector<Vec> J{v2(1, 0), v2(0, 1), v2(1, 1)};
    CHECK(cocycle_defect(J, kFib, v2(2, 1)) == 0);
}

TEST_CASE("cocycle defect vanishes with duplicate vector") {
    std::vector<Vec> J{v2(1, 0), v2(1, 0), v2(0, 1)};
    Rng rng(19);
    for (int t = 0; t < 20; ++t) CHECK(cocycle_defect(J, kFib, rng.rat_vector(2, 6)) == 0);
}

TEST_CASE("cocycle defect vanishes given a positivity witness") {
    Rng rng(29);
    int trials = 0;
    while (trials < 60) {
        int g = 2 + static_cast<int>(rng.integer(0, 1));
        Mat Q = rng.random_irreducible_companion(g);
        std::vector<Vec> J;
        Vec y0(static_cast<size_t>(g), Rat(1)); // target witness
        for (int i = 0; i <= g; ++i) {
            while (true) {
                Vec a = rng.int_vector(g, 5);
                if (dot(a, y0) > 0) { J.push_back(a); break; }
            }
        }
        auto w = positivity_witness(J);
        REQUIRE(w.has_value());
        for (int s = 0; s < 10; ++s) CHECK(cocycle_defect(J, Q, rng.int_vector(g, 9)) == 0);
        ++trials;
    }
}

TEST_CASE("positivity witness feasibility") {
    auto w = positivity_witness({v2(1, 0), v2(0, 1), v2(1, 1)});
    REQUIRE(w.has_value());
    CHECK(dot(v2(1, 0), *w) >= 1);
    CHECK(!positivity_witness({v2(1, 1), v2(-1, -1)}).has_value());
    CHECK(!positivity_witness({v2(1, 0), v2(-1, 1), v2(0, -1)}).has_value());
}

TEST_CASE("numeric oracle agrees with the lex test") {
    Rng rng(31);
    int conclusive = 0, trials = 0;
    while (conclusive < 80 && trials < 2000) {
        ++trials;
        int g = 2 + static_cast<int>(rng.integer(0, 1));
        Mat Q = rng.random_irreducible_companion(g);
        std::vector<Vec> gens;
        for (int i = 0; i < g; ++i) gens.push_back(rng.int_vector(g, 4));
        Cone c(gens);
        if (!c.full_dimensional()) continue;
        Vec x = rng.int_vector(g, 9);
        auto verdict = q_closure_numeric_oracle(x, c, Q);
        if (!verdict) continue;
        QClosureTester t(c, Q, false);
        CHECK(t.contains(x) == *verdict);
        ++conclusive;
    }
    CHECK(conclusive >= 80);
}

TEST_CASE("numeric oracle sanity on interior and exterior points") {
    Cone quadrant({v2(1, 0), v2(0, 1)});
    auto v = q_closure_numeric_oracle(v2(2, 3), quadrant, kFib);
    REQUIRE(v.has_value());
    CHECK(*v);
    v = q_closure_numeric_oracle(v2(-2, -3), quadrant, kFib);
    REQUIRE(v.has_value());
    CHECK(!*v);
}
