#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "braidforge/invariants.hpp"
#include "braidforge/ttk.hpp"
#include "test_util.hpp"

using namespace braidforge;

TEST_CASE("reduced burau basics") {
    CHECK(reduced_burau(BraidWord(3)) == PolyMatrix::identity(2));
    CHECK(reduced_burau(parse_word("B3: 1 2 1")) == reduced_burau(parse_word("B3: 2 1 2")));
    std::mt19937 rng(47);
    for (int trial = 0; trial < 50; ++trial) {
        BraidWord w = testutil::random_word(rng, 5, 12);
        CHECK(reduced_burau(concat(w, invert(w))) == PolyMatrix::identity(4));
        BraidWord u = testutil::random_word(rng, 5, 8);
        CHECK(reduced_burau(concat(w, u)) == reduced_burau(w) * reduced_burau(u));
    }
}

TEST_CASE("alexander of unknot and trefoil") {
    AlexanderResult unknot = alexander(parse_word("B2: 1"));
    CHECK(unknot.poly.to_string() == "1");
    CHECK(unknot.monic);
    CHECK(unknot.degree_span == 0);

    AlexanderResult trefoil = alexander(parse_word("B2: 1 1 1"));
    CHECK(trefoil.poly.to_string() == "t^2 - t + 1");
    CHECK(trefoil.monic);
    CHECK(trefoil.degree_span == 2);
    CHECK(trefoil.poly == testutil::torus_alexander(2, 3));
}

TEST_CASE("alexander of the non-fibered counterexample") {
    // (sigma_2 sigma_1)^4 sigma_1^{-4}: the 5-crossing twist knot
    AlexanderResult a = alexander(parse_word("B3: 2 1 2 1 2 1 2 1 -1 -1 -1 -1"));
    CHECK(a.poly.to_string() == "2*t^2 - 3*t + 2");
    CHECK_FALSE(a.monic);
    CHECK(a.degree_span == 2);
    // the geometrically equivalent word carries the same invariants
    AlexanderResult b = alexander(parse_word("B3: 2 2 1 1 2 -1"));
    CHECK(a == b);
    CHECK(exponent_sum(parse_word("B3: 2 1 2 1 2 1 2 1 -1 -1 -1 -1")) ==
          exponent_sum(parse_word("B3: 2 2 1 1 2 -1")));
}

TEST_CASE("alexander rejects links") {
    CHECK_THROWS_AS(alexander(parse_word("B2: 1 1")), ParamError);
    CHECK_THROWS_AS(alexander(BraidWord(4)), ParamError);
}

TEST_CASE("alexander conjugation invariance and symmetry") {
    std::mt19937 rng(53);
    std::uniform_int_distribution<int> len(10, 17);
    int done = 0;
    while (done < 25) {
        // cycle-count parity ties to word-length parity, so vary the length
        BraidWord w = testutil::random_word(rng, 4, len(rng));
        if (component_count(w) != 1) continue;
        ++done;
        AlexanderResult a = alexander(w);
        BraidWord c = testutil::random_word(rng, 4, 8);
        BraidWord conj = concat(concat(c, w), invert(c));
        CHECK(alexander(conj) == a);
        CHECK(component_count(conj) == component_count(w));
        CHECK(exponent_sum(conj) == exponent_sum(w));
        // palindromic coefficients, |Delta(1)| = 1
        const auto& p = a.poly;
        for (int e = 0; e <= a.degree_span; ++e)
            CHECK(p.coeff(e) == p.coeff(a.degree_span - e));
        CHECK(p.eval_at_one().is_unit());
    }
}

TEST_CASE("torus knot closed form oracle") {
    for (int q = 2; q <= 7; ++q)
        for (int p = q + 1; p <= 7; ++p) {
            if (std::gcd(p, q) != 1) continue;
            BraidWord torus = ttk_braid({p, q, 1, 0});
            AlexanderResult a = alexander(torus);
            CHECK(a.poly == testutil::torus_alexander(p, q));
            CHECK(a.monic);
            long long genus = positive_braid_genus(torus);
            CHECK(genus == (long long)(p - 1) * (q - 1) / 2);
            CHECK(2 * genus == a.degree_span);
        }
}

TEST_CASE("positive fiberedness witnesses have monic Alexander of span 2g") {
    for (int q = 2; q <= 5; ++q)
        for (int r = 1; r < q; ++r)
            for (long long n = 1; n <= 2; ++n)
                for (long long p = n * q + 1; p <= n * q + 3; ++p) {
                    BraidWord witness = positive_word_general(p, q, r, n);
                    if (component_count(witness) != 1) continue;
                    AlexanderResult a = alexander(witness);
                    CHECK(a.monic);
                    CHECK(a.degree_span == 2 * positive_braid_genus(witness));
                }
}

TEST_CASE("component count") {
    CHECK(component_count(parse_word("B2: 1 1")) == 2);
    CHECK(component_count(parse_word("B5: 4 3 2 1 4 3 2 1 4 3 2 1 -1 -1")) == 1);
    CHECK(component_count(BraidWord(4)) == 4);
}

TEST_CASE("positive braid genus") {
    CHECK(positive_braid_genus(parse_word("B2: 1 1 1")) == 1);
    CHECK(positive_braid_genus(parse_word("B2: 1")) == 0);
    for (int p : {4, 5, 7, 8}) {
        if (std::gcd(p, 3) != 1) continue;
        BraidWord w = power(rev(pi_word(1, 2, 3)), p);
        CHECK(positive_braid_genus(w) == p - 1);
    }
    CHECK_THROWS_AS(positive_braid_genus(parse_word("B2: -1")), ParamError);
    CHECK_THROWS_AS(positive_braid_genus(parse_word("B2: 1 1")), ParamError);
}

TEST_CASE("surface slope formula and symmetry") {
    CHECK(surface_slope(2, 3, 1) == 20);
    CHECK(surface_slope(2, 5, 2) == 56);
    for (long long k = 2; k <= 5; ++k)
        for (long long q = 2; q <= 9; ++q)
            for (long long m = 1; m < q; ++m) {
                if (std::gcd(q, m) != 1) continue;
                long long mm = q - m;
                CHECK(surface_slope(k, q, m) == k * q * q + mm * q - mm * mm);
            }
    CHECK_THROWS_AS(surface_slope(1, 3, 1), ParamError);
    CHECK_THROWS_AS(surface_slope(2, 4, 2), ParamError);
    CHECK_THROWS_AS(surface_slope(2, 3, 3), ParamError);
}
