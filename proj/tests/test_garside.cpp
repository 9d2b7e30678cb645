#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "braidforge/garside.hpp"
#include "test_util.hpp"

using namespace braidforge;

TEST_CASE("normal form of the half twist and the identity") {
    NormalForm nf = normal_form(parse_word("B3: 1 2 1"));
    CHECK(nf.inf == 1);
    CHECK(nf.factors.empty());
    CHECK(nf_to_string(nf) == "inf=1; factors=[]");

    NormalForm id = normal_form(parse_word("B3: 1 -1"));
    CHECK(id.inf == 0);
    CHECK(id.factors.empty());

    CHECK(normal_form(parse_word("B3: 2 1 2")) == nf);

    NormalForm single = normal_form(parse_word("B3: 2 1"));
    CHECK(single.inf == 0);
    REQUIRE(single.factors.size() == 1);
    CHECK(nf_to_string(single) == "inf=0; factors=[2 3 1]");

    NormalForm neg = normal_form(parse_word("B3: -1"));
    CHECK(neg.inf == -1);
    REQUIRE(neg.factors.size() == 1);
}

TEST_CASE("basic equalities and inequalities") {
    CHECK(equal(parse_word("B3: 1 2 1"), parse_word("B3: 2 1 2")));
    CHECK(equal(parse_word("B5: 1 3"), parse_word("B5: 3 1")));
    CHECK_FALSE(equal(parse_word("B3: 1"), parse_word("B3: 2")));
    CHECK_THROWS_AS(equal(BraidWord(3), BraidWord(4)), ParamError);
}

TEST_CASE("delta conjugation sends sigma_i to sigma_(n-i)") {
    for (int n = 2; n <= 7; ++n) {
        BraidWord delta = delta_word(1, n - 1, n);
        for (int i = 1; i < n; ++i) {
            BraidWord lhs = concat(concat(invert(delta), BraidWord(n, {i})), delta);
            CHECK(equal(lhs, BraidWord(n, {n - i})));
        }
    }
}

TEST_CASE("normal form is canonical under equivalent mutations") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        BraidWord w = testutil::random_word(rng, 5, 25);
        NormalForm nf = normal_form(w);
        CHECK(normal_form(free_reduce(w)) == nf);
        BraidWord mutated = testutil::mutate_equivalent(rng, w, 6);
        CHECK(normal_form(mutated) == nf);
    }
}

TEST_CASE("normal form is idempotent through nf_to_word") {
    std::mt19937 rng(19);
    for (int trial = 0; trial < 150; ++trial) {
        BraidWord w = testutil::random_word(rng, 6, 30);
        NormalForm nf = normal_form(w);
        CHECK(normal_form(nf_to_word(nf)) == nf);
    }
}

TEST_CASE("normal form factors are valid and left weighted") {
    std::mt19937 rng(23);
    const Perm omega = Perm::reversal(6);
    for (int trial = 0; trial < 100; ++trial) {
        BraidWord w = testutil::random_word(rng, 6, 30);
        NormalForm nf = normal_form(w);
        for (const auto& f : nf.factors) {
            CHECK_FALSE(f.is_identity());
            CHECK(f != omega);
        }
        for (size_t i = 0; i + 1 < nf.factors.size(); ++i) {
            Perm left_inv = nf.factors[i].inverse();
            for (int d : nf.factors[i + 1].descents()) CHECK(left_inv.has_descent(d));
        }
    }
}

TEST_CASE("equal is a congruence on sampled triples") {
    std::mt19937 rng(29);
    for (int trial = 0; trial < 60; ++trial) {
        BraidWord a = testutil::random_word(rng, 4, 12);
        BraidWord b = testutil::mutate_equivalent(rng, a, 5);
        BraidWord c = testutil::random_word(rng, 4, 10);
        REQUIRE(equal(a, b));
        CHECK(equal(concat(a, c), concat(b, c)));
        CHECK(equal(concat(c, a), concat(c, b)));
    }
}

TEST_CASE("permutation braid words are reduced and correct") {
    // every permutation of S_5, exhaustively
    std::vector<int> image{1, 2, 3, 4, 5};
    do {
        Perm p = Perm::from_one_line(image);
        BraidWord w = permutation_braid_word(p, 5);
        CHECK(w.size() == p.inversions());
        CHECK(underlying_permutation(w) == p);
        for (int v : w.letters()) CHECK(v > 0);
        // a permutation braid is its own single-factor normal form
        NormalForm nf = normal_form(w);
        if (p.is_identity()) {
            CHECK(nf == NormalForm{5, 0, {}});
        } else if (p == Perm::reversal(5)) {
            CHECK(nf == NormalForm{5, 1, {}});
        } else {
            CHECK(nf.inf == 0);
            REQUIRE(nf.factors.size() == 1);
            CHECK(nf.factors[0] == p);
        }
    } while (std::next_permutation(image.begin(), image.end()));
}

TEST_CASE("two-strand words normalize correctly") {
    NormalForm neg = normal_form(parse_word("B2: -1"));
    CHECK(neg.inf == -1);
    CHECK(neg.factors.empty());
    CHECK(normal_form(parse_word("B2: -1 -1 1")) == normal_form(parse_word("B2: -1")));
    CHECK(equal(parse_word("B2: 1 -1 1"), parse_word("B2: 1")));
    CHECK_FALSE(equal(parse_word("B2: -1"), parse_word("B2: 1")));
    std::mt19937 rng(43);
    for (int trial = 0; trial < 50; ++trial) {
        BraidWord w = testutil::random_word(rng, 2, 12);
        // B_2 is infinite cyclic: the exponent sum decides everything
        long long e = exponent_sum(w);
        BraidWord canon = power(BraidWord(2, {1}), e);
        CHECK(equal(w, canon));
        NormalForm nf = normal_form(w);
        CHECK(nf.inf == e);
        CHECK(nf.factors.empty());
    }
}

TEST_CASE("is_central_power recognizes full twists") {
    CHECK(is_central_power(parse_word("B3: 1 2 1 2 1 2")));
    CHECK_FALSE(is_central_power(parse_word("B3: 1")));
    CHECK(is_central_power(BraidWord(3)));
    for (int q = 2; q <= 5; ++q)
        CHECK(is_central_power(power(pi_word(1, q - 1, q), q)));
    for (int q = 3; q <= 5; ++q) CHECK_FALSE(is_central_power(pi_word(1, q - 1, q)));
}

TEST_CASE("inverse words cancel to the identity") {
    std::mt19937 rng(37);
    for (int trial = 0; trial < 100; ++trial) {
        BraidWord w = testutil::random_word(rng, 5, 20);
        NormalForm nf = normal_form(concat(w, invert(w)));
        CHECK(nf == NormalForm{5, 0, {}});
    }
}

TEST_CASE("normal form copes with long words") {
    // budget: 5000 letters at 12 strands well under a second; allow slack
    // for slow CI machines but catch order-of-magnitude regressions
    std::mt19937 rng(41);
    BraidWord w = testutil::random_word(rng, 12, 5000);
    auto t0 = std::chrono::steady_clock::now();
    NormalForm nf = normal_form(w);
    double sec =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    CHECK(sec < 5.0);
    CHECK(normal_form(nf_to_word(nf)) == nf);
    MESSAGE("5000-letter normal form took ", sec, "s, canonical length ",
            nf_to_word(nf).size());
}
