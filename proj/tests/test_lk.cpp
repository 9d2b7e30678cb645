#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "braidforge/garside.hpp"
#include "braidforge/lk.hpp"
#include "test_util.hpp"

using namespace braidforge;

TEST_CASE("lk of the empty word is the identity") {
    CHECK(lk_matrix(BraidWord(3)) == PolyMatrix2::identity(3));
    CHECK(lk_matrix(BraidWord(5)) == PolyMatrix2::identity(10));
}

TEST_CASE("lk satisfies the defining relations") {
    for (int n = 3; n <= 6; ++n) {
        for (int i = 1; i + 1 < n; ++i) {
            BraidWord aba(n, {i, i + 1, i});
            BraidWord bab(n, {i + 1, i, i + 1});
            CHECK(lk_matrix(aba) == lk_matrix(bab));
        }
        for (int i = 1; i < n; ++i)
            for (int j = i + 2; j < n; ++j) {
                CHECK(lk_matrix(BraidWord(n, {i, j})) == lk_matrix(BraidWord(n, {j, i})));
            }
    }
}

TEST_CASE("lk inverts letters correctly") {
    // generator_inverse self-verifies at construction; exercise words too
    std::mt19937 rng(41);
    for (int trial = 0; trial < 30; ++trial) {
        BraidWord w = testutil::random_word(rng, 5, 8);
        CHECK(lk_matrix(concat(w, invert(w))) == PolyMatrix2::identity(10));
    }
}

TEST_CASE("lk distinguishes distinct short elements") {
    CHECK(lk_matrix(parse_word("B3: 1")) != lk_matrix(parse_word("B3: 2")));
    CHECK(lk_matrix(parse_word("B4: 1 2 3")) != lk_matrix(parse_word("B4: 3 2 1")));
    CHECK(lk_matrix(parse_word("B3: 1 2 1")) == lk_matrix(parse_word("B3: 2 1 2")));
}

TEST_CASE("lk agrees with the normal form on random mutated pairs") {
    std::mt19937 rng(43);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 4 + trial % 2;
        BraidWord a = testutil::random_word(rng, n, 15);
        BraidWord b = testutil::mutate_equivalent(rng, a, 6);
        bool nf_eq = equal(a, b);
        bool lk_eq = lk_matrix(a) == lk_matrix(b);
        CHECK(nf_eq == lk_eq);
        CHECK(nf_eq);  // mutations preserve the element
        BraidWord c = concat(a, BraidWord(n, {1}));
        CHECK_FALSE(equal(a, c));
        CHECK(lk_matrix(a) != lk_matrix(c));
    }
}

TEST_CASE("lk agrees with the normal form up to six strands and length 40") {
    std::mt19937 rng(59);
    for (int trial = 0; trial < 10; ++trial) {
        BraidWord a = testutil::random_word(rng, 6, 40);
        BraidWord b = testutil::mutate_equivalent(rng, a, 10);
        CHECK(equal(a, b));
        CHECK(lk_matrix(a) == lk_matrix(b));
        BraidWord c = concat(a, BraidWord(6, {3}));
        CHECK((lk_matrix(a) == lk_matrix(c)) == equal(a, c));
    }
}

TEST_CASE("lk capacity bound") {
    CHECK_THROWS_AS(lk_matrix(BraidWord(kMaxLkStrands + 1)), CapacityError);
}
