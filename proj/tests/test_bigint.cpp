#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "braidforge/bigint.hpp"
#include "braidforge/errors.hpp"
#include "braidforge/laurent.hpp"

using braidforge::BigInt;
using braidforge::LaurentPoly;

TEST_CASE("bigint small arithmetic agrees with int64") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long long> d(-1000000, 1000000);
    for (int i = 0; i < 2000; ++i) {
        long long a = d(rng), b = d(rng);
        CHECK((BigInt(a) + BigInt(b)).to_string() == std::to_string(a + b));
        CHECK((BigInt(a) - BigInt(b)).to_string() == std::to_string(a - b));
        CHECK((BigInt(a) * BigInt(b)).to_string() == std::to_string(a * b));
        CHECK((BigInt(a) < BigInt(b)) == (a < b));
        CHECK((BigInt(a) == BigInt(b)) == (a == b));
    }
}

TEST_CASE("bigint large multiplication via known square") {
    // (10^18 + 7)^2 = 10^36 + 14*10^18 + 49
    BigInt a = BigInt::from_string("1000000000000000007");
    CHECK((a * a).to_string() == "1000000000000000014000000000000000049");
    BigInt neg = BigInt::from_string("-99999999999999999999");
    CHECK((neg * neg).to_string() == "9999999999999999999800000000000000000001");
    CHECK((neg + (-neg)).is_zero());
}

TEST_CASE("bigint string round trip") {
    for (const char* s : {"0", "1", "-1", "123456789012345678901234567890",
                          "-4294967296", "4294967295", "18446744073709551616"}) {
        CHECK(BigInt::from_string(s).to_string() == s);
    }
}

TEST_CASE("laurent basic algebra") {
    LaurentPoly t = LaurentPoly::t(1);
    LaurentPoly p = t * t - t + LaurentPoly(1);
    CHECK(p.to_string() == "t^2 - t + 1");
    CHECK(p.coeff(2).is_one());
    CHECK(p.eval_at_one().to_string() == "1");
    CHECK((p - p).is_zero());
    CHECK((p * LaurentPoly(0)).is_zero());

    LaurentPoly q = LaurentPoly::monomial(braidforge::BigInt(2), 2) -
                    LaurentPoly::monomial(braidforge::BigInt(3), 1) + LaurentPoly(2);
    CHECK(q.to_string() == "2*t^2 - 3*t + 2");
    CHECK(q.degree_span() == 2);

    LaurentPoly lau = LaurentPoly::t(-2) + LaurentPoly::t(3);
    CHECK(lau.to_string() == "t^3 + t^-2");
    CHECK(lau.min_exp() == -2);
}

TEST_CASE("laurent multiplication distributes over known product") {
    // (t - 1)(t + 1) = t^2 - 1
    LaurentPoly t = LaurentPoly::t(1);
    CHECK(((t - LaurentPoly(1)) * (t + LaurentPoly(1))).to_string() == "t^2 - 1");
}

TEST_CASE("laurent exact division") {
    LaurentPoly t = LaurentPoly::t(1);
    LaurentPoly num = LaurentPoly::t(6) - LaurentPoly(1);
    LaurentPoly den = LaurentPoly::t(2) - LaurentPoly(1);
    CHECK(num.divided_exact(den).to_string() == "t^4 + t^2 + 1");
    // Laurent shifts divide out too
    LaurentPoly shifted = num.scaled(braidforge::BigInt(1), -3);
    CHECK(shifted.divided_exact(den) == num.divided_exact(den).scaled(braidforge::BigInt(1), -3));
    CHECK_THROWS_AS((t + LaurentPoly(1)).divided_exact(t - LaurentPoly(1)),
                    braidforge::InternalError);
}

TEST_CASE("laurent text form parses back") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> coeff(-9, 9), exp(-5, 8);
    for (int i = 0; i < 300; ++i) {
        LaurentPoly p;
        for (int k = 0; k < 5; ++k)
            p += LaurentPoly::monomial(braidforge::BigInt(coeff(rng)), exp(rng));
        if (p.is_zero()) continue;
        CHECK(LaurentPoly::parse(p.to_string()) == p);
    }
    CHECK(LaurentPoly::parse("2*t^2 - 3*t + 2").to_string() == "2*t^2 - 3*t + 2");
}
