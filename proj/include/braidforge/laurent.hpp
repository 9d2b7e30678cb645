#pragma once

#include <map>
#include <string>
#include <string_view>

#include "braidforge/bigint.hpp"

namespace braidforge {

// Exact one-variable integer Laurent polynomial in t. No zero coefficients
// are ever stored; the zero polynomial has an empty term map.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long long c);  // NOLINT: constant polynomial
    static LaurentPoly monomial(BigInt c, int exp);
    static LaurentPoly t(int exp = 1) { return monomial(BigInt(1), exp); }

    bool is_zero() const { return terms_.empty(); }
    int min_exp() const;
    int max_exp() const;
    int degree_span() const { return is_zero() ? 0 : max_exp() - min_exp(); }
    BigInt coeff(int exp) const;
    BigInt eval_at_one() const;
    const std::map<int, BigInt>& terms() const { return terms_; }

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    // multiply by c * t^exp
    LaurentPoly scaled(const BigInt& c, int exp) const;

    // exact division; the divisor must have a +-1 leading coefficient and
    // must divide exactly, otherwise InternalError
    LaurentPoly divided_exact(const LaurentPoly& divisor) const;

    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    // "2*t^2 - 3*t + 2": descending exponents, explicit signs, '*' between a
    // non-unit coefficient and t, exponent suppressed for t^1 and t^0
    std::string to_string() const;
    static LaurentPoly parse(std::string_view text);

private:
    std::map<int, BigInt> terms_;

    void add_term(int exp, const BigInt& c);
};

}  // namespace braidforge
