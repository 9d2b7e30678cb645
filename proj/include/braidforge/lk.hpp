#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "braidforge/bigint.hpp"
#include "braidforge/braid.hpp"

namespace braidforge {

// Exact integer Laurent polynomial in two formal variables q and t.
class Laurent2 {
public:
    Laurent2() = default;
    Laurent2(long long c);  // NOLINT: constant
    static Laurent2 monomial(BigInt c, int qexp, int texp);

    bool is_zero() const { return terms_.empty(); }

    Laurent2 operator-() const;
    Laurent2& operator+=(const Laurent2& o);
    Laurent2& operator-=(const Laurent2& o);
    friend Laurent2 operator+(Laurent2 a, const Laurent2& b) { return a += b; }
    friend Laurent2 operator-(Laurent2 a, const Laurent2& b) { return a -= b; }
    friend Laurent2 operator*(const Laurent2& a, const Laurent2& b);
    Laurent2& operator*=(const Laurent2& o) { return *this = *this * o; }
    Laurent2 scaled(const BigInt& c, int qexp, int texp) const;

    bool operator==(const Laurent2& o) const { return terms_ == o.terms_; }
    bool operator!=(const Laurent2& o) const { return !(*this == o); }

    std::string to_string() const;  // debugging aid

private:
    std::map<std::pair<int, int>, BigInt> terms_;  // (q exp, t exp) -> coeff

    void add_term(int qe, int te, const BigInt& c);
};

// Square matrix over Laurent2.
class PolyMatrix2 {
public:
    PolyMatrix2() = default;
    explicit PolyMatrix2(int dim) : dim_(dim), m_(size_t(dim) * dim) {}
    static PolyMatrix2 identity(int dim);

    int dim() const { return dim_; }
    Laurent2& at(int r, int c) { return m_[size_t(r) * dim_ + c]; }
    const Laurent2& at(int r, int c) const { return m_[size_t(r) * dim_ + c]; }

    friend PolyMatrix2 operator*(const PolyMatrix2& a, const PolyMatrix2& b);
    bool operator==(const PolyMatrix2& o) const { return dim_ == o.dim_ && m_ == o.m_; }
    bool operator!=(const PolyMatrix2& o) const { return !(*this == o); }

private:
    int dim_ = 0;
    std::vector<Laurent2> m_;
};

// Largest strand count accepted by lk_matrix; the matrix dimension is
// n(n-1)/2 and the cost grows steeply past this.
inline constexpr int kMaxLkStrands = 10;

// Lawrence-Krammer representation of a braid word: faithful for every n, so
// matrix equality decides the word problem independently of normal forms.
PolyMatrix2 lk_matrix(const BraidWord& w);

}  // namespace braidforge
