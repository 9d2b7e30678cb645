#pragma once

#include <vector>

#include "braidforge/braid.hpp"
#include "braidforge/laurent.hpp"

namespace braidforge {

// Square matrix over one-variable Laurent polynomials.
class PolyMatrix {
public:
    PolyMatrix() = default;
    explicit PolyMatrix(int dim) : dim_(dim), m_(size_t(dim) * dim) {}
    static PolyMatrix identity(int dim);

    int dim() const { return dim_; }
    LaurentPoly& at(int r, int c) { return m_[size_t(r) * dim_ + c]; }
    const LaurentPoly& at(int r, int c) const { return m_[size_t(r) * dim_ + c]; }

    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
    bool operator==(const PolyMatrix& o) const { return dim_ == o.dim_ && m_ == o.m_; }
    bool operator!=(const PolyMatrix& o) const { return !(*this == o); }

    LaurentPoly determinant() const;

private:
    int dim_ = 0;
    std::vector<LaurentPoly> m_;
};

// Hard strand-count bound for the invariants layer: the determinant step is
// exponential in the matrix dimension.
inline constexpr int kMaxBurauStrands = 16;

// Reduced Burau representation, an (n-1)x(n-1) matrix over Z[t, t^-1].
// Multiplicative in concatenation: burau(uv) = burau(u) * burau(v).
PolyMatrix reduced_burau(const BraidWord& w);

struct AlexanderResult {
    LaurentPoly poly;  // lowest exponent 0, positive leading coefficient
    bool monic = false;
    int degree_span = 0;

    bool operator==(const AlexanderResult& o) const {
        return poly == o.poly && monic == o.monic && degree_span == o.degree_span;
    }
};

// Alexander polynomial of the closure of w, which must be a knot. Computed
// as det(burau(w) - I) * (1-t)/(1-t^n), then normalized so golden values are
// deterministic.
AlexanderResult alexander(const BraidWord& w);

// number of link components of the closure (cycles of the permutation)
int component_count(const BraidWord& w);

// Seifert genus of the closure of an all-positive braid word whose closure
// is a knot: (length - strands + 1) / 2
long long positive_braid_genus(const BraidWord& w);

// k q^2 + m q - m^2, the common boundary slope of the conjugate family;
// requires q >= 2, k >= 2, 1 <= m <= q-1, gcd(q,m) = 1
long long surface_slope(long long k, long long q, long long m);

}  // namespace braidforge
