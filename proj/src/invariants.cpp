#include "braidforge/invariants.hpp"

#include <cstdlib>
#include <numeric>

#include "braidforge/errors.hpp"

namespace braidforge {

PolyMatrix PolyMatrix::identity(int dim) {
    PolyMatrix m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = LaurentPoly(1);
    return m;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.dim() != b.dim()) throw InternalError("matrix dimension mismatch");
    PolyMatrix r(a.dim());
    for (int i = 0; i < a.dim(); ++i)
        for (int k = 0; k < a.dim(); ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (int j = 0; j < a.dim(); ++j) {
                if (b.at(k, j).is_zero()) continue;
                r.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        }
    return r;
}

// Laplace expansion with memoization on column subsets: row popcount(mask)-1
// is expanded over the columns in mask. Exponential in dim, which stays
// small here.
LaurentPoly PolyMatrix::determinant() const {
    const int d = dim_;
    if (d == 0) return LaurentPoly(1);
    std::vector<LaurentPoly> dp(size_t(1) << d);
    dp[0] = LaurentPoly(1);
    for (unsigned mask = 1; mask < (1u << d); ++mask) {
        const int row = __builtin_popcount(mask) - 1;
        LaurentPoly acc;
        int parity = 0;
        for (int j = 0; j < d; ++j) {
            if (!(mask & (1u << j))) continue;
            const LaurentPoly& e = at(row, j);
            if (!e.is_zero()) {
                LaurentPoly term = e * dp[mask & ~(1u << j)];
                if (parity % 2)
                    acc -= term;
                else
                    acc += term;
            }
            ++parity;
        }
        dp[mask] = std::move(acc);
    }
    return dp[(1u << d) - 1];
}

// Burau convention (fixed here once): the unreduced representation sends
// sigma_i to the identity with the 2x2 block [[1-t, t],[1, 0]] at rows/cols
// (i, i+1); restricting the row action to the invariant hyperplane spanned
// by f_i = e_i - e_{i+1} gives, for sigma_i:
//   f_{i-1} -> f_{i-1} + t f_i,   f_i -> -t f_i,   f_{i+1} -> f_i + f_{i+1}
// Right-multiplying one letter at a time only rewrites column i.
PolyMatrix reduced_burau(const BraidWord& w) {
    const int n = w.strands();
    if (n > kMaxBurauStrands)
        throw CapacityError("reduced_burau supports at most " +
                            std::to_string(kMaxBurauStrands) + " strands");
    const int d = n - 1;
    PolyMatrix m = PolyMatrix::identity(d);
    const LaurentPoly t = LaurentPoly::t(1);
    const LaurentPoly tinv = LaurentPoly::t(-1);
    for (int v : w.letters()) {
        const int i = std::abs(v);  // 1-based generator; column i-1 changes
        const int c = i - 1;
        for (int r = 0; r < d; ++r) {
            LaurentPoly nc;
            if (v > 0) {
                // new col = t*col_{i-1} - t*col_i + col_{i+1}
                if (c - 1 >= 0) nc += t * m.at(r, c - 1);
                nc -= t * m.at(r, c);
                if (c + 1 < d) nc += m.at(r, c + 1);
            } else {
                // new col = col_{i-1} - t^{-1}*col_i + t^{-1}*col_{i+1}
                if (c - 1 >= 0) nc += m.at(r, c - 1);
                nc -= tinv * m.at(r, c);
                if (c + 1 < d) nc += tinv * m.at(r, c + 1);
            }
            m.at(r, c) = std::move(nc);
        }
    }
    return m;
}

AlexanderResult alexander(const BraidWord& w) {
    const int n = w.strands();
    if (component_count(w) != 1)
        throw ParamError("alexander: closure is not a knot (component count " +
                         std::to_string(component_count(w)) + ")");
    PolyMatrix m = reduced_burau(w);
    for (int i = 0; i < m.dim(); ++i) m.at(i, i) -= LaurentPoly(1);
    LaurentPoly det = m.determinant();
    if (det.is_zero()) throw InternalError("alexander: vanishing Burau determinant");

    // det = unit * Delta(t) * (1 + t + ... + t^{n-1}); divide exactly
    LaurentPoly cyc;
    for (int k = 0; k < n; ++k) cyc += LaurentPoly::t(k);
    LaurentPoly quot = det.divided_exact(cyc);

    // normalize: lowest exponent 0, positive leading coefficient
    AlexanderResult res;
    res.poly = quot.scaled(BigInt(1), -quot.min_exp());
    if (res.poly.coeff(res.poly.max_exp()).sign() < 0)
        res.poly = -res.poly;
    res.degree_span = res.poly.degree_span();
    res.monic = res.poly.coeff(res.poly.max_exp()).is_one();
    return res;
}

int component_count(const BraidWord& w) {
    return underlying_permutation(w).cycle_count();
}

long long positive_braid_genus(const BraidWord& w) {
    for (int v : w.letters())
        if (v < 0) throw ParamError("positive_braid_genus requires an all-positive word");
    if (component_count(w) != 1)
        throw ParamError("positive_braid_genus: closure is not a knot");
    const long long c = w.size(), n = w.strands();
    if ((c - n + 1) % 2 != 0)
        throw InternalError("positive braid knot with odd crossing defect");
    return (c - n + 1) / 2;
}

long long surface_slope(long long k, long long q, long long m) {
    if (q < 2 || k < 2 || m < 1 || m > q - 1 || std::gcd(q, m) != 1)
        throw ParamError("surface_slope requires q>=2, k>=2, 1<=m<=q-1, gcd(q,m)=1");
    return k * q * q + m * q - m * m;
}

}  // namespace braidforge
