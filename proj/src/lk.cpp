#include "braidforge/lk.hpp"

#include <cstdlib>

#include "braidforge/errors.hpp"

namespace braidforge {

Laurent2::Laurent2(long long c) {
    if (c != 0) terms_[{0, 0}] = BigInt(c);
}

Laurent2 Laurent2::monomial(BigInt c, int qexp, int texp) {
    Laurent2 p;
    if (!c.is_zero()) p.terms_[{qexp, texp}] = std::move(c);
    return p;
}

void Laurent2::add_term(int qe, int te, const BigInt& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(std::make_pair(qe, te), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Laurent2 Laurent2::operator-() const {
    Laurent2 r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

Laurent2& Laurent2::operator+=(const Laurent2& o) {
    for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, c);
    return *this;
}

Laurent2& Laurent2::operator-=(const Laurent2& o) {
    for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, -c);
    return *this;
}

Laurent2 operator*(const Laurent2& a, const Laurent2& b) {
    Laurent2 r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            r.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
    return r;
}

Laurent2 Laurent2::scaled(const BigInt& c, int qexp, int texp) const {
    Laurent2 r;
    if (c.is_zero()) return r;
    for (const auto& [e, k] : terms_) r.terms_[{e.first + qexp, e.second + texp}] = k * c;
    return r;
}

std::string Laurent2::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (const auto& [e, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += c.to_string() + "*q^" + std::to_string(e.first) + "*t^" +
             std::to_string(e.second);
    }
    return s;
}

PolyMatrix2 PolyMatrix2::identity(int dim) {
    PolyMatrix2 m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = Laurent2(1);
    return m;
}

PolyMatrix2 operator*(const PolyMatrix2& a, const PolyMatrix2& b) {
    if (a.dim() != b.dim()) throw InternalError("matrix dimension mismatch");
    PolyMatrix2 r(a.dim());
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

namespace {

int pair_index(int i, int j, int n) {
    // (i,j) with 1 <= i < j <= n, lexicographic
    return (i - 1) * n - i * (i + 1) / 2 + j - 1;
}

// Column (i,j) of the matrix of sigma_k: the image of basis vector v_{i,j}.
// This is the standard Lawrence-Krammer action on forked pairs.
void fill_generator_column(PolyMatrix2& g, int n, int k, int i, int j) {
    const int col = pair_index(i, j, n);
    auto set = [&](int ri, int rj, Laurent2 v) {
        g.at(pair_index(ri, rj, n), col) += std::move(v);
    };
    const Laurent2 one(1);
    if (k < i - 1 || k > j) {
        set(i, j, one);
    } else if (k == i - 1) {
        set(i - 1, j, one);
        set(i, j, Laurent2(1) - Laurent2::monomial(BigInt(1), 1, 0));  // 1-q
    } else if (k == i && k < j - 1) {
        // t q (q-1) v_{i,i+1} + q v_{i+1,j}
        set(i, i + 1, Laurent2::monomial(BigInt(1), 2, 1) - Laurent2::monomial(BigInt(1), 1, 1));
        set(i + 1, j, Laurent2::monomial(BigInt(1), 1, 0));
    } else if (k == i && k == j - 1) {
        set(i, j, Laurent2::monomial(BigInt(1), 2, 1));  // t q^2
    } else if (i < k && k < j - 1) {
        // v_{i,j} + t q^{k-i} (q-1)^2 v_{k,k+1}
        set(i, j, one);
        Laurent2 sq = Laurent2::monomial(BigInt(1), 2, 0) -
                      Laurent2::monomial(BigInt(2), 1, 0) + Laurent2(1);  // (q-1)^2
        set(k, k + 1, sq.scaled(BigInt(1), k - i, 1));
    } else if (k == j - 1 && i < j - 1) {
        // v_{i,j-1} + t q^{j-i} (q-1) v_{j-1,j}
        set(i, j - 1, one);
        set(j - 1, j,
            Laurent2::monomial(BigInt(1), j - i + 1, 1) -
                Laurent2::monomial(BigInt(1), j - i, 1));
    } else {  // k == j
        set(i, j, Laurent2(1) - Laurent2::monomial(BigInt(1), 1, 0));
        set(i, j + 1, Laurent2::monomial(BigInt(1), 1, 0));
    }
}

PolyMatrix2 generator_matrix(int n, int k) {
    const int d = n * (n - 1) / 2;
    PolyMatrix2 g(d);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) fill_generator_column(g, n, k, i, j);
    return g;
}

// The LK image of a generator satisfies (A - tq^2)(A - 1)(A + q) = 0, so the
// inverse is a quadratic in A divided by the unit -tq^3. The result is
// verified against the identity before use.
PolyMatrix2 generator_inverse(const PolyMatrix2& g) {
    const int d = g.dim();
    const Laurent2 e1 = Laurent2::monomial(BigInt(1), 2, 1) + Laurent2(1) -
                        Laurent2::monomial(BigInt(1), 1, 0);
    const Laurent2 e2 = Laurent2::monomial(BigInt(1), 2, 1) -
                        Laurent2::monomial(BigInt(1), 3, 1) -
                        Laurent2::monomial(BigInt(1), 1, 0);
    PolyMatrix2 g2 = g * g;
    PolyMatrix2 inv(d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            Laurent2 v = g2.at(i, j) - e1 * g.at(i, j);
            if (i == j) v += e2;
            inv.at(i, j) = v.scaled(BigInt(-1), -3, -1);  // divide by -t q^3
        }
    if (g * inv != PolyMatrix2::identity(d))
        throw InternalError("lk generator inverse failed verification");
    return inv;
}

}  // namespace

PolyMatrix2 lk_matrix(const BraidWord& w) {
    const int n = w.strands();
    if (n > kMaxLkStrands)
        throw CapacityError("lk_matrix supports at most " +
                            std::to_string(kMaxLkStrands) + " strands");
    const int d = n * (n - 1) / 2;
    std::map<int, PolyMatrix2> cache;  // letter -> matrix
    auto letter_matrix = [&](int v) -> const PolyMatrix2& {
        auto it = cache.find(v);
        if (it != cache.end()) return it->second;
        PolyMatrix2 m = generator_matrix(n, std::abs(v));
        if (v < 0) m = generator_inverse(m);
        return cache.emplace(v, std::move(m)).first->second;
    };
    PolyMatrix2 acc = PolyMatrix2::identity(d);
    for (int v : w.letters()) acc = acc * letter_matrix(v);
    return acc;
}

}  // namespace braidforge
