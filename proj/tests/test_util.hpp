#pragma once

#include <random>
#include <vector>

#include "braidforge/braid.hpp"
#include "braidforge/laurent.hpp"

// shared helpers for the test suites; everything here is an independent
// oracle or a generator, never a call back into the code path under test

namespace testutil {

using braidforge::BigInt;
using braidforge::BraidWord;
using braidforge::LaurentPoly;

// literal expansion of Pi_s^l straight from its definition
inline std::vector<int> pi_letters(int l, int s) {
    std::vector<int> v;
    for (int i = l; i <= s; ++i) v.push_back(i);
    return v;
}

// literal expansion of Delta_s^l = Pi_s^l Pi_{s-1}^l ... Pi_l^l
inline std::vector<int> delta_letters(int l, int s) {
    std::vector<int> v;
    for (int top = s; top >= l; --top) {
        auto p = pi_letters(l, top);
        v.insert(v.end(), p.begin(), p.end());
    }
    return v;
}

// closed-form torus knot Alexander polynomial
//   (t^{pq} - 1)(t - 1) / ((t^p - 1)(t^q - 1))
// normalized the same way alexander() normalizes: lowest exponent 0 and a
// positive leading coefficient.
inline LaurentPoly torus_alexander(int p, int q) {
    using braidforge::LaurentPoly;
    auto tpow_minus_1 = [](int e) { return LaurentPoly::t(e) - LaurentPoly(1); };
    LaurentPoly num = tpow_minus_1(p * q) * tpow_minus_1(1);
    LaurentPoly quot = num.divided_exact(tpow_minus_1(p)).divided_exact(tpow_minus_1(q));
    quot = quot.scaled(BigInt(1), -quot.min_exp());
    if (quot.coeff(quot.max_exp()).sign() < 0) quot = -quot;
    return quot;
}

// uniformly random word in B_n with the given length
inline BraidWord random_word(std::mt19937& rng, int strands, int length) {
    std::uniform_int_distribution<int> idx(1, strands - 1);
    std::uniform_int_distribution<int> sgn(0, 1);
    std::vector<int> ls;
    ls.reserve(length);
    for (int i = 0; i < length; ++i) ls.push_back(sgn(rng) ? idx(rng) : -idx(rng));
    return BraidWord(strands, std::move(ls));
}

// Random element-preserving mutation: free insertion, free cancellation,
// distant-generator commutation, or a braid-relation triple rewrite.
inline BraidWord mutate_equivalent(std::mt19937& rng, const BraidWord& w, int rounds) {
    BraidWord cur = w;
    std::uniform_int_distribution<int> which(0, 3);
    for (int round = 0; round < rounds; ++round) {
        std::vector<int> ls = cur.letters();
        const int n = cur.strands();
        switch (which(rng)) {
            case 0: {  // insert sigma_i sigma_i^{-1}
                std::uniform_int_distribution<int> at(0, (int)ls.size());
                std::uniform_int_distribution<int> idx(1, n - 1);
                std::uniform_int_distribution<int> ori(0, 1);
                int i = idx(rng), pos = at(rng);
                int a = ori(rng) ? i : -i;
                ls.insert(ls.begin() + pos, {a, -a});
                break;
            }
            case 1: {  // cancel an adjacent inverse pair if one exists
                std::vector<int> spots;
                for (size_t i = 0; i + 1 < ls.size(); ++i)
                    if (ls[i] == -ls[i + 1]) spots.push_back((int)i);
                if (spots.empty()) continue;
                std::uniform_int_distribution<int> pick(0, (int)spots.size() - 1);
                int at = spots[pick(rng)];
                ls.erase(ls.begin() + at, ls.begin() + at + 2);
                break;
            }
            case 2: {  // commute distant letters
                std::vector<int> spots;
                for (size_t i = 0; i + 1 < ls.size(); ++i)
                    if (std::abs(std::abs(ls[i]) - std::abs(ls[i + 1])) >= 2)
                        spots.push_back((int)i);
                if (spots.empty()) continue;
                std::uniform_int_distribution<int> pick(0, (int)spots.size() - 1);
                int at = spots[pick(rng)];
                std::swap(ls[at], ls[at + 1]);
                break;
            }
            default: {  // braid relation aba -> bab on a same-sign triple
                std::vector<int> spots;
                for (size_t i = 0; i + 2 < ls.size(); ++i) {
                    int a = ls[i], b = ls[i + 1], c = ls[i + 2];
                    if (a == c && a * b > 0 && std::abs(std::abs(a) - std::abs(b)) == 1)
                        spots.push_back((int)i);
                }
                if (spots.empty()) continue;
                std::uniform_int_distribution<int> pick(0, (int)spots.size() - 1);
                int at = spots[pick(rng)];
                std::swap(ls[at], ls[at + 1]);
                ls[at + 2] = ls[at];
                break;
            }
        }
        cur = BraidWord(n, std::move(ls));
    }
    return cur;
}

}  // namespace testutil
