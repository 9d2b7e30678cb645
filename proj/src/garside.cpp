#include "braidforge/garside.hpp"

#include <cstdlib>
#include <deque>

#include "braidforge/errors.hpp"

namespace braidforge {

namespace {

Perm flip(const Perm& p, const Perm& omega) { return omega.then(p).then(omega); }

// Slide letters from the front of b into the back of a until the pair is
// left-weighted (every starting generator of b finishes a). Returns true if
// anything moved. a_inv is kept in sync with a.
bool make_left_weighted(Perm& a, Perm& a_inv, Perm& b) {
    const int n = a.size();
    bool moved = false;
    for (;;) {
        int found = 0;
        for (int i = 1; i < n; ++i) {
            if (b.has_descent(i) && !a_inv.has_descent(i)) {
                found = i;
                break;
            }
        }
        if (!found) return moved;
        a.swap_values(found);
        a_inv.swap_positions(found);
        b.swap_positions(found);
        moved = true;
    }
}

}  // namespace

NormalForm normal_form(const BraidWord& w) {
    const int n = w.strands();
    const Perm omega = Perm::reversal(n);

    // Rewrite each negative letter as Delta^{-1} times the permutation braid
    // Delta sigma_i^{-1}; the Delta^{-1}s migrate to the front, flipping every
    // factor they pass. A factor ends up flipped once per negative letter to
    // its right.
    long long neg_total = 0;
    for (int v : w.letters())
        if (v < 0) ++neg_total;

    std::vector<Perm> fac;
    fac.reserve(w.size());
    long long neg_after = neg_total;
    int tail_inv = 0;  // inversions of fac.back()
    for (int i = 0; i < w.size(); ++i) {
        int v = w.at(i);
        Perm p(0);
        if (v > 0) {
            p = Perm::transposition(n, v);
        } else {
            --neg_after;
            p = omega.then(Perm::transposition(n, -v));
        }
        if (neg_after % 2 != 0) p = flip(p, omega);
        if (p.is_identity()) continue;  // B_2: Delta sigma_1^{-1} is trivial
        // coarse pre-pass: absorb into the previous factor while the product
        // stays a permutation braid (inversion counts add)
        if (!fac.empty()) {
            Perm merged = fac.back().then(p);
            int merged_inv = merged.inversions();
            if (merged_inv == tail_inv + p.inversions()) {
                fac.back() = merged;
                tail_inv = merged_inv;
                continue;
            }
        }
        fac.push_back(p);
        tail_inv = p.inversions();
    }

    // Left-weight the factor sequence: intrusive linked list plus a worklist
    // of pair heads, iterated to a fixed point.
    const int m = static_cast<int>(fac.size());
    std::vector<int> nxt(m + 1), prv(m + 1);
    std::vector<Perm> inv(m);
    std::vector<char> alive(m, 1), queued(m, 0);
    // node m is a sentinel head
    int head = m;
    nxt[m] = m;
    prv[m] = m;
    for (int i = 0; i < m; ++i) {
        inv[i] = fac[i].inverse();
        int tail = prv[head];
        nxt[tail] = i;
        prv[i] = tail;
        nxt[i] = head;
        prv[head] = i;
    }

    std::deque<int> work;
    auto enqueue = [&](int i) {
        if (i == head || !alive[i] || queued[i]) return;
        queued[i] = 1;
        work.push_back(i);
    };
    auto unlink = [&](int i) {
        alive[i] = 0;
        nxt[prv[i]] = nxt[i];
        prv[nxt[i]] = prv[i];
    };
    for (int i = 0; i < m; ++i) enqueue(i);

    while (!work.empty()) {
        int a = work.front();
        work.pop_front();
        queued[a] = 0;
        if (!alive[a]) continue;
        int b = nxt[a];
        if (b == head) continue;
        if (!make_left_weighted(fac[a], inv[a], fac[b])) continue;
        if (fac[b].is_identity())
            unlink(b);
        else
            inv[b] = fac[b].inverse();
        enqueue(prv[a]);
        enqueue(a);
        if (alive[b]) enqueue(b);
    }

    NormalForm nf;
    nf.strands = n;
    nf.inf = -neg_total;
    for (int i = nxt[head]; i != head; i = nxt[i]) {
        if (fac[i] == omega && nf.factors.empty()) {
            ++nf.inf;
            continue;
        }
        nf.factors.push_back(fac[i]);
    }
    return nf;
}

bool equal(const BraidWord& a, const BraidWord& b) {
    if (a.strands() != b.strands())
        throw ParamError("equal: strand counts differ (" + std::to_string(a.strands()) +
                         " vs " + std::to_string(b.strands()) + ")");
    return normal_form(a) == normal_form(b);
}

bool is_central_power(const BraidWord& w) {
    for (int i = 1; i < w.strands(); ++i) {
        BraidWord gen(w.strands(), {i});
        if (!equal(concat(w, gen), concat(gen, w))) return false;
    }
    return true;
}

BraidWord permutation_braid_word(const Perm& p, int strands) {
    if (p.size() != strands) throw ParamError("permutation size does not match strands");
    const Perm pinv = p.inverse();
    std::vector<int> arr(strands);
    for (int i = 0; i < strands; ++i) arr[i] = i + 1;
    std::vector<int> letters;
    for (int j = 1; j <= strands; ++j) {
        int want = pinv.apply(j);
        int pos = j;
        while (arr[pos - 1] != want) ++pos;
        for (int k = pos; k > j; --k) {
            letters.push_back(k - 1);
            std::swap(arr[k - 2], arr[k - 1]);
        }
    }
    return BraidWord(strands, std::move(letters));
}

BraidWord nf_to_word(const NormalForm& nf) {
    BraidWord delta = delta_word(1, nf.strands - 1, nf.strands);
    BraidWord w = power(delta, nf.inf);
    for (const auto& f : nf.factors)
        w = concat(w, permutation_braid_word(f, nf.strands));
    return w;
}

std::string nf_to_string(const NormalForm& nf) {
    std::string s = "inf=" + std::to_string(nf.inf) + "; factors=[";
    for (size_t i = 0; i < nf.factors.size(); ++i) {
        if (i) s += "; ";
        s += nf.factors[i].one_line();
    }
    s += "]";
    return s;
}

}  // namespace braidforge
