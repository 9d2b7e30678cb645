#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "braidforge/braid.hpp"
#include "braidforge/invariants.hpp"

namespace braidforge {

// Parameters of the twisted torus knot K(p,q,r,n): the (p,q) torus braid on
// q strands with n extra full twists on r adjacent strands. n is signed.
struct TTKParams {
    long long p = 2;
    int q = 2;
    int r = 1;
    long long n = 0;

    bool operator==(const TTKParams& o) const {
        return p == o.p && q == o.q && r == o.r && n == o.n;
    }
    std::string to_string() const {
        return "K(" + std::to_string(p) + "," + std::to_string(q) + "," +
               std::to_string(r) + "," + std::to_string(n) + ")";
    }
};

// (sigma_{q-1} ... sigma_1)^p (sigma_{r-1} ... sigma_1)^{nr} in B_q.
// Requires q >= 2, 0 <= r < q, r < p.
BraidWord ttk_braid(const TTKParams& params);

// --- verified rewrite rules -------------------------------------------------
//
// One rewriting step on a braid word. Every step preserves the element of
// B_n; appliers validate the pattern at the stated position and throw
// RewriteError on mismatch.
struct RewriteStep {
    enum class Kind { RuleA, RuleB, RuleC, Commute, Cancel, Rev };
    Kind kind;
    int pos = 0;
    int l = 0, s = 0, t = 0;  // rule parameters where applicable
    int to = 0;               // Commute target position

    std::string str() const;
    static RewriteStep parse(const std::string& text);
    bool operator==(const RewriteStep& o) const {
        return kind == o.kind && pos == o.pos && l == o.l && s == o.s && t == o.t &&
               to == o.to;
    }
};

// sigma_l^{-1} Pi_s^{l+1} Pi_s^l  =>  Pi_s^{l+1} Pi_{s-1}^l   (length -2)
BraidWord lemma_rewrite_a(const BraidWord& w, int l, int s, int pos);
// sigma_l^{-1} Pi_s^{l+1} Pi_{s-1}^l  =>  Pi_s^{l+1} Pi_{s-1}^l sigma_s^{-1}
BraidWord lemma_rewrite_b(const BraidWord& w, int l, int s, int pos);
// sigma_t^{+-1} Pi_s^l  =>  Pi_s^l sigma_{t-1}^{+-1}   for l < t <= s
BraidWord lemma_rewrite_c(const BraidWord& w, int t, int l, int s, int pos);
// swap two adjacent letters with distant indices (|i-j| >= 2)
BraidWord apply_commute(const BraidWord& w, int pos);
// remove the inverse pair at (pos, pos+1)
BraidWord apply_cancel(const BraidWord& w, int pos);

BraidWord apply_step(const BraidWord& w, const RewriteStep& step);

// --- positivization (closed forms and proof replay) -------------------------

// The block word Pi_{q-1}^r Pi_{q-2}^{r-1} ... Pi_{q-r+1}^2 Pi_{q-r} in B_q;
// the twist-absorbing prefix shared by all positive forms below.
BraidWord positive_block(int q, int r);

// Positive word for the single-twist case: block * (Pi_{q-1})^{p-r}.
// Equals (Pi_{r-1})^{-r} (Pi_{q-1})^p in B_q. Requires 1 <= r < q, r < p.
BraidWord positive_word_n1(long long p, int q, int r);

// Positive word for n >= 1 twists:
//   (block * (Pi_{q-1})^{q-r})^n * (Pi_{q-1})^{p-nq}.
// Equals (Pi_{r-1})^{-nr} (Pi_{q-1})^p in B_q. Requires r < q and nq < p.
BraidWord positive_word_general(long long p, int q, int r, long long n);

// Rederive positive_word_general by replaying the rewriting cascade rule by
// rule, starting from (Pi_{r-1})^{-nr} (Pi_{q-1})^p. Appends every step to
// *transcript when given.
BraidWord replay_positivization(long long p, int q, int r, long long n,
                                std::vector<RewriteStep>* transcript);

// Re-run a transcript from `start`, validating each step; with
// check_each_step also proves equal() against the running reference word
// after every step (a Rev step reverses the reference as well).
bool verify_transcript(const BraidWord& start, const std::vector<RewriteStep>& steps,
                       const BraidWord& expected, bool check_each_step);

// every generator index occurs with one sign only (a word-level property)
bool is_homogeneous(const BraidWord& w);

// --- fiberedness certificates ------------------------------------------------

enum class FiberedStatus {
    PositiveWordProof,       // reversed braid rewritten to an all-positive word
    HomogeneousProof,        // the raw braid word is already homogeneous
    NotDeterminedByWord,     // outside the rewriting hypothesis, no verdict
    NecessaryConditionFails  // Alexander polynomial non-monic: not fibered
};

std::string to_string(FiberedStatus s);
FiberedStatus fibered_status_from_string(const std::string& s);

struct FiberednessCertificate {
    TTKParams params;
    FiberedStatus status = FiberedStatus::NotDeterminedByWord;
    std::optional<BraidWord> witness;
    std::vector<std::string> transcript;
    std::map<std::string, bool> checks;
    std::optional<std::string> alexander_text;

    bool all_checks_pass() const {
        for (const auto& [k, v] : checks)
            if (!v) return false;
        return true;
    }
    bool operator==(const FiberednessCertificate& o) const {
        return params == o.params && status == o.status && witness == o.witness &&
               transcript == o.transcript && checks == o.checks &&
               alexander_text == o.alexander_text;
    }
};

// Decide what the braid word can prove about fiberedness of the closure:
// n >= 0 gives a homogeneous (indeed positive) word outright; n < 0 with
// |n| q < p is rewritten to a positive word; otherwise fall back to the
// Alexander monicity test when the closure is a knot.
FiberednessCertificate fiberedness_certificate(const TTKParams& params);

}  // namespace braidforge
