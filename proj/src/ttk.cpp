#include "braidforge/ttk.hpp"

#include <cstdlib>

#include "braidforge/garside.hpp"

namespace braidforge {

BraidWord ttk_braid(const TTKParams& params) {
    const auto [p, q, r, n] = params;
    if (q < 2) throw ParamError("ttk_braid: q must be at least 2");
    if (r < 0 || r >= q || r >= p)
        throw ParamError("ttk_braid: unsupported parameters, need 0 <= r < q and r < p (" +
                         params.to_string() + ")");
    const long long letters =
        p * (q - 1) + (n < 0 ? -n : n) * (long long)r * (r - 1);
    if (letters > 1000000)
        throw CapacityError("ttk_braid: word would have " + std::to_string(letters) +
                            " letters");
    BraidWord torus = power(rev(pi_word(1, q - 1, q)), p);
    if (r <= 1) return torus;  // twisting one strand adds no letters
    BraidWord twist = power(rev(pi_word(1, r - 1, q)), n * r);
    return concat(torus, twist);
}

// --- rewrite rules -----------------------------------------------------------

namespace {

void check_range(const BraidWord& w, int pos, int len, const char* rule) {
    if (pos < 0 || pos + len > w.size())
        throw RewriteError(std::string(rule) + ": pattern does not fit at position " +
                           std::to_string(pos));
}

void expect(const BraidWord& w, int pos, int letter, const char* rule) {
    if (w.at(pos) != letter)
        throw RewriteError(std::string(rule) + ": expected letter " +
                           std::to_string(letter) + " at position " + std::to_string(pos) +
                           ", found " + std::to_string(w.at(pos)));
}

BraidWord splice(const BraidWord& w, int pos, int removed, const std::vector<int>& insert) {
    std::vector<int> ls;
    ls.reserve(w.size() - removed + insert.size());
    ls.insert(ls.end(), w.letters().begin(), w.letters().begin() + pos);
    ls.insert(ls.end(), insert.begin(), insert.end());
    ls.insert(ls.end(), w.letters().begin() + pos + removed, w.letters().end());
    return BraidWord(w.strands(), std::move(ls));
}

std::vector<int> run(int from, int to) {  // from..to ascending
    std::vector<int> v;
    for (int i = from; i <= to; ++i) v.push_back(i);
    return v;
}

}  // namespace

BraidWord lemma_rewrite_a(const BraidWord& w, int l, int s, int pos) {
    if (!(1 <= l && l < s && s < w.strands()))
        throw RewriteError("ruleA: requires 1 <= l < s < strands");
    const int len = 1 + (s - l) + (s - l + 1);
    check_range(w, pos, len, "ruleA");
    expect(w, pos, -l, "ruleA");
    int k = pos + 1;
    for (int i = l + 1; i <= s; ++i) expect(w, k++, i, "ruleA");
    for (int i = l; i <= s; ++i) expect(w, k++, i, "ruleA");
    std::vector<int> rhs = run(l + 1, s);
    for (int i = l; i <= s - 1; ++i) rhs.push_back(i);
    return splice(w, pos, len, rhs);
}

BraidWord lemma_rewrite_b(const BraidWord& w, int l, int s, int pos) {
    if (!(1 <= l && l < s && s < w.strands()))
        throw RewriteError("ruleB: requires 1 <= l < s < strands");
    const int len = 1 + (s - l) + (s - l);
    check_range(w, pos, len, "ruleB");
    expect(w, pos, -l, "ruleB");
    int k = pos + 1;
    for (int i = l + 1; i <= s; ++i) expect(w, k++, i, "ruleB");
    for (int i = l; i <= s - 1; ++i) expect(w, k++, i, "ruleB");
    std::vector<int> rhs = run(l + 1, s);
    for (int i = l; i <= s - 1; ++i) rhs.push_back(i);
    rhs.push_back(-s);
    return splice(w, pos, len, rhs);
}

BraidWord lemma_rewrite_c(const BraidWord& w, int t, int l, int s, int pos) {
    if (!(1 <= l && l < t && t <= s && s < w.strands()))
        throw RewriteError("ruleC: requires 1 <= l < t <= s < strands");
    const int len = 1 + (s - l + 1);
    check_range(w, pos, len, "ruleC");
    const int head = w.at(pos);
    if (std::abs(head) != t)
        throw RewriteError("ruleC: expected sigma_" + std::to_string(t) +
                           "^{+-1} at position " + std::to_string(pos));
    int k = pos + 1;
    for (int i = l; i <= s; ++i) expect(w, k++, i, "ruleC");
    std::vector<int> rhs = run(l, s);
    rhs.push_back(head > 0 ? t - 1 : -(t - 1));
    return splice(w, pos, len, rhs);
}

BraidWord apply_commute(const BraidWord& w, int pos) {
    check_range(w, pos, 2, "commute");
    const int a = std::abs(w.at(pos)), b = std::abs(w.at(pos + 1));
    if (std::abs(a - b) < 2)
        throw RewriteError("commute: letters at " + std::to_string(pos) +
                           " are not distant");
    std::vector<int> ls = w.letters();
    std::swap(ls[pos], ls[pos + 1]);
    return BraidWord(w.strands(), std::move(ls));
}

BraidWord apply_cancel(const BraidWord& w, int pos) {
    check_range(w, pos, 2, "cancel");
    if (w.at(pos) != -w.at(pos + 1))
        throw RewriteError("cancel: letters at " + std::to_string(pos) +
                           " are not an inverse pair");
    return splice(w, pos, 2, {});
}

namespace {

BraidWord commute_move(const BraidWord& w, int from, int to) {
    BraidWord cur = w;
    if (to > from)
        for (int k = from; k < to; ++k) cur = apply_commute(cur, k);
    else
        for (int k = from - 1; k >= to; --k) cur = apply_commute(cur, k);
    return cur;
}

}  // namespace

BraidWord apply_step(const BraidWord& w, const RewriteStep& step) {
    using K = RewriteStep::Kind;
    switch (step.kind) {
        case K::RuleA:
            return lemma_rewrite_a(w, step.l, step.s, step.pos);
        case K::RuleB:
            return lemma_rewrite_b(w, step.l, step.s, step.pos);
        case K::RuleC:
            return lemma_rewrite_c(w, step.t, step.l, step.s, step.pos);
        case K::Commute:
            return commute_move(w, step.pos, step.to);
        case K::Cancel:
            return apply_cancel(w, step.pos);
        case K::Rev:
            return rev(w);
    }
    throw InternalError("unknown rewrite step kind");
}

std::string RewriteStep::str() const {
    using K = Kind;
    switch (kind) {
        case K::RuleA:
            return "ruleA(l=" + std::to_string(l) + ",s=" + std::to_string(s) + ")@" +
                   std::to_string(pos);
        case K::RuleB:
            return "ruleB(l=" + std::to_string(l) + ",s=" + std::to_string(s) + ")@" +
                   std::to_string(pos);
        case K::RuleC:
            return "ruleC(t=" + std::to_string(t) + ",l=" + std::to_string(l) +
                   ",s=" + std::to_string(s) + ")@" + std::to_string(pos);
        case K::Commute:
            return "commute@" + std::to_string(pos) + "->" + std::to_string(to);
        case K::Cancel:
            return "cancel@" + std::to_string(pos);
        case K::Rev:
            return "rev";
    }
    throw InternalError("unknown rewrite step kind");
}

RewriteStep RewriteStep::parse(const std::string& text) {
    using K = Kind;
    RewriteStep s{K::Rev, 0, 0, 0, 0, 0};
    auto num_after = [&](const std::string& key) {
        auto at = text.find(key);
        if (at == std::string::npos)
            throw ParamError("bad rewrite step '" + text + "'");
        return std::stoi(text.substr(at + key.size()));
    };
    if (text == "rev") return s;
    if (text.rfind("ruleA", 0) == 0)
        return {K::RuleA, num_after(")@"), num_after("l="), num_after("s="), 0, 0};
    if (text.rfind("ruleB", 0) == 0)
        return {K::RuleB, num_after(")@"), num_after("l="), num_after("s="), 0, 0};
    if (text.rfind("ruleC", 0) == 0)
        return {K::RuleC, num_after(")@"), num_after("l="), num_after("s="),
                num_after("t="), 0};
    if (text.rfind("commute@", 0) == 0)
        return {K::Commute, num_after("@"), 0, 0, 0, num_after("->")};
    if (text.rfind("cancel@", 0) == 0) return {K::Cancel, num_after("@"), 0, 0, 0, 0};
    throw ParamError("bad rewrite step '" + text + "'");
}

// --- positivization ----------------------------------------------------------

BraidWord positive_block(int q, int r) {
    if (!(1 <= r && r < q)) throw ParamError("positive_block requires 1 <= r < q");
    BraidWord w(q);
    for (int j = 1; j <= r; ++j) w = concat(w, pi_word(r - j + 1, q - j, q));
    return w;
}

BraidWord positive_word_n1(long long p, int q, int r) {
    if (!(1 <= r && r < q && r < p))
        throw ParamError("positive_word_n1 requires 1 <= r < q and r < p");
    return concat(positive_block(q, r), power(pi_word(1, q - 1, q), p - r));
}

BraidWord positive_word_general(long long p, int q, int r, long long n) {
    if (!(n >= 1 && 1 <= r && r < q))
        throw ParamError("positive_word_general requires n >= 1 and 1 <= r < q");
    if (n * q >= p)
        throw ParamError("positive_word_general: hypothesis nq < p fails (n=" +
                         std::to_string(n) + ", q=" + std::to_string(q) +
                         ", p=" + std::to_string(p) + ")");
    BraidWord inner = concat(positive_block(q, r), power(pi_word(1, q - 1, q), q - r));
    return concat(power(inner, n), power(pi_word(1, q - 1, q), p - n * q));
}

namespace {

// Word-level replay of the twist-absorption cascade. The driver tracks the
// exact layout of the working word at every micro-step; the rule appliers
// re-validate each pattern, so a bookkeeping slip fails loudly instead of
// producing a wrong word.
class ReplayDriver {
public:
    ReplayDriver(BraidWord w, std::vector<RewriteStep>* log)
        : w_(std::move(w)), log_(log) {}

    const BraidWord& word() const { return w_; }

    void move_letter(int from, int to) {
        if (from == to) return;
        w_ = commute_move(w_, from, to);
        record({RewriteStep::Kind::Commute, from, 0, 0, 0, to});
    }
    void cancel(int pos) {
        w_ = apply_cancel(w_, pos);
        record({RewriteStep::Kind::Cancel, pos, 0, 0, 0, 0});
    }
    void rule_a(int l, int s, int pos) {
        w_ = lemma_rewrite_a(w_, l, s, pos);
        record({RewriteStep::Kind::RuleA, pos, l, s, 0, 0});
    }
    void rule_b(int l, int s, int pos) {
        w_ = lemma_rewrite_b(w_, l, s, pos);
        record({RewriteStep::Kind::RuleB, pos, l, s, 0, 0});
    }
    void rule_c(int t, int l, int s, int pos) {
        w_ = lemma_rewrite_c(w_, t, l, s, pos);
        record({RewriteStep::Kind::RuleC, pos, l, s, t, 0});
    }

private:
    BraidWord w_;
    std::vector<RewriteStep>* log_;

    void record(RewriteStep s) {
        if (log_) log_->push_back(s);
    }
};

}  // namespace

BraidWord replay_positivization(long long p, int q, int r, long long n,
                                std::vector<RewriteStep>* transcript) {
    if (!(n >= 1 && 1 <= r && r < q))
        throw ParamError("replay_positivization requires n >= 1 and 1 <= r < q");
    if (n * q >= p) throw ParamError("replay_positivization: hypothesis nq < p fails");
    if (r == 1)  // no twist letters at all; the start word is already positive
        return power(pi_word(1, q - 1, q), p);

    BraidWord start = concat(power(invert(pi_word(1, r - 1, q)), n * r),
                             power(pi_word(1, q - 1, q), p));
    ReplayDriver d(std::move(start), transcript);

    long long base = 0;
    long long copies = n * r;
    const int blk = q - r;  // every block in the absorbed prefix has this length

    for (long long round = 1; round <= n; ++round) {
        // absorb the r rightmost inverse copies into the block prefix
        for (int l = 0; l < r; ++l) {
            const long long cs = base + (copies - 1) * (r - 1);
            const long long pp = base + copies * (r - 1) + l * blk;  // pile start
            // trailing part of the copy slides past the l existing blocks
            if (l > 0)
                for (int mu = 1; mu <= r - l - 1; ++mu) {
                    long long from = cs + (r - 1 - mu);
                    d.move_letter(from, from + l * blk);
                }
            // kept letters park in front of their blocks
            for (int j = l; j >= 2; --j) {
                long long from = cs + (j - 1);
                d.move_letter(from, from + (j - 1) * blk);
            }
            // what remains of the copy cancels into the head of a fresh
            // Pi_{q-1}, leaving Pi^{r-l}_{q-1}
            for (int mu = 1; mu <= r - l - 1; ++mu) d.cancel(pp - mu);
            // fix each junction right to left: split, absorb, slide the tail
            for (int j = l; j >= 1; --j) {
                const long long ps = cs + (long long)(j - 1) * (blk + 1);
                d.rule_a(r - j, q - j, ps);
                const long long tt = ps + 2LL * blk;
                for (int mu = 0; mu <= j - 2; ++mu)
                    d.move_letter(tt + mu, tt + mu - blk);
            }
            --copies;
        }
        if (copies == 0) break;

        // remaining copies convert across the full block prefix, emerging as
        // descending negative runs on its right
        for (long long c = 1; c <= copies; ++c) {
            const long long cs = base + (copies - c) * (r - 1);
            for (int j = r - 1; j >= 2; --j) {
                long long from = cs + (j - 1);
                d.move_letter(from, from + (j - 1) * blk);
            }
            for (int j = r - 1; j >= 1; --j) {
                const long long ps = cs + (long long)(j - 1) * (blk + 1);
                d.rule_b(r - j, q - j, ps);
                const long long em = ps + 2LL * blk;
                d.move_letter(em, em + (long long)(r - j - 1) * blk);
            }
        }
        // each emitted run crosses q-r full Pi_{q-1} blocks and lands back in
        // its original (Pi_{r-1})^-1 shape
        for (long long c = 1; c <= copies; ++c) {
            const long long ts = base + (long long)r * blk + (copies - c) * (r - 1);
            for (int mu = 1; mu <= r - 1; ++mu) {
                long long pos = ts + (r - 1 - mu);
                int t = q - r + mu;
                for (int b = 0; b < blk; ++b) {
                    d.rule_c(t, 1, q - 1, pos);
                    pos += q - 1;
                    --t;
                }
            }
        }
        base += (long long)r * blk + (long long)blk * (q - 1);
    }
    return d.word();
}

bool verify_transcript(const BraidWord& start, const std::vector<RewriteStep>& steps,
                       const BraidWord& expected, bool check_each_step) {
    BraidWord cur = start, ref = start;
    for (const auto& step : steps) {
        if (step.kind == RewriteStep::Kind::Rev) {
            cur = rev(cur);
            ref = rev(ref);
        } else {
            cur = apply_step(cur, step);
        }
        if (check_each_step && !equal(cur, ref)) return false;
    }
    return equal(cur, expected);
}

bool is_homogeneous(const BraidWord& w) {
    std::map<int, int> sign_of;
    for (int v : w.letters()) {
        int idx = std::abs(v), s = v > 0 ? 1 : -1;
        auto [it, inserted] = sign_of.emplace(idx, s);
        if (!inserted && it->second != s) return false;
    }
    return true;
}

// --- fiberedness certificates ------------------------------------------------

std::string to_string(FiberedStatus s) {
    switch (s) {
        case FiberedStatus::PositiveWordProof: return "PositiveWordProof";
        case FiberedStatus::HomogeneousProof: return "HomogeneousProof";
        case FiberedStatus::NotDeterminedByWord: return "NotDeterminedByWord";
        case FiberedStatus::NecessaryConditionFails: return "NecessaryConditionFails";
    }
    throw InternalError("unknown fibered status");
}

FiberedStatus fibered_status_from_string(const std::string& s) {
    if (s == "PositiveWordProof") return FiberedStatus::PositiveWordProof;
    if (s == "HomogeneousProof") return FiberedStatus::HomogeneousProof;
    if (s == "NotDeterminedByWord") return FiberedStatus::NotDeterminedByWord;
    if (s == "NecessaryConditionFails") return FiberedStatus::NecessaryConditionFails;
    throw ParamError("unknown fibered status '" + s + "'");
}

FiberednessCertificate fiberedness_certificate(const TTKParams& params) {
    FiberednessCertificate cert;
    cert.params = params;
    const BraidWord raw = ttk_braid(params);  // validates parameters

    if (params.n >= 0 || params.r <= 1) {
        // no negative letters anywhere: the raw word is its own witness
        cert.status = FiberedStatus::HomogeneousProof;
        cert.witness = raw;
        cert.checks["witness_homogeneous"] = is_homogeneous(raw);
        return cert;
    }

    const long long n_abs = -params.n;
    if (n_abs * params.q < params.p) {
        cert.status = FiberedStatus::PositiveWordProof;
        const BraidWord reversed = rev(raw);
        std::vector<RewriteStep> steps;
        steps.push_back({RewriteStep::Kind::Rev, 0, 0, 0, 0, 0});
        BraidWord witness =
            replay_positivization(params.p, params.q, params.r, n_abs, &steps);
        BraidWord closed = positive_word_general(params.p, params.q, params.r, n_abs);
        cert.witness = witness;
        for (const auto& s : steps) cert.transcript.push_back(s.str());
        bool positive = true;
        for (int v : witness.letters()) positive = positive && v > 0;
        cert.checks["witness_positive"] = positive;
        cert.checks["witness_homogeneous"] = is_homogeneous(witness);
        cert.checks["witness_equals_reversed_raw"] = equal(witness, reversed);
        cert.checks["replay_equals_closed_form"] = equal(witness, closed);
        cert.checks["exponent_sum_matches"] =
            exponent_sum(witness) ==
                params.p * (params.q - 1) - n_abs * params.r * (params.r - 1) &&
            exponent_sum(witness) == exponent_sum(reversed);
        return cert;
    }

    // outside the rewriting hypothesis: fall back to the necessary condition
    if (component_count(raw) != 1) {
        cert.status = FiberedStatus::NotDeterminedByWord;
        cert.transcript.push_back("closure has " + std::to_string(component_count(raw)) +
                                  " components; Alexander monicity test not applicable");
        return cert;
    }
    AlexanderResult alex = alexander(raw);
    cert.alexander_text = alex.poly.to_string();
    if (!alex.monic) {
        cert.status = FiberedStatus::NecessaryConditionFails;
        cert.checks["closure_is_knot"] = true;
        cert.checks["alexander_non_monic"] = true;
    } else {
        cert.status = FiberedStatus::NotDeterminedByWord;
        cert.transcript.push_back(
            "Alexander polynomial is monic; the necessary condition cannot decide");
    }
    return cert;
}

}  // namespace braidforge
