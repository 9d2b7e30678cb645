#include "braidforge/braid.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace braidforge {

void BraidWord::check_strands() const {
    if (strands_ < 2) throw ParamError("strand count must be at least 2");
}

BraidWord::BraidWord(int strands, std::vector<int> letters)
    : strands_(strands), letters_(std::move(letters)) {
    check_strands();
    for (int v : letters_) {
        int idx = std::abs(v);
        if (v == 0 || idx >= strands_)
            throw ParamError("letter index " + std::to_string(v) +
                             " out of range for B_" + std::to_string(strands_));
    }
}

BraidWord pi_word(int l, int s, int strands) {
    if (!(1 <= l && l <= s && s <= strands - 1))
        throw ParamError("pi_word requires 1 <= l <= s <= strands-1, got l=" +
                         std::to_string(l) + " s=" + std::to_string(s) +
                         " strands=" + std::to_string(strands));
    std::vector<int> ls;
    ls.reserve(s - l + 1);
    for (int i = l; i <= s; ++i) ls.push_back(i);
    return BraidWord(strands, std::move(ls));
}

BraidWord delta_word(int l, int s, int strands) {
    if (!(1 <= l && l <= s && s <= strands - 1))
        throw ParamError("delta_word requires 1 <= l <= s <= strands-1, got l=" +
                         std::to_string(l) + " s=" + std::to_string(s) +
                         " strands=" + std::to_string(strands));
    std::vector<int> ls;
    ls.reserve((s - l + 1) * (s - l + 2) / 2);
    for (int top = s; top >= l; --top)
        for (int i = l; i <= top; ++i) ls.push_back(i);
    return BraidWord(strands, std::move(ls));
}

BraidWord rev(const BraidWord& w) {
    BraidWord r = w;
    std::reverse(r.letters_.begin(), r.letters_.end());
    return r;
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
    if (a.strands() != b.strands())
        throw ParamError("concat: strand counts differ (" +
                         std::to_string(a.strands()) + " vs " +
                         std::to_string(b.strands()) + ")");
    BraidWord r = a;
    r.letters_.insert(r.letters_.end(), b.letters_.begin(), b.letters_.end());
    return r;
}

BraidWord invert(const BraidWord& w) {
    BraidWord r(w.strands());
    std::vector<int> ls(w.letters().rbegin(), w.letters().rend());
    for (int& v : ls) v = -v;
    return BraidWord(w.strands(), std::move(ls));
}

BraidWord power(const BraidWord& w, long long k) {
    BraidWord base = k < 0 ? invert(w) : w;
    long long reps = k < 0 ? -k : k;
    std::vector<int> ls;
    ls.reserve(static_cast<size_t>(reps) * base.size());
    for (long long i = 0; i < reps; ++i)
        ls.insert(ls.end(), base.letters().begin(), base.letters().end());
    return BraidWord(w.strands(), std::move(ls));
}

BraidWord free_reduce(const BraidWord& w) {
    std::vector<int> stack;
    stack.reserve(w.size());
    for (int v : w.letters()) {
        if (!stack.empty() && stack.back() == -v)
            stack.pop_back();
        else
            stack.push_back(v);
    }
    return BraidWord(w.strands(), std::move(stack));
}

long long exponent_sum(const BraidWord& w) {
    long long s = 0;
    for (int v : w.letters()) s += v > 0 ? 1 : -1;
    return s;
}

Perm underlying_permutation(const BraidWord& w) {
    Perm p = Perm::identity(w.strands());
    for (int v : w.letters()) p.swap_values(std::abs(v));
    return p;
}

std::string format_word(const BraidWord& w) {
    std::string s = "B" + std::to_string(w.strands()) + ":";
    for (int v : w.letters()) {
        s += ' ';
        s += std::to_string(v);
    }
    return s;
}

BraidWord parse_word(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string tok;
    if (!(in >> tok)) throw ParseError("missing 'Bn:' header", 0);
    if (tok.size() < 3 || tok.front() != 'B' || tok.back() != ':')
        throw ParseError("bad header '" + tok + "', expected 'Bn:'", 0);
    int strands = 0;
    try {
        size_t used = 0;
        strands = std::stoi(tok.substr(1, tok.size() - 2), &used);
        if (used != tok.size() - 2) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw ParseError("bad strand count in header '" + tok + "'", 0);
    }
    if (strands < 2) throw ParseError("strand count must be at least 2", 0);

    std::vector<int> letters;
    int pos = 0;
    while (in >> tok) {
        ++pos;
        int v = 0;
        try {
            size_t used = 0;
            v = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw ParseError("bad token '" + tok + "' at position " + std::to_string(pos),
                             pos);
        }
        if (v == 0 || std::abs(v) >= strands)
            throw ParseError("letter " + tok + " at position " + std::to_string(pos) +
                                 " out of range for B_" + std::to_string(strands),
                             pos);
        letters.push_back(v);
    }
    return BraidWord(strands, std::move(letters));
}

}  // namespace braidforge
