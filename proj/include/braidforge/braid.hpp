#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "braidforge/errors.hpp"
#include "braidforge/permutation.hpp"

namespace braidforge {

// One Artin generator occurrence: sigma_index^sign.
struct Letter {
    int index;  // >= 1
    int sign;   // +1 or -1
};

// A word in the braid group B_n: a declared strand count plus a flat
// sequence of signed generator letters. Letters are stored as nonzero ints,
// +i for sigma_i and -i for sigma_i^{-1}; every |i| must be < strands.
// Immutable in spirit: operations return new words.
class BraidWord {
public:
    BraidWord() = default;
    explicit BraidWord(int strands) : strands_(strands) { check_strands(); }
    BraidWord(int strands, std::vector<int> letters);

    int strands() const { return strands_; }
    int size() const { return static_cast<int>(letters_.size()); }
    bool empty() const { return letters_.empty(); }

    int at(int i) const { return letters_[i]; }
    Letter letter(int i) const {
        int v = letters_[i];
        return {v > 0 ? v : -v, v > 0 ? 1 : -1};
    }
    const std::vector<int>& letters() const { return letters_; }

    bool operator==(const BraidWord& o) const {
        return strands_ == o.strands_ && letters_ == o.letters_;
    }
    bool operator!=(const BraidWord& o) const { return !(*this == o); }

private:
    int strands_ = 2;
    std::vector<int> letters_;

    void check_strands() const;
    friend BraidWord concat(const BraidWord&, const BraidWord&);
    friend BraidWord rev(const BraidWord&);
    friend BraidWord invert(const BraidWord&);
};

// sigma_l sigma_{l+1} ... sigma_s, all positive; needs 1 <= l <= s < strands
BraidWord pi_word(int l, int s, int strands);

// Pi_s^l Pi_{s-1}^l ... Pi_l^l; length (s-l+1)(s-l+2)/2
BraidWord delta_word(int l, int s, int strands);

// letters in reverse order, signs unchanged
BraidWord rev(const BraidWord& w);

BraidWord concat(const BraidWord& a, const BraidWord& b);
BraidWord invert(const BraidWord& w);
BraidWord power(const BraidWord& w, long long k);

// cancel adjacent sigma_i sigma_i^{-1} pairs until none remain
BraidWord free_reduce(const BraidWord& w);

// sum of letter signs (abelianization; the braid word's writhe)
long long exponent_sum(const BraidWord& w);

// image in the symmetric group, signs ignored; first letter acts first
Perm underlying_permutation(const BraidWord& w);

// Text word format: "Bn: i1 i2 ..." where i means sigma_i and -i means
// sigma_i^{-1}. The empty word is just the header "Bn:".
std::string format_word(const BraidWord& w);
BraidWord parse_word(std::string_view text);

}  // namespace braidforge
