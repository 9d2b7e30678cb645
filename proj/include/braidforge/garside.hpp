#pragma once

#include <string>
#include <vector>

#include "braidforge/braid.hpp"
#include "braidforge/permutation.hpp"

namespace braidforge {

// Left-greedy Garside normal form: Delta^inf followed by a left-weighted
// sequence of permutation-braid factors, none of which is the identity or
// the full half twist. Two words represent the same element of B_n exactly
// when their normal forms are identical.
struct NormalForm {
    int strands = 2;
    long long inf = 0;
    std::vector<Perm> factors;

    bool operator==(const NormalForm& o) const {
        return strands == o.strands && inf == o.inf && factors == o.factors;
    }
    bool operator!=(const NormalForm& o) const { return !(*this == o); }
};

NormalForm normal_form(const BraidWord& w);

// word problem: same element of B_n?
bool equal(const BraidWord& a, const BraidWord& b);

// true iff w commutes with every generator of B_n
bool is_central_power(const BraidWord& w);

// the unique positive word for a permutation braid in which any two strands
// cross at most once; length equals the permutation's inversion count
BraidWord permutation_braid_word(const Perm& p, int strands);

// spell the normal form back out as a braid word
BraidWord nf_to_word(const NormalForm& nf);

// stable serialization: "inf=<k>; factors=[<one-line image>; ...]"
std::string nf_to_string(const NormalForm& nf);

}  // namespace braidforge
