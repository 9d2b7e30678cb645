#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "braidforge/braid.hpp"
#include "braidforge/garside.hpp"
#include "braidforge/ttk.hpp"

namespace braidforge {

// The two-parameter family of conjugate twisted torus braids: for (k, q, m)
// with q >= 2, k >= 2, 1 <= m <= q-1 and gcd(q,m) = 1, the pair is
//   K1 = K(kq+m,   q, m,   -1)
//   K2 = K(kq+q-m, q, q-m, -1)
struct FamilyParams {
    long long k = 2;
    int q = 2;
    int m = 1;

    bool valid() const;
    TTKParams k1() const { return {k * q + m, q, m, -1}; }
    TTKParams k2() const { return {k * q + q - m, q, q - m, -1}; }

    bool operator==(const FamilyParams& o) const {
        return k == o.k && q == o.q && m == o.m;
    }
};

// the conjugator rev(Delta_{m-1}) rev(Delta_{q-1}^{m+1}) in B_q; degenerate
// Delta ranges (lower index above upper) contribute the empty word
BraidWord gamma_word(int q, int m);

struct ConjugacyCertificate {
    FamilyParams family;
    BraidWord beta1, beta2, gamma;
    std::string nf_left, nf_right;  // normal forms of beta1*gamma and gamma*beta2
    long long slope = 0;
    std::vector<long long> seifert_data;  // inert metadata: [k, m, q-m]
    std::map<std::string, bool> checks;
    std::string failed_check;  // first failing check name, empty when valid

    bool valid() const { return failed_check.empty(); }
    bool operator==(const ConjugacyCertificate& o) const {
        return family == o.family && beta1 == o.beta1 && beta2 == o.beta2 &&
               gamma == o.gamma && nf_left == o.nf_left && nf_right == o.nf_right &&
               slope == o.slope && seifert_data == o.seifert_data && checks == o.checks &&
               failed_check == o.failed_check;
    }
};

// Builds beta1, beta2, gamma, proves NF(beta1 gamma) = NF(gamma beta2), and
// records the invariant cross-checks. Never throws on a failed mathematical
// check: the certificate is marked failed with the check named.
ConjugacyCertificate verify_conjugacy(const FamilyParams& fam);

// Replays the half-twist identities behind the conjugacy, on the stripped
// positive forms P1, P2 (central torus power removed):
//   Delta_{q-1}^{m+1} Delta_{m-1} P1 = Delta_{q-1}
//   P2 Delta_{q-1}^{m+1} Delta_{m-1} = Delta_{q-1}
bool verify_delta_identity(const FamilyParams& fam, std::string* diagnostics = nullptr);

// All certificates for admissible (k, q, m) with 2 <= k <= k_max and
// 2 <= q <= q_max, in lexicographic (k, q, m) order. jobs > 1 parallelizes
// tuple computation; the output order is unaffected.
std::vector<ConjugacyCertificate> sweep_family(long long k_max, int q_max, int jobs = 1);

// CSV header plus one row per certificate, LF line endings
std::string sweep_csv(const std::vector<ConjugacyCertificate>& certs);

}  // namespace braidforge
