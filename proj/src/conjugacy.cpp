#include "braidforge/conjugacy.hpp"

#include <atomic>
#include <numeric>
#include <thread>

#include "braidforge/invariants.hpp"

namespace braidforge {

namespace {

// Delta_s^l as a word, with l > s reading as the identity
BraidWord delta_or_empty(int l, int s, int strands) {
    if (l > s) return BraidWord(strands);
    return delta_word(l, s, strands);
}

}  // namespace

bool FamilyParams::valid() const {
    return q >= 2 && k >= 2 && 1 <= m && m <= q - 1 && std::gcd((long long)q, (long long)m) == 1;
}

BraidWord gamma_word(int q, int m) {
    if (q < 2 || m < 1 || m > q - 1)
        throw ParamError("gamma_word requires q >= 2 and 1 <= m <= q-1");
    return concat(rev(delta_or_empty(1, m - 1, q)), rev(delta_or_empty(m + 1, q - 1, q)));
}

ConjugacyCertificate verify_conjugacy(const FamilyParams& fam) {
    if (!fam.valid())
        throw ParamError("family requires q >= 2, k >= 2, 1 <= m <= q-1, gcd(q,m) = 1");
    ConjugacyCertificate cert;
    cert.family = fam;
    cert.beta1 = ttk_braid(fam.k1());
    cert.beta2 = ttk_braid(fam.k2());
    cert.gamma = gamma_word(fam.q, fam.m);
    cert.slope = surface_slope(fam.k, fam.q, fam.m);
    cert.seifert_data = {fam.k, fam.m, fam.q - fam.m};

    const BraidWord left = concat(cert.beta1, cert.gamma);
    const BraidWord right = concat(cert.gamma, cert.beta2);
    const NormalForm nf_l = normal_form(left), nf_r = normal_form(right);
    cert.nf_left = nf_to_string(nf_l);
    cert.nf_right = nf_to_string(nf_r);

    cert.checks["nf_equal"] = nf_l == nf_r;
    cert.checks["exponent_sum_equal"] = exponent_sum(left) == exponent_sum(right);
    cert.checks["knot_beta1"] = component_count(cert.beta1) == 1;
    cert.checks["knot_beta2"] = component_count(cert.beta2) == 1;
    cert.checks["alexander_equal"] =
        cert.checks["knot_beta1"] && cert.checks["knot_beta2"] &&
        alexander(cert.beta1) == alexander(cert.beta2);
    // the slope formula evaluated at the mirrored parameters (k, q, q-m)
    const long long mm = fam.q - fam.m;
    cert.checks["slope_symmetric"] =
        cert.slope == fam.k * fam.q * fam.q + mm * fam.q - mm * mm;

    for (const auto& [name, ok] : cert.checks)
        if (!ok) {
            cert.failed_check = name;
            break;
        }
    return cert;
}

bool verify_delta_identity(const FamilyParams& fam, std::string* diagnostics) {
    if (!fam.valid())
        throw ParamError("family requires q >= 2, k >= 2, 1 <= m <= q-1, gcd(q,m) = 1");
    const int q = fam.q, m = fam.m;
    const BraidWord big_delta = delta_word(1, q - 1, q);
    const BraidWord d_high = delta_or_empty(m + 1, q - 1, q);
    const BraidWord d_low = delta_or_empty(1, m - 1, q);
    const BraidWord p1 = m >= 1 ? positive_block(q, m) : BraidWord(q);
    const BraidWord p2 = positive_block(q, q - m);

    const BraidWord lhs1 = concat(concat(d_high, d_low), p1);
    const BraidWord lhs2 = concat(p2, concat(d_high, d_low));
    const bool ok1 = equal(lhs1, big_delta);
    const bool ok2 = equal(lhs2, big_delta);
    if (diagnostics && !(ok1 && ok2)) {
        *diagnostics = std::string("delta identity failed: ") +
                       (ok1 ? "" : "Delta^{m+1} Delta_{m-1} P1 != Delta; ") +
                       (ok2 ? "" : "P2 Delta^{m+1} Delta_{m-1} != Delta");
    }
    return ok1 && ok2;
}

std::vector<ConjugacyCertificate> sweep_family(long long k_max, int q_max, int jobs) {
    if (k_max < 2 || q_max < 2) throw ParamError("sweep bounds must be at least 2");
    std::vector<FamilyParams> tuples;
    for (long long k = 2; k <= k_max; ++k)
        for (int q = 2; q <= q_max; ++q)
            for (int m = 1; m <= q - 1; ++m)
                if (std::gcd((long long)q, (long long)m) == 1)
                    tuples.push_back({k, q, m});

    std::vector<ConjugacyCertificate> certs(tuples.size());
    if (jobs <= 1) {
        for (size_t i = 0; i < tuples.size(); ++i) certs[i] = verify_conjugacy(tuples[i]);
        return certs;
    }
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= tuples.size()) return;
            certs[i] = verify_conjugacy(tuples[i]);
        }
    };
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return certs;
}

std::string sweep_csv(const std::vector<ConjugacyCertificate>& certs) {
    std::string out = "k,q,m,slope,valid,len_beta1,len_beta2,alexander_equal\n";
    for (const auto& c : certs) {
        out += std::to_string(c.family.k) + "," + std::to_string(c.family.q) + "," +
               std::to_string(c.family.m) + "," + std::to_string(c.slope) + "," +
               (c.valid() ? "true" : "false") + "," + std::to_string(c.beta1.size()) +
               "," + std::to_string(c.beta2.size()) + "," +
               (c.checks.at("alexander_equal") ? "true" : "false") + "\n";
    }
    return out;
}

}  // namespace braidforge
