#include "braidforge/json_io.hpp"

#include <json.hpp>

namespace braidforge {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json checks_to_json(const std::map<std::string, bool>& checks) {
    ordered_json j = ordered_json::object();
    for (const auto& [k, v] : checks) j[k] = v;
    return j;
}

std::map<std::string, bool> checks_from_json(const ordered_json& j) {
    std::map<std::string, bool> checks;
    for (auto it = j.begin(); it != j.end(); ++it) checks[it.key()] = it.value().get<bool>();
    return checks;
}

}  // namespace

std::string emit_json(const FiberednessCertificate& cert) {
    ordered_json j;
    j["params"] = {{"p", cert.params.p},
                   {"q", cert.params.q},
                   {"r", cert.params.r},
                   {"n", cert.params.n}};
    j["status"] = to_string(cert.status);
    if (cert.witness)
        j["witness"] = format_word(*cert.witness);
    else
        j["witness"] = nullptr;
    j["transcript"] = cert.transcript;
    j["checks"] = checks_to_json(cert.checks);
    if (cert.alexander_text) j["alexander"] = *cert.alexander_text;
    return j.dump(2) + "\n";
}

FiberednessCertificate parse_fiberedness_json(const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    FiberednessCertificate cert;
    cert.params = {j.at("params").at("p").get<long long>(),
                   j.at("params").at("q").get<int>(), j.at("params").at("r").get<int>(),
                   j.at("params").at("n").get<long long>()};
    cert.status = fibered_status_from_string(j.at("status").get<std::string>());
    if (!j.at("witness").is_null())
        cert.witness = parse_word(j.at("witness").get<std::string>());
    cert.transcript = j.at("transcript").get<std::vector<std::string>>();
    cert.checks = checks_from_json(j.at("checks"));
    if (j.contains("alexander")) cert.alexander_text = j.at("alexander").get<std::string>();
    return cert;
}

std::string emit_json(const ConjugacyCertificate& cert) {
    ordered_json j;
    j["family"] = {{"k", cert.family.k}, {"q", cert.family.q}, {"m", cert.family.m}};
    j["status"] = cert.valid() ? "VALID" : "FAILED";
    if (!cert.valid()) j["failed_check"] = cert.failed_check;
    j["beta1"] = format_word(cert.beta1);
    j["beta2"] = format_word(cert.beta2);
    j["gamma"] = format_word(cert.gamma);
    j["nf_left"] = cert.nf_left;
    j["nf_right"] = cert.nf_right;
    j["slope"] = cert.slope;
    j["seifert_data"] = cert.seifert_data;
    j["checks"] = checks_to_json(cert.checks);
    return j.dump(2) + "\n";
}

ConjugacyCertificate parse_conjugacy_json(const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    ConjugacyCertificate cert;
    cert.family = {j.at("family").at("k").get<long long>(),
                   j.at("family").at("q").get<int>(), j.at("family").at("m").get<int>()};
    if (j.contains("failed_check"))
        cert.failed_check = j.at("failed_check").get<std::string>();
    cert.beta1 = parse_word(j.at("beta1").get<std::string>());
    cert.beta2 = parse_word(j.at("beta2").get<std::string>());
    cert.gamma = parse_word(j.at("gamma").get<std::string>());
    cert.nf_left = j.at("nf_left").get<std::string>();
    cert.nf_right = j.at("nf_right").get<std::string>();
    cert.slope = j.at("slope").get<long long>();
    cert.seifert_data = j.at("seifert_data").get<std::vector<long long>>();
    cert.checks = checks_from_json(j.at("checks"));
    return cert;
}

}  // namespace braidforge
