#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "braidforge/json_io.hpp"

using namespace braidforge;

TEST_CASE("fiberedness certificate json round trip") {
    for (TTKParams params : {TTKParams{5, 3, 2, -1}, TTKParams{4, 3, 2, -2},
                             TTKParams{5, 3, 2, 1}, TTKParams{4, 4, 2, -3}}) {
        FiberednessCertificate cert = fiberedness_certificate(params);
        std::string text = emit_json(cert);
        FiberednessCertificate back = parse_fiberedness_json(text);
        CHECK(back == cert);
        CHECK(emit_json(back) == text);
    }
}

TEST_CASE("fiberedness json carries the expected fields") {
    FiberednessCertificate cert = fiberedness_certificate({4, 3, 2, -2});
    auto j = nlohmann::json::parse(emit_json(cert));
    CHECK(j["params"]["p"] == 4);
    CHECK(j["params"]["n"] == -2);
    CHECK(j["status"] == "NecessaryConditionFails");
    CHECK(j["alexander"] == "2*t^2 - 3*t + 2");
    CHECK(j["witness"].is_null());
    CHECK(j["checks"]["alexander_non_monic"] == true);
}

TEST_CASE("conjugacy certificate json round trip") {
    for (FamilyParams fam : {FamilyParams{2, 3, 1}, FamilyParams{2, 2, 1},
                             FamilyParams{3, 5, 2}}) {
        ConjugacyCertificate cert = verify_conjugacy(fam);
        std::string text = emit_json(cert);
        ConjugacyCertificate back = parse_conjugacy_json(text);
        CHECK(back == cert);
        CHECK(emit_json(back) == text);
    }
}

TEST_CASE("conjugacy json carries the expected fields") {
    ConjugacyCertificate cert = verify_conjugacy({2, 3, 1});
    auto j = nlohmann::json::parse(emit_json(cert));
    CHECK(j["family"]["k"] == 2);
    CHECK(j["status"] == "VALID");
    CHECK(j["slope"] == 20);
    CHECK(j["seifert_data"] == nlohmann::json::array({2, 1, 2}));
    CHECK(j["nf_left"] == j["nf_right"]);
    CHECK(j["beta1"] == format_word(ttk_braid({7, 3, 1, -1})));
}
