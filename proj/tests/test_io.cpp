#include <catch_amalgamated.hpp>

#include "cliffgen/io.hpp"

using namespace cliffgen;

TEST_CASE("json schema for a quaternionic representation") {
    Representation rep = generator_matrices(Signature(1, 3));
    nlohmann::json j = to_json(rep);
    CHECK(j["schema"] == "cliffgen/1");
    CHECK(j["signature"] == nlohmann::json({1, 3}));
    CHECK(j["ring"] == "H");
    CHECK(j["dim"] == 2);
    CHECK(j["k"] == 1);
    CHECK(j["generating_set"] == nlohmann::json({"g12"}));
    CHECK(j["idempotent"] == "1/2 + 1/2 g12");
    CHECK(j["basis"] == nlohmann::json({"1", "g1"}));
    CHECK(j["scalar_units"]["i"] == "g3");
    CHECK(j["scalar_units"]["j"] == "g4");
    CHECK(j["scalar_units"]["k"] == "g34");
    REQUIRE(j["generators"].size() == 4);
    CHECK(j["generators"][0]["index"] == 1);
    // quaternion entries are [a,b,c,d] component strings
    CHECK(j["generators"][2]["matrix"][0][0] == nlohmann::json({"0", "1", "0", "0"}));
    CHECK(j["generators"][2]["matrix"][1][1] == nlohmann::json({"0", "-1", "0", "0"}));
}

TEST_CASE("json entries per ring") {
    Representation r_rep = generator_matrices(Signature(3, 1));
    nlohmann::json jr = to_json(r_rep);
    CHECK(jr["ring"] == "R");
    CHECK(jr["generators"][0]["matrix"][0][0] == "1");

    Representation c_rep = generator_matrices(Signature(1, 2));
    nlohmann::json jc = to_json(c_rep);
    CHECK(jc["generators"][2]["matrix"][0][0] == nlohmann::json({"0", "1"}));

    Representation ss = generator_matrices(Signature(0, 3));
    nlohmann::json js = to_json(ss);
    CHECK(js["ring"] == "H+H");
    CHECK(js["generators"][0].contains("matrix_hat"));
}

TEST_CASE("text and latex emitters") {
    Representation rep = generator_matrices(Signature(1, 2));
    std::string text = to_text(rep);
    CHECK(text.find("Cl(1,2)") != std::string::npos);
    CHECK(text.find("ring C") != std::string::npos);
    CHECK(text.find("scalar units: i=g3F") != std::string::npos);

    std::string latex = to_latex(rep);
    CHECK(latex.find("\\gamma_{1}") != std::string::npos);
    CHECK(latex.find("\\begin{array}{cc}") != std::string::npos);
    CHECK(latex.find("-i") != std::string::npos);
}
