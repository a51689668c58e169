#include <doctest.h>

#include <sstream>

#include "hrdc/report_json.hpp"
#include "schema_check.hpp"

using namespace hrdc;

TEST_CASE("tower descriptor round trip and tamper rejection") {
    auto t = FieldTower::build(2, 1, 3);
    json desc = tower_descriptor(*t);
    auto t2 = tower_from_descriptor(desc);
    CHECK(t2->q() == t->q());
    CHECK(t2->modulus_top() == t->modulus_top());
    schema_check::validate_against("code_header.schema.json", desc);

    json bad = desc;
    bad["moduli"][1] = std::vector<int>{0, 0, 1};  // not the canonical F_{q²} modulus
    CHECK_THROWS_AS(tower_from_descriptor(bad), std::invalid_argument);
}

TEST_CASE("element encodings nest down to F_p and round trip") {
    auto t = FieldTower::build(2, 2, 2);  // q = 4 exercises the m > 1 nesting
    for (int a = 0; a < t->q2(); ++a) {
        json j = fq2_to_json(*t, a);
        REQUIRE(j.is_array());
        REQUIRE(j.size() == 2);
        for (const json& part : j) {
            REQUIRE(part.is_array());
            REQUIRE(part.size() == 2);  // m = 2 digits
            for (const json& digit : part) {
                CHECK(digit.is_number_integer());
                CHECK(digit.get<int>() >= 0);
                CHECK(digit.get<int>() < t->p());
            }
        }
        CHECK(fq2_from_json(*t, j) == a);
    }
    CHECK_THROWS_AS(fq2_from_json(*t, json::array({1, 2, 3})), std::invalid_argument);
}

TEST_CASE("code JSONL round trip") {
    for (auto spec : {ConstructionSpec{Family::Thm42, 3, 3, 2}, ConstructionSpec{Family::Thm43, 2, 2, 2}}) {
        CodeSet y = construct(spec);
        std::stringstream ss;
        write_code_jsonl(ss, y);
        CodeSet back = read_code_jsonl(ss);
        CHECK(back.n == y.n);
        CHECK(back.mats == y.mats);
    }
}

TEST_CASE("matrix decoding rejects malformed input") {
    auto t = FieldTower::build(2, 1, 2);
    // non-Hermitian: entry (1,0) must be the conjugate of entry (0,1)
    json bad = json::parse(R"([[[[0],[0]],[[0],[1]]],[[[0],[1]],[[0],[0]]]])");
    CHECK_THROWS_AS(matrix_from_json(*t, bad), std::invalid_argument);
    json not_square = json::parse(R"([[[[0],[0]]]])");
    CHECK_NOTHROW(matrix_from_json(*t, not_square));  // 1x1 is square
    json ragged = json::parse(R"([[[[0],[0]],[[0],[0]]],[[[0],[0]]]])");
    CHECK_THROWS_AS(matrix_from_json(*t, ragged), std::invalid_argument);
}

TEST_CASE("CLI-shaped JSON validates against the shipped schemas") {
    schema_check::validate_against("eigen.schema.json", qtable_to_json(q_explicit(2, 2)));
    schema_check::validate_against("eigen.schema.json", qtable_to_json(q_direct(2, 3)));
    schema_check::validate_against("bounds.schema.json",
                                   bound_report_to_json(full_bound_report(2, 2, 2)));
    schema_check::validate_against("bounds.schema.json",
                                   bound_report_to_json(full_bound_report(3, 3, 2)));

    CodeSet y = construct_thm43(2, 2);
    schema_check::validate_against("analysis.schema.json", analysis_to_json(y));

    schema_check::validate_against(
        "census.schema.json",
        census_to_json({Family::Thm42, 3, 3, 2}, construction_rank_census({Family::Thm42, 3, 3, 2})));

    schema_check::validate_against("search.schema.json",
                                   search_result_to_json(max_code_search(2, 2, 2)));

    SuiteResult fake;
    fake.suite = "identities";
    fake.checks = 3;
    fake.failures = {"example failure"};
    json verify_out;
    verify_out["suites"] = json::array({suite_result_to_json(fake)});
    verify_out["pass"] = false;
    schema_check::validate_against("verify.schema.json", verify_out);

    json run;
    run["family"] = "thm42";
    run["n"] = 3;
    run["d"] = 3;
    run["q"] = 2;
    run["matrix_cap"] = 4194304;
    schema_check::validate_against("run.schema.json", run);
}

TEST_CASE("analysis of the non-additive code keeps exact rationals") {
    CodeSet y = construct_thm43(2, 2);
    json j = analysis_to_json(y);
    CHECK(j["additive"] == false);
    CHECK(j["size"] == "5");
    CHECK(j["inner"] == json::array({"1", "0", "4"}));
    CHECK(j["dual"] == json::array({"5", "9", "2"}));
    CHECK(j["min_distance"] == 2);
}

TEST_CASE("eigen CSV is not produced by the library, JSON carries exact strings") {
    json j = qtable_to_json(q_explicit(6, 5));
    // the largest entry of the n = 6, q = 5 table does not fit in 64 bits; exactness requires
    // the string rendering
    CHECK(j["table"][6][0].get<std::string>().size() > 19);
}
