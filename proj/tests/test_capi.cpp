#include <doctest.h>

#include <string>

#include "hymin.h"
#include "json_records.hpp"

TEST_SUITE("c-api") {

TEST_CASE("parse, stringify, free") {
    hymin_form* f = nullptr;
    REQUIRE(hymin_form_parse("x0^3 - x1^3", &f) == HYMIN_OK);
    CHECK(hymin_form_degree(f) == 3);
    CHECK(hymin_form_num_vars(f) == 2);
    char* s = nullptr;
    REQUIRE(hymin_form_to_string(f, &s) == HYMIN_OK);
    CHECK(std::string(s) == "x0^3 - x1^3");
    hymin_string_free(s);
    hymin_form_free(f);
}

TEST_CASE("contract violations yield status 2") {
    hymin_form* f = nullptr;
    CHECK(hymin_form_parse("x0^2 + x1", &f) == HYMIN_CONTRACT);
    CHECK(std::string(hymin_last_error()).find("homogeneous") != std::string::npos);

    REQUIRE(hymin_form_parse("x0^3 + x1^3 + x2^3 + x3^3", &f) == HYMIN_OK);
    char* out = nullptr;
    // quaternary global minimization without a prime list
    CHECK(hymin_minimize_global(f, nullptr, &out) == HYMIN_CONTRACT);
    // composite "prime"
    CHECK(hymin_minimize(f, "6", "dfs", &out) == HYMIN_CONTRACT);
    hymin_form_free(f);
}

TEST_CASE("weights output") {
    char* out = nullptr;
    REQUIRE(hymin_weights(2, 3, 0, &out) == HYMIN_OK);
    std::string s(out);
    hymin_string_free(out);
    CHECK(s == "[0,0,1]\n[0,1,1]\n[0,1,2]\n[0,2,3]\n");
}

TEST_CASE("minimize via the shared surface and JSON round trip") {
    hymin_form* f = nullptr;
    REQUIRE(hymin_form_parse("x1^2 + 5*x0*x1 + 25*x0^2", &f) == HYMIN_OK);
    char* out = nullptr;
    REQUIRE(hymin_minimize(f, "5", "dfs", &out) == HYMIN_OK);
    std::string json(out);
    hymin_string_free(out);
    hymin_form_free(f);
    CHECK(json.find("\"success\":true") != std::string::npos);

    // parse(render(record)) == record
    auto rec = hymin::records::parse_result_json(json);
    auto again = hymin::records::parse_result_json(hymin::records::rerender_result_json(rec));
    CHECK(rec.form == again.form);
    CHECK(rec.matrix == again.matrix);
    CHECK(rec.scale_exps == again.scale_exps);
}

TEST_CASE("invariants through the C surface") {
    hymin_form* f = nullptr;
    REQUIRE(hymin_form_parse("x0*x1*x2 + x1^3 + x2^3", &f) == HYMIN_OK);
    char* out = nullptr;
    REQUIRE(hymin_invariants(f, &out) == HYMIN_OK);
    std::string s(out);
    hymin_string_free(out);
    hymin_form_free(f);
    CHECK(s.find("\"c4\"") != std::string::npos);
    CHECK(s.find("\"gcd\":\"1\"") != std::string::npos);
}

TEST_CASE("seed plumbs through") {
    hymin_set_seed(42);
    CHECK(hymin_get_seed() == 42);
    hymin_set_seed(0x9e3779b97f4a7c15ULL);
}

} // TEST_SUITE c-api
