#include "canord/errors.hpp"
#include "canord/fixtures.hpp"
#include "canord/serialize.hpp"

#include <doctest.h>

#include <cstdlib>

using namespace canord;

TEST_CASE("rationals") {
    CHECK(rational_to_string(mpq_class(3, 6)) == "1/2");
    CHECK(rational_to_string(mpq_class(-4, 2)) == "-2");
    CHECK(rational_from_string("-7/21") == mpq_class(-1, 3));
    CHECK(rational_from_string("5") == 5);
    CHECK_THROWS_AS(rational_from_string("1/0"), SchemaError);
    CHECK_THROWS_AS(rational_from_string("abc"), SchemaError);
}

TEST_CASE("cyclotomic numbers and matrices round-trip") {
    const CycNumber z = root_of_unity(12);
    const CycNumber x = z * mpq_class(2, 3) + z.pow(5) - CycNumber(1L);
    CHECK(cyc_from_json(to_json(x)) == x);
    const CycMatrix m = CycMatrix::from_rows({{z, 0L}, {CycNumber(1L), z.inverse()}});
    CHECK(matrix_from_json(to_json(m)) == m);
    CHECK_THROWS_AS(cyc_from_json(Json::parse(R"({"conductor": 5, "coeffs": ["1"]})")), SchemaError);
}

TEST_CASE("germ schema") {
    const Json good = Json::parse(R"({"centre": "smooth", "branches": [{"eq": "y^2 - x^5", "eC": 2, "eP": 1}]})");
    const GermConfig g = germ_from_json(good);
    CHECK(g.ak == 0);
    REQUIRE(g.branches.size() == 1);
    CHECK(g.branches[0].eC == 2);
    CHECK(germ_from_json(to_json(g)).branches[0].equation == g.branches[0].equation);

    const GermConfig ak = germ_from_json(Json::parse(R"({"centre": {"Ak": 3}, "branches": []})"));
    CHECK(ak.ak == 3);

    for (const char* bad : {
             R"({"branches": []})",
             R"({"centre": "cone", "branches": []})",
             R"({"centre": "smooth", "branches": [{"eq": "x", "eC": 2}]})",
             R"({"centre": "smooth", "branches": [{"eq": "x", "eC": 2, "eP": 1, "extra": 0}]})",
             R"({"centre": "smooth", "branches": [{"eq": "x", "eC": "2", "eP": 1}]})",
             R"({"centre": "smooth", "branches": [{"eq": "x", "eC": 4, "eP": 3}]})",
         }) {
        CAPTURE(bad);
        CHECK_THROWS_AS(germ_from_json(Json::parse(bad)), SchemaError);
    }
}

TEST_CASE("family parameters") {
    const FamilySpec s = family_spec_from_json(Json::parse(R"({"type": "Anxi", "n": 2, "e": 3, "l": 2})"));
    CHECK(s.tag == FamilyTag::Anxi);
    CHECK(s.n == 2);
    CHECK(s.e == 3);
    CHECK(s.l == 2);
    CHECK(family_spec_from_json(to_json(s)).l == 2);
    CHECK_THROWS_AS(family_spec_from_json(Json::parse(R"({"type": "Zn"})")), SchemaError);
    CHECK_THROWS_AS(family_spec_from_json(Json::parse(R"({"n": 2})")), SchemaError);
}

TEST_CASE("resolutions round-trip") {
    GermConfig g;
    g.branches = {{"x", 4, 2}, {"y", 4, 2}};
    const ResolutionConfig cfg = minimal_resolution(g);
    const ResolutionConfig back = resolution_from_json(to_json(cfg));
    CHECK(resolution_isomorphic(cfg, back));
    CHECK(to_json(back) == to_json(cfg));
}

TEST_CASE("reports carry the version") {
    GermConfig g;
    const Json c = classification_report(g, classify(g));
    CHECK(c.at("version") == version());
    CHECK(c.at("class") == "terminal");
    const Json err = error_report("schema", "bad input");
    CHECK(err.at("error").at("kind") == "schema");
    CHECK(err.at("error").at("message") == "bad input");
}

TEST_CASE("quiver fixtures") {
    const Quiver a2 = load_quiver_fixture("ade_a2");
    CHECK(a2.vertices.size() == 3);
    CHECK(a2.tau.size() == 3);
    const Quiver back = quiver_from_json(to_json(a2));
    CHECK(back.arrows == a2.arrows);
    CHECK(back.tau == a2.tau);
    CHECK_THROWS_AS(load_quiver_fixture("no_such_quiver"), SchemaError);
}

TEST_CASE("fixture directory override") {
    const std::string original = fixture_dir();
    ::setenv(kFixtureDirEnv, "/nonexistent/fixtures", 1);
    CHECK(fixture_dir() == "/nonexistent/fixtures");
    CHECK_THROWS_AS(load_quiver_fixture("ade_a2"), SchemaError);
    ::unsetenv(kFixtureDirEnv);
    CHECK(fixture_dir() == original);
}
