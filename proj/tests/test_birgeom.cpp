#include "canord/birgeom.hpp"
#include "canord/errors.hpp"
#include "canord/fixtures.hpp"

#include <doctest.h>

#include <numeric>

using namespace canord;

namespace {

GermConfig germ(std::vector<RamBranch> branches, int ak = 0) {
    GermConfig g;
    g.ak = ak;
    g.branches = std::move(branches);
    return g;
}

FamilySpec spec_of(FamilyTag tag, int n, int e = 2) {
    FamilySpec s;
    s.tag = tag;
    s.n = n;
    s.e = e;
    return s;
}

std::vector<GermConfig> sample_germs() {
    std::vector<GermConfig> out;
    for (FamilyTag tag : {FamilyTag::BLn, FamilyTag::Bn, FamilyTag::Ln})
        for (int n = 1; n <= 3; ++n) out.push_back(family_germ(spec_of(tag, n)));
    for (FamilyTag tag : {FamilyTag::DLn, FamilyTag::BDn})
        for (int n = 2; n <= 3; ++n) out.push_back(family_germ(spec_of(tag, n)));
    for (int e = 2; e <= 4; ++e) out.push_back(family_germ(spec_of(FamilyTag::A12xi, 1, e)));
    out.push_back(germ({{"x", 3, 1}, {"y", 3, 1}}));
    out.push_back(germ({{"x", 4, 2}, {"y", 2, 2}}));
    out.push_back(germ({{"y^2 - x^3", 3, 1}}));
    out.push_back(germ({{"x", 2, 1}, {"y", 2, 1}, {"x - y", 2, 1}}));
    return out;
}

} // namespace

TEST_CASE("polynomial parsing and arithmetic") {
    const Poly2 f = Poly2::parse("y^2 - x^3");
    CHECK(f == Poly2::y().pow(2) - Poly2::x().pow(3));
    CHECK(Poly2::parse("x + y") * Poly2::parse("x - y") == Poly2::parse("x^2 - y^2"));
    CHECK(Poly2::parse("2x*y") == Poly2::monomial(1, 1, 2));
    CHECK_THROWS_AS(Poly2::parse("x^"), SchemaError);
}

TEST_CASE("local intersection multiplicities") {
    CHECK(local_intersection(Poly2::x(), Poly2::y()) == 1);
    CHECK(local_intersection(Poly2::parse("y"), Poly2::parse("y - x^3")) == 3);
    CHECK(local_intersection(Poly2::parse("y^2 - x^3"), Poly2::x()) == 2);
    CHECK(local_intersection(Poly2::parse("y^2 - x^3"), Poly2::y()) == 3);
    CHECK(local_intersection(Poly2::parse("y^2 - x^3"), Poly2::parse("y^2 + x^3")) == 6);
    CHECK(local_intersection(Poly2::parse("y - x^2"), Poly2::parse("y + x^2")) == 2);
}

TEST_CASE("schema validation") {
    CHECK_NOTHROW(validate(germ({{"x", 2, 1}})));
    CHECK_THROWS_AS(validate(germ({{"x", 2, 3}})), SchemaError);
    CHECK_THROWS_AS(validate(germ({{"x", 0, 1}})), SchemaError);
    CHECK_THROWS_AS(validate(germ({{"x", 1, 1}})), SchemaError);
    CHECK_THROWS_AS(validate(germ({{"z", 2, 2}})), SchemaError);
    CHECK_THROWS_AS(validate(germ({{"x + 1", 2, 1}})), SchemaError);
}

TEST_CASE("reference germs") {
    SUBCASE("smooth unramified germ is terminal") {
        const Classification c = classify(germ({}));
        CHECK(c.name == "terminal");
        CHECK(c.discrep.to_string() == "1");
        CHECK(c.per_exceptional.empty());
    }
    SUBCASE("cusp with e = 3 and trivial cover") {
        const Classification c = classify(germ({{"y^2 - x^3", 3, 1}}));
        CHECK(c.name == "log_terminal");
        CHECK(c.discrep.to_string() == "-1/3");
    }
    SUBCASE("five lines of index 2") {
        const Classification c = classify(germ(
            {{"x", 2, 1}, {"y", 2, 1}, {"x - y", 2, 1}, {"x + y", 2, 1}, {"x - 2y", 2, 1}}));
        CHECK(c.name == "not_log_terminal");
        CHECK(c.discrep.minus_infinity);
        CHECK(c.discrep.to_string() == "-inf");
    }
    SUBCASE("A1 Kleinian centre") {
        const Classification c = classify(germ({}, 1));
        CHECK(c.name == "canonical");
        CHECK(c.discrep.to_string() == "0");
    }
    SUBCASE("terminal node with divisible indices") {
        const GermConfig g = germ({{"x", 4, 2}, {"y", 2, 2}});
        CHECK(terminal_check(g));
        const Classification c = classify(g);
        CHECK(c.name == "terminal");
        CHECK(c.discrep.to_string() == "1/4");
    }
}

TEST_CASE("nested class flags") {
    for (const GermConfig& g : sample_germs()) {
        CAPTURE(to_string(g.as_report()));
        const Classification c = classify(g);
        if (c.terminal) CHECK(c.canonical);
        if (c.canonical) CHECK(c.log_terminal);
        CHECK(c.terminal == (!c.discrep.minus_infinity && c.discrep.value > 0));
        CHECK(c.canonical == (!c.discrep.minus_infinity && c.discrep.value >= 0));
        CHECK(c.log_terminal == (!c.discrep.minus_infinity && c.discrep.value > -1));
    }
}

TEST_CASE("discrepancy identities on log resolutions") {
    for (const GermConfig& g : sample_germs()) {
        CAPTURE(to_string(g.as_report()));
        const Resolution res = resolve(g);
        CHECK_NOTHROW(require_negative_definite(res.config));
        const auto solved = intersection_discrepancies(res.config);
        const auto recursed = recursion_discrepancies(res);
        const auto commutative = commutative_discrepancies(res.config);
        REQUIRE(solved.size() == recursed.size());
        for (std::size_t i = 0; i < solved.size(); ++i) {
            CHECK(solved[i].id == recursed[i].id);
            CHECK(solved[i].raw == recursed[i].raw);
            const mpq_class b = commutative.at(solved[i].id);
            CHECK(solved[i].raw == mpq_class(1) - mpq_class(1, solved[i].e) + b);
            if (b >= -1) CHECK(solved[i].e * solved[i].raw >= b);
        }
    }
}

TEST_CASE("minimal resolutions match the drawn graphs") {
    std::vector<FamilySpec> specs;
    for (FamilyTag tag : {FamilyTag::BLn, FamilyTag::Bn, FamilyTag::Ln})
        for (int n = 1; n <= 3; ++n) specs.push_back(spec_of(tag, n));
    for (FamilyTag tag : {FamilyTag::DLn, FamilyTag::BDn})
        for (int n = 2; n <= 3; ++n) specs.push_back(spec_of(tag, n));
    specs.push_back(spec_of(FamilyTag::A12xi, 1, 3));
    for (const FamilySpec& s : specs) {
        CAPTURE(family_name(s));
        const ResolutionConfig cfg = minimal_resolution(family_germ(s));
        CHECK(resolution_isomorphic(cfg, figure_resolution(s)));
        for (const auto& d : intersection_discrepancies(cfg)) CHECK(d.a == 0);
        CHECK(expcurve_shape_check(cfg));
        CHECK_FALSE(adjacency_violation(cfg).has_value());
        CHECK_NOTHROW(four_case_check(cfg));
    }
}

TEST_CASE("A_k centres") {
    const GermConfig g = germ({{"z", 3, 3}, {"z", 3, 3}}, 2);
    const ResolutionConfig cfg = ak_template(g);
    CHECK(cfg.exceptional_indices().size() == 2);
    CHECK(resolution_isomorphic(cfg, figure_resolution([] {
              FamilySpec s = spec_of(FamilyTag::Anxi, 2, 3);
              return s;
          }())));
    const TypeMatch t = recognize_type(g);
    CHECK(t.tag == "Anxi");
    CHECK(t.n == 2);
    CHECK(t.e == 3);

    const TypeMatch ade = recognize_type(germ({}, 3));
    CHECK(ade.tag == "ADE");
    CHECK(ade.ade_type == "A3");

    CHECK_THROWS_AS(classify(germ({{"z", 2, 2}}, 1)), UnsupportedError);
}

TEST_CASE("four-case cells") {
    const auto a12 = four_case_check(minimal_resolution(germ({{"x", 4, 2}, {"y", 4, 2}})));
    REQUIRE(a12.size() == 1);
    CHECK(a12[0].self_int == -1);
    CHECK(a12[0].in_discriminant);
    CHECK(a12[0].cell == "E^2=-1, E in D: Delta = (1-1/e)E + (1-1/2e)(U+V)");

    const auto bl1 = four_case_check(minimal_resolution(family_germ(spec_of(FamilyTag::BLn, 1))));
    REQUIRE(bl1.size() == 1);
    CHECK(bl1[0].cell == "E^2=-1, E not in D: Delta = D/2, E.D = 2");

    const auto dl3 = four_case_check(minimal_resolution(family_germ(spec_of(FamilyTag::DLn, 3))));
    int ramified_minus_two = 0;
    for (const auto& fc : dl3)
        if (fc.cell == "E^2=-2, E in D: Delta = (1-1/e)(E+U+V)") ++ramified_minus_two;
    CHECK(ramified_minus_two == 2);
}

TEST_CASE("exceptional shape and adjacency rules") {
    ResolutionConfig two_minus_one;
    two_minus_one.add_curve({0, true, -1, 1, "E0"});
    two_minus_one.add_curve({1, true, -1, 1, "E1"});
    two_minus_one.set_dot(0, 1, 1);
    CHECK_FALSE(expcurve_shape_check(two_minus_one));

    ResolutionConfig mixed;
    mixed.add_curve({0, true, -2, 2, "E0"});
    mixed.add_curve({1, true, -2, 1, "E1"});
    mixed.set_dot(0, 1, 1);
    CHECK(adjacency_violation(mixed).has_value());

    ResolutionConfig ramified_top;
    ramified_top.add_curve({0, true, -2, 2, "E0"});
    ramified_top.add_curve({1, true, -1, 2, "E1"});
    ramified_top.set_dot(0, 1, 1);
    CHECK(adjacency_violation(ramified_top).has_value());
}

TEST_CASE("type recognition") {
    const TypeMatch dl = recognize_type(germ({{"x", 2, 2}, {"y^2 - x^3", 2, 2}}));
    CHECK(dl.tag == "DLn");
    CHECK(dl.n == 2);

    const TypeMatch a12 = recognize_type(germ({{"x", 4, 2}, {"y", 4, 2}}));
    CHECK(a12.tag == "A12xi");
    CHECK(a12.e == 2);

    const TypeMatch b = recognize_type(germ({{"y - x^2", 2, 1}, {"y + x^2", 2, 1}}));
    CHECK(b.tag == "Bn");
    CHECK(b.n == 2);

    CHECK(recognize_type(germ({})).tag == "terminal");
    CHECK_THROWS_AS(recognize_type(germ({{"x", 3, 1}, {"y", 3, 1}})), UnsupportedError);
}

TEST_CASE("unsupported configurations") {
    CHECK_THROWS_AS(classify(germ({{"x", 2, 2}, {"y", 4, 4}})), UnsupportedError);
    CHECK_THROWS_AS(minimal_resolution(germ({{"x", 3, 1}, {"y", 3, 1}})), UnsupportedError);
}

TEST_CASE("DOT rendering") {
    const std::string dot = resolution_to_dot(minimal_resolution(germ({{"x", 4, 2}, {"y", 4, 2}})));
    CHECK(dot.rfind("graph R {", 0) == 0);
    CHECK(dot.find("shape=doublecircle") != std::string::npos);
    CHECK(dot.find("c0 -- c2") != std::string::npos);
}
