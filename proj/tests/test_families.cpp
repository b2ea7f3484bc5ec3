#include "canord/errors.hpp"
#include "canord/families.hpp"

#include <doctest.h>

using namespace canord;

namespace {

FamilySpec spec_of(FamilyTag tag, int n, int e = 2, int l = 1) {
    FamilySpec s;
    s.tag = tag;
    s.n = n;
    s.e = e;
    s.l = l;
    return s;
}

FamilySpec ade(const std::string& type) {
    FamilySpec s;
    s.tag = FamilyTag::ADE;
    s.ade_type = type;
    return s;
}

} // namespace

TEST_CASE("tag names round-trip") {
    for (FamilyTag t : {FamilyTag::A12xi, FamilyTag::BLn, FamilyTag::Bn, FamilyTag::Ln, FamilyTag::DLn, FamilyTag::BDn,
                        FamilyTag::ADE, FamilyTag::Anxi, FamilyTag::NonGor, FamilyTag::NonGorFixed})
        CHECK(parse_tag(tag_name(t)) == t);
    CHECK_THROWS_AS(parse_tag("Qn"), SchemaError);
    CHECK_THROWS_AS(parse_tag(""), SchemaError);
}

TEST_CASE("parameter ranges") {
    CHECK_THROWS_AS(build(spec_of(FamilyTag::BLn, 0)), SchemaError);
    CHECK_THROWS_AS(build(spec_of(FamilyTag::DLn, 1)), SchemaError);
    CHECK_THROWS_AS(build(spec_of(FamilyTag::BDn, 1)), SchemaError);
    CHECK_THROWS_AS(build(spec_of(FamilyTag::A12xi, 1, 4, 2)), SchemaError);
    CHECK_THROWS_AS(build(spec_of(FamilyTag::Anxi, 1, 1)), SchemaError);
    CHECK_THROWS_AS(build(ade("F4")), SchemaError);
    FamilySpec bd = spec_of(FamilyTag::BDn, 2);
    bd.a = 1;
    CHECK_THROWS_AS(build(bd), SchemaError);
}

TEST_CASE("display names") {
    CHECK(family_name(spec_of(FamilyTag::BLn, 2)) == "BL2");
    CHECK(family_name(spec_of(FamilyTag::A12xi, 1, 3, 2)) == "A12xi(e=3,l=2)");
    CHECK(family_name(ade("E6")) == "ADE(E6)");
}

TEST_CASE("table ramification is attached to the built data") {
    for (const FamilySpec& s : {spec_of(FamilyTag::A12xi, 1, 3), spec_of(FamilyTag::BLn, 2), spec_of(FamilyTag::Bn, 2),
                                spec_of(FamilyTag::Ln, 1), spec_of(FamilyTag::DLn, 2), spec_of(FamilyTag::BDn, 3),
                                spec_of(FamilyTag::Anxi, 2, 3), ade("D4")}) {
        CAPTURE(family_name(s));
        const FamilyData d = build(s);
        CHECK_FALSE(ram_difference(d.expected_ram, expected_ramification(s)).has_value());
    }
    const RamReport bd = expected_ramification(spec_of(FamilyTag::BDn, 3));
    REQUIRE(bd.branches.size() == 3);
    CHECK(bd.centre == "smooth");
    CHECK(expected_ramification(ade("E7")).centre == "E7");
    CHECK(expected_ramification(spec_of(FamilyTag::Anxi, 3, 2)).centre == "A3");
}

TEST_CASE("sample families pass every check") {
    for (const FamilySpec& s : {spec_of(FamilyTag::A12xi, 1, 2), spec_of(FamilyTag::BLn, 1), spec_of(FamilyTag::Bn, 2),
                                spec_of(FamilyTag::Ln, 2), spec_of(FamilyTag::DLn, 2), spec_of(FamilyTag::BDn, 2),
                                spec_of(FamilyTag::Anxi, 1, 3, 2), ade("A2")}) {
        CAPTURE(family_name(s));
        const FamilyReport r = check_family(build(s));
        CHECK(r.normal);
        CHECK(r.ram_matches);
        CHECK(r.gorenstein_found);
        CHECK(r.theta_verified);
        CHECK(r.permissible_count == r.expected_permissible);
        CHECK(r.permissible_shape_ok);
        CHECK(r.printed_thetas_ok);
        CHECK(r.ok());
    }
}

TEST_CASE("McKay count is n + 1") {
    for (int n = 1; n <= 3; ++n) {
        const FamilyReport r = check_family(build(spec_of(FamilyTag::BLn, n)));
        CHECK(r.permissible_count == n + 1);
    }
}

TEST_CASE("non-Gorenstein pair") {
    const FamilyReport plain = check_family(build(spec_of(FamilyTag::NonGor, 0)));
    CHECK(plain.normal);
    CHECK_FALSE(plain.gorenstein_found);
    CHECK(plain.isotypic_dim == 0);
    CHECK(plain.ok());

    const FamilyReport fixed = check_family(build(spec_of(FamilyTag::NonGorFixed, 0)));
    CHECK(fixed.gorenstein_found);
    CHECK(fixed.isotypic_dim == 3);
    CHECK(fixed.ok());
}

TEST_CASE("printed thetas in the opposite convention") {
    const FamilyData d = build(spec_of(FamilyTag::A12xi, 1, 3));
    REQUIRE_FALSE(d.printed_thetas.empty());
    for (const PrintedTheta& pt : d.printed_thetas) {
        REQUIRE(pt.inverse_convention);
        const OrderAction act{pt.module, d.defining, pt.rep};
        CHECK(verify_theta(act, inverse(pt.theta)));
    }
}

TEST_CASE("cyclic quotient theta is a negative power of the diagonal generator") {
    // n = 1, e = 3: p = n + 1 = 2, and the exponent must be -p rather than +p.
    const FamilyData d = build(spec_of(FamilyTag::Anxi, 1, 3));
    for (const Rep& v : d.irreps) {
        CAPTURE(v.label);
        const OrderAction act{v.label, d.defining, v};
        const CycMatrix& sigma = v.image("sigma");
        CHECK(verify_theta(act, sigma.pow(-2)));
        CHECK_FALSE(verify_theta(act, sigma.pow(2)));
    }
}

TEST_CASE("quivers carry an AR translation permutation") {
    const Quiver q = family_quiver(build(spec_of(FamilyTag::BDn, 2)));
    const std::size_t k = q.vertices.size();
    REQUIRE(q.tau.size() == k);
    std::vector<int> seen(k, 0);
    for (int t : q.tau) ++seen.at(static_cast<std::size_t>(t));
    for (int c : seen) CHECK(c == 1);
}
