#include "canord/errors.hpp"
#include "canord/families.hpp"
#include "canord/ordercheck.hpp"

#include <doctest.h>

using namespace canord;

namespace {

FamilyData family(FamilyTag tag, int n, int e = 2) {
    FamilySpec s;
    s.tag = tag;
    s.n = n;
    s.e = e;
    return build(s);
}

} // namespace

TEST_CASE("eigenspace test at reflection lines") {
    const FamilyData d = family(FamilyTag::BLn, 2);
    REQUIRE_FALSE(d.actions.empty());
    for (const OrderAction& act : d.actions) {
        CAPTURE(act.label);
        const NormalityReport r = normality(act);
        CHECK(r.normal);
        REQUIRE_FALSE(r.lines.empty());
        for (const LineReport& l : r.lines) {
            CHECK(l.equidimensional);
            CHECK(l.inertia_order == 2);
            int total = 0;
            for (const auto& [value, dim] : l.eigenspaces) total += dim;
            CHECK(total == act.degree());
        }
    }
}

TEST_CASE("a one-dimensional summand misses inertia eigenvalues") {
    // Equidimensional, but a permissible module needs every inertia eigenvalue.
    const FamilyData d = family(FamilyTag::BLn, 1);
    const OrderAction act{"rho0", d.defining, d.irreps.front()};
    const NormalityReport r = normality(act);
    CHECK(r.normal);
    for (const LineReport& l : r.lines) CHECK(l.eigenspaces.size() < static_cast<std::size_t>(l.inertia_order));
}

TEST_CASE("ramification read off the action") {
    for (const FamilyData& d : {family(FamilyTag::Bn, 2), family(FamilyTag::DLn, 2), family(FamilyTag::A12xi, 1, 3)}) {
        CAPTURE(d.name);
        const RamReport got = ramification_report(d.actions.front(), d.branch_images);
        CHECK_FALSE(ram_difference(got, d.expected_ram).has_value());
    }
}

TEST_CASE("Gorenstein theta") {
    const FamilyData d = family(FamilyTag::Ln, 2);
    for (const OrderAction& act : d.actions) {
        CAPTURE(act.label);
        const auto basis = isotypic_component(act, inverse_determinants(act));
        CHECK_FALSE(basis.empty());
        CHECK(generic_determinant_nonzero(basis));
        CHECK(graded_omega_dim(act, 0) == static_cast<int>(basis.size()));
        const auto theta = gorenstein_theta(act);
        REQUIRE(theta.has_value());
        CHECK(verify_theta(act, *theta));
        CHECK_FALSE(verify_theta(act, CycMatrix(act.degree(), act.degree())));
    }
}

TEST_CASE("generic determinant") {
    CHECK(generic_determinant_nonzero({CycMatrix::identity(2)}));
    CHECK_FALSE(generic_determinant_nonzero({CycMatrix::diag({1L, 0L})}));
    CHECK(generic_determinant_nonzero({CycMatrix::diag({1L, 0L}), CycMatrix::diag({0L, 1L})}));
    CHECK_FALSE(generic_determinant_nonzero({}));
}

TEST_CASE("permissible modules of the dihedral family") {
    for (int n = 1; n <= 3; ++n) {
        const FamilyData d = family(FamilyTag::Bn, n);
        const auto mods = permissible_modules(d.defining, d.irreps);
        CHECK(static_cast<int>(mods.size()) == n + 1);
        for (const PermissibleModule& pm : mods) {
            CHECK_FALSE(pm.parts.empty());
            CHECK(pm.parts.size() <= 2);
        }
    }
}

TEST_CASE("non-Gorenstein action has an empty inverse-determinant component") {
    const FamilyData d = family(FamilyTag::NonGor, 0);
    const OrderAction& act = d.actions.front();
    CHECK(normality(act).normal);
    CHECK(isotypic_component(act, inverse_determinants(act)).empty());
    CHECK_FALSE(gorenstein_theta(act).has_value());
}
