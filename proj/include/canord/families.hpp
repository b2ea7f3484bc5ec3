#pragma once

#include "canord/cyclotomic.hpp"
#include "canord/matgroup.hpp"
#include "canord/ordercheck.hpp"
#include "canord/ramdata.hpp"
#include "canord/reps.hpp"

#include <optional>
#include <string>
#include <vector>

namespace canord {

enum class FamilyTag { A12xi, BLn, Bn, Ln, DLn, BDn, ADE, Anxi, NonGor, NonGorFixed };

std::string tag_name(FamilyTag t);
/// Parses a tag name; throws SchemaError for unknown names.
FamilyTag parse_tag(const std::string& s);

/// Family parameters. Unused fields are ignored by the constructor of the tag.
struct FamilySpec {
    FamilyTag tag = FamilyTag::BLn;
    int n = 0;
    int e = 0;
    int l = 1;
    /// Odd for L_n and DL_n (default 1), even for BD_n (default 2).
    std::optional<int> a;
    /// A<k>, D<k>, E6, E7 or E8 for the ADE tag.
    std::string ade_type;
};

/// Short display name such as "BL2", "A12xi(e=3,l=2)" or "ADE(E6)".
std::string family_name(const FamilySpec& s);

/// A matrix theta printed for one module of a family, with the convention it uses.
struct PrintedTheta {
    std::string module;
    Rep rep;
    CycMatrix theta;
    /// The matrix is printed in the opposite convention b^-1 theta b = chi^-1 theta,
    /// so its inverse is the one checked.
    bool inverse_convention = false;
};

struct FamilyData {
    FamilySpec spec;
    std::string name;
    Rep defining;
    MatrixGroup group;
    std::vector<Relation> relations;
    CycNumber central_scalar{1L};
    /// Complete list of irreducibles of the component, in display order.
    std::vector<Rep> irreps;
    /// Lifted actions checked by the family verdict (permissible modules, or the
    /// fixed action for the non-Gorenstein pair).
    std::vector<OrderAction> actions;
    std::vector<BranchImage> branch_images;
    RamReport expected_ram;
    /// n + 1, or -1 where the count is not defined.
    int expected_permissible = -1;
    int exceptional_curves = 0;
    int reflection_classes = 0;
    bool expected_gorenstein = true;
    std::vector<PrintedTheta> printed_thetas;
};

/// Ramification data of the table row for a family: centre, branch equations
/// in normal form, e_C and e_P.
RamReport expected_ramification(const FamilySpec& spec);

/// Constructs the group, relations, irreducibles and actions of a family.
/// Throws SchemaError for parameters outside the valid range.
FamilyData build(const FamilySpec& spec);

/// Standard generators of the finite subgroup of SL_2 of the given ADE type.
std::vector<CycMatrix> ade_generators(const std::string& type);

/// Relators word(h) g word(hg)^-1 = 1 for every edge of the Cayley graph of the
/// group that is not a tree edge of its breadth-first enumeration.
std::vector<Relation> cayley_relations(const MatrixGroup& g, const std::vector<std::string>& names);

struct FamilyReport {
    std::string family;
    bool normal = false;
    RamReport ram;
    RamReport expected_ram;
    bool ram_matches = false;
    std::string ram_diff;
    bool gorenstein_found = false;
    bool expected_gorenstein = true;
    /// Theta found for the first action, when one exists.
    std::optional<CycMatrix> theta;
    /// Every returned theta satisfies the inverse-determinant equivariance.
    bool theta_verified = false;
    int isotypic_dim = 0;
    int permissible_count = 0;
    int expected_permissible = -1;
    bool mckay_count_ok = false;
    /// Every reducible permissible module is a sum of two tau-related irreducibles.
    bool permissible_shape_ok = false;
    std::vector<std::string> permissible;
    bool printed_thetas_ok = false;

    bool ok() const;
};

/// Runs normality, ramification, Gorenstein, permissible and printed-theta checks.
FamilyReport check_family(const FamilyData& data);

/// McKay quiver of the family's component with the AR translation.
Quiver family_quiver(const FamilyData& data);

} // namespace canord
