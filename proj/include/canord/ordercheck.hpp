#pragma once

#include "canord/cyclotomic.hpp"
#include "canord/matgroup.hpp"
#include "canord/ramdata.hpp"
#include "canord/reps.hpp"

#include <optional>
#include <string>
#include <vector>

namespace canord {

/// A group G in GL_2 acting on S (x) k^{m x m}: the defining 2-dimensional
/// representation together with lifted images b_g in GL_m on the same generators.
struct OrderAction {
    std::string label;
    Rep defining;
    Rep lift;

    int degree() const { return lift.dim; }
};

/// Image of a reflection line in the quotient: the equation of the discriminant branch.
struct BranchImage {
    Line direction;
    std::string equation;
};

struct LineReport {
    Line direction;
    std::size_t orbit_size = 0;
    int inertia_order = 0;
    /// Eigenvalues of the lifted inertia generator with the dimensions of their eigenspaces.
    std::vector<std::pair<CycNumber, int>> eigenspaces;
    bool equidimensional = false;
    int eC = 1;
};

struct NormalityReport {
    bool normal = false;
    std::vector<LineReport> lines;
};

/// Eigenspace test at every reflection line. Throws UnsupportedError when the
/// determinant does not split a line stabilizer as inertia times kernel.
NormalityReport normality(const OrderAction& action);

/// Order of the scalar by which lifts of the inertia generator and of the
/// determinant-kernel generator of the stabilizer fail to commute.
int secondary_index(const OrderAction& action, const Line& line);

/// Ramification data read off the action; every reflection-line orbit must
/// contain the direction of exactly one branch image.
RamReport ramification_report(const OrderAction& action, const std::vector<BranchImage>& images,
                              const std::string& centre = "smooth");

/// Basis of {theta : b_g theta b_g^-1 = c_g theta for every generator g}.
std::vector<CycMatrix> isotypic_component(const OrderAction& action, const std::vector<CycNumber>& per_generator);

/// The values chi(g)^-1 = det(g)^-1 on the generators.
std::vector<CycNumber> inverse_determinants(const OrderAction& action);

/// An invertible element of the inverse-determinant component, or nullopt when
/// the generic determinant of the component vanishes identically.
std::optional<CycMatrix> gorenstein_theta(const OrderAction& action);

/// True iff theta is invertible and lies in the inverse-determinant component.
bool verify_theta(const OrderAction& action, const CycMatrix& theta);

/// Dimension of the degree-d piece of the twisted invariants: m x m matrices
/// Theta with entries homogeneous of degree d in u, v and b_g g(Theta) b_g^-1 = det(g)^-1 Theta.
int graded_omega_dim(const OrderAction& action, int d);

/// Generic determinant of sum t_i basis_i, returned as a flag: true iff it is
/// not the zero polynomial.
bool generic_determinant_nonzero(const std::vector<CycMatrix>& basis);

struct PermissibleModule {
    std::vector<std::size_t> parts; // indices into the irreducible list, non-decreasing
    Rep rep;
};

/// Minimal multisets (up to max_parts summands) of the given irreducibles whose
/// sum passes the eigenspace test with all inertia eigenvalues present on every line.
std::vector<PermissibleModule> permissible_modules(const Rep& defining, const std::vector<Rep>& irreps,
                                                   std::size_t max_parts = 4);

} // namespace canord
