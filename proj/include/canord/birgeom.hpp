#pragma once

#include "canord/families.hpp"
#include "canord/poly2.hpp"
#include "canord/ramdata.hpp"

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace canord {

/// Germ of a decorated surface: a smooth or A_k centre with discriminant
/// branches, each carrying e_C and the cover ramification e_P at the origin.
struct GermConfig {
    /// 0 for a smooth centre, k for an A_k centre.
    int ak = 0;
    std::vector<RamBranch> branches;

    std::string centre_name() const;
    RamReport as_report() const;
};

/// Checks the schema invariants; throws SchemaError naming the defect.
void validate(const GermConfig& germ);

struct ResCurve {
    int id = 0;
    bool exceptional = false;
    /// Self-intersection of an exceptional curve; 0 for branches.
    int self_int = 0;
    int ram = 1;
    std::string label;
};

/// Curves of a resolution with their symmetric intersection numbers.
/// The diagonal of `intersections` is ignored; self-intersections live on the curves.
struct ResolutionConfig {
    std::vector<ResCurve> curves;
    std::vector<std::vector<int>> intersections;

    std::size_t size() const { return curves.size(); }
    int dot(std::size_t i, std::size_t j) const;
    std::vector<std::size_t> exceptional_indices() const;
    /// Position of the curve with the given id; throws MathError when absent.
    std::size_t index_of(int id) const;
    /// Appends a curve and grows the intersection matrix; returns its index.
    std::size_t add_curve(ResCurve c);
    void set_dot(std::size_t i, std::size_t j, int v);
};

/// One blowup of the recursion.
struct BlowupStep {
    int exceptional_id = 0;
    /// Multiplicities mu_i of the branches and nu_j of earlier exceptionals at the point.
    std::vector<std::pair<int, int>> multiplicities;
    int e = 1;
    mpq_class raw;
};

struct BlowupState {
    std::vector<BlowupStep> steps;
    /// Cover ramification of each branch at the origin as an element of Q/Z.
    std::vector<mpq_class> origin_residues;
};

struct Resolution {
    ResolutionConfig config;
    BlowupState state;
};

enum class StopRule {
    /// Stop at points where the data is terminal (gives the minimal resolution
    /// for canonical germs).
    Terminal,
    /// Stop only at terminal points with normal crossings (a log resolution).
    TerminalNormalCrossing,
};

/// Embedded resolution of a smooth-centre germ by the blowup recursion.
/// Throws UnsupportedError for configurations the recursion does not cover.
Resolution resolve(const GermConfig& germ, StopRule rule = StopRule::TerminalNormalCrossing);

struct ExceptionalDiscrepancy {
    int id = 0;
    int e = 1;
    mpq_class raw;
    mpq_class a;
};

/// (K + Delta) . E_j by adjunction on a genus 0 curve plus the Delta terms.
mpq_class canonical_dot(const ResolutionConfig& cfg, std::size_t j);

/// Throws MathError unless the exceptional intersection matrix is negative definite.
void require_negative_definite(const ResolutionConfig& cfg);

/// Solves (K + Delta_W) . E_j = sum_i c_i (E_i . E_j) for the raw coefficients.
std::vector<ExceptionalDiscrepancy> intersection_discrepancies(const ResolutionConfig& cfg);

/// Same solve with Delta replaced by the strict transform of the branches.
std::map<int, mpq_class> commutative_discrepancies(const ResolutionConfig& cfg);

/// Discrepancies recorded along the blowup recursion.
std::vector<ExceptionalDiscrepancy> recursion_discrepancies(const Resolution& res);

/// A rational number or minus infinity.
struct Discrep {
    bool minus_infinity = false;
    mpq_class value;
    std::string to_string() const;
};

Discrep discrep(const GermConfig& germ);

struct Classification {
    Discrep discrep;
    bool terminal = false;
    bool canonical = false;
    bool log_terminal = false;
    /// "terminal", "canonical", "log_terminal" or "not_log_terminal".
    std::string name;
    std::vector<ExceptionalDiscrepancy> per_exceptional;
};

Classification classify(const GermConfig& germ);

/// Pattern match of the data at the origin against the terminal local types.
bool terminal_check(const GermConfig& germ);

/// Minimal resolution of a canonical germ, verified to have all a_i = 0.
ResolutionConfig minimal_resolution(const GermConfig& germ);

/// Chain of k (-2)-curves for an A_k centre, with z-branches at the ends.
ResolutionConfig ak_template(const GermConfig& germ);

/// Cell of the four-case table met by one exceptional curve.
struct FourCase {
    int id = 0;
    int self_int = 0;
    bool in_discriminant = false;
    std::string cell;
};

/// Matches each exceptional curve to its cell and verifies the local pattern of
/// Delta; throws VerificationError when a curve fits no cell.
std::vector<FourCase> four_case_check(const ResolutionConfig& cfg);

/// True iff the exceptional graph is an ADE tree of (-2)-curves or a chain of
/// (-2)-curves with a single (-1)-curve at one end.
bool expcurve_shape_check(const ResolutionConfig& cfg);

/// Adjacent (-2)-curves share their ramification index; a (-1)-curve next to a
/// ramified (-2)-curve is unramified. Returns a description of the first violation.
std::optional<std::string> adjacency_violation(const ResolutionConfig& cfg);

struct TypeMatch {
    /// Family tag name, "ADE" or "terminal".
    std::string tag;
    int n = 0;
    int e = 0;
    std::string ade_type;
};

/// Identifies the table row of a canonical germ; throws UnsupportedError for
/// germs that are not canonical and VerificationError for canonical germs
/// matching no row.
TypeMatch recognize_type(const GermConfig& germ);

/// Germ with the ramification data of a family's table row.
GermConfig family_germ(const FamilySpec& spec);

/// Isomorphism of decorated graphs: exceptional flag, self-intersection and
/// ramification on vertices, intersection numbers on edges.
bool resolution_isomorphic(const ResolutionConfig& a, const ResolutionConfig& b);

std::string resolution_to_dot(const ResolutionConfig& cfg, const std::string& name = "R");

/// Local intersection multiplicity at the origin of two coprime curves.
int local_intersection(const Poly2& f, const Poly2& g);

} // namespace canord
