#pragma once

#include "canord/cyclotomic.hpp"
#include "canord/matgroup.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace canord {

/// A word over named generators with integer exponents, read left to right.
using Word = std::vector<std::pair<std::string, int>>;

/// Relation "word evaluates to scalar * identity".
struct Relation {
    Word word;
    CycNumber scalar;
    std::string label;
};

/// Representation of a central extension given by its generator images.
struct Rep {
    std::string label;
    std::vector<std::string> names;
    std::vector<CycMatrix> images; // parallel to names
    int dim = 0;
    /// Scalar tag for the central character; families use it to select a component.
    CycNumber central_scalar{1L};

    const CycMatrix& image(const std::string& name) const;
};

Rep make_rep(std::string label, std::vector<std::string> names, std::vector<CycMatrix> images,
             CycNumber central = CycNumber(1L));

CycMatrix evaluate_word(const Rep& rep, const Word& w);
/// True iff every relation word evaluates to its scalar times the identity.
bool check_relations(const Rep& rep, const std::vector<Relation>& relations);
/// Dimension of the space of matrices commuting with every generator image.
int commutant_dim(const Rep& rep);

Rep direct_sum(const Rep& a, const Rep& b);
Rep direct_sum(const std::vector<Rep>& parts);
/// Contragredient: inverse transposes, central scalar inverted.
Rep dual(const Rep& r);
Rep tensor(const Rep& a, const Rep& b);
/// Multiplies each generator image by the given scalar.
Rep twist(const Rep& r, const std::vector<CycNumber>& per_generator);

/// Concrete realization of a central extension G' of a 2x2 matrix group G.
///
/// G is generated by the defining representation's images. Every block rep is
/// lifted along the breadth-first words of G, giving one lift per element of G
/// (a transversal of the central kernel K). Each non-tree edge of the Cayley
/// graph yields a scalar ratio that must agree in all blocks; these scalars
/// generate the image of K, so |G'| = |G| |K|.
class TupleGroup {
public:
    TupleGroup(const Rep& defining, std::vector<Rep> blocks);

    const MatrixGroup& base() const { return base_; }
    const Rep& defining() const { return defining_; }
    std::size_t num_blocks() const { return blocks_.size(); }
    const Rep& block(std::size_t i) const { return blocks_[i]; }
    /// Lift of base element g in block b.
    const CycMatrix& lift(std::size_t g, std::size_t b) const { return lifts_[g][b]; }
    /// Lift of base element g for an arbitrary rep on the same generators.
    CycMatrix lift_of(const Rep& r, std::size_t g) const;

    /// Generators of the scalar image of the central kernel.
    const std::vector<CycNumber>& kernel_scalars() const { return kernel_scalars_; }
    std::size_t kernel_order() const { return kernel_order_; }
    std::size_t order() const { return base_.order() * kernel_order_; }

    /// Character of block b on the transversal (indexed like base().elements()).
    std::vector<CycNumber> character(std::size_t b) const;
    std::vector<CycNumber> character_of(const Rep& r) const;
    /// Character of the defining representation on the transversal.
    std::vector<CycNumber> defining_character() const;
    /// (1/|G|) sum conj(a) b over the transversal.
    CycNumber inner_product(const std::vector<CycNumber>& a, const std::vector<CycNumber>& b) const;

    /// Full enumeration of G' as block-diagonal tuples (small groups only).
    MatrixGroup closure(std::size_t max_size = 4096) const;

private:
    Rep defining_;
    std::vector<Rep> blocks_;
    MatrixGroup base_;
    std::vector<std::vector<CycMatrix>> lifts_;
    std::vector<CycNumber> kernel_scalars_;
    std::size_t kernel_order_ = 1;
};

/// dim Hom(V_i, W (x) V_j) via the character sum; throws when not a non-negative integer.
int arrow_count(const TupleGroup& tg, std::size_t i, std::size_t j);

struct Quiver {
    std::vector<std::pair<std::string, int>> vertices;
    std::vector<std::vector<int>> arrows;
    std::vector<int> tau;
};

/// McKay quiver of a complete list of irreducibles sharing a central character.
Quiver mckay_component(const std::vector<Rep>& reps, const Rep& defining, const CycNumber& central_scalar);

/// Permutation i -> index of V_i twisted by the determinant character.
std::vector<int> ar_translation(const TupleGroup& tg);

/// Verifies orthonormality and completeness; throws VerificationError naming the defect.
void verify_complete_irreducibles(const TupleGroup& tg);

/// Every irreducible representation of the finite group generated by the
/// defining images, found as constituents of tensor powers of the defining
/// representation. Constituents are split off by spinning eigenvectors of
/// group elements and removing isotypic parts with character projectors.
std::vector<Rep> irreducibles_from_tensor_powers(const Rep& defining);

std::string quiver_to_dot(const Quiver& q, const std::string& name = "Q");

bool quiver_isomorphic(const Quiver& a, const Quiver& b);

} // namespace canord
