#pragma once

#include "canord/cyclotomic.hpp"

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

namespace canord {

/// Projective vector in the 2-dimensional defining space, normalized so the
/// first nonzero coordinate is 1. The vector (c, 1) is the line u = c v.
using Line = std::vector<CycNumber>;

Line normalize_line(const Line& v);

/// Finite matrix group given by generators, enumerated by breadth-first closure.
///
/// Element 0 is the identity. Every element i > 0 satisfies
/// elements[i] = elements[parent(i)] * generators[via(i)], which gives each
/// element a canonical word in the generators.
class MatrixGroup {
public:
    static MatrixGroup generate(const std::vector<CycMatrix>& gens, std::size_t max_size = 4096);

    const std::vector<CycMatrix>& generators() const { return gens_; }
    const std::vector<CycMatrix>& elements() const { return elems_; }
    const CycMatrix& element(std::size_t i) const { return elems_[i]; }
    std::size_t order() const { return elems_.size(); }
    int dimension() const { return dim_; }
    /// Common conductor of all stored entries.
    int conductor() const { return conductor_; }

    std::optional<std::size_t> index_of(const CycMatrix& m) const;
    /// Index of the generator images inside elements().
    std::size_t generator_index(std::size_t g) const { return gen_index_[g]; }

    std::size_t multiply(std::size_t a, std::size_t b) const;
    std::size_t inverse_index(std::size_t a) const;
    std::size_t power_index(std::size_t a, long k) const;
    int element_order(std::size_t a) const;

    std::size_t parent(std::size_t i) const { return parent_[i]; }
    int via(std::size_t i) const { return via_[i]; }
    /// Generator indices whose ordered product is element i.
    std::vector<int> word(std::size_t i) const;

private:
    std::vector<CycMatrix> gens_;
    std::vector<CycMatrix> elems_;
    std::vector<std::size_t> parent_;
    std::vector<int> via_;
    std::vector<std::size_t> gen_index_;
    std::unordered_multimap<std::size_t, std::size_t> lookup_;
    int dim_ = 0;
    int conductor_ = 1;
};

/// The determinant of every element, indexed like elements().
std::vector<CycNumber> det_character(const MatrixGroup& g);

/// Pseudo-reflections grouped by conjugacy class, classes in order of first appearance.
std::vector<std::vector<std::size_t>> pseudo_reflections(const MatrixGroup& g);

/// Fixed line of a 2x2 pseudo-reflection.
Line fixed_line(const CycMatrix& m);

/// Image of a line under a group element, normalized.
Line act_on_line(const CycMatrix& m, const Line& l);

struct ReflectionLine {
    Line direction;
    int orbit_id = 0;
    std::size_t inertia_generator = 0;
    std::vector<std::size_t> stabilizer_generators;
    std::vector<Line> orbit;
};

/// One representative per orbit of fixed lines of pseudo-reflections.
std::vector<ReflectionLine> reflection_lines(const MatrixGroup& g);

/// Elements preserving the line setwise, in element order.
std::vector<std::size_t> stabilizer(const MatrixGroup& g, const Line& l);
/// Elements fixing the line pointwise, in element order.
std::vector<std::size_t> inertia(const MatrixGroup& g, const Line& l);

/// An element generating the subgroup, or nullopt when the subgroup is not cyclic.
std::optional<std::size_t> cyclic_generator(const MatrixGroup& g, const std::vector<std::size_t>& subgroup);

/// A small generating set of a subgroup given by its element list.
std::vector<std::size_t> subgroup_generators(const MatrixGroup& g, const std::vector<std::size_t>& subgroup);

/// Closure of a set of elements inside the group.
std::vector<std::size_t> generated_subgroup(const MatrixGroup& g, const std::vector<std::size_t>& gens);

} // namespace canord
