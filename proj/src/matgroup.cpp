#include "canord/matgroup.hpp"

#include "canord/errors.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <string>

namespace canord {

Line normalize_line(const Line& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        const CycNumber inv = v[i].inverse();
        Line out(v.size());
        for (std::size_t j = 0; j < v.size(); ++j) out[j] = j == i ? CycNumber(1L) : v[j] * inv;
        return out;
    }
    throw MathError("zero vector does not define a line");
}

MatrixGroup MatrixGroup::generate(const std::vector<CycMatrix>& gens, std::size_t max_size) {
    MatrixGroup g;
    if (gens.empty()) throw MathError("a matrix group needs at least one generator");
    g.dim_ = gens.front().rows();
    g.conductor_ = 1;
    for (const auto& m : gens) {
        if (!m.is_square() || m.rows() != g.dim_) throw MathError("generators must be square of equal size");
        if (det(m).is_zero()) throw MathError("generator is not invertible");
        g.conductor_ = std::lcm(g.conductor_, m.conductor());
    }
    for (const auto& m : gens) g.gens_.push_back(m.promoted(g.conductor_));

    auto insert = [&g](CycMatrix m, std::size_t parent, int via) {
        const std::size_t h = m.hash();
        auto range = g.lookup_.equal_range(h);
        for (auto it = range.first; it != range.second; ++it)
            if (g.elems_[it->second] == m) return std::make_pair(it->second, false);
        const std::size_t idx = g.elems_.size();
        g.elems_.push_back(std::move(m));
        g.parent_.push_back(parent);
        g.via_.push_back(via);
        g.lookup_.emplace(h, idx);
        return std::make_pair(idx, true);
    };

    insert(CycMatrix::identity(g.dim_).promoted(g.conductor_), 0, -1);
    for (std::size_t head = 0; head < g.elems_.size(); ++head) {
        for (std::size_t k = 0; k < g.gens_.size(); ++k) {
            CycMatrix prod = (g.elems_[head] * g.gens_[k]).promoted(g.conductor_);
            insert(std::move(prod), head, static_cast<int>(k));
            if (g.elems_.size() > max_size)
                throw MathError("group closure exceeds the configured bound of " + std::to_string(max_size));
        }
    }
    for (const auto& m : g.gens_) g.gen_index_.push_back(*g.index_of(m));
    return g;
}

std::optional<std::size_t> MatrixGroup::index_of(const CycMatrix& m0) const {
    if (m0.rows() != dim_ || m0.cols() != dim_) return std::nullopt;
    const int c = std::lcm(conductor_, m0.conductor());
    if (c != conductor_) {
        // A matrix needing a larger field cannot be an element.
        const CycMatrix mm = m0.promoted(c);
        for (std::size_t i = 0; i < elems_.size(); ++i)
            if (elems_[i] == mm) return i;
        return std::nullopt;
    }
    const CycMatrix m = m0.promoted(conductor_);
    auto range = lookup_.equal_range(m.hash());
    for (auto it = range.first; it != range.second; ++it)
        if (elems_[it->second] == m) return it->second;
    return std::nullopt;
}

std::size_t MatrixGroup::multiply(std::size_t a, std::size_t b) const {
    auto idx = index_of(elems_[a] * elems_[b]);
    if (!idx) throw MathError("group is not closed under multiplication");
    return *idx;
}

std::size_t MatrixGroup::inverse_index(std::size_t a) const {
    auto idx = index_of(canord::inverse(elems_[a]));
    if (!idx) throw MathError("group is not closed under inversion");
    return *idx;
}

std::size_t MatrixGroup::power_index(std::size_t a, long k) const {
    if (k < 0) return power_index(inverse_index(a), -k);
    auto idx = index_of(elems_[a].pow(k));
    if (!idx) throw MathError("group is not closed under powers");
    return *idx;
}

int MatrixGroup::element_order(std::size_t a) const {
    auto o = matrix_order(elems_[a], static_cast<int>(order()));
    if (!o) throw MathError("element order exceeds the group order");
    return *o;
}

std::vector<int> MatrixGroup::word(std::size_t i) const {
    std::vector<int> w;
    while (i != 0) {
        w.push_back(via_[i]);
        i = parent_[i];
    }
    std::reverse(w.begin(), w.end());
    return w;
}

std::vector<CycNumber> det_character(const MatrixGroup& g) {
    std::vector<CycNumber> out;
    out.reserve(g.order());
    for (const auto& m : g.elements()) out.push_back(det(m));
    return out;
}

namespace {

bool is_pseudo_reflection(const CycMatrix& m) {
    if (m.is_identity()) return false;
    const int n = m.rows();
    return static_cast<int>(nullspace(m - CycMatrix::identity(n)).size()) == n - 1;
}

bool same_line(const Line& a, const Line& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

} // namespace

std::vector<std::vector<std::size_t>> pseudo_reflections(const MatrixGroup& g) {
    std::vector<std::vector<std::size_t>> classes;
    std::vector<int> class_of(g.order(), -1);
    std::vector<std::size_t> invs(g.order());
    bool invs_ready = false;
    for (std::size_t i = 0; i < g.order(); ++i) {
        if (class_of[i] >= 0 || !is_pseudo_reflection(g.element(i))) continue;
        if (!invs_ready) {
            for (std::size_t h = 0; h < g.order(); ++h) invs[h] = g.inverse_index(h);
            invs_ready = true;
        }
        const int cid = static_cast<int>(classes.size());
        std::set<std::size_t> cls;
        for (std::size_t h = 0; h < g.order(); ++h) cls.insert(g.multiply(g.multiply(h, i), invs[h]));
        for (std::size_t c : cls) class_of[c] = cid;
        classes.emplace_back(cls.begin(), cls.end());
    }
    return classes;
}

Line fixed_line(const CycMatrix& m) {
    if (m.rows() != 2 || m.cols() != 2) throw MathError("fixed lines are defined for 2x2 matrices");
    auto ns = nullspace(m - CycMatrix::identity(2));
    if (ns.size() != 1) throw MathError("matrix is not a pseudo-reflection");
    return normalize_line(ns[0]);
}

Line act_on_line(const CycMatrix& m, const Line& l) { return normalize_line(m.apply(l)); }

std::vector<std::size_t> stabilizer(const MatrixGroup& g, const Line& l0) {
    const Line l = normalize_line(l0);
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < g.order(); ++i)
        if (same_line(act_on_line(g.element(i), l), l)) out.push_back(i);
    return out;
}

std::vector<std::size_t> inertia(const MatrixGroup& g, const Line& l0) {
    const Line l = normalize_line(l0);
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < g.order(); ++i) {
        const Line img = g.element(i).apply(l);
        bool fixed = true;
        for (std::size_t k = 0; k < l.size(); ++k) fixed = fixed && img[k] == l[k];
        if (fixed) out.push_back(i);
    }
    return out;
}

std::optional<std::size_t> cyclic_generator(const MatrixGroup& g, const std::vector<std::size_t>& subgroup) {
    for (std::size_t i : subgroup)
        if (static_cast<std::size_t>(g.element_order(i)) == subgroup.size()) return i;
    return std::nullopt;
}

std::vector<std::size_t> generated_subgroup(const MatrixGroup& g, const std::vector<std::size_t>& gens) {
    std::set<std::size_t> seen{0};
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
        const std::size_t cur = queue.front();
        queue.pop_front();
        for (std::size_t s : gens) {
            const std::size_t nxt = g.multiply(cur, s);
            if (seen.insert(nxt).second) queue.push_back(nxt);
        }
    }
    return {seen.begin(), seen.end()};
}

std::vector<std::size_t> subgroup_generators(const MatrixGroup& g, const std::vector<std::size_t>& subgroup) {
    // Prefer elements of large order so that cyclic subgroups get one generator.
    std::vector<std::size_t> cand = subgroup;
    std::stable_sort(cand.begin(), cand.end(),
                     [&g](std::size_t a, std::size_t b) { return g.element_order(a) > g.element_order(b); });
    std::vector<std::size_t> gens;
    std::set<std::size_t> span{0};
    for (std::size_t c : cand) {
        if (span.size() == subgroup.size()) break;
        if (span.count(c)) continue;
        gens.push_back(c);
        const auto sub = generated_subgroup(g, gens);
        span = std::set<std::size_t>(sub.begin(), sub.end());
    }
    return gens;
}

std::vector<ReflectionLine> reflection_lines(const MatrixGroup& g) {
    if (g.dimension() != 2) throw MathError("reflection lines need a 2-dimensional group");
    std::vector<ReflectionLine> out;
    for (std::size_t i = 0; i < g.order(); ++i) {
        if (!is_pseudo_reflection(g.element(i))) continue;
        const Line l = fixed_line(g.element(i));
        bool known = false;
        for (const auto& rl : out)
            for (const auto& o : rl.orbit) known = known || same_line(o, l);
        if (known) continue;
        ReflectionLine rl;
        rl.direction = l;
        rl.orbit_id = static_cast<int>(out.size());
        for (const auto& m : g.elements()) {
            const Line img = act_on_line(m, l);
            bool seen = false;
            for (const auto& o : rl.orbit) seen = seen || same_line(o, img);
            if (!seen) rl.orbit.push_back(img);
        }
        const auto in = inertia(g, l);
        auto gen = cyclic_generator(g, in);
        if (!gen) throw MathError("inertia group of a reflection line is not cyclic");
        rl.inertia_generator = *gen;
        rl.stabilizer_generators = subgroup_generators(g, stabilizer(g, l));
        out.push_back(std::move(rl));
    }
    return out;
}

} // namespace canord
