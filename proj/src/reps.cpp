#include "canord/reps.hpp"

#include "canord/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace canord {

const CycMatrix& Rep::image(const std::string& name) const {
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return images[i];
    throw Error("unknown generator name '" + name + "' for representation " + label);
}

Rep make_rep(std::string label, std::vector<std::string> names, std::vector<CycMatrix> images, CycNumber central) {
    if (names.size() != images.size()) throw Error("generator names and images differ in length");
    if (images.empty()) throw Error("a representation needs at least one generator");
    Rep r;
    r.label = std::move(label);
    r.names = std::move(names);
    r.dim = images.front().rows();
    for (const auto& m : images)
        if (m.rows() != r.dim || m.cols() != r.dim) throw Error("generator images must share one square size");
    r.images = std::move(images);
    r.central_scalar = std::move(central);
    return r;
}

CycMatrix evaluate_word(const Rep& rep, const Word& w) {
    CycMatrix out = CycMatrix::identity(rep.dim);
    for (const auto& [name, exp] : w) out = out * rep.image(name).pow(exp);
    return out;
}

bool check_relations(const Rep& rep, const std::vector<Relation>& relations) {
    for (const auto& rel : relations) {
        const CycMatrix v = evaluate_word(rep, rel.word);
        if (v != CycMatrix::scalar(rep.dim, rel.scalar)) return false;
    }
    return true;
}

int commutant_dim(const Rep& rep) {
    const int d = rep.dim;
    const int nn = d * d;
    CycMatrix eq(static_cast<int>(rep.images.size()) * nn, nn);
    int row = 0;
    for (const auto& b : rep.images) {
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j, ++row) {
                // (X B - B X)_{ij}
                for (int k = 0; k < d; ++k) {
                    if (!b(k, j).is_zero()) eq(row, i * d + k) += b(k, j);
                    if (!b(i, k).is_zero()) eq(row, k * d + j) -= b(i, k);
                }
            }
    }
    return nn - rank(eq);
}

Rep direct_sum(const Rep& a, const Rep& b) {
    if (a.names != b.names) throw Error("direct sum needs matching generator names");
    Rep r = a;
    r.label = a.label + "+" + b.label;
    r.dim = a.dim + b.dim;
    for (std::size_t i = 0; i < a.images.size(); ++i) r.images[i] = a.images[i].direct_sum(b.images[i]);
    return r;
}

Rep direct_sum(const std::vector<Rep>& parts) {
    if (parts.empty()) throw Error("empty direct sum");
    Rep r = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) r = direct_sum(r, parts[i]);
    return r;
}

Rep dual(const Rep& a) {
    Rep r = a;
    r.label = a.label + "*";
    for (auto& m : r.images) m = inverse(m).transpose();
    r.central_scalar = a.central_scalar.inverse();
    return r;
}

Rep tensor(const Rep& a, const Rep& b) {
    if (a.names != b.names) throw Error("tensor product needs matching generator names");
    Rep r = a;
    r.label = a.label + "x" + b.label;
    r.dim = a.dim * b.dim;
    for (std::size_t i = 0; i < a.images.size(); ++i) r.images[i] = a.images[i].kron(b.images[i]);
    r.central_scalar = a.central_scalar * b.central_scalar;
    return r;
}

Rep twist(const Rep& a, const std::vector<CycNumber>& per_generator) {
    if (per_generator.size() != a.images.size()) throw Error("twist needs one scalar per generator");
    Rep r = a;
    for (std::size_t i = 0; i < a.images.size(); ++i) r.images[i] = a.images[i] * per_generator[i];
    return r;
}

// ---------------------------------------------------------------- TupleGroup

namespace {

std::optional<CycNumber> ratio(const CycMatrix& a, const CycMatrix& b) {
    // a = c * b for a scalar c
    int pi = -1, pj = -1;
    for (int i = 0; i < b.rows() && pi < 0; ++i)
        for (int j = 0; j < b.cols(); ++j)
            if (!b(i, j).is_zero()) {
                pi = i;
                pj = j;
                break;
            }
    if (pi < 0) return std::nullopt;
    const CycNumber c = a(pi, pj) / b(pi, pj);
    if (a != b * c) return std::nullopt;
    return c;
}

} // namespace

TupleGroup::TupleGroup(const Rep& defining, std::vector<Rep> blocks) : defining_(defining), blocks_(std::move(blocks)) {
    if (defining_.dim != 2) throw Error("the defining representation must be 2-dimensional");
    for (const auto& b : blocks_)
        if (b.names != defining_.names) throw Error("block " + b.label + " uses different generator names");
    base_ = MatrixGroup::generate(defining_.images);
    const std::size_t n = base_.order();
    lifts_.assign(n, {});
    std::vector<std::vector<CycMatrix>> block_gens(blocks_.size());
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        int c = 1;
        for (const auto& m : blocks_[b].images) c = std::lcm(c, m.conductor());
        for (const auto& m : blocks_[b].images) block_gens[b].push_back(m.promoted(c));
    }
    for (std::size_t b = 0; b < blocks_.size(); ++b) lifts_[0].push_back(CycMatrix::identity(blocks_[b].dim));
    for (std::size_t g = 1; g < n; ++g) {
        const std::size_t p = base_.parent(g);
        const int s = base_.via(g);
        lifts_[g].reserve(blocks_.size());
        for (std::size_t b = 0; b < blocks_.size(); ++b)
            lifts_[g].push_back(lifts_[p][b] * block_gens[b][static_cast<std::size_t>(s)]);
    }
    // Non-tree edges: lift(h) b_s = c lift(h s).
    std::vector<int> orders;
    for (std::size_t h = 0; h < n; ++h) {
        for (std::size_t s = 0; s < defining_.images.size(); ++s) {
            const std::size_t t = base_.multiply(h, base_.generator_index(s));
            if (base_.parent(t) == h && base_.via(t) == static_cast<int>(s) && t != 0) continue;
            std::optional<CycNumber> common;
            for (std::size_t b = 0; b < blocks_.size(); ++b) {
                auto c = ratio(lifts_[h][b] * block_gens[b][s], lifts_[t][b]);
                if (!c) throw VerificationError("lift of " + blocks_[b].label + " is not projective over the group");
                if (!common)
                    common = c;
                else if (*common != *c)
                    throw VerificationError("blocks do not share a central character (block " + blocks_[b].label + ")");
            }
            if (!common || common->is_one()) continue;
            bool dup = false;
            for (const auto& k : kernel_scalars_) dup = dup || k == *common;
            if (dup) continue;
            auto o = multiplicative_order(*common, 1 << 16);
            if (!o) throw VerificationError("central scalar is not a root of unity");
            kernel_scalars_.push_back(*common);
            orders.push_back(*o);
        }
    }
    kernel_order_ = 1;
    for (int o : orders) kernel_order_ = std::lcm(kernel_order_, static_cast<std::size_t>(o));
}

CycMatrix TupleGroup::lift_of(const Rep& r, std::size_t g) const {
    CycMatrix out = CycMatrix::identity(r.dim);
    for (int s : base_.word(g)) out = out * r.images[static_cast<std::size_t>(s)];
    return out;
}

std::vector<CycNumber> TupleGroup::character(std::size_t b) const {
    std::vector<CycNumber> out;
    out.reserve(base_.order());
    for (std::size_t g = 0; g < base_.order(); ++g) out.push_back(lifts_[g][b].trace());
    return out;
}

std::vector<CycNumber> TupleGroup::character_of(const Rep& r) const {
    std::vector<CycMatrix> lifts(base_.order());
    lifts[0] = CycMatrix::identity(r.dim);
    std::vector<CycNumber> out{CycNumber(static_cast<long>(r.dim))};
    for (std::size_t g = 1; g < base_.order(); ++g) {
        lifts[g] = lifts[base_.parent(g)] * r.images[static_cast<std::size_t>(base_.via(g))];
        out.push_back(lifts[g].trace());
    }
    return out;
}

std::vector<CycNumber> TupleGroup::defining_character() const {
    std::vector<CycNumber> out;
    for (const auto& m : base_.elements()) out.push_back(m.trace());
    return out;
}

CycNumber TupleGroup::inner_product(const std::vector<CycNumber>& a, const std::vector<CycNumber>& b) const {
    CycNumber s;
    for (std::size_t g = 0; g < a.size(); ++g) s += a[g].conj() * b[g];
    return s * CycNumber(mpq_class(1, static_cast<long>(base_.order())));
}

MatrixGroup TupleGroup::closure(std::size_t max_size) const {
    std::vector<CycMatrix> gens;
    for (std::size_t s = 0; s < defining_.images.size(); ++s) {
        CycMatrix m = defining_.images[s];
        for (const auto& b : blocks_) m = m.direct_sum(b.images[s]);
        gens.push_back(m);
    }
    return MatrixGroup::generate(gens, max_size);
}

int arrow_count(const TupleGroup& tg, std::size_t i, std::size_t j) {
    const auto ci = tg.character(i);
    const auto cj = tg.character(j);
    const auto cw = tg.defining_character();
    std::vector<CycNumber> prod(cj.size());
    for (std::size_t g = 0; g < cj.size(); ++g) prod[g] = cw[g] * cj[g];
    const CycNumber v = tg.inner_product(ci, prod);
    if (!v.is_rational() || v.rational_value().get_den() != 1 || v.rational_value() < 0)
        throw VerificationError("arrow count is not a non-negative integer: " + v.to_string());
    return static_cast<int>(v.rational_value().get_num().get_si());
}

void verify_complete_irreducibles(const TupleGroup& tg) {
    const std::size_t n = tg.num_blocks();
    std::vector<std::vector<CycNumber>> chars;
    for (std::size_t i = 0; i < n; ++i) chars.push_back(tg.character(i));
    long sumsq = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sumsq += static_cast<long>(tg.block(i).dim) * tg.block(i).dim;
        for (std::size_t j = i; j < n; ++j) {
            const CycNumber ip = tg.inner_product(chars[i], chars[j]);
            const bool ok = (i == j) ? ip.is_one() : ip.is_zero();
            if (!ok)
                throw VerificationError("character inner product <" + tg.block(i).label + ", " + tg.block(j).label +
                                        "> = " + ip.to_string());
        }
    }
    if (sumsq != static_cast<long>(tg.base().order()))
        throw VerificationError("sum of squared dimensions " + std::to_string(sumsq) + " differs from |G| = " +
                                std::to_string(tg.base().order()) + " (deficit " +
                                std::to_string(static_cast<long>(tg.base().order()) - sumsq) + ")");
}

std::vector<int> ar_translation(const TupleGroup& tg) {
    const std::size_t n = tg.num_blocks();
    std::vector<CycNumber> detc;
    for (const auto& m : tg.base().elements()) detc.push_back(det(m));
    std::vector<std::vector<CycNumber>> chars;
    for (std::size_t i = 0; i < n; ++i) chars.push_back(tg.character(i));
    std::vector<int> perm(n, -1);
    std::vector<bool> hit(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<CycNumber> tw(chars[i].size());
        for (std::size_t g = 0; g < tw.size(); ++g) tw[g] = chars[i][g] * detc[g];
        for (std::size_t j = 0; j < n; ++j) {
            bool eq = true;
            for (std::size_t g = 0; g < tw.size() && eq; ++g) eq = tw[g] == chars[j][g];
            if (eq) {
                perm[i] = static_cast<int>(j);
                break;
            }
        }
        if (perm[i] < 0) throw VerificationError("determinant twist of " + tg.block(i).label + " leaves the component");
        if (hit[static_cast<std::size_t>(perm[i])]) throw VerificationError("determinant twist is not a permutation");
        hit[static_cast<std::size_t>(perm[i])] = true;
    }
    return perm;
}

Quiver mckay_component(const std::vector<Rep>& reps, const Rep& defining, const CycNumber& central_scalar) {
    for (const auto& r : reps)
        if (r.central_scalar != central_scalar)
            throw VerificationError("representation " + r.label + " has a different central scalar");
    const TupleGroup tg(defining, reps);
    verify_complete_irreducibles(tg);
    Quiver q;
    for (const auto& r : reps) q.vertices.emplace_back(r.label, r.dim);
    const std::size_t n = reps.size();
    q.arrows.assign(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) q.arrows[i][j] = arrow_count(tg, i, j);
    q.tau = ar_translation(tg);
    return q;
}

std::string quiver_to_dot(const Quiver& q, const std::string& name) {
    std::ostringstream os;
    os << "digraph " << name << " {\n";
    const std::size_t n = q.vertices.size();
    for (std::size_t i = 0; i < n; ++i)
        os << "  v" << i << " [label=\"" << q.vertices[i].first << " (" << q.vertices[i].second << ")\"];\n";
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const int m = q.arrows[i][j];
            for (int k = 0; k < m; ++k) {
                os << "  v" << i << " -> v" << j;
                if (m > 1) os << " [label=\"" << m << "\"]";
                os << ";\n";
            }
        }
    for (std::size_t i = 0; i < q.tau.size(); ++i)
        os << "  v" << i << " -> v" << q.tau[i] << " [style=dashed];\n";
    os << "}\n";
    return os.str();
}

bool quiver_isomorphic(const Quiver& a, const Quiver& b) {
    const std::size_t n = a.vertices.size();
    if (b.vertices.size() != n || a.arrows.size() != n || b.arrows.size() != n) return false;
    if (a.tau.size() != n || b.tau.size() != n) return false;
    std::vector<int> map(n, -1);
    std::vector<bool> used(n, false);
    std::function<bool(std::size_t)> extend = [&](std::size_t i) -> bool {
        if (i == n) {
            for (std::size_t x = 0; x < n; ++x)
                if (map[static_cast<std::size_t>(a.tau[x])] != b.tau[static_cast<std::size_t>(map[x])]) return false;
            return true;
        }
        for (std::size_t c = 0; c < n; ++c) {
            if (used[c] || a.vertices[i].second != b.vertices[c].second) continue;
            map[i] = static_cast<int>(c);
            bool ok = true;
            for (std::size_t k = 0; k <= i && ok; ++k) {
                const auto mk = static_cast<std::size_t>(map[k]);
                ok = a.arrows[i][k] == b.arrows[c][mk] && a.arrows[k][i] == b.arrows[mk][c];
            }
            if (ok) {
                used[c] = true;
                if (extend(i + 1)) return true;
                used[c] = false;
            }
            map[i] = -1;
        }
        return false;
    };
    return extend(0);
}

} // namespace canord

// ------------------------------------------------------- irreducible search

namespace canord {

namespace {

std::vector<CycMatrix> all_images(const MatrixGroup& g, const std::vector<CycMatrix>& gens) {
    std::vector<CycMatrix> out(g.order());
    out[0] = CycMatrix::identity(gens.front().rows());
    for (std::size_t i = 1; i < g.order(); ++i) out[i] = out[g.parent(i)] * gens[static_cast<std::size_t>(g.via(i))];
    return out;
}

std::vector<CycNumber> trace_all(const std::vector<CycMatrix>& imgs) {
    std::vector<CycNumber> out;
    out.reserve(imgs.size());
    for (const auto& m : imgs) out.push_back(m.trace());
    return out;
}

CycNumber inner(const std::vector<CycNumber>& a, const std::vector<CycNumber>& b) {
    CycNumber s;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i].conj() * b[i];
    return s * CycNumber(mpq_class(1, static_cast<long>(a.size())));
}

// Basis (as columns) of the column space of m.
CycMatrix column_space(const CycMatrix& m) {
    CycMatrix t = m.transpose();
    const auto pivots = rref(t);
    CycMatrix b(m.rows(), static_cast<int>(pivots.size()));
    for (std::size_t k = 0; k < pivots.size(); ++k)
        for (int i = 0; i < m.rows(); ++i) b(i, static_cast<int>(k)) = t(static_cast<int>(k), i);
    return b;
}

// Matrices of the subrepresentation on the invariant subspace spanned by the columns of basis.
std::vector<CycMatrix> restrict_to(const std::vector<CycMatrix>& gens, const CycMatrix& basis) {
    std::vector<CycMatrix> out;
    const int d = basis.cols();
    for (const auto& m : gens) {
        const CycMatrix img = m * basis;
        CycMatrix x(d, d);
        for (int j = 0; j < d; ++j) {
            std::vector<CycNumber> col(static_cast<std::size_t>(img.rows()));
            for (int i = 0; i < img.rows(); ++i) col[static_cast<std::size_t>(i)] = img(i, j);
            auto sol = solve(basis, col);
            if (!sol) throw VerificationError("subspace is not invariant under the group");
            for (int i = 0; i < d; ++i) x(i, j) = (*sol)[static_cast<std::size_t>(i)];
        }
        out.push_back(std::move(x));
    }
    return out;
}

CycMatrix character_projector(const std::vector<CycMatrix>& imgs, const std::vector<CycNumber>& chi, int dim) {
    CycMatrix p(imgs.front().rows(), imgs.front().cols());
    for (std::size_t g = 0; g < imgs.size(); ++g)
        if (!chi[g].is_zero()) p = p + imgs[g] * chi[g].conj();
    return p * CycNumber(mpq_class(dim, static_cast<long>(imgs.size())));
}

// Cyclic submodule generated by v, as a column basis.
CycMatrix spin(const std::vector<CycMatrix>& gens, const std::vector<CycNumber>& v) {
    const int n = static_cast<int>(v.size());
    std::vector<std::vector<CycNumber>> vecs{v};
    auto independent = [&](const std::vector<CycNumber>& w) {
        CycMatrix m(static_cast<int>(vecs.size()) + 1, n);
        for (std::size_t r = 0; r < vecs.size(); ++r)
            for (int c = 0; c < n; ++c) m(static_cast<int>(r), c) = vecs[r][static_cast<std::size_t>(c)];
        for (int c = 0; c < n; ++c) m(static_cast<int>(vecs.size()), c) = w[static_cast<std::size_t>(c)];
        return rank(m) == static_cast<int>(vecs.size()) + 1;
    };
    for (std::size_t k = 0; k < vecs.size(); ++k)
        for (const auto& g : gens) {
            auto w = g.apply(vecs[k]);
            if (independent(w)) vecs.push_back(std::move(w));
        }
    CycMatrix b(n, static_cast<int>(vecs.size()));
    for (std::size_t c = 0; c < vecs.size(); ++c)
        for (int r = 0; r < n; ++r) b(r, static_cast<int>(c)) = vecs[c][static_cast<std::size_t>(r)];
    return b;
}

// Splits a representation (given by generator images) into irreducibles.
std::vector<std::vector<CycMatrix>> split_irreducibles(const MatrixGroup& g, const std::vector<int>& orders,
                                                       const std::vector<CycMatrix>& gens, int depth = 0) {
    if (depth > 64) throw VerificationError("irreducible splitting does not terminate");
    const auto imgs = all_images(g, gens);
    const auto chi = trace_all(imgs);
    if (inner(chi, chi).is_one()) return {gens};
    const int n = gens.front().rows();
    for (std::size_t e = 0; e < g.order(); ++e) {
        for (const auto& es : eigen_split(imgs[e], orders[e])) {
            const CycMatrix sub = spin(gens, es.basis.front());
            if (sub.cols() == n) continue;
            auto first = split_irreducibles(g, orders, restrict_to(gens, sub), depth + 1);
            // Remove every isotypic part already found and split the rest.
            CycMatrix rest = CycMatrix::identity(n);
            for (const auto& irr : first) {
                const auto c = trace_all(all_images(g, irr));
                rest = rest - character_projector(imgs, c, irr.front().rows());
            }
            std::vector<std::vector<CycMatrix>> out;
            for (const auto& irr : first) {
                bool dup = false;
                const auto c = trace_all(all_images(g, irr));
                for (const auto& o : out) dup = dup || trace_all(all_images(g, o)) == c;
                if (!dup) out.push_back(irr);
            }
            const CycMatrix comp = column_space(rest);
            if (comp.cols() > 0)
                for (auto& more : split_irreducibles(g, orders, restrict_to(gens, comp), depth + 1))
                    out.push_back(std::move(more));
            return out;
        }
    }
    throw VerificationError("could not split a reducible representation by spinning eigenvectors");
}

} // namespace

std::vector<Rep> irreducibles_from_tensor_powers(const Rep& defining) {
    const MatrixGroup g = MatrixGroup::generate(defining.images);
    std::vector<int> orders(g.order());
    for (std::size_t e = 0; e < g.order(); ++e) orders[e] = g.element_order(e);

    std::vector<Rep> irreps;
    std::vector<std::vector<CycNumber>> chars;
    std::vector<CycMatrix> ones(defining.images.size(), CycMatrix::identity(1));
    irreps.push_back(make_rep("V0", defining.names, ones));
    chars.push_back(std::vector<CycNumber>(g.order(), CycNumber(1L)));
    long sumsq = 1;

    for (std::size_t head = 0; head < irreps.size() && sumsq < static_cast<long>(g.order()); ++head) {
        const Rep t = tensor(defining, irreps[head]);
        auto imgs = all_images(g, t.images);
        const auto psi = trace_all(imgs);
        CycMatrix rest = CycMatrix::identity(t.dim);
        bool any_new = false;
        std::vector<CycNumber> remainder = psi;
        for (std::size_t j = 0; j < irreps.size(); ++j) {
            const CycNumber mult = inner(chars[j], psi);
            if (mult.is_zero()) continue;
            rest = rest - character_projector(imgs, chars[j], irreps[j].dim);
            for (std::size_t e = 0; e < remainder.size(); ++e) remainder[e] -= mult * chars[j][e];
        }
        for (const auto& r : remainder) any_new = any_new || !r.is_zero();
        if (!any_new) continue;
        const CycMatrix basis = column_space(rest);
        for (auto& gens : split_irreducibles(g, orders, restrict_to(t.images, basis))) {
            const auto c = trace_all(all_images(g, gens));
            if (std::find(chars.begin(), chars.end(), c) != chars.end()) continue;
            const int d = gens.front().rows();
            irreps.push_back(make_rep("V" + std::to_string(irreps.size()), defining.names, std::move(gens)));
            chars.push_back(c);
            sumsq += static_cast<long>(d) * d;
        }
    }
    if (sumsq != static_cast<long>(g.order()))
        throw VerificationError("tensor powers of the defining representation did not exhaust the irreducibles");
    return irreps;
}

} // namespace canord
