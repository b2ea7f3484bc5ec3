#include "canord/ordercheck.hpp"

#include "canord/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>

namespace canord {

namespace {

bool same_line(const Line& a, const Line& b) { return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin()); }

// Stabilizer, inertia and determinant kernel of a line, with the splitting check.
struct LineGroups {
    std::vector<std::size_t> stab;
    std::vector<std::size_t> inert;
    std::vector<std::size_t> kernel;
    std::size_t sigma = 0;
};

LineGroups line_groups(const MatrixGroup& g, const Line& line) {
    LineGroups lg;
    lg.stab = stabilizer(g, line);
    lg.inert = inertia(g, line);
    auto gen = cyclic_generator(g, lg.inert);
    if (!gen) throw UnsupportedError("inertia group of a reflection line is not cyclic");
    lg.sigma = *gen;
    std::vector<CycNumber> dets;
    for (std::size_t h : lg.stab) {
        const CycNumber d = det(g.element(h));
        if (d.is_one()) lg.kernel.push_back(h);
        if (std::find(dets.begin(), dets.end(), d) == dets.end()) dets.push_back(d);
    }
    if (dets.size() != lg.inert.size())
        throw UnsupportedError("the determinant does not split the stabilizer of a reflection line (|det H| = " +
                               std::to_string(dets.size()) + ", |I| = " + std::to_string(lg.inert.size()) + ")");
    return lg;
}

int lift_order(const TupleGroup& tg, std::size_t g) {
    return tg.base().element_order(g) * static_cast<int>(tg.kernel_order());
}

} // namespace

NormalityReport normality(const OrderAction& action) {
    const TupleGroup tg(action.defining, {action.lift});
    const MatrixGroup& g = tg.base();
    NormalityReport rep;
    rep.normal = true;
    for (const auto& rl : reflection_lines(g)) {
        const LineGroups lg = line_groups(g, rl.direction);
        LineReport lr;
        lr.direction = rl.direction;
        lr.orbit_size = rl.orbit.size();
        lr.inertia_order = static_cast<int>(lg.inert.size());
        int common = 0;
        lr.equidimensional = true;
        for (auto& es : eigen_split(tg.lift(lg.sigma, 0), lift_order(tg, lg.sigma))) {
            if (es.dim == 0) continue;
            if (common == 0) common = es.dim;
            lr.equidimensional = lr.equidimensional && es.dim == common;
            lr.eigenspaces.emplace_back(es.value, es.dim);
        }
        lr.eC = static_cast<int>(lr.eigenspaces.size());
        rep.normal = rep.normal && lr.equidimensional;
        rep.lines.push_back(std::move(lr));
    }
    return rep;
}

int secondary_index(const OrderAction& action, const Line& line) {
    const TupleGroup tg(action.defining, {action.lift});
    const MatrixGroup& g = tg.base();
    const LineGroups lg = line_groups(g, line);
    if (lg.kernel.size() <= 1) return 1;
    auto tau = cyclic_generator(g, lg.kernel);
    if (!tau) throw UnsupportedError("determinant kernel of a line stabilizer is not cyclic");
    const CycMatrix& bs = tg.lift(lg.sigma, 0);
    const CycMatrix& bt = tg.lift(*tau, 0);
    const CycMatrix comm = bs * bt * inverse(bs) * inverse(bt);
    auto eta = comm.scalar_value();
    if (!eta) throw VerificationError("lifts of the inertia and kernel generators do not commute up to a scalar");
    auto o = multiplicative_order(*eta, 1 << 16);
    if (!o) throw VerificationError("commutator scalar is not a root of unity");
    return *o;
}

RamReport ramification_report(const OrderAction& action, const std::vector<BranchImage>& images,
                              const std::string& centre) {
    const MatrixGroup g = MatrixGroup::generate(action.defining.images);
    const NormalityReport nr = normality(action);
    const auto lines = reflection_lines(g);
    RamReport out;
    out.centre = centre;
    for (std::size_t k = 0; k < lines.size(); ++k) {
        const auto& rl = lines[k];
        const BranchImage* hit = nullptr;
        for (const auto& img : images) {
            const Line want = normalize_line(img.direction);
            for (const auto& o : rl.orbit)
                if (same_line(o, want)) {
                    if (hit) throw VerificationError("two branch images lie in one reflection-line orbit");
                    hit = &img;
                }
        }
        if (!hit) throw VerificationError("no branch image for a reflection-line orbit");
        out.branches.push_back({hit->equation, nr.lines[k].eC, secondary_index(action, rl.direction)});
    }
    if (out.branches.size() != images.size())
        throw VerificationError("branch images do not correspond to reflection-line orbits");
    return out;
}

std::vector<CycMatrix> isotypic_component(const OrderAction& action, const std::vector<CycNumber>& per_generator) {
    const int m = action.lift.dim;
    const int nn = m * m;
    const auto& imgs = action.lift.images;
    if (per_generator.size() != imgs.size()) throw Error("one character value per generator is required");
    CycMatrix eq(static_cast<int>(imgs.size()) * nn, nn);
    int row = 0;
    for (std::size_t s = 0; s < imgs.size(); ++s) {
        const CycMatrix& b = imgs[s];
        const CycNumber& c = per_generator[s];
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j, ++row)
                for (int k = 0; k < m; ++k) {
                    // (b X)_{ij} - c (X b)_{ij}
                    if (!b(i, k).is_zero()) eq(row, k * m + j) += b(i, k);
                    if (!b(k, j).is_zero()) eq(row, i * m + k) -= c * b(k, j);
                }
    }
    std::vector<CycMatrix> basis;
    for (const auto& v : nullspace(eq)) {
        CycMatrix t(m, m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) t(i, j) = v[static_cast<std::size_t>(i * m + j)];
        basis.push_back(std::move(t));
    }
    return basis;
}

std::vector<CycNumber> inverse_determinants(const OrderAction& action) {
    std::vector<CycNumber> out;
    for (const auto& g : action.defining.images) out.push_back(det(g).inverse());
    return out;
}

bool verify_theta(const OrderAction& action, const CycMatrix& theta) {
    if (theta.rows() != action.lift.dim || theta.cols() != action.lift.dim) return false;
    if (det(theta).is_zero()) return false;
    const auto c = inverse_determinants(action);
    for (std::size_t s = 0; s < action.lift.images.size(); ++s) {
        const CycMatrix& b = action.lift.images[s];
        if (b * theta * inverse(b) != theta * c[s]) return false;
    }
    return true;
}

namespace {

using Monomial = std::vector<int>;
using MPoly = std::map<Monomial, CycNumber>;

void add_into(MPoly& acc, const Monomial& m, const CycNumber& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = acc.emplace(m, c);
    if (fresh) return;
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
}

} // namespace

bool generic_determinant_nonzero(const std::vector<CycMatrix>& basis) {
    if (basis.empty()) return false;
    const int m = basis.front().rows();
    const std::size_t k = basis.size();
    if (m > 16) throw UnsupportedError("generic determinant limited to size 16");
    // Laplace expansion along rows; state = set of columns already used.
    std::map<unsigned, MPoly> layer;
    layer[0u][Monomial(k, 0)] = CycNumber(1L);
    for (int r = 0; r < m; ++r) {
        std::map<unsigned, MPoly> next;
        for (const auto& [mask, poly] : layer) {
            for (int c = 0; c < m; ++c) {
                if (mask & (1u << c)) continue;
                // Sign of placing column c: number of used columns greater than c.
                int larger = 0;
                for (int c2 = c + 1; c2 < m; ++c2)
                    if (mask & (1u << c2)) ++larger;
                const bool negative = larger % 2 == 1;
                MPoly& dst = next[mask | (1u << c)];
                for (std::size_t v = 0; v < k; ++v) {
                    const CycNumber& coef = basis[v](r, c);
                    if (coef.is_zero()) continue;
                    for (const auto& [mono, val] : poly) {
                        Monomial nm = mono;
                        ++nm[v];
                        add_into(dst, nm, negative ? -(val * coef) : val * coef);
                    }
                }
            }
        }
        for (auto it = next.begin(); it != next.end();)
            it = it->second.empty() ? next.erase(it) : std::next(it);
        layer = std::move(next);
    }
    const unsigned full = (1u << m) - 1u;
    auto it = layer.find(full);
    return it != layer.end() && !it->second.empty();
}

std::optional<CycMatrix> gorenstein_theta(const OrderAction& action) {
    const auto basis = isotypic_component(action, inverse_determinants(action));
    if (basis.empty()) return std::nullopt;
    auto invertible = [](const CycMatrix& t) { return !det(t).is_zero(); };
    for (const auto& b : basis)
        if (invertible(b)) return b;
    CycMatrix sum = basis.front();
    for (std::size_t i = 1; i < basis.size(); ++i) sum = sum + basis[i];
    if (invertible(sum)) return sum;

    std::mt19937 rng(0x5eed);
    auto sample = [&](int range) {
        std::uniform_int_distribution<int> dist(-range, range);
        CycMatrix t = basis.front() * CycNumber(static_cast<long>(dist(rng)));
        for (std::size_t i = 1; i < basis.size(); ++i) t = t + basis[i] * CycNumber(static_cast<long>(dist(rng)));
        return t;
    };
    for (int attempt = 0; attempt < 64; ++attempt) {
        CycMatrix t = sample(3);
        if (invertible(t)) return t;
    }
    if (!generic_determinant_nonzero(basis)) return std::nullopt;
    // The determinant is a nonzero polynomial, so wider sampling must succeed.
    for (int range = 8; range <= 1 << 20; range *= 2)
        for (int attempt = 0; attempt < 64; ++attempt) {
            CycMatrix t = sample(range);
            if (invertible(t)) return t;
        }
    throw VerificationError("no invertible element found although the generic determinant is nonzero");
}

int graded_omega_dim(const OrderAction& action, int d) {
    if (d < 0) throw Error("degree must be non-negative");
    const int m = action.lift.dim;
    const int nd = d + 1;
    const int unknowns = m * m * nd;
    const auto c = inverse_determinants(action);
    const auto& gens = action.defining.images;
    CycMatrix eq(static_cast<int>(gens.size()) * unknowns, unknowns);

    auto index = [m, nd](int i, int j, int k) { return (i * m + j) * nd + k; };
    int row0 = 0;
    for (std::size_t s = 0; s < gens.size(); ++s) {
        const CycMatrix& g = gens[s];
        // Substitution matrix on monomials u^(d-k) v^k with u -> g00 u + g10 v, v -> g01 u + g11 v.
        CycMatrix sub(nd, nd);
        for (int k = 0; k < nd; ++k) {
            std::vector<CycNumber> poly{CycNumber(1L)};
            auto times = [&poly](const CycNumber& a, const CycNumber& b) {
                // multiply by (a u + b v); index = power of v
                std::vector<CycNumber> out(poly.size() + 1);
                for (std::size_t t = 0; t < poly.size(); ++t) {
                    out[t] += poly[t] * a;
                    out[t + 1] += poly[t] * b;
                }
                poly = std::move(out);
            };
            for (int t = 0; t < d - k; ++t) times(g(0, 0), g(1, 0));
            for (int t = 0; t < k; ++t) times(g(0, 1), g(1, 1));
            for (int t = 0; t < nd; ++t) sub(t, k) = poly[static_cast<std::size_t>(t)];
        }
        const CycMatrix& b = action.lift.images[s];
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                for (int kp = 0; kp < nd; ++kp) {
                    const int row = row0 + index(i, j, kp);
                    // (b g(Theta))_{ij} at monomial kp
                    for (int l = 0; l < m; ++l) {
                        if (b(i, l).is_zero()) continue;
                        for (int k = 0; k < nd; ++k)
                            if (!sub(kp, k).is_zero()) eq(row, index(l, j, k)) += b(i, l) * sub(kp, k);
                    }
                    // - c (Theta b)_{ij} at monomial kp
                    for (int l = 0; l < m; ++l)
                        if (!b(l, j).is_zero()) eq(row, index(i, l, kp)) -= c[s] * b(l, j);
                }
        row0 += unknowns;
    }
    return unknowns - rank(eq);
}

std::vector<PermissibleModule> permissible_modules(const Rep& defining, const std::vector<Rep>& irreps,
                                                   std::size_t max_parts) {
    const TupleGroup tg(defining, irreps);
    const MatrixGroup& g = tg.base();
    struct LineData {
        int inertia_order;
        std::vector<std::vector<int>> dims; // per irrep, per eigenvalue exponent
    };
    std::vector<LineData> lines;
    for (const auto& rl : reflection_lines(g)) {
        const LineGroups lg = line_groups(g, rl.direction);
        LineData ld;
        ld.inertia_order = static_cast<int>(lg.inert.size());
        const int ord = lift_order(tg, lg.sigma);
        for (std::size_t b = 0; b < irreps.size(); ++b) {
            std::vector<int> dims(static_cast<std::size_t>(ord), 0);
            for (const auto& es : eigen_split(tg.lift(lg.sigma, b), ord))
                for (int k = 0; k < ord; ++k)
                    if (es.value == root_of_unity(ord, k)) dims[static_cast<std::size_t>(k)] = es.dim;
            ld.dims.push_back(std::move(dims));
        }
        lines.push_back(std::move(ld));
    }

    auto passes = [&](const std::vector<std::size_t>& parts) {
        for (const auto& ld : lines) {
            std::vector<int> total(ld.dims.front().size(), 0);
            for (std::size_t p : parts)
                for (std::size_t k = 0; k < total.size(); ++k) total[k] += ld.dims[p][k];
            int common = 0, count = 0;
            for (int v : total) {
                if (v == 0) continue;
                if (common == 0) common = v;
                if (v != common) return false;
                ++count;
            }
            if (count != ld.inertia_order) return false;
        }
        return true;
    };
    auto contains = [](const std::vector<std::size_t>& big, const std::vector<std::size_t>& small) {
        return std::includes(big.begin(), big.end(), small.begin(), small.end());
    };

    std::vector<std::vector<std::size_t>> found;
    std::vector<std::size_t> cur;
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t size) {
        if (cur.size() == size) {
            for (const auto& f : found)
                if (contains(cur, f)) return;
            if (passes(cur)) found.push_back(cur);
            return;
        }
        for (std::size_t i = start; i < irreps.size(); ++i) {
            cur.push_back(i);
            rec(i, size);
            cur.pop_back();
        }
    };
    for (std::size_t size = 1; size <= max_parts; ++size) rec(0, size);

    std::vector<PermissibleModule> out;
    for (const auto& f : found) {
        std::vector<Rep> parts;
        for (std::size_t i : f) parts.push_back(irreps[i]);
        out.push_back({f, direct_sum(parts)});
    }
    return out;
}

} // namespace canord
