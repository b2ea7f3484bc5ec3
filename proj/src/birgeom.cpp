#include "canord/birgeom.hpp"

#include "canord/errors.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

namespace canord {

namespace {

constexpr int kMaxBlowups = 64;
constexpr int kMaxDepth = 64;
constexpr std::size_t kMaxResidueAssignments = 100000;

// Representative of q modulo Z in [0, 1).
mpq_class frac(const mpq_class& q) {
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    mpq_class r = q - mpq_class(fl);
    r.canonicalize();
    return r;
}

int order_in_qz(const mpq_class& r) { return static_cast<int>(frac(r).get_den().get_si()); }

mpq_class delta_coeff(int e) { return mpq_class(1) - mpq_class(1, e); }

struct LocalCurve {
    std::size_t index;
    Poly2 f;
    mpq_class residue;
};

struct Point {
    std::vector<LocalCurve> curves;
};

Direction single_direction(const Poly2& f) {
    const auto dirs = tangent_directions(f);
    if (dirs.size() != 1) throw MathError("curve has more than one tangent direction");
    return dirs.front().first;
}

bool is_terminal_point(const Point& p, const ResolutionConfig& cfg) {
    std::vector<const LocalCurve*> d;
    for (const auto& c : p.curves)
        if (cfg.curves[c.index].ram > 1) d.push_back(&c);
    if (d.empty()) return true;
    if (d.size() == 1) return d[0]->f.order() == 1 && frac(d[0]->residue) == 0;
    if (d.size() != 2) return false;
    if (d[0]->f.order() != 1 || d[1]->f.order() != 1) return false;
    if (single_direction(d[0]->f) == single_direction(d[1]->f)) return false;
    const int e1 = std::min(cfg.curves[d[0]->index].ram, cfg.curves[d[1]->index].ram);
    const int e2 = std::max(cfg.curves[d[0]->index].ram, cfg.curves[d[1]->index].ram);
    return e2 % e1 == 0 && order_in_qz(d[0]->residue) == e1 && order_in_qz(d[1]->residue) == e1;
}

bool is_normal_crossing(const Point& p) {
    if (p.curves.size() > 2) return false;
    for (const auto& c : p.curves)
        if (c.f.order() != 1) return false;
    return p.curves.size() < 2 || !(single_direction(p.curves[0].f) == single_direction(p.curves[1].f));
}

Poly2 chart_transform(const Poly2& f, const Direction& d) {
    return d.vertical ? f.blowup_vertical() : f.blowup_slope(d.slope);
}

int local_intersection_rec(const Poly2& f, const Poly2& g, int depth) {
    const int mf = f.order(), mg = g.order();
    if (mf <= 0 || mg <= 0) return 0;
    if (depth > kMaxDepth) throw UnsupportedError("curves share a component or meet to very high order");
    int total = mf * mg;
    const auto df = tangent_directions(f);
    const auto dg = tangent_directions(g);
    for (const auto& [a, ma] : df)
        for (const auto& [b, mb] : dg)
            if (a == b) total += local_intersection_rec(chart_transform(f, a), chart_transform(g, b), depth + 1);
    return total;
}

struct RunResult {
    Resolution res;
    std::vector<mpq_class> raw; // indexed like the curves
};

RunResult run_blowups(const GermConfig& germ, const std::vector<mpq_class>& residues, StopRule rule) {
    RunResult out;
    ResolutionConfig& cfg = out.res.config;
    out.res.state.origin_residues = residues;
    Point origin;
    for (std::size_t i = 0; i < germ.branches.size(); ++i) {
        const auto& b = germ.branches[i];
        const std::size_t idx = cfg.add_curve({static_cast<int>(i), false, 0, b.eC, b.equation});
        origin.curves.push_back({idx, Poly2::parse(b.equation), residues[i]});
        out.raw.emplace_back(0);
    }

    std::deque<Point> queue{origin};
    std::vector<Point> finals;
    int count = 0;
    while (!queue.empty()) {
        Point p = std::move(queue.front());
        queue.pop_front();
        const bool stop = rule == StopRule::Terminal ? is_terminal_point(p, cfg)
                                                     : is_terminal_point(p, cfg) && is_normal_crossing(p);
        if (stop) {
            finals.push_back(std::move(p));
            continue;
        }
        if (++count > kMaxBlowups)
            throw UnsupportedError("resolution did not terminate within " + std::to_string(kMaxBlowups) + " blowups");

        BlowupStep step;
        std::map<Direction, std::vector<LocalCurve>> groups;
        mpq_class raw = 1;
        for (const auto& c : p.curves) {
            const auto dirs = tangent_directions(c.f);
            if (dirs.size() > 1 && frac(c.residue) != 0)
                throw UnsupportedError("curve " + cfg.curves[c.index].label +
                                       " has several branches at a point where its cover ramifies");
            const int m = c.f.order();
            step.multiplicities.emplace_back(cfg.curves[c.index].id, m);
            raw -= m * delta_coeff(cfg.curves[c.index].ram);
            if (cfg.curves[c.index].exceptional) raw += m * out.raw[c.index];
            for (const auto& [d, mult] : dirs) groups[d].push_back({c.index, chart_transform(c.f, d), c.residue});
        }
        int e = 1;
        std::vector<mpq_class> new_residues;
        for (const auto& [d, curves] : groups) {
            mpq_class sum = 0;
            for (const auto& c : curves) sum += c.residue;
            const mpq_class r = frac(-sum);
            e = std::lcm(e, order_in_qz(r));
            new_residues.push_back(r);
        }
        raw += delta_coeff(e);

        for (const auto& c : p.curves)
            if (cfg.curves[c.index].exceptional) {
                const int m = c.f.order();
                cfg.curves[c.index].self_int -= m * m;
            }
        const int id = static_cast<int>(cfg.size());
        const std::size_t idx = cfg.add_curve({id, true, -1, e, "E" + std::to_string(count)});
        out.raw.push_back(raw);
        step.exceptional_id = id;
        step.e = e;
        step.raw = raw;
        out.res.state.steps.push_back(std::move(step));

        std::size_t k = 0;
        for (auto& [d, curves] : groups) {
            Point q;
            q.curves.push_back({idx, d.vertical ? Poly2::y() : Poly2::x(), new_residues[k++]});
            for (auto& c : curves) q.curves.push_back(std::move(c));
            queue.push_back(std::move(q));
        }
    }

    for (const auto& p : finals)
        for (std::size_t i = 0; i < p.curves.size(); ++i)
            for (std::size_t j = i + 1; j < p.curves.size(); ++j) {
                const std::size_t a = p.curves[i].index, b = p.curves[j].index;
                cfg.set_dot(a, b, cfg.dot(a, b) + local_intersection(p.curves[i].f, p.curves[j].f));
            }
    return out;
}

// Cover ramification at the origin: r_i of order eP_i in Q/Z summing to zero,
// one representative per orbit under multiplication by units.
std::vector<std::vector<mpq_class>> residue_classes(const GermConfig& germ) {
    const std::size_t b = germ.branches.size();
    int big = 1;
    for (const auto& br : germ.branches) big = std::lcm(big, br.eP);
    std::set<std::vector<int>> reps;
    std::vector<int> ks(b, 0);
    std::size_t visited = 0;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (++visited > kMaxResidueAssignments)
            throw UnsupportedError("too many cover ramification assignments to enumerate");
        if (i == b) {
            long total = 0;
            for (std::size_t t = 0; t < b; ++t) total += static_cast<long>(ks[t]) * (big / germ.branches[t].eP);
            if (total % big != 0) return;
            std::vector<int> best;
            for (int u = 1; u <= big; ++u) {
                if (std::gcd(u, big) != 1) continue;
                std::vector<int> scaled(b);
                for (std::size_t t = 0; t < b; ++t)
                    scaled[t] = static_cast<int>((static_cast<long>(u) * ks[t]) % germ.branches[t].eP);
                if (best.empty() || scaled < best) best = scaled;
            }
            reps.insert(best.empty() ? ks : best);
            return;
        }
        const int ep = germ.branches[i].eP;
        for (int k = 0; k < ep; ++k) {
            if (std::gcd(k, ep) != 1) continue;
            ks[i] = k;
            rec(i + 1);
        }
    };
    rec(0);
    std::vector<std::vector<mpq_class>> out;
    for (const auto& r : reps) {
        std::vector<mpq_class> v;
        for (std::size_t t = 0; t < b; ++t) v.push_back(frac(mpq_class(r[t], germ.branches[t].eP)));
        out.push_back(std::move(v));
    }
    return out;
}

bool same_result(const RunResult& a, const RunResult& b) {
    const auto& x = a.res.config;
    const auto& y = b.res.config;
    if (x.size() != y.size() || x.intersections != y.intersections || a.raw != b.raw) return false;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x.curves[i].self_int != y.curves[i].self_int || x.curves[i].ram != y.curves[i].ram) return false;
    return true;
}

// Elimination without pivoting on -M; succeeds iff M is negative definite.
std::optional<std::vector<mpq_class>> solve_negative_definite(std::vector<std::vector<mpq_class>> m,
                                                              std::vector<mpq_class> rhs) {
    const std::size_t n = m.size();
    for (auto& row : m)
        for (auto& v : row) v = -v;
    for (auto& v : rhs) v = -v;
    for (std::size_t k = 0; k < n; ++k) {
        if (m[k][k] <= 0) return std::nullopt;
        for (std::size_t i = k + 1; i < n; ++i) {
            const mpq_class f = m[i][k] / m[k][k];
            if (f == 0) continue;
            for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
            rhs[i] -= f * rhs[k];
        }
    }
    std::vector<mpq_class> x(n);
    for (std::size_t k = n; k-- > 0;) {
        mpq_class s = rhs[k];
        for (std::size_t j = k + 1; j < n; ++j) s -= m[k][j] * x[j];
        x[k] = s / m[k][k];
    }
    return x;
}

std::vector<std::vector<mpq_class>> exceptional_matrix(const ResolutionConfig& cfg,
                                                       const std::vector<std::size_t>& ex) {
    std::vector<std::vector<mpq_class>> m(ex.size(), std::vector<mpq_class>(ex.size()));
    for (std::size_t i = 0; i < ex.size(); ++i)
        for (std::size_t j = 0; j < ex.size(); ++j)
            m[i][j] = i == j ? mpq_class(cfg.curves[ex[i]].self_int) : mpq_class(cfg.dot(ex[i], ex[j]));
    return m;
}

std::vector<mpq_class> solve_exceptional(const ResolutionConfig& cfg, const std::vector<std::size_t>& ex,
                                         const std::vector<mpq_class>& rhs) {
    auto x = solve_negative_definite(exceptional_matrix(cfg, ex), rhs);
    if (!x) throw MathError("exceptional intersection matrix is not negative definite");
    return *x;
}

Discrep discrep_from(const ResolutionConfig& cfg, const std::vector<ExceptionalDiscrepancy>& per) {
    Discrep d;
    d.value = 1;
    for (const auto& x : per) {
        if (x.a < -1) {
            d.minus_infinity = true;
            d.value = 0;
            return d;
        }
        d.value = std::min(d.value, x.a);
    }
    for (const auto& c : cfg.curves)
        if (c.ram > 1) d.value = std::min(d.value, mpq_class(1, c.ram));
    return d;
}

bool is_ade_tree(const std::vector<std::vector<int>>& adj) {
    const std::size_t n = adj.size();
    std::vector<std::size_t> branch;
    for (std::size_t v = 0; v < n; ++v) {
        if (adj[v].size() > 3) return false;
        if (adj[v].size() == 3) branch.push_back(v);
    }
    if (branch.empty()) return true; // type A
    if (branch.size() > 1) return false;
    std::vector<int> arms;
    for (int start : adj[branch[0]]) {
        int len = 1, prev = static_cast<int>(branch[0]), cur = start;
        while (adj[static_cast<std::size_t>(cur)].size() == 2) {
            const int nxt = adj[static_cast<std::size_t>(cur)][0] == prev ? adj[static_cast<std::size_t>(cur)][1]
                                                                         : adj[static_cast<std::size_t>(cur)][0];
            prev = cur;
            cur = nxt;
            ++len;
        }
        arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1) return true;                 // type D
    return arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4; // E6, E7, E8
}

} // namespace

std::string GermConfig::centre_name() const { return ak == 0 ? "smooth" : "A" + std::to_string(ak); }

RamReport GermConfig::as_report() const {
    RamReport r;
    r.centre = centre_name();
    r.branches = branches;
    return r;
}

void validate(const GermConfig& germ) {
    if (germ.ak < 0) throw SchemaError("A_k centre needs k >= 1");
    std::vector<Poly2> polys;
    for (const auto& b : germ.branches) {
        if (b.eC < 2) throw SchemaError("branch " + b.equation + " needs eC >= 2");
        if (b.eP < 1) throw SchemaError("branch " + b.equation + " needs eP >= 1");
        if (b.eC % b.eP != 0) throw SchemaError("branch " + b.equation + ": eP must divide eC");
        if (b.equation == "z") {
            if (germ.ak == 0) throw SchemaError("the branch tag z needs an A_k centre");
            continue;
        }
        const Poly2 f = Poly2::parse(b.equation);
        if (f.is_zero()) throw SchemaError("branch equation is zero");
        if (f.coeff(0, 0) != 0) throw SchemaError("branch " + b.equation + " does not pass through the origin");
        polys.push_back(f);
    }
    for (std::size_t i = 0; i < polys.size(); ++i)
        for (std::size_t j = i + 1; j < polys.size(); ++j) {
            try {
                local_intersection(polys[i], polys[j]);
            } catch (const UnsupportedError&) {
                throw SchemaError("branches " + germ.branches[i].equation + " and " + germ.branches[j].equation +
                                  " share a component");
            }
        }
}

int ResolutionConfig::dot(std::size_t i, std::size_t j) const {
    if (i == j) return curves[i].self_int;
    return intersections[i][j];
}

std::vector<std::size_t> ResolutionConfig::exceptional_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < curves.size(); ++i)
        if (curves[i].exceptional) out.push_back(i);
    return out;
}

std::size_t ResolutionConfig::index_of(int id) const {
    for (std::size_t i = 0; i < curves.size(); ++i)
        if (curves[i].id == id) return i;
    throw MathError("no curve with id " + std::to_string(id));
}

std::size_t ResolutionConfig::add_curve(ResCurve c) {
    curves.push_back(std::move(c));
    for (auto& row : intersections) row.push_back(0);
    intersections.emplace_back(curves.size(), 0);
    return curves.size() - 1;
}

void ResolutionConfig::set_dot(std::size_t i, std::size_t j, int v) {
    intersections[i][j] = v;
    intersections[j][i] = v;
}

int local_intersection(const Poly2& f, const Poly2& g) { return local_intersection_rec(f, g, 0); }

Resolution resolve(const GermConfig& germ, StopRule rule) {
    validate(germ);
    if (germ.ak != 0) throw UnsupportedError("germs over an A_k centre use the stored resolution template");
    const auto classes = residue_classes(germ);
    if (classes.empty())
        throw UnsupportedError("no cover ramification at the origin is consistent with the given eP values");
    std::optional<RunResult> first;
    for (const auto& r : classes) {
        RunResult run = run_blowups(germ, r, rule);
        if (!first) {
            first = std::move(run);
        } else if (!same_result(*first, run)) {
            throw UnsupportedError("the resolution depends on how the branch covers ramify at the origin");
        }
    }
    return std::move(first->res);
}

mpq_class canonical_dot(const ResolutionConfig& cfg, std::size_t j) {
    const int s = cfg.curves[j].self_int;
    mpq_class v = -s - 2 + delta_coeff(cfg.curves[j].ram) * s;
    for (std::size_t k = 0; k < cfg.size(); ++k)
        if (k != j) v += delta_coeff(cfg.curves[k].ram) * cfg.dot(k, j);
    return v;
}

void require_negative_definite(const ResolutionConfig& cfg) {
    const auto ex = cfg.exceptional_indices();
    solve_exceptional(cfg, ex, std::vector<mpq_class>(ex.size(), mpq_class(0)));
}

std::vector<ExceptionalDiscrepancy> intersection_discrepancies(const ResolutionConfig& cfg) {
    const auto ex = cfg.exceptional_indices();
    std::vector<mpq_class> rhs;
    for (std::size_t j : ex) rhs.push_back(canonical_dot(cfg, j));
    const auto c = solve_exceptional(cfg, ex, rhs);
    std::vector<ExceptionalDiscrepancy> out;
    for (std::size_t i = 0; i < ex.size(); ++i) {
        const auto& curve = cfg.curves[ex[i]];
        out.push_back({curve.id, curve.ram, c[i], c[i] * curve.ram});
    }
    return out;
}

std::map<int, mpq_class> commutative_discrepancies(const ResolutionConfig& cfg) {
    const auto ex = cfg.exceptional_indices();
    std::vector<mpq_class> rhs;
    for (std::size_t j : ex) {
        mpq_class v = -cfg.curves[j].self_int - 2;
        for (std::size_t k = 0; k < cfg.size(); ++k)
            if (!cfg.curves[k].exceptional) v += delta_coeff(cfg.curves[k].ram) * cfg.dot(k, j);
        rhs.push_back(v);
    }
    const auto b = solve_exceptional(cfg, ex, rhs);
    std::map<int, mpq_class> out;
    for (std::size_t i = 0; i < ex.size(); ++i) out[cfg.curves[ex[i]].id] = b[i];
    return out;
}

std::vector<ExceptionalDiscrepancy> recursion_discrepancies(const Resolution& res) {
    std::vector<ExceptionalDiscrepancy> out;
    for (const auto& s : res.state.steps) out.push_back({s.exceptional_id, s.e, s.raw, s.raw * s.e});
    return out;
}

std::string Discrep::to_string() const {
    if (minus_infinity) return "-inf";
    return value.get_str();
}

ResolutionConfig ak_template(const GermConfig& germ) {
    if (germ.ak < 1) throw UnsupportedError("templates exist only for A_k centres");
    ResolutionConfig cfg;
    int e = 1;
    if (!germ.branches.empty()) {
        bool pair = germ.branches.size() == 2;
        for (const auto& b : germ.branches)
            if (b.equation != "z" || b.eC != b.eP) pair = false;
        if (!pair || germ.branches[0].eC != germ.branches[1].eC)
            throw UnsupportedError("an A_k centre is supported with no branches or with two z branches of equal index");
        e = germ.branches[0].eC;
        for (int i = 0; i < 2; ++i) cfg.add_curve({i, false, 0, e, "z"});
    }
    const std::size_t first = cfg.size();
    for (int i = 0; i < germ.ak; ++i) {
        const std::size_t idx = cfg.add_curve({static_cast<int>(first) + i, true, -2, e, "E" + std::to_string(i + 1)});
        if (i > 0) cfg.set_dot(idx - 1, idx, 1);
    }
    if (!germ.branches.empty()) {
        cfg.set_dot(0, first, 1);
        cfg.set_dot(1, cfg.size() - 1, 1);
    }
    return cfg;
}

Discrep discrep(const GermConfig& germ) { return classify(germ).discrep; }

Classification classify(const GermConfig& germ) {
    validate(germ);
    Classification c;
    ResolutionConfig cfg;
    if (germ.ak != 0) {
        cfg = ak_template(germ);
        c.per_exceptional = intersection_discrepancies(cfg);
    } else {
        Resolution res = resolve(germ, StopRule::TerminalNormalCrossing);
        cfg = res.config;
        c.per_exceptional = recursion_discrepancies(res);
        const auto solved = intersection_discrepancies(cfg);
        for (std::size_t i = 0; i < solved.size(); ++i)
            if (solved[i].raw != c.per_exceptional[i].raw)
                throw VerificationError("blowup recursion and intersection solve disagree on curve " +
                                        std::to_string(solved[i].id));
    }
    c.discrep = discrep_from(cfg, c.per_exceptional);
    const bool finite = !c.discrep.minus_infinity;
    c.terminal = finite && c.discrep.value > 0;
    c.canonical = finite && c.discrep.value >= 0;
    c.log_terminal = finite && c.discrep.value > -1;
    c.name = c.terminal ? "terminal" : c.canonical ? "canonical" : c.log_terminal ? "log_terminal" : "not_log_terminal";
    return c;
}

bool terminal_check(const GermConfig& germ) {
    validate(germ);
    if (germ.ak != 0) return false;
    const auto& b = germ.branches;
    if (b.empty()) return true;
    if (b.size() == 1) return b[0].eP == 1 && Poly2::parse(b[0].equation).order() == 1;
    if (b.size() != 2) return false;
    const Poly2 f = Poly2::parse(b[0].equation), g = Poly2::parse(b[1].equation);
    if (f.order() != 1 || g.order() != 1 || local_intersection(f, g) != 1) return false;
    const int e1 = std::min(b[0].eC, b[1].eC), e2 = std::max(b[0].eC, b[1].eC);
    return e2 % e1 == 0 && b[0].eP == e1 && b[1].eP == e1;
}

ResolutionConfig minimal_resolution(const GermConfig& germ) {
    const Classification c = classify(germ);
    if (!c.canonical) throw UnsupportedError("minimal resolutions are computed for canonical germs only");
    ResolutionConfig cfg = germ.ak != 0 ? ak_template(germ) : resolve(germ, StopRule::Terminal).config;
    for (const auto& d : intersection_discrepancies(cfg))
        if (d.a != 0)
            throw VerificationError("minimal resolution has discrepancy " + d.a.get_str() + " on curve " +
                                    std::to_string(d.id));
    for (std::size_t j : cfg.exceptional_indices())
        if (canonical_dot(cfg, j) < 0)
            throw VerificationError("K + Delta is negative on curve " + cfg.curves[j].label);
    return cfg;
}

std::vector<FourCase> four_case_check(const ResolutionConfig& cfg) {
    std::vector<FourCase> out;
    for (std::size_t i : cfg.exceptional_indices()) {
        const auto& ex = cfg.curves[i];
        std::vector<std::size_t> meets;
        int total = 0;
        for (std::size_t j = 0; j < cfg.size(); ++j)
            if (j != i && cfg.curves[j].ram > 1 && cfg.dot(i, j) > 0) {
                meets.push_back(j);
                total += cfg.dot(i, j);
            }
        const bool in_d = ex.ram > 1;
        auto two_transverse_with = [&](int e) {
            if (meets.size() != 2) return false;
            for (std::size_t j : meets)
                if (cfg.dot(i, j) != 1 || cfg.curves[j].ram != e) return false;
            return true;
        };
        FourCase fc{ex.id, ex.self_int, in_d, ""};
        if (ex.self_int == -1 && !in_d) {
            const bool halves = std::all_of(meets.begin(), meets.end(), [&](std::size_t j) { return cfg.curves[j].ram == 2; });
            if (total == 2 && halves) fc.cell = "E^2=-1, E not in D: Delta = D/2, E.D = 2";
        } else if (ex.self_int == -2 && !in_d) {
            if (meets.empty()) fc.cell = "E^2=-2, E disjoint from D";
        } else if (ex.self_int == -1 && in_d) {
            if (two_transverse_with(2 * ex.ram)) fc.cell = "E^2=-1, E in D: Delta = (1-1/e)E + (1-1/2e)(U+V)";
        } else if (ex.self_int == -2 && in_d) {
            if (two_transverse_with(ex.ram)) fc.cell = "E^2=-2, E in D: Delta = (1-1/e)(E+U+V)";
        }
        if (fc.cell.empty())
            throw VerificationError("exceptional curve " + ex.label + " (self-intersection " +
                                    std::to_string(ex.self_int) + ", e=" + std::to_string(ex.ram) +
                                    ") fits no cell of the four-case table");
        out.push_back(std::move(fc));
    }
    return out;
}

bool expcurve_shape_check(const ResolutionConfig& cfg) {
    const auto ex = cfg.exceptional_indices();
    const std::size_t n = ex.size();
    if (n == 0) return true;
    std::vector<std::vector<int>> adj(n);
    std::size_t edges = 0;
    int minus_one = -1;
    for (std::size_t a = 0; a < n; ++a) {
        const int s = cfg.curves[ex[a]].self_int;
        if (s == -1) {
            if (minus_one >= 0) return false;
            minus_one = static_cast<int>(a);
        } else if (s != -2) {
            return false;
        }
        for (std::size_t b = a + 1; b < n; ++b) {
            const int d = cfg.dot(ex[a], ex[b]);
            if (d == 0) continue;
            if (d != 1) return false;
            adj[a].push_back(static_cast<int>(b));
            adj[b].push_back(static_cast<int>(a));
            ++edges;
        }
    }
    if (edges != n - 1) return false;
    std::vector<bool> seen(n, false);
    std::vector<int> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int w : adj[static_cast<std::size_t>(v)])
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = true;
                ++reached;
                stack.push_back(w);
            }
    }
    if (reached != n) return false;
    if (minus_one < 0) return is_ade_tree(adj);
    for (const auto& nb : adj)
        if (nb.size() > 2) return false;
    return adj[static_cast<std::size_t>(minus_one)].size() <= 1;
}

std::optional<std::string> adjacency_violation(const ResolutionConfig& cfg) {
    const auto ex = cfg.exceptional_indices();
    for (std::size_t a : ex)
        for (std::size_t b : ex) {
            if (a == b || cfg.dot(a, b) == 0) continue;
            const auto& u = cfg.curves[a];
            const auto& v = cfg.curves[b];
            if (u.self_int == -2 && v.self_int == -2 && u.ram != v.ram)
                return "adjacent (-2)-curves " + u.label + " and " + v.label + " have different indices";
            if (u.self_int == -1 && v.self_int == -2 && v.ram > 1 && u.ram != 1)
                return "(-1)-curve " + u.label + " next to ramified " + v.label + " is ramified";
        }
    return std::nullopt;
}

GermConfig family_germ(const FamilySpec& spec) {
    const RamReport r = expected_ramification(spec);
    GermConfig g;
    g.branches = r.branches;
    if (r.centre != "smooth") {
        if (r.centre.size() < 2 || r.centre[0] != 'A')
            throw UnsupportedError("germs over a " + r.centre + " centre are not modelled");
        g.ak = std::stoi(r.centre.substr(1));
    }
    return g;
}

TypeMatch recognize_type(const GermConfig& germ) {
    const Classification c = classify(germ);
    if (!c.canonical) throw UnsupportedError("germ is " + c.name + ", not canonical");
    if (c.terminal) return {"terminal", 0, 0, ""};
    if (germ.ak != 0) {
        if (germ.branches.empty()) return {"ADE", germ.ak, 0, "A" + std::to_string(germ.ak)};
        return {tag_name(FamilyTag::Anxi), germ.ak, germ.branches[0].eC, ""};
    }
    const RamReport got = germ.as_report();
    int max_degree = 1;
    for (const auto& b : germ.branches) max_degree = std::max(max_degree, Poly2::parse(b.equation).degree());
    if (germ.branches.size() == 2 && germ.branches[0].eC % 2 == 0) {
        FamilySpec s;
        s.tag = FamilyTag::A12xi;
        s.n = 1;
        s.e = germ.branches[0].eC / 2;
        if (!ram_difference(got, expected_ramification(s))) return {tag_name(s.tag), 1, s.e, ""};
    }
    const std::vector<std::pair<FamilyTag, int>> rows = {
        {FamilyTag::BLn, 1}, {FamilyTag::Bn, 1}, {FamilyTag::Ln, 1}, {FamilyTag::DLn, 2}, {FamilyTag::BDn, 2}};
    for (const auto& [tag, lo] : rows)
        for (int n = lo; n <= max_degree + 1; ++n) {
            FamilySpec s;
            s.tag = tag;
            s.n = n;
            s.e = 2;
            if (!ram_difference(got, expected_ramification(s))) return {tag_name(tag), n, 2, ""};
        }
    throw VerificationError("canonical germ " + to_string(got) + " matches no row of the table");
}

bool resolution_isomorphic(const ResolutionConfig& a, const ResolutionConfig& b) {
    const std::size_t n = a.size();
    if (b.size() != n) return false;
    auto sig = [](const ResolutionConfig& c, std::size_t i) {
        const auto& v = c.curves[i];
        return std::make_tuple(v.exceptional, v.exceptional ? v.self_int : 0, v.ram);
    };
    std::vector<int> map(n, -1);
    std::vector<bool> used(n, false);
    std::function<bool(std::size_t)> extend = [&](std::size_t i) {
        if (i == n) return true;
        for (std::size_t j = 0; j < n; ++j) {
            if (used[j] || sig(a, i) != sig(b, j)) continue;
            bool ok = true;
            for (std::size_t k = 0; k < i && ok; ++k)
                ok = a.dot(i, k) == b.dot(j, static_cast<std::size_t>(map[k]));
            if (!ok) continue;
            map[i] = static_cast<int>(j);
            used[j] = true;
            if (extend(i + 1)) return true;
            used[j] = false;
        }
        map[i] = -1;
        return false;
    };
    return extend(0);
}

std::string resolution_to_dot(const ResolutionConfig& cfg, const std::string& name) {
    std::ostringstream os;
    os << "graph " << name << " {\n";
    os << "  node [shape=circle];\n";
    for (std::size_t i = 0; i < cfg.size(); ++i) {
        const auto& c = cfg.curves[i];
        os << "  c" << c.id << " [label=\"";
        if (c.exceptional) os << -c.self_int;
        else os << c.label;
        os << "\\ne=" << c.ram << "\"";
        if (c.exceptional && c.ram > 1) os << ", shape=doublecircle";
        else if (c.exceptional) os << ", style=filled, fillcolor=lightgray";
        os << "];\n";
    }
    for (std::size_t i = 0; i < cfg.size(); ++i)
        for (std::size_t j = i + 1; j < cfg.size(); ++j)
            if (cfg.dot(i, j) > 0)
                os << "  c" << cfg.curves[i].id << " -- c" << cfg.curves[j].id << " [label=\"" << cfg.dot(i, j)
                   << "\"];\n";
    os << "}\n";
    return os.str();
}

} // namespace canord
