#include "canord/acceptance.hpp"

#include "canord/birgeom.hpp"
#include "canord/errors.hpp"
#include "canord/families.hpp"
#include "canord/fixtures.hpp"
#include "canord/matgroup.hpp"
#include "canord/reps.hpp"

#include <atomic>
#include <chrono>
#include <functional>
#include <iomanip>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <thread>

namespace canord {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct FamilyRun {
    FamilySpec spec;
    std::optional<FamilyData> data;
    FamilyReport report;
    std::string error;
};

std::vector<FamilyRun> run_families(const std::vector<FamilySpec>& specs, unsigned workers) {
    std::vector<FamilyRun> runs(specs.size());
    std::atomic<std::size_t> next{0};
    auto work = [&]() {
        for (std::size_t i = next++; i < specs.size(); i = next++) {
            runs[i].spec = specs[i];
            try {
                runs[i].data = build(specs[i]);
                runs[i].report = check_family(*runs[i].data);
            } catch (const std::exception& e) {
                runs[i].error = family_name(specs[i]) + ": " + e.what();
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
    return runs;
}

// Collects failures; the criterion passes when none were recorded.
struct Tally {
    int checked = 0;
    std::vector<std::string> failures;

    void check(bool ok, const std::string& what) {
        ++checked;
        if (!ok) failures.push_back(what);
    }
    void guard(const std::string& what, const std::function<bool()>& fn) {
        try {
            check(fn(), what);
        } catch (const std::exception& e) {
            check(false, what + " (" + e.what() + ")");
        }
    }
    std::string summary(const std::string& unit) const {
        std::ostringstream os;
        os << checked - static_cast<int>(failures.size()) << "/" << checked << " " << unit;
        if (!failures.empty()) {
            os << "; first failure: " << failures.front();
            if (failures.size() > 1) os << " (+" << failures.size() - 1 << " more)";
        }
        return os.str();
    }
};

CriterionResult finish(int id, std::string title, const Tally& t, const std::string& unit, Clock::time_point t0,
                       double limit = 0.0) {
    CriterionResult r;
    r.id = id;
    r.title = std::move(title);
    r.seconds = seconds_since(t0);
    r.pass = t.failures.empty() && t.checked > 0;
    r.detail = t.summary(unit);
    if (limit > 0 && r.seconds > limit) {
        r.pass = false;
        r.detail += "; exceeded the " + std::to_string(static_cast<int>(limit)) + " s budget";
    }
    return r;
}

GermConfig germ(std::vector<RamBranch> branches, int ak = 0) {
    GermConfig g;
    g.ak = ak;
    g.branches = std::move(branches);
    return g;
}

std::vector<FamilySpec> canonical_smooth_specs(int max_n) {
    std::vector<FamilySpec> out;
    for (int e = 2; e <= 4; ++e) {
        FamilySpec s;
        s.tag = FamilyTag::A12xi;
        s.n = 1;
        s.e = e;
        out.push_back(s);
    }
    for (FamilyTag tag : {FamilyTag::BLn, FamilyTag::Bn, FamilyTag::Ln, FamilyTag::DLn, FamilyTag::BDn})
        for (int n = tag == FamilyTag::DLn || tag == FamilyTag::BDn ? 2 : 1; n <= max_n; ++n) {
            FamilySpec s;
            s.tag = tag;
            s.n = n;
            s.e = 2;
            out.push_back(s);
        }
    return out;
}

bool same_discrepancies(const std::vector<ExceptionalDiscrepancy>& a, const std::vector<ExceptionalDiscrepancy>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].id != b[i].id || a[i].e != b[i].e || a[i].raw != b[i].raw) return false;
    return true;
}

int euler_phi(int n) {
    int count = 0;
    for (int k = 1; k <= n; ++k)
        if (std::gcd(k, n) == 1) ++count;
    return count;
}

CycNumber random_cyc(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
    std::vector<mpq_class> c;
    for (int i = 0; i < euler_phi(n); ++i) c.emplace_back(num(rng), den(rng));
    for (auto& q : c) q.canonicalize();
    return CycNumber::from_coeffs(n, c);
}

CriterionResult criterion1(const std::vector<FamilyRun>& runs, double build_seconds) {
    const auto t0 = Clock::now();
    Tally t;
    for (const auto& r : runs) {
        const std::string name = family_name(r.spec);
        if (!r.error.empty()) {
            t.check(false, r.error);
            continue;
        }
        t.check(r.report.normal, name + " is not normal");
        t.check(r.report.ram_matches, name + ": " + r.report.ram_diff);
    }
    CriterionResult res = finish(1, "Ramification table reproduction", t, "checks", t0);
    res.seconds += build_seconds;
    if (res.seconds > 60.0) {
        res.pass = false;
        res.detail += "; exceeded the 60 s budget";
    }
    return res;
}

CriterionResult criterion2(const std::vector<FamilyRun>& runs) {
    const auto t0 = Clock::now();
    Tally t;
    int printed = 0;
    for (const auto& r : runs) {
        if (!r.error.empty()) {
            t.check(false, r.error);
            continue;
        }
        const std::string name = family_name(r.spec);
        t.check(r.report.gorenstein_found, name + ": no theta found");
        t.check(r.report.theta_verified, name + ": theta fails the equivariance identity");
        const FamilyTag tag = r.spec.tag;
        if (tag != FamilyTag::A12xi && tag != FamilyTag::Anxi) {
            printed += static_cast<int>(r.data->printed_thetas.size());
            t.check(!r.data->printed_thetas.empty() && r.report.printed_thetas_ok,
                    name + ": printed theta fails the verifier");
        }
    }
    CriterionResult res = finish(2, "Gorenstein theta", t, "checks", t0);
    res.detail += ", " + std::to_string(printed) + " printed thetas verified";
    return res;
}

CriterionResult criterion3(const std::vector<FamilyRun>& runs) {
    const auto t0 = Clock::now();
    Tally t;
    for (const auto& r : runs) {
        if (!r.error.empty()) {
            t.check(false, r.error);
            continue;
        }
        const std::string name = family_name(r.spec);
        const int expected = r.spec.tag == FamilyTag::A12xi ? 2 : r.spec.n + 1;
        t.check(r.report.permissible_count == expected,
                name + ": " + std::to_string(r.report.permissible_count) + " permissible modules, expected " +
                    std::to_string(expected));
        t.check(r.report.permissible_shape_ok, name + ": a permissible module is not irreducible or a tau pair");
    }
    return finish(3, "McKay count", t, "checks", t0);
}

CriterionResult criterion4() {
    const auto t0 = Clock::now();
    Tally t;
    t.guard("non-Gorenstein action", [] {
        FamilySpec s;
        s.tag = FamilyTag::NonGor;
        const FamilyReport r = check_family(build(s));
        return r.normal && r.ram_matches && !r.gorenstein_found && r.isotypic_dim == 0;
    });
    t.guard("germ xy with indices 3, 3 is log terminal with discrepancy -1/3", [] {
        const Classification c = classify(germ({{"x", 3, 1}, {"y", 3, 1}}));
        return !c.discrep.minus_infinity && c.discrep.value == mpq_class(-1, 3) && c.log_terminal && !c.canonical;
    });
    t.guard("fixed action is Gorenstein", [] {
        FamilySpec s;
        s.tag = FamilyTag::NonGorFixed;
        const FamilyReport r = check_family(build(s));
        return r.normal && r.ram_matches && r.gorenstein_found && r.theta_verified && r.isotypic_dim == 3;
    });
    return finish(4, "Non-Gorenstein log terminal dichotomy", t, "checks", t0);
}

CriterionResult criterion5(std::vector<FamilyData>& extra) {
    const auto t0 = Clock::now();
    Tally t;
    for (const auto& qc : quiver_cases()) {
        const auto q0 = Clock::now();
        t.guard(qc.fixture, [&] {
            FamilyData d = build(qc.spec);
            const Quiver q = family_quiver(d);
            const bool iso = quiver_isomorphic(q, load_quiver_fixture(qc.fixture));
            if (qc.spec.tag == FamilyTag::ADE) extra.push_back(std::move(d));
            return iso && seconds_since(q0) < 10.0;
        });
    }
    return finish(5, "AR quivers", t, "fixtures matched", t0);
}

CriterionResult criterion6() {
    const auto t0 = Clock::now();
    Tally t;
    // (a) drawn configurations, and agreement with the computed minimal resolutions.
    std::vector<FamilySpec> drawn = canonical_smooth_specs(4);
    for (int n = 1; n <= 4; ++n)
        for (int e = 2; e <= 4; ++e) {
            FamilySpec s;
            s.tag = FamilyTag::Anxi;
            s.n = n;
            s.e = e;
            drawn.push_back(s);
        }
    for (const std::string type : {"A1", "A2", "A3", "D4", "D5", "E6", "E7", "E8"}) {
        FamilySpec s;
        s.tag = FamilyTag::ADE;
        s.ade_type = type;
        drawn.push_back(s);
    }
    for (const auto& s : drawn) {
        const std::string name = family_name(s);
        t.guard(name + " drawn configuration has a_i = 0", [&] {
            const auto d = intersection_discrepancies(figure_resolution(s));
            return std::all_of(d.begin(), d.end(), [](const ExceptionalDiscrepancy& x) { return x.a == 0; });
        });
        if (s.tag != FamilyTag::ADE)
            t.guard(name + " computed minimal resolution matches the drawing", [&] {
                return resolution_isomorphic(minimal_resolution(family_germ(s)), figure_resolution(s));
            });
    }
    // (b) reference germs.
    auto discrep_is = [&](const std::string& what, const GermConfig& g, std::optional<mpq_class> v) {
        t.guard(what, [&] {
            const Discrep d = discrep(g);
            return v ? !d.minus_infinity && d.value == *v : d.minus_infinity;
        });
    };
    discrep_is("unramified smooth germ has discrepancy 1", germ({}), mpq_class(1));
    discrep_is("Kleinian A1 has discrepancy 0", germ({}, 1), mpq_class(0));
    discrep_is("five concurrent lines have discrepancy -inf",
               germ({{"x", 2, 1}, {"y", 2, 1}, {"x - y", 2, 1}, {"x + y", 2, 1}, {"x - 2y", 2, 1}}), std::nullopt);
    for (int e = 2; e <= 4; ++e)
        for (int n = 1; n <= 3; ++n) {
            const GermConfig g = germ({{"x", n * e, e}, {"y", e, e}});
            const std::string what = "node with indices " + std::to_string(n * e) + ", " + std::to_string(e);
            t.guard(what + " is terminal", [&] { return classify(g).terminal && terminal_check(g); });
        }
    // (c) the two discrepancy computations agree.
    for (const auto& s : canonical_smooth_specs(3))
        for (StopRule rule : {StopRule::Terminal, StopRule::TerminalNormalCrossing})
            t.guard(family_name(s) + " recursion and solve agree", [&] {
                const Resolution res = resolve(family_germ(s), rule);
                return same_discrepancies(recursion_discrepancies(res), intersection_discrepancies(res.config));
            });
    return finish(6, "Discrepancy engine", t, "checks", t0);
}

CriterionResult criterion7(const std::vector<FamilySpec>& runs) {
    const auto t0 = Clock::now();
    Tally t;
    std::vector<GermConfig> germs;
    std::vector<std::string> names;
    for (const auto& s : runs) {
        if (s.l != 1) continue; // the ramification data does not depend on l
        germs.push_back(family_germ(s));
        names.push_back(family_name(s));
    }
    for (int k = 1; k <= 4; ++k) {
        germs.push_back(germ({}, k));
        names.push_back("Kleinian A" + std::to_string(k));
    }
    for (std::size_t i = 0; i < germs.size(); ++i) {
        t.guard(names[i] + " structural checks", [&] {
            const ResolutionConfig cfg = minimal_resolution(germs[i]);
            four_case_check(cfg);
            return expcurve_shape_check(cfg) && !adjacency_violation(cfg);
        });
    }
    return finish(7, "Structural constraints", t, "minimal resolutions", t0);
}

CriterionResult criterion8(const std::vector<FamilyRun>& runs, const std::vector<FamilyData>& extra) {
    const auto t0 = Clock::now();
    Tally t;
    std::mt19937 rng(20240601u);
    const std::vector<int> conductors = {1, 3, 4, 5, 7, 8, 9, 12, 15, 16, 20, 24};
    std::uniform_int_distribution<std::size_t> pick(0, conductors.size() - 1);
    int identities = 0;
    std::string bad;
    for (int i = 0; i < 10000; ++i) {
        const int n = conductors[pick(rng)];
        const CycNumber a = random_cyc(rng, n), b = random_cyc(rng, n), c = random_cyc(rng, conductors[pick(rng)]);
        bool ok = true;
        switch (i % 5) {
        case 0: ok = (a + b) * c == a * c + b * c; break;
        case 1: ok = (a * b) * c == a * (b * c); break;
        case 2: ok = a.is_zero() || (a * a.inverse()).is_one(); break;
        case 3: ok = (a * b).conj() == a.conj() * b.conj(); break;
        default: {
            long j = 1;
            const int m = std::lcm(a.conductor(), b.conductor());
            for (long k = 2; k < 2L * m + 3; ++k)
                if (std::gcd(k, static_cast<long>(m)) == 1 && (k + i) % 3 == 0) {
                    j = k;
                    break;
                }
            ok = (a + b * a).galois(j) == a.galois(j) + b.galois(j) * a.galois(j);
        }
        }
        ++identities;
        if (!ok && bad.empty()) bad = "identity " + std::to_string(i % 5) + " fails at conductor " + std::to_string(n);
    }
    t.check(bad.empty(), bad);

    std::vector<const FamilyData*> families;
    for (const auto& r : runs)
        if (r.data) families.push_back(&*r.data);
    for (const auto& d : extra) families.push_back(&d);
    for (const FamilyData* d : families) {
        t.guard(d->name + " characters", [&] {
            const TupleGroup tg(d->defining, d->irreps);
            verify_complete_irreducibles(tg);
            std::size_t sum = 0;
            for (const auto& r : d->irreps) sum += static_cast<std::size_t>(r.dim * r.dim);
            return sum == tg.base().order();
        });
        t.guard(d->name + " quiver 2-regularity", [&] {
            const Quiver q = family_quiver(*d);
            for (std::size_t i = 0; i < q.vertices.size(); ++i) {
                int s = 0;
                for (std::size_t j = 0; j < q.vertices.size(); ++j) s += q.arrows[i][j] * q.vertices[j].second;
                if (s != 2 * q.vertices[i].second) return false;
            }
            return true;
        });
        t.guard(d->name + " orbit-stabilizer", [&] {
            for (const auto& rl : reflection_lines(d->group))
                if (rl.orbit.size() * stabilizer(d->group, rl.direction).size() != d->group.order()) return false;
            return true;
        });
    }
    CriterionResult res = finish(8, "Algebra substrate properties", t, "checks", t0, 60.0);
    res.detail += ", " + std::to_string(identities) + " random cyclotomic identities";
    return res;
}

} // namespace

std::vector<CriterionResult> run_acceptance(unsigned workers) {
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    const auto t0 = Clock::now();
    const std::vector<FamilySpec> specs = table_runs();
    const std::vector<FamilyRun> runs = run_families(specs, workers);
    const double build_seconds = seconds_since(t0);

    std::vector<CriterionResult> out;
    std::vector<FamilyData> extra;
    out.push_back(criterion1(runs, build_seconds));
    out.push_back(criterion2(runs));
    out.push_back(criterion3(runs));
    out.push_back(criterion4());
    out.push_back(criterion5(extra));
    out.push_back(criterion6());
    out.push_back(criterion7(specs));
    out.push_back(criterion8(runs, extra));
    return out;
}

std::string format_result(const CriterionResult& r) {
    std::ostringstream os;
    os << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << " " << r.title << ": " << r.detail << " (" << std::fixed
       << std::setprecision(2) << r.seconds << " s)";
    return os.str();
}

} // namespace canord
