#include "canord/fixtures.hpp"

#include "canord/errors.hpp"
#include "canord/serialize.hpp"

#include <cstdlib>
#include <fstream>
#include <numeric>
#include <sstream>

#ifndef CANORD_DEFAULT_FIXTURE_DIR
#define CANORD_DEFAULT_FIXTURE_DIR "tests/fixtures"
#endif

namespace canord {

namespace {

FamilySpec spec_of(FamilyTag tag, int n, int e = 2, int l = 1) {
    FamilySpec s;
    s.tag = tag;
    s.n = n;
    s.e = e;
    s.l = l;
    return s;
}

// Small builder for decorated dual graphs.
struct Graph {
    ResolutionConfig cfg;

    std::size_t branch(int e) {
        const int id = static_cast<int>(cfg.size());
        return cfg.add_curve({id, false, 0, e, "C" + std::to_string(id)});
    }
    std::size_t curve(int minus_self, int e = 1) {
        const int id = static_cast<int>(cfg.size());
        return cfg.add_curve({id, true, -minus_self, e, "E" + std::to_string(id)});
    }
    void edge(std::size_t a, std::size_t b, int m = 1) { cfg.set_dot(a, b, m); }
    // Chain of k (-2)-curves of index e; returns the indices in order.
    std::vector<std::size_t> chain(int k, int e = 1) {
        std::vector<std::size_t> out;
        for (int i = 0; i < k; ++i) {
            out.push_back(curve(2, e));
            if (i > 0) edge(out[out.size() - 2], out.back());
        }
        return out;
    }
};

ResolutionConfig dynkin(const std::string& type) {
    Graph g;
    const char letter = type.at(0);
    const int rank = std::stoi(type.substr(1));
    if (letter == 'A') {
        g.chain(rank);
    } else if (letter == 'D') {
        const auto c = g.chain(rank - 1);
        g.edge(g.curve(2), c[c.size() - 2]);
    } else {
        const auto c = g.chain(rank - 1);
        g.edge(g.curve(2), c[2]);
    }
    return g.cfg;
}

} // namespace

std::string fixture_dir() {
    if (const char* env = std::getenv(kFixtureDirEnv); env != nullptr && *env != '\0') return env;
    return CANORD_DEFAULT_FIXTURE_DIR;
}

std::string read_fixture(const std::string& name) {
    const std::string path = fixture_dir() + "/" + name;
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot read fixture " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Quiver load_quiver_fixture(const std::string& name) {
    const std::string text = read_fixture("quivers/" + name + ".json");
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw SchemaError("fixture " + name + " is not valid JSON: " + e.what());
    }
    return quiver_from_json(j);
}

std::vector<QuiverCase> quiver_cases() {
    FamilySpec a2;
    a2.tag = FamilyTag::ADE;
    a2.ade_type = "A2";
    FamilySpec d4 = a2;
    d4.ade_type = "D4";
    return {
        {"a12xi_e2", spec_of(FamilyTag::A12xi, 1, 2)},
        {"bl2", spec_of(FamilyTag::BLn, 2)},
        {"b2", spec_of(FamilyTag::Bn, 2)},
        {"l2", spec_of(FamilyTag::Ln, 2)},
        {"dl2", spec_of(FamilyTag::DLn, 2)},
        {"bd2", spec_of(FamilyTag::BDn, 2)},
        {"bd3", spec_of(FamilyTag::BDn, 3)},
        {"a2xi_e2", spec_of(FamilyTag::Anxi, 2, 2)},
        {"ade_a2", a2},
        {"ade_d4", d4},
    };
}

ResolutionConfig figure_resolution(const FamilySpec& s) {
    Graph g;
    switch (s.tag) {
    case FamilyTag::A12xi: {
        const auto u = g.branch(2 * s.e), v = g.branch(2 * s.e);
        const auto e = g.curve(1, s.e);
        g.edge(u, e);
        g.edge(e, v);
        break;
    }
    case FamilyTag::BLn: {
        const auto c = g.branch(2);
        const auto chain = g.chain(s.n - 1);
        const auto top = g.curve(1);
        if (!chain.empty()) g.edge(chain.back(), top);
        g.edge(top, c, 2);
        break;
    }
    case FamilyTag::Bn:
    case FamilyTag::Ln: {
        const auto u = g.branch(2), v = g.branch(2);
        const auto chain = g.chain(s.n - 1);
        const auto top = g.curve(1);
        if (!chain.empty()) g.edge(chain.back(), top);
        g.edge(top, u);
        g.edge(top, v);
        if (s.tag == FamilyTag::Ln) g.edge(u, v);
        break;
    }
    case FamilyTag::DLn: {
        const auto u = g.branch(2), v = g.branch(2);
        const auto chain = g.chain(s.n - 1, 2);
        const auto top = g.curve(1);
        g.edge(u, chain.front());
        g.edge(chain.back(), top);
        g.edge(chain.back(), v);
        g.edge(v, top);
        break;
    }
    case FamilyTag::BDn: {
        const auto u = g.branch(2), v = g.branch(2), w = g.branch(2);
        const auto chain = g.chain(s.n - 1, 2);
        const auto top = g.curve(1);
        g.edge(u, chain.front());
        g.edge(chain.back(), top);
        g.edge(top, v);
        g.edge(chain.back(), w);
        break;
    }
    case FamilyTag::Anxi: {
        const auto u = g.branch(s.e), v = g.branch(s.e);
        const auto chain = g.chain(s.n, s.e);
        g.edge(u, chain.front());
        g.edge(chain.back(), v);
        break;
    }
    case FamilyTag::ADE: return dynkin(s.ade_type);
    case FamilyTag::NonGor:
    case FamilyTag::NonGorFixed: throw UnsupportedError("the non-canonical examples have no drawn resolution");
    }
    return g.cfg;
}

std::vector<FamilySpec> table_runs() {
    std::vector<FamilySpec> out;
    for (int e = 2; e <= 4; ++e)
        for (int l = 1; l < e; ++l)
            if (std::gcd(l, e) == 1) out.push_back(spec_of(FamilyTag::A12xi, 1, e, l));
    for (FamilyTag tag : {FamilyTag::BLn, FamilyTag::Bn, FamilyTag::Ln, FamilyTag::DLn, FamilyTag::BDn}) {
        const int lo = tag == FamilyTag::DLn || tag == FamilyTag::BDn ? 2 : 1;
        for (int n = lo; n <= 4; ++n) out.push_back(spec_of(tag, n));
    }
    for (int n = 1; n <= 4; ++n)
        for (int e = 2; e <= 4; ++e)
            for (int l = 1; l < e; ++l)
                if (std::gcd(l, e) == 1) out.push_back(spec_of(FamilyTag::Anxi, n, e, l));
    return out;
}

} // namespace canord
