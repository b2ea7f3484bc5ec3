#include "canord/serialize.hpp"

#include "canord/errors.hpp"

#include <map>
#include <set>

#ifndef CANORD_VERSION
#define CANORD_VERSION "0.0.0"
#endif

namespace canord {

namespace {

void require(bool cond, const std::string& what) {
    if (!cond) throw SchemaError(what);
}

void only_keys(const Json& j, const std::set<std::string>& allowed, const std::string& where) {
    require(j.is_object(), where + " must be a JSON object");
    for (const auto& [k, v] : j.items())
        require(allowed.count(k) > 0, "unknown key \"" + k + "\" in " + where);
}

int get_int(const Json& j, const std::string& key, const std::string& where) {
    require(j.contains(key), where + " needs \"" + key + "\"");
    require(j.at(key).is_number_integer(), "\"" + key + "\" in " + where + " must be an integer");
    return j.at(key).get<int>();
}

Json rationals_json(const std::vector<mpq_class>& v) {
    Json out = Json::array();
    for (const auto& q : v) out.push_back(rational_to_string(q));
    return out;
}

Json branches_json(const std::vector<RamBranch>& branches) {
    Json out = Json::array();
    for (const auto& b : branches) out.push_back({{"eq", b.equation}, {"eC", b.eC}, {"eP", b.eP}});
    return out;
}

Json ram_json(const RamReport& r) { return {{"centre", r.centre}, {"branches", branches_json(r.branches)}}; }

} // namespace

std::string version() { return CANORD_VERSION; }

std::string rational_to_string(const mpq_class& q) {
    mpq_class c = q;
    c.canonicalize();
    return c.get_str();
}

mpq_class rational_from_string(const std::string& s) {
    require(!s.empty(), "empty rational");
    std::size_t slash = s.find('/');
    auto digits = [](const std::string& t, bool sign) {
        std::size_t i = sign && !t.empty() && t[0] == '-' ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    const std::string num = s.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    require(digits(num, true) && digits(den, false), "malformed rational \"" + s + "\"");
    mpq_class q{mpz_class(num), mpz_class(den)};
    require(q.get_den() != 0, "rational \"" + s + "\" has zero denominator");
    q.canonicalize();
    return q;
}

Json to_json(const CycNumber& x) {
    const CycNumber m = x.minimized();
    return {{"conductor", m.conductor()}, {"coeffs", rationals_json(m.coeffs())}};
}

CycNumber cyc_from_json(const Json& j) {
    only_keys(j, {"conductor", "coeffs"}, "cyclotomic number");
    const int n = get_int(j, "conductor", "cyclotomic number");
    require(n >= 1, "conductor must be positive");
    require(j.contains("coeffs") && j.at("coeffs").is_array(), "cyclotomic number needs a \"coeffs\" array");
    std::vector<mpq_class> c;
    for (const auto& v : j.at("coeffs")) {
        require(v.is_string() || v.is_number_integer(), "coefficients must be rational strings");
        c.push_back(v.is_string() ? rational_from_string(v.get<std::string>()) : mpq_class(v.get<long>()));
    }
    try {
        return CycNumber::from_coeffs(n, c);
    } catch (const MathError& e) {
        throw SchemaError(std::string("invalid cyclotomic number: ") + e.what());
    }
}

Json to_json(const CycMatrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

CycMatrix matrix_from_json(const Json& j) {
    require(j.is_array() && !j.empty(), "matrix must be a non-empty array of rows");
    std::vector<std::vector<CycNumber>> rows;
    for (const auto& r : j) {
        require(r.is_array() && r.size() == j.front().size() && !r.empty(), "matrix rows must have equal length");
        std::vector<CycNumber> row;
        for (const auto& v : r) row.push_back(cyc_from_json(v));
        rows.push_back(std::move(row));
    }
    return CycMatrix::from_rows(rows);
}

GermConfig germ_from_json(const Json& j) {
    only_keys(j, {"centre", "branches"}, "germ");
    GermConfig g;
    require(j.contains("centre"), "germ needs a \"centre\"");
    const Json& c = j.at("centre");
    if (c.is_string()) {
        require(c.get<std::string>() == "smooth", "centre must be \"smooth\" or {\"Ak\": k}");
    } else {
        require(c.is_object(), "centre must be \"smooth\" or {\"Ak\": k}");
        only_keys(c, {"Ak"}, "centre");
        g.ak = get_int(c, "Ak", "centre");
        require(g.ak >= 1, "A_k centre needs k >= 1");
    }
    require(j.contains("branches") && j.at("branches").is_array(), "germ needs a \"branches\" array");
    for (const auto& b : j.at("branches")) {
        only_keys(b, {"eq", "eC", "eP"}, "branch");
        require(b.contains("eq") && b.at("eq").is_string(), "branch needs a string \"eq\"");
        g.branches.push_back({b.at("eq").get<std::string>(), get_int(b, "eC", "branch"), get_int(b, "eP", "branch")});
    }
    validate(g);
    return g;
}

Json to_json(const GermConfig& g) {
    Json j;
    if (g.ak == 0) j["centre"] = "smooth";
    else j["centre"] = {{"Ak", g.ak}};
    j["branches"] = branches_json(g.branches);
    return j;
}

FamilySpec family_spec_from_json(const Json& j) {
    only_keys(j, {"type", "n", "e", "l", "a", "adeType"}, "family");
    require(j.contains("type") && j.at("type").is_string(), "family needs a string \"type\"");
    FamilySpec s;
    s.tag = parse_tag(j.at("type").get<std::string>());
    if (j.contains("n")) s.n = get_int(j, "n", "family");
    if (j.contains("e")) s.e = get_int(j, "e", "family");
    if (j.contains("l")) s.l = get_int(j, "l", "family");
    if (j.contains("a") && !j.at("a").is_null()) s.a = get_int(j, "a", "family");
    if (j.contains("adeType")) {
        require(j.at("adeType").is_string(), "\"adeType\" must be a string");
        s.ade_type = j.at("adeType").get<std::string>();
    }
    return s;
}

Json to_json(const FamilySpec& s) {
    Json j{{"type", tag_name(s.tag)}, {"n", s.n}, {"e", s.e}, {"l", s.l}};
    j["a"] = s.a ? Json(*s.a) : Json(nullptr);
    j["adeType"] = s.ade_type;
    return j;
}

Json to_json(const ResolutionConfig& cfg) {
    Json curves = Json::array();
    for (const auto& c : cfg.curves)
        curves.push_back({{"id", c.id}, {"exceptional", c.exceptional}, {"selfInt", c.self_int}, {"e", c.ram},
                          {"label", c.label}});
    Json inter = Json::array();
    for (std::size_t i = 0; i < cfg.size(); ++i)
        for (std::size_t j = i + 1; j < cfg.size(); ++j)
            if (cfg.dot(i, j) != 0) inter.push_back({cfg.curves[i].id, cfg.curves[j].id, cfg.dot(i, j)});
    return {{"curves", curves}, {"intersections", inter}};
}

ResolutionConfig resolution_from_json(const Json& j) {
    only_keys(j, {"curves", "intersections"}, "resolution");
    require(j.contains("curves") && j.at("curves").is_array(), "resolution needs a \"curves\" array");
    ResolutionConfig cfg;
    for (const auto& c : j.at("curves")) {
        only_keys(c, {"id", "exceptional", "selfInt", "e", "label"}, "curve");
        ResCurve rc;
        rc.id = get_int(c, "id", "curve");
        require(c.contains("exceptional") && c.at("exceptional").is_boolean(), "curve needs boolean \"exceptional\"");
        rc.exceptional = c.at("exceptional").get<bool>();
        rc.self_int = c.contains("selfInt") ? get_int(c, "selfInt", "curve") : 0;
        rc.ram = c.contains("e") ? get_int(c, "e", "curve") : 1;
        require(rc.ram >= 1, "curve index e must be positive");
        if (c.contains("label")) rc.label = c.at("label").get<std::string>();
        cfg.add_curve(rc);
    }
    if (j.contains("intersections"))
        for (const auto& e : j.at("intersections")) {
            require(e.is_array() && e.size() == 3, "intersections are [id, id, multiplicity] triples");
            const std::size_t a = cfg.index_of(e[0].get<int>()), b = cfg.index_of(e[1].get<int>());
            require(a != b, "intersection of a curve with itself belongs in selfInt");
            cfg.set_dot(a, b, e[2].get<int>());
        }
    return cfg;
}

Json to_json(const Quiver& q) {
    Json vertices = Json::array();
    for (const auto& [label, dim] : q.vertices) vertices.push_back({{"label", label}, {"dim", dim}});
    return {{"vertices", vertices}, {"arrows", q.arrows}, {"tau", q.tau}};
}

Quiver quiver_from_json(const Json& j) {
    only_keys(j, {"name", "source", "vertices", "arrows", "edges", "tau"}, "quiver");
    require(j.contains("vertices") && j.at("vertices").is_array(), "quiver needs a \"vertices\" array");
    Quiver q;
    for (const auto& v : j.at("vertices")) {
        only_keys(v, {"label", "dim"}, "vertex");
        require(v.contains("label") && v.at("label").is_string(), "vertex needs a string \"label\"");
        q.vertices.emplace_back(v.at("label").get<std::string>(), get_int(v, "dim", "vertex"));
    }
    const std::size_t n = q.vertices.size();
    std::map<std::string, int> by_label;
    for (std::size_t i = 0; i < n; ++i) by_label[q.vertices[i].first] = static_cast<int>(i);
    auto vertex = [&](const Json& v) {
        if (v.is_number_integer()) {
            const int i = v.get<int>();
            require(i >= 0 && static_cast<std::size_t>(i) < n, "vertex index out of range");
            return i;
        }
        require(v.is_string() && by_label.count(v.get<std::string>()), "unknown vertex " + v.dump());
        return by_label.at(v.get<std::string>());
    };
    q.arrows.assign(n, std::vector<int>(n, 0));
    if (j.contains("arrows")) {
        q.arrows = j.at("arrows").get<std::vector<std::vector<int>>>();
        require(q.arrows.size() == n, "arrow matrix has the wrong size");
        for (const auto& row : q.arrows) require(row.size() == n, "arrow matrix has the wrong size");
    } else {
        require(j.contains("edges") && j.at("edges").is_array(), "quiver needs \"arrows\" or \"edges\"");
        for (const auto& e : j.at("edges")) {
            require(e.is_array() && e.size() == 3, "edges are [from, to, multiplicity] triples");
            const int a = vertex(e[0]), b = vertex(e[1]);
            const int m = e[2].get<int>();
            q.arrows[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] += m;
            if (a != b) q.arrows[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] += m;
        }
    }
    require(j.contains("tau") && j.at("tau").is_array() && j.at("tau").size() == n, "quiver needs a full \"tau\"");
    for (const auto& t : j.at("tau")) q.tau.push_back(vertex(t));
    return q;
}

Json classification_report(const GermConfig& germ, const Classification& c) {
    Json per = Json::array();
    for (const auto& x : c.per_exceptional)
        per.push_back({{"id", x.id}, {"e", x.e}, {"rawCoeff", rational_to_string(x.raw)}, {"a", rational_to_string(x.a)}});
    Json j{{"version", version()}, {"params", to_json(germ)}, {"discrep", c.discrep.to_string()}, {"class", c.name}};
    j["flags"] = {{"terminal", c.terminal}, {"canonical", c.canonical}, {"logTerminal", c.log_terminal}};
    j["perExceptional"] = per;
    j["branches"] = branches_json(germ.branches);
    return j;
}

Json resolution_report(const GermConfig& germ, const ResolutionConfig& cfg) {
    Json j{{"version", version()}, {"params", to_json(germ)}};
    j["exceptionalCount"] = cfg.exceptional_indices().size();
    j["resolution"] = to_json(cfg);
    return j;
}

Json family_report(const FamilySpec& spec, const FamilyReport& r) {
    Json j{{"version", version()}, {"params", to_json(spec)}, {"family", r.family}};
    j["normal"] = r.normal;
    j["ramMatchesTable"] = r.ram_matches;
    j["ramification"] = ram_json(r.ram);
    j["expectedRamification"] = ram_json(r.expected_ram);
    if (!r.ram_diff.empty()) j["ramDifference"] = r.ram_diff;
    j["gorenstein"] = {{"found", r.gorenstein_found},
                       {"theta", r.theta ? to_json(*r.theta) : Json(nullptr)},
                       {"verified", r.theta_verified},
                       {"expected", r.expected_gorenstein},
                       {"isotypicDim", r.isotypic_dim}};
    j["permissibleCount"] = r.permissible_count;
    j["expected"] = r.expected_permissible >= 0 ? Json(r.expected_permissible) : Json(nullptr);
    j["mckayCountOk"] = r.mckay_count_ok;
    j["permissible"] = r.permissible;
    j["permissibleShapeOk"] = r.permissible_shape_ok;
    j["printedThetasOk"] = r.printed_thetas_ok;
    j["ok"] = r.ok();
    return j;
}

Json quiver_report(const FamilySpec& spec, const Quiver& q) {
    return {{"version", version()}, {"params", to_json(spec)}, {"quiver", to_json(q)}};
}

Json error_report(const std::string& kind, const std::string& message) {
    return {{"version", version()}, {"error", {{"kind", kind}, {"message", message}}}};
}

} // namespace canord
