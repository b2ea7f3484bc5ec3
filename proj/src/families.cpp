#include "canord/families.hpp"

#include "canord/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace canord {

namespace {

const std::vector<std::pair<FamilyTag, const char*>> kTagNames = {
    {FamilyTag::A12xi, "A12xi"}, {FamilyTag::BLn, "BLn"},   {FamilyTag::Bn, "Bn"},
    {FamilyTag::Ln, "Ln"},       {FamilyTag::DLn, "DLn"},   {FamilyTag::BDn, "BDn"},
    {FamilyTag::ADE, "ADE"},     {FamilyTag::Anxi, "Anxi"}, {FamilyTag::NonGor, "NonGor"},
    {FamilyTag::NonGorFixed, "NonGorFixed"},
};

CycNumber z(int n, long k) { return root_of_unity(n, k); }

long mod(long a, long m) { return ((a % m) + m) % m; }

CycMatrix diag(std::initializer_list<CycNumber> d) { return CycMatrix::diag(std::vector<CycNumber>(d)); }

CycMatrix swap2() { return CycMatrix::from_rows({{0L, 1L}, {1L, 0L}}); }

CycMatrix block(const CycMatrix& a, const CycMatrix& b) { return a.direct_sum(b); }

Word w(std::initializer_list<std::pair<std::string, int>> parts) { return Word(parts); }

Relation rel(Word word, CycNumber scalar, std::string label) { return {std::move(word), std::move(scalar), std::move(label)}; }

const std::vector<std::string> kSigmaTau = {"sigma", "tau"};
const std::vector<std::string> kSigmaTauPi = {"sigma", "tau", "pi"};

std::string x_power(int k) { return k == 1 ? "x" : "x^" + std::to_string(k); }

void require(bool cond, const std::string& what) {
    if (!cond) throw SchemaError(what);
}

// e x e matrices of the A12xi construction; zeta is a primitive (order)-th root.
CycMatrix shift_q(int e, int sign) {
    CycMatrix q(e, e);
    for (int k = 0; k + 1 < e; ++k) q(k + 1, k) = CycNumber(1L);
    q(0, e - 1) = CycNumber(static_cast<long>(sign));
    return q;
}

CycMatrix diag_powers(int order, int e, long step, long offset = 0) {
    std::vector<CycNumber> d;
    for (int k = 0; k < e; ++k) d.push_back(z(order, offset + step * k));
    return CycMatrix::diag(d);
}

Rep rep2(const std::string& label, const std::vector<std::string>& names, std::vector<CycMatrix> imgs,
         const CycNumber& central) {
    return make_rep(label, names, std::move(imgs), central);
}

std::vector<Rep> one_dim(const std::vector<std::pair<std::string, std::vector<long>>>& table,
                         const std::vector<std::string>& names) {
    std::vector<Rep> out;
    for (const auto& [label, vals] : table) {
        std::vector<CycMatrix> imgs;
        for (long v : vals) imgs.push_back(CycMatrix::scalar(1, CycNumber(v)));
        out.push_back(make_rep(label, names, imgs));
    }
    return out;
}

void finish(FamilyData& d) {
    d.group = MatrixGroup::generate(d.defining.images);
    d.reflection_classes = static_cast<int>(pseudo_reflections(d.group).size());
    for (const auto& r : d.irreps)
        if (!check_relations(r, d.relations))
            throw VerificationError("module " + r.label + " of " + d.name + " violates the family relations");
}

std::vector<OrderAction> actions_from_permissible(const FamilyData& d) {
    std::vector<OrderAction> out;
    for (const auto& pm : permissible_modules(d.defining, d.irreps)) {
        std::string label;
        for (std::size_t i : pm.parts) label += (label.empty() ? "" : "+") + d.irreps[i].label;
        out.push_back({label, d.defining, pm.rep});
    }
    return out;
}

std::string ade_letter_check(const std::string& t, int& rank) {
    require(t.size() >= 2, "ADE type must look like A3, D4, E6, E7 or E8");
    const char c = t[0];
    require(c == 'A' || c == 'D' || c == 'E', "ADE type must start with A, D or E");
    for (std::size_t i = 1; i < t.size(); ++i)
        require(t[i] >= '0' && t[i] <= '9' && i < 5, "ADE type rank must be a small integer");
    rank = std::stoi(t.substr(1));
    if (c == 'A') require(rank >= 1, "A_k needs k >= 1");
    if (c == 'D') require(rank >= 4, "D_k needs k >= 4");
    if (c == 'E') require(rank >= 6 && rank <= 8, "E_k needs k in 6..8");
    return std::string(1, c);
}

// 2x2 matrix of the quaternion a + b i + c j + d k.
CycMatrix quaternion(const CycNumber& a, const CycNumber& b, const CycNumber& c, const CycNumber& d) {
    const CycNumber i = z(4, 1);
    return CycMatrix::from_rows({{a + b * i, c + d * i}, {-c + d * i, a - b * i}});
}

FamilyData build_a12xi(const FamilySpec& s) {
    require(s.e >= 2, "A12xi needs e >= 2");
    require(s.l >= 1 && s.l < s.e && std::gcd(s.l, s.e) == 1, "A12xi needs 1 <= l < e with gcd(l, e) = 1");
    const int e = s.e, l = s.l, m = 2 * e;
    FamilyData d;
    d.defining = make_rep("W", kSigmaTau, {diag({z(m, 1), 1L}), diag({1L, z(m, 1)})});
    d.central_scalar = z(m, 2 * l);
    d.relations = {rel(w({{"sigma", m}}), 1L, "sigma^2e"), rel(w({{"tau", m}}), 1L, "tau^2e"),
                   rel(w({{"sigma", 1}, {"tau", 1}, {"sigma", -1}, {"tau", -1}}), d.central_scalar, "commutator")};
    const CycMatrix pl = diag_powers(m, e, 2L * l);
    for (int i = 0; i < 2; ++i)
        for (int sign : {1, -1})
            d.irreps.push_back(rep2("W" + std::to_string(i) + (sign > 0 ? "+" : "-"), kSigmaTau,
                                    {pl * z(m, i), shift_q(e, sign)}, d.central_scalar));
    d.branch_images = {{{0L, 1L}, "x"}, {{1L, 0L}, "y"}};
    d.expected_permissible = 2;
    d.exceptional_curves = 1;
    // Printed theta for W0+ + W1- and W0- + W1+.
    int j = 1;
    while ((j * l) % e != 1) ++j;
    const CycMatrix nmat = diag_powers(m, e, -1);
    for (int sign : {1, -1}) {
        const Rep& first = d.irreps[sign > 0 ? 0 : 1];
        const Rep& second = d.irreps[sign > 0 ? 3 : 2];
        CycMatrix theta(m, m);
        const CycMatrix top = shift_q(e, sign).pow(j) * nmat;
        for (int r = 0; r < e; ++r)
            for (int c = 0; c < e; ++c) {
                theta(r, e + c) = top(r, c);
                theta(e + r, c) = nmat(r, c);
            }
        d.printed_thetas.push_back({first.label + "+" + second.label, direct_sum(first, second), theta, true});
    }
    return d;
}

// Dihedral generators of order 2r acting by diag(zeta, zeta^-1) and the swap.
Rep dihedral(int r) { return make_rep("W", kSigmaTau, {diag({z(r, 1), z(r, -1)}), swap2()}); }

std::vector<Relation> dihedral_relations(int r) {
    return {rel(w({{"sigma", r}}), 1L, "sigma^r"), rel(w({{"tau", 2}}), 1L, "tau^2"),
            rel(w({{"sigma", 1}, {"tau", 1}, {"sigma", 1}, {"tau", -1}}), 1L, "dihedral")};
}

Rep rho(int r, int i) {
    return make_rep("rho" + std::to_string(i), kSigmaTau, {diag({z(r, i), z(r, -i)}), swap2()});
}

FamilyData build_bl(const FamilySpec& s) {
    require(s.n >= 1, "BLn needs n >= 1");
    const int n = s.n, r = 2 * n + 1;
    FamilyData d;
    d.defining = dihedral(r);
    d.relations = dihedral_relations(r);
    d.irreps = one_dim({{"rho0", {1, 1}}, {"rho-", {1, -1}}}, kSigmaTau);
    for (int i = 1; i <= n; ++i) d.irreps.push_back(rho(r, i));
    d.branch_images = {{{1L, 1L}, "y^2 - " + x_power(r)}};
    d.expected_permissible = n + 1;
    d.exceptional_curves = n;
    const CycMatrix flip = diag({1L, -1L});
    for (int i = 1; i <= n; ++i) d.printed_thetas.push_back({d.irreps[static_cast<std::size_t>(i + 1)].label,
                                                            d.irreps[static_cast<std::size_t>(i + 1)], flip});
    d.printed_thetas.push_back({"rho0+rho-", direct_sum(d.irreps[0], d.irreps[1]), swap2()});
    return d;
}

FamilyData build_b(const FamilySpec& s) {
    require(s.n >= 1, "Bn needs n >= 1");
    const int n = s.n, r = 2 * n;
    FamilyData d;
    d.defining = dihedral(r);
    d.relations = dihedral_relations(r);
    d.irreps = one_dim({{"rho00", {1, 1}}, {"rho01", {1, -1}}, {"rho10", {-1, 1}}, {"rho11", {-1, -1}}}, kSigmaTau);
    for (int i = 1; i < n; ++i) d.irreps.push_back(rho(r, i));
    const std::string pw = x_power(n);
    d.branch_images = {{{1L, 1L}, "y - " + pw}, {{z(r, 1), 1L}, "y + " + pw}};
    d.expected_permissible = n + 1;
    d.exceptional_curves = n;
    const CycMatrix flip = diag({1L, -1L});
    for (int i = 1; i < n; ++i)
        d.printed_thetas.push_back({d.irreps[static_cast<std::size_t>(i + 3)].label,
                                    d.irreps[static_cast<std::size_t>(i + 3)], flip});
    d.printed_thetas.push_back({"rho00+rho01", direct_sum(d.irreps[0], d.irreps[1]), swap2()});
    d.printed_thetas.push_back({"rho10+rho11", direct_sum(d.irreps[2], d.irreps[3]), swap2()});
    return d;
}

FamilyData build_l(const FamilySpec& s) {
    require(s.n >= 1, "Ln needs n >= 1");
    const int n = s.n, r = 2 * n + 2;
    const int a = s.a.value_or(1);
    require(a % 2 != 0, "Ln needs an odd a");
    FamilyData d;
    d.defining = dihedral(r);
    d.central_scalar = z(r, -a);
    d.relations = {rel(w({{"sigma", r}}), 1L, "sigma^r"), rel(w({{"tau", 2}}), 1L, "tau^2"),
                   rel(w({{"tau", 1}, {"sigma", -1}, {"tau", -1}, {"sigma", -1}}), d.central_scalar, "lambda"),
                   rel(w({{"sigma", n + 1}, {"tau", 1}, {"sigma", -(n + 1)}, {"tau", -1}}), -1L, "anticommute")};
    std::set<long> seen;
    for (long i = 0; i < r; ++i) {
        if (seen.count(i)) continue;
        seen.insert(i);
        seen.insert(mod(a - i, r));
        d.irreps.push_back(rep2("V" + std::to_string(i), kSigmaTau, {diag({z(r, i), z(r, a - i)}), swap2()},
                                d.central_scalar));
    }
    const std::string pw = x_power(n + 1);
    d.branch_images = {{{1L, 1L}, "y - " + pw}, {{z(r, 1), 1L}, "y + " + pw}};
    d.expected_permissible = n + 1;
    d.exceptional_curves = n;
    for (const auto& v : d.irreps) d.printed_thetas.push_back({v.label, v, diag({1L, -1L})});
    return d;
}

FamilyData build_dl(const FamilySpec& s) {
    require(s.n >= 2, "DLn needs n >= 2");
    const int n = s.n, r = 2 * n - 1, m = 2 * r;
    const int a = s.a.value_or(1);
    require(a % 2 != 0, "DLn needs an odd a");
    const CycNumber rho_ = z(4, 1);
    FamilyData d;
    d.defining = make_rep("W", kSigmaTauPi, {diag({z(m, 1), z(m, -1)}), swap2(), diag({1L, -1L})});
    d.central_scalar = z(m, a);
    d.relations = {rel(w({{"sigma", m}}), 1L, "sigma^2r"),
                   rel(w({{"tau", 2}}), 1L, "tau^2"),
                   rel(w({{"pi", 2}}), 1L, "pi^2"),
                   rel(w({{"sigma", 1}, {"pi", 1}, {"sigma", -1}, {"pi", -1}}), -1L, "sigma-pi"),
                   rel(w({{"sigma", r}, {"tau", 1}, {"sigma", -r}, {"tau", -1}}), -1L, "sigma^r-tau"),
                   rel(w({{"sigma", 1}, {"tau", 1}, {"sigma", 1}, {"tau", -1}}), d.central_scalar, "lambda"),
                   rel(w({{"sigma", -r}, {"pi", 1}, {"tau", 1}, {"pi", -1}, {"tau", -1}}), rho_, "rho")};
    const CycMatrix anti4 = CycMatrix::from_rows(
        {{0L, 0L, 0L, 1L}, {0L, 0L, 1L, 0L}, {0L, 1L, 0L, 0L}, {1L, 0L, 0L, 0L}});
    std::set<long> seen;
    const long two_dim = mod((a - r) / 2, r); // one solution of 2i = a - r (mod 2r)
    for (long i = 0; i < m; ++i) {
        if (seen.count(i) || mod(2 * i - (a - r), m) == 0) continue;
        for (long j : {i, mod(a - i, m), mod(i + r, m), mod(a - i + r, m)}) seen.insert(j);
        const CycMatrix bs = diag({z(m, i), -z(m, i), -z(m, a - i), z(m, a - i)});
        std::optional<Rep> found;
        for (int sign : {1, -1}) {
            CycMatrix bp = block(swap2(), CycMatrix::from_rows({{0L, rho_ * CycNumber(static_cast<long>(sign))},
                                                                {rho_ * CycNumber(static_cast<long>(-sign)), 0L}}));
            Rep cand = rep2("V" + std::to_string(i), kSigmaTauPi, {bs, anti4, bp}, d.central_scalar);
            if (check_relations(cand, d.relations)) {
                found = cand;
                break;
            }
        }
        if (!found) throw VerificationError("no sign of b_pi satisfies the DLn relations");
        d.irreps.push_back(*found);
        d.printed_thetas.push_back({found->label, *found, diag({1L, -1L, 1L, -1L})});
    }
    // Two-dimensional modules: nu^2 = (-1)^i rho^-1.
    const long i = two_dim;
    const CycNumber target = (i % 2 == 0 ? CycNumber(1L) : CycNumber(-1L)) * rho_.inverse();
    int idx = 0;
    for (long k = 0; k < 8; ++k) {
        const CycNumber nu = z(8, k);
        if (nu * nu != target) continue;
        const CycNumber sgn = i % 2 == 0 ? CycNumber(1L) : CycNumber(-1L);
        Rep u = rep2("U" + std::to_string(idx++), kSigmaTauPi,
                     {diag({z(m, i), -z(m, i)}), swap2(), CycMatrix::from_rows({{0L, sgn * rho_ * nu}, {nu, 0L}})},
                     d.central_scalar);
        d.irreps.insert(d.irreps.begin() + (idx - 1), u);
        d.printed_thetas.push_back({u.label, u, diag({1L, -1L})});
    }
    d.branch_images = {{{0L, 1L}, "x"}, {{1L, 1L}, "y^2 - " + x_power(r)}};
    d.expected_permissible = n + 1;
    d.exceptional_curves = n;
    return d;
}

FamilyData build_bd(const FamilySpec& s) {
    require(s.n >= 2, "BDn needs n >= 2");
    const int n = s.n, p = n - 1, m = 4 * p;
    const int a = s.a.value_or(2);
    require(a % 2 == 0, "BDn needs an even a");
    const CycNumber lambda = z(m, a);
    const CycNumber mu = (p % 2 == 0 ? CycNumber(-1L) : CycNumber(1L)) * lambda.pow(-p);
    FamilyData d;
    d.defining = make_rep("W", kSigmaTauPi, {diag({z(m, 1), z(m, -1)}), CycMatrix::from_rows({{0L, 1L}, {-1L, 0L}}),
                                             diag({-1L, 1L})});
    d.central_scalar = lambda;
    d.relations = {rel(w({{"sigma", m}}), 1L, "sigma^4p"),
                   rel(w({{"pi", 2}}), 1L, "pi^2"),
                   rel(w({{"tau", 2}, {"sigma", -2 * p}}), 1L, "tau^2"),
                   rel(w({{"sigma", 1}, {"pi", 1}, {"sigma", -1}, {"pi", -1}}), -1L, "sigma-pi"),
                   rel(w({{"sigma", 1}, {"tau", 1}, {"sigma", 1}, {"tau", -1}}), lambda, "lambda"),
                   rel(w({{"tau", 1}, {"pi", 1}, {"tau", 1}, {"pi", -1}}), mu, "mu")};
    auto sgn = [](long i) { return i % 2 == 0 ? CycNumber(1L) : CycNumber(-1L); };
    // Case 1 and case 2 two-dimensional modules first, then the four-dimensional ones.
    const long c2 = mod(a / 2 - p, m);
    const CycNumber i4 = z(4, 1);
    std::vector<Rep> nus;
    for (int sign : {1, -1}) {
        const CycNumber nu = i4 * z(m, c2 * p) * CycNumber(static_cast<long>(sign));
        nus.push_back(rep2(sign > 0 ? "V+nu" : "V-nu", kSigmaTauPi,
                           {diag({z(m, c2), -z(m, c2)}), CycMatrix::from_rows({{0L, -nu}, {nu, 0L}}), swap2()},
                           lambda));
    }
    const long c1 = mod(a / 2, m);
    std::vector<Rep> case1;
    for (int sign : {1, -1}) {
        const CycNumber sg(static_cast<long>(sign));
        Rep t = rep2(sign > 0 ? "T+" : "T-", kSigmaTauPi,
                     {diag({z(m, c1), -z(m, c1)}), diag({sg * z(m, c1 * p), sg * mu * z(m, -c1 * p)}), swap2()},
                     lambda);
        case1.push_back(t);
    }
    d.irreps = nus;
    std::set<long> seen;
    for (long i = 0; i < m; ++i) {
        if (seen.count(i) || mod(2 * i - a, m) == 0 || mod(2 * i - (a - 2 * p), m) == 0) continue;
        for (long j : {i, mod(a - i, m), mod(i + 2 * p, m), mod(a - i + 2 * p, m)}) seen.insert(j);
        CycMatrix bt(4, 4);
        bt(0, 3) = sgn(i);
        bt(1, 2) = sgn(i);
        bt(2, 1) = CycNumber(1L);
        bt(3, 0) = CycNumber(1L);
        const CycMatrix bp = block(swap2(), swap2() * (mu * sgn(i)));
        Rep v = rep2("V" + std::to_string(i), kSigmaTauPi,
                     {diag({z(m, i), -z(m, i), -z(m, a - i), z(m, a - i)}), bt, bp}, lambda);
        d.irreps.push_back(v);
        d.printed_thetas.push_back({v.label, v, diag({1L, -1L, -1L, 1L})});
    }
    for (auto& t : case1) {
        d.irreps.push_back(t);
        d.printed_thetas.push_back({t.label, t, diag({1L, -1L})});
    }
    CycMatrix theta(4, 4);
    theta(0, 2) = CycNumber(1L);
    theta(1, 3) = CycNumber(-1L);
    theta(2, 0) = CycNumber(1L);
    theta(3, 1) = CycNumber(-1L);
    d.printed_thetas.push_back({"V+nu+V-nu", direct_sum(nus[0], nus[1]), theta});
    const std::string pw = x_power(p);
    d.branch_images = {{{0L, 1L}, "x"}, {{1L, 1L}, "y - " + pw}, {{z(m, 1), 1L}, "y + " + pw}};
    d.expected_permissible = n + 1;
    d.exceptional_curves = n;
    return d;
}

FamilyData build_anxi(const FamilySpec& s) {
    require(s.n >= 1, "Anxi needs n >= 1");
    require(s.e >= 2, "Anxi needs e >= 2");
    require(s.l >= 1 && s.l < s.e && std::gcd(s.l, s.e) == 1, "Anxi needs 1 <= l < e with gcd(l, e) = 1");
    const int n = s.n, e = s.e, l = s.l, p = n + 1, m = p * e;
    FamilyData d;
    d.defining = make_rep("W", kSigmaTau, {diag({z(m, 1), z(m, -1)}), diag({1L, z(m, p)})});
    d.central_scalar = z(m, static_cast<long>(l) * p);
    d.relations = {rel(w({{"sigma", m}}), 1L, "sigma^pe"), rel(w({{"tau", e}}), 1L, "tau^e"),
                   rel(w({{"sigma", 1}, {"tau", 1}, {"sigma", -1}, {"tau", -1}}), d.central_scalar, "commutator")};
    for (int i = 0; i < p; ++i)
        d.irreps.push_back(rep2("V" + std::to_string(i), kSigmaTau,
                                {diag_powers(m, e, static_cast<long>(l) * p, i), shift_q(e, 1)}, d.central_scalar));
    d.branch_images = {{{1L, 0L}, "z"}, {{0L, 1L}, "z"}};
    d.expected_permissible = n + 1;
    d.exceptional_curves = n;
    return d;
}

FamilyData build_ade(const FamilySpec& s) {
    int rank = 0;
    ade_letter_check(s.ade_type, rank);
    const auto gens = ade_generators(s.ade_type);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < gens.size(); ++i) names.push_back("g" + std::to_string(i));
    FamilyData d;
    d.defining = make_rep("W", names, gens);
    d.irreps = irreducibles_from_tensor_powers(d.defining);
    d.expected_permissible = rank + 1;
    d.exceptional_curves = rank;
    return d;
}

FamilyData build_nongor(const FamilySpec& s) {
    FamilyData d;
    d.defining = make_rep("W", kSigmaTau, {diag({z(3, 1), 1L}), diag({1L, z(3, 1)})});
    const CycMatrix bs = diag({1L, z(3, 1), z(3, 2)});
    const CycMatrix bt = s.tag == FamilyTag::NonGor ? diag({1L, z(3, 2), z(3, 1)}) : bs;
    d.actions.push_back({s.tag == FamilyTag::NonGor ? "b" : "b'", d.defining, make_rep("b", kSigmaTau, {bs, bt})});
    d.branch_images = {{{0L, 1L}, "x"}, {{1L, 0L}, "y"}};
    d.expected_gorenstein = s.tag == FamilyTag::NonGorFixed;
    return d;
}

} // namespace

std::string tag_name(FamilyTag t) {
    for (const auto& [tag, name] : kTagNames)
        if (tag == t) return name;
    return "?";
}

FamilyTag parse_tag(const std::string& s) {
    for (const auto& [tag, name] : kTagNames)
        if (s == name) return tag;
    throw SchemaError("unknown family type '" + s + "'");
}

std::string family_name(const FamilySpec& s) {
    switch (s.tag) {
    case FamilyTag::A12xi:
        return "A12xi(e=" + std::to_string(s.e) + ",l=" + std::to_string(s.l) + ")";
    case FamilyTag::Anxi:
        return "A" + std::to_string(s.n) + "xi(e=" + std::to_string(s.e) + ",l=" + std::to_string(s.l) + ")";
    case FamilyTag::ADE:
        return "ADE(" + s.ade_type + ")";
    case FamilyTag::NonGor:
    case FamilyTag::NonGorFixed:
        return tag_name(s.tag);
    default: {
        std::string t = tag_name(s.tag);
        t.pop_back(); // drop the trailing "n"
        return t + std::to_string(s.n) + (s.a ? "(a=" + std::to_string(*s.a) + ")" : "");
    }
    }
}

std::vector<CycMatrix> ade_generators(const std::string& type) {
    int k = 0;
    const std::string letter = ade_letter_check(type, k);
    const CycNumber one(1L), zero(0L), half(mpq_class(1, 2));
    if (letter == "A") return {CycMatrix::diag({z(k + 1, 1), z(k + 1, -1)})};
    if (letter == "D") {
        const int m = 2 * (k - 2);
        return {CycMatrix::diag({z(m, 1), z(m, -1)}), CycMatrix::from_rows({{0L, 1L}, {-1L, 0L}})};
    }
    const CycMatrix qi = quaternion(zero, one, zero, zero);
    const CycMatrix qj = quaternion(zero, zero, one, zero);
    const CycMatrix omega = quaternion(-half, half, half, half);
    if (k == 6) return {qi, qj, omega};
    if (k == 7) return {CycMatrix::diag({z(8, 1), z(8, -1)}), qj, omega};
    // Binary icosahedral group: add (phi + phi^-1 i + j) / 2 with sqrt 5 = 1 + 2 (zeta5 + zeta5^4).
    const CycNumber sqrt5 = CycNumber(1L) + CycNumber(2L) * (z(5, 1) + z(5, 4));
    const CycNumber phi = (one + sqrt5) * half;
    const CycNumber phi_inv = (sqrt5 - one) * half;
    return {qi, qj, omega, quaternion(phi * half, phi_inv * half, half, zero)};
}

std::vector<Relation> cayley_relations(const MatrixGroup& g, const std::vector<std::string>& names) {
    std::vector<Relation> out;
    auto word_of = [&](std::size_t i) {
        Word wd;
        for (int k : g.word(i)) wd.emplace_back(names[static_cast<std::size_t>(k)], 1);
        return wd;
    };
    for (std::size_t h = 0; h < g.order(); ++h)
        for (std::size_t k = 0; k < g.generators().size(); ++k) {
            const std::size_t target = g.multiply(h, g.generator_index(k));
            if (g.parent(target) == h && g.via(target) == static_cast<int>(k) && target != 0) continue;
            Word wd = word_of(h);
            wd.emplace_back(names[k], 1);
            Word back = word_of(target);
            for (auto it = back.rbegin(); it != back.rend(); ++it) wd.emplace_back(it->first, -it->second);
            out.push_back({wd, CycNumber(1L), "cayley"});
        }
    return out;
}

RamReport expected_ramification(const FamilySpec& s) {
    RamReport r;
    switch (s.tag) {
    case FamilyTag::A12xi: r.branches = {{"x", 2 * s.e, s.e}, {"y", 2 * s.e, s.e}}; break;
    case FamilyTag::BLn: r.branches = {{"y^2 - " + x_power(2 * s.n + 1), 2, 1}}; break;
    case FamilyTag::Bn: r.branches = {{"y + " + x_power(s.n), 2, 1}, {"y - " + x_power(s.n), 2, 1}}; break;
    case FamilyTag::Ln: r.branches = {{"y + " + x_power(s.n + 1), 2, 2}, {"y - " + x_power(s.n + 1), 2, 2}}; break;
    case FamilyTag::DLn: r.branches = {{"x", 2, 2}, {"y^2 - " + x_power(2 * s.n - 1), 2, 2}}; break;
    case FamilyTag::BDn:
        r.branches = {{"x", 2, 2}, {"y + " + x_power(s.n - 1), 2, 2}, {"y - " + x_power(s.n - 1), 2, 1}};
        break;
    case FamilyTag::ADE: r.centre = s.ade_type; break;
    case FamilyTag::Anxi:
        r.centre = "A" + std::to_string(s.n);
        r.branches = {{"z", s.e, s.e}, {"z", s.e, s.e}};
        break;
    case FamilyTag::NonGor:
    case FamilyTag::NonGorFixed: r.branches = {{"x", 3, 1}, {"y", 3, 1}}; break;
    }
    return r;
}

FamilyData build(const FamilySpec& spec) {
    FamilyData d;
    switch (spec.tag) {
    case FamilyTag::A12xi: d = build_a12xi(spec); break;
    case FamilyTag::BLn: d = build_bl(spec); break;
    case FamilyTag::Bn: d = build_b(spec); break;
    case FamilyTag::Ln: d = build_l(spec); break;
    case FamilyTag::DLn: d = build_dl(spec); break;
    case FamilyTag::BDn: d = build_bd(spec); break;
    case FamilyTag::ADE: d = build_ade(spec); break;
    case FamilyTag::Anxi: d = build_anxi(spec); break;
    case FamilyTag::NonGor:
    case FamilyTag::NonGorFixed: d = build_nongor(spec); break;
    }
    d.spec = spec;
    d.name = family_name(spec);
    d.expected_ram = expected_ramification(spec);
    if (spec.tag == FamilyTag::NonGor || spec.tag == FamilyTag::NonGorFixed) {
        d.group = MatrixGroup::generate(d.defining.images);
        d.irreps = irreducibles_from_tensor_powers(d.defining);
        d.relations = cayley_relations(d.group, d.defining.names);
    } else if (spec.tag == FamilyTag::ADE || spec.tag == FamilyTag::BLn || spec.tag == FamilyTag::Bn) {
        const MatrixGroup g = MatrixGroup::generate(d.defining.images);
        const auto extra = cayley_relations(g, d.defining.names);
        d.relations.insert(d.relations.end(), extra.begin(), extra.end());
    }
    finish(d);
    if (d.actions.empty()) d.actions = actions_from_permissible(d);
    return d;
}

bool FamilyReport::ok() const {
    const bool count_ok = expected_permissible < 0 || mckay_count_ok;
    const bool gor_ok = gorenstein_found == expected_gorenstein && (!gorenstein_found || theta_verified);
    return normal && ram_matches && gor_ok && count_ok && permissible_shape_ok && printed_thetas_ok;
}

FamilyReport check_family(const FamilyData& d) {
    FamilyReport rep;
    rep.family = d.name;
    rep.expected_ram = d.expected_ram;
    rep.expected_gorenstein = d.expected_gorenstein;
    rep.expected_permissible = d.expected_permissible;

    rep.normal = !d.actions.empty();
    rep.ram_matches = !d.actions.empty();
    rep.gorenstein_found = !d.actions.empty();
    rep.theta_verified = !d.actions.empty();
    for (std::size_t k = 0; k < d.actions.size(); ++k) {
        const OrderAction& act = d.actions[k];
        rep.normal = rep.normal && normality(act).normal;
        const RamReport ram = ramification_report(act, d.branch_images, d.expected_ram.centre);
        if (k == 0) rep.ram = ram;
        if (auto diff = ram_difference(ram, d.expected_ram)) {
            rep.ram_matches = false;
            if (rep.ram_diff.empty()) rep.ram_diff = act.label + ": " + *diff;
        }
        const auto theta = gorenstein_theta(act);
        if (k == 0) {
            rep.theta = theta;
            rep.isotypic_dim = static_cast<int>(isotypic_component(act, inverse_determinants(act)).size());
        }
        rep.gorenstein_found = rep.gorenstein_found && theta.has_value();
        rep.theta_verified = rep.theta_verified && theta && verify_theta(act, *theta);
    }

    rep.permissible_shape_ok = true;
    if (d.expected_permissible >= 0) {
        rep.permissible_count = static_cast<int>(d.actions.size());
        rep.mckay_count_ok = rep.permissible_count == d.expected_permissible;
        const TupleGroup tg(d.defining, d.irreps);
        const auto tau = ar_translation(tg);
        for (const auto& pm : permissible_modules(d.defining, d.irreps)) {
            std::string label;
            for (std::size_t i : pm.parts) label += (label.empty() ? "" : "+") + d.irreps[i].label;
            rep.permissible.push_back(label);
            if (pm.parts.size() == 1) continue;
            const bool paired = pm.parts.size() == 2 &&
                                tau[pm.parts[0]] == static_cast<int>(pm.parts[1]) && pm.parts[0] != pm.parts[1];
            rep.permissible_shape_ok = rep.permissible_shape_ok && paired;
        }
    } else {
        rep.permissible_count = -1;
        rep.mckay_count_ok = true;
    }

    rep.printed_thetas_ok = true;
    for (const auto& pt : d.printed_thetas) {
        const OrderAction act{pt.module, d.defining, pt.rep};
        const CycMatrix th = pt.inverse_convention ? inverse(pt.theta) : pt.theta;
        rep.printed_thetas_ok = rep.printed_thetas_ok && verify_theta(act, th);
    }
    return rep;
}

Quiver family_quiver(const FamilyData& d) { return mckay_component(d.irreps, d.defining, d.central_scalar); }

} // namespace canord
