#include "canord/errors.hpp"
#include "canord/reps.hpp"

#include <doctest.h>

using namespace canord;

namespace {

const std::vector<std::string> kST{"s", "t"};

CycMatrix swap2() { return CycMatrix::from_rows({{0L, 1L}, {1L, 0L}}); }

// Dihedral group of order 2r (r odd) with its 2 one-dimensional and (r-1)/2 two-dimensional irreducibles.
std::pair<Rep, std::vector<Rep>> dihedral(int r) {
    const CycNumber z = root_of_unity(r);
    Rep w = make_rep("W", kST, {CycMatrix::diag({z, z.inverse()}), swap2()});
    std::vector<Rep> irreps;
    irreps.push_back(make_rep("r0", kST, {CycMatrix::identity(1), CycMatrix::identity(1)}));
    irreps.push_back(make_rep("r-", kST, {CycMatrix::identity(1), CycMatrix::scalar(1, -1L)}));
    for (int i = 1; 2 * i < r; ++i)
        irreps.push_back(make_rep("r" + std::to_string(i), kST, {CycMatrix::diag({z.pow(i), z.pow(-i)}), swap2()}));
    return {w, irreps};
}

// The four e-dimensional projective modules of Z/2e x Z/2e for e = 2 and l = 1.
std::pair<Rep, std::vector<Rep>> abelian_projective() {
    const CycNumber z = root_of_unity(4);
    Rep w = make_rep("W", kST, {CycMatrix::diag({z, 1L}), CycMatrix::diag({1L, z})});
    const CycMatrix p = CycMatrix::diag({1L, -1L});
    std::vector<Rep> out;
    for (int i = 0; i < 2; ++i)
        for (int s : {1, -1}) {
            const CycMatrix q = CycMatrix::from_rows({{0L, CycNumber(static_cast<long>(s))}, {1L, 0L}});
            out.push_back(make_rep("W" + std::to_string(i) + (s > 0 ? "+" : "-"), kST, {p * z.pow(i), q}, -1L));
        }
    return {w, out};
}

} // namespace

TEST_CASE("relations and commutants") {
    auto [w, irr] = dihedral(5);
    const std::vector<Relation> rels{{{{"s", 5}}, 1L, "s^5"},
                                     {{{"t", 2}}, 1L, "t^2"},
                                     {{{"s", 1}, {"t", 1}, {"s", 1}, {"t", -1}}, 1L, "sts t^-1"}};
    for (const auto& r : irr) {
        CHECK(check_relations(r, rels));
        CHECK(commutant_dim(r) == 1);
    }
    CHECK(check_relations(w, rels));
    CHECK(commutant_dim(direct_sum(irr[2], irr[3])) == 2);
    CHECK(commutant_dim(direct_sum(irr[2], irr[2])) == 4);
    const std::vector<Relation> bad{{{{"s", 1}}, 1L, "s"}};
    CHECK_FALSE(check_relations(irr[2], bad));
    CHECK_THROWS(check_relations(irr[2], {{{{"q", 1}}, 1L, "unknown"}}));
}

TEST_CASE("trivial group gives two loops") {
    Rep w = make_rep("W", {"g"}, {CycMatrix::identity(2)});
    Rep triv = make_rep("1", {"g"}, {CycMatrix::identity(1)});
    TupleGroup tg(w, {triv});
    CHECK(tg.order() == 1);
    CHECK(arrow_count(tg, 0, 0) == 2);
}

TEST_CASE("Kleinian A1 quiver") {
    Rep w = make_rep("W", {"g"}, {CycMatrix::scalar(2, -1L)});
    Rep triv = make_rep("1", {"g"}, {CycMatrix::identity(1)});
    Rep sign = make_rep("sgn", {"g"}, {CycMatrix::scalar(1, -1L)});
    const Quiver q = mckay_component({triv, sign}, w, 1L);
    CHECK(q.arrows[0][1] == 2);
    CHECK(q.arrows[1][0] == 2);
    CHECK(q.arrows[0][0] == 0);
    CHECK(q.tau == std::vector<int>{0, 1});
}

TEST_CASE("dihedral component: orthonormality, completeness, regularity") {
    for (int r : {3, 5, 7, 9}) {
        auto [w, irr] = dihedral(r);
        TupleGroup tg(w, irr);
        CHECK(tg.kernel_order() == 1);
        CHECK(tg.order() == static_cast<std::size_t>(2 * r));
        CHECK_NOTHROW(verify_complete_irreducibles(tg));
        const Quiver q = mckay_component(irr, w, 1L);
        for (std::size_t i = 0; i < irr.size(); ++i) {
            int out = 0, in = 0;
            for (std::size_t j = 0; j < irr.size(); ++j) {
                out += q.arrows[i][j] * q.vertices[j].second;
                in += q.arrows[j][i] * q.vertices[j].second;
            }
            CHECK(out == 2 * q.vertices[i].second);
            CHECK(in == 2 * q.vertices[i].second);
        }
        // The determinant twist swaps the two characters and fixes the rest.
        CHECK(q.tau[0] == 1);
        CHECK(q.tau[1] == 0);
        for (std::size_t i = 2; i < irr.size(); ++i) CHECK(q.tau[i] == static_cast<int>(i));
    }
}

TEST_CASE("incomplete lists are rejected with the deficit") {
    auto [w, irr] = dihedral(5);
    irr.pop_back();
    TupleGroup tg(w, irr);
    CHECK_THROWS_AS(verify_complete_irreducibles(tg), VerificationError);
    auto [w2, irr2] = dihedral(5);
    irr2.push_back(irr2[2]);
    CHECK_THROWS_AS(verify_complete_irreducibles(TupleGroup(w2, irr2)), VerificationError);
}

TEST_CASE("projective modules of Z/4 x Z/4") {
    auto [w, irr] = abelian_projective();
    TupleGroup tg(w, irr);
    CHECK(tg.base().order() == 16);
    CHECK(tg.kernel_order() == 2);
    CHECK(tg.order() == 32);
    CHECK_NOTHROW(verify_complete_irreducibles(tg));
    for (const auto& r : irr) CHECK(commutant_dim(r) == 1);

    // The concrete closure realizes G' of order |G| |K|.
    CHECK(tg.closure().order() == tg.order());

    const Quiver q = mckay_component(irr, w, -1L);
    for (std::size_t i = 0; i < 4; ++i) {
        int out = 0, targets = 0;
        for (std::size_t j = 0; j < 4; ++j) {
            out += q.arrows[i][j] * q.vertices[j].second;
            targets += q.arrows[i][j] > 0 ? 1 : 0;
        }
        CHECK(out == 2 * q.vertices[i].second);
        CHECK(targets == 2);
        CHECK(q.tau[i] != static_cast<int>(i));
        CHECK(q.tau[static_cast<std::size_t>(q.tau[i])] == static_cast<int>(i));
    }
}

TEST_CASE("mixed central characters are rejected") {
    auto [w, irr] = abelian_projective();
    auto [wd, dih] = dihedral(3);
    (void)wd;
    Rep bad = make_rep("x", kST, {CycMatrix::identity(2), CycMatrix::identity(2)});
    std::vector<Rep> mixed{irr[0], bad};
    CHECK_THROWS_AS(TupleGroup(w, mixed), VerificationError);
    CHECK_THROWS_AS(mckay_component({irr[0], dih[0]}, w, -1L), VerificationError);
}

TEST_CASE("dual, tensor and twist") {
    auto [w, irr] = dihedral(5);
    TupleGroup tg(w, irr);
    const auto c2 = tg.character(2);
    const auto cd = tg.character_of(dual(irr[2]));
    for (std::size_t g = 0; g < c2.size(); ++g) CHECK(cd[g] == c2[g].conj());
    const Rep t = tensor(irr[2], irr[1]);
    CHECK(t.dim == 2);
    const auto ct = tg.character_of(t);
    const auto c1 = tg.character(1);
    for (std::size_t g = 0; g < c2.size(); ++g) CHECK(ct[g] == c2[g] * c1[g]);
    const Rep tw = twist(irr[0], {1L, -1L});
    const auto ctw = tg.character_of(tw);
    for (std::size_t g = 0; g < c1.size(); ++g) CHECK(ctw[g] == c1[g]);
}

TEST_CASE("quiver DOT output and isomorphism") {
    Quiver empty;
    CHECK(quiver_to_dot(empty) == "digraph Q {\n}\n");
    Quiver loop;
    loop.vertices = {{"v", 1}};
    loop.arrows = {{2}};
    loop.tau = {0};
    const std::string dot = quiver_to_dot(loop);
    CHECK(dot.find("v0 -> v0 [label=\"2\"];\n  v0 -> v0 [label=\"2\"];") != std::string::npos);
    CHECK(dot.find("style=dashed") != std::string::npos);

    auto [w, irr] = dihedral(5);
    const Quiver q = mckay_component(irr, w, 1L);
    std::vector<Rep> rev(irr.rbegin(), irr.rend());
    const Quiver qr = mckay_component(rev, w, 1L);
    CHECK(quiver_isomorphic(q, qr));
    Quiver broken = qr;
    broken.tau = {0, 1, 2, 3};
    CHECK_FALSE(quiver_isomorphic(q, broken));
}
