#include "canord/errors.hpp"
#include "canord/matgroup.hpp"

#include <algorithm>

#include <doctest.h>

using namespace canord;

namespace {

CycMatrix diag2(const CycNumber& a, const CycNumber& b) { return CycMatrix::diag({a, b}); }

CycMatrix swap2() { return CycMatrix::from_rows({{0L, 1L}, {1L, 0L}}); }

std::size_t orbit_size(const MatrixGroup& g, const Line& l) {
    std::vector<Line> seen;
    for (const auto& m : g.elements()) {
        const Line img = act_on_line(m, l);
        bool known = false;
        for (const auto& s : seen) known = known || (s[0] == img[0] && s[1] == img[1]);
        if (!known) seen.push_back(img);
    }
    return seen.size();
}

} // namespace

TEST_CASE("closure orders of small groups") {
    const CycNumber z3 = root_of_unity(3);
    auto g = MatrixGroup::generate({diag2(z3, 1L), diag2(1L, z3)});
    CHECK(g.order() == 9);
    CHECK(g.element(0).is_identity());

    const CycNumber z5 = root_of_unity(5);
    auto d = MatrixGroup::generate({diag2(z5, z5.inverse()), swap2()});
    CHECK(d.order() == 10);

    for (int n = 2; n <= 4; ++n) {
        const int r = 2 * n - 1;
        const CycNumber z = root_of_unity(2 * r);
        auto dl = MatrixGroup::generate({diag2(z, z.inverse()), swap2(), diag2(1L, -1L)});
        CHECK(dl.order() == static_cast<std::size_t>(8 * r));
    }
}

TEST_CASE("closure bound is enforced") {
    const CycMatrix shear = CycMatrix::from_rows({{1L, 1L}, {0L, 1L}});
    CHECK_THROWS_AS(MatrixGroup::generate({shear}, 50), MathError);
}

TEST_CASE("words reproduce elements") {
    const CycNumber z = root_of_unity(8);
    auto g = MatrixGroup::generate({diag2(z, z.inverse()), CycMatrix::from_rows({{0L, 1L}, {-1L, 0L}})});
    CHECK(g.order() == 16);
    for (std::size_t i = 0; i < g.order(); ++i) {
        CycMatrix m = CycMatrix::identity(2);
        for (int s : g.word(i)) m = m * g.generators()[static_cast<std::size_t>(s)];
        CHECK(g.index_of(m) == i);
        CHECK(g.multiply(i, g.inverse_index(i)) == 0);
    }
}

TEST_CASE("determinant character") {
    const CycNumber z5 = root_of_unity(5);
    auto d = MatrixGroup::generate({diag2(z5, z5.inverse()), swap2()});
    const auto chi = det_character(d);
    CHECK(chi[d.generator_index(0)] == CycNumber(1L));
    CHECK(chi[d.generator_index(1)] == CycNumber(-1L));
    for (std::size_t a = 0; a < d.order(); ++a)
        for (std::size_t b = 0; b < d.order(); ++b) CHECK(chi[d.multiply(a, b)] == chi[a] * chi[b]);

    const CycNumber z3 = root_of_unity(3);
    auto g = MatrixGroup::generate({diag2(z3, 1L), diag2(1L, z3)});
    const auto c = det_character(g);
    CHECK(c[g.generator_index(0)] == z3);
    CHECK(c[g.generator_index(1)] == z3);
}

TEST_CASE("pseudo-reflection classes of dihedral groups") {
    for (int n = 1; n <= 4; ++n) {
        const int r = 2 * n + 1;
        const CycNumber z = root_of_unity(r);
        auto g = MatrixGroup::generate({diag2(z, z.inverse()), swap2()});
        const auto cls = pseudo_reflections(g);
        REQUIRE(cls.size() == 1);
        CHECK(cls[0].size() == static_cast<std::size_t>(r));
        const auto lines = reflection_lines(g);
        REQUIRE(lines.size() == 1);
        CHECK(lines[0].direction == Line{CycNumber(1L), CycNumber(1L)});
        CHECK(lines[0].inertia_generator == g.generator_index(1));
    }
    for (int n = 2; n <= 4; ++n) {
        const CycNumber z = root_of_unity(2 * n);
        auto g = MatrixGroup::generate({diag2(z, z.inverse()), swap2()});
        CHECK(pseudo_reflections(g).size() == 2);
        const auto lines = reflection_lines(g);
        REQUIRE(lines.size() == 2);
        // Stab L = <tau, sigma^n> has order 4.
        CHECK(stabilizer(g, lines[0].direction).size() == 4);
        CHECK(inertia(g, lines[0].direction).size() == 2);
    }
}

TEST_CASE("reflection lines of the three-class group") {
    for (int p = 1; p <= 3; ++p) {
        const CycNumber z = root_of_unity(4 * p);
        const CycMatrix sigma = diag2(z, z.inverse());
        const CycMatrix tau = CycMatrix::from_rows({{0L, 1L}, {-1L, 0L}});
        const CycMatrix pi = diag2(-1L, 1L);
        auto g = MatrixGroup::generate({sigma, tau, pi});
        CHECK(g.order() == static_cast<std::size_t>(16 * p));
        CHECK(pseudo_reflections(g).size() == 3);
        const auto lines = reflection_lines(g);
        REQUIRE(lines.size() == 3);
        std::vector<Line> expected{{0L, 1L}, {1L, 1L}, {z, 1L}};
        for (const auto& raw : expected) {
            const Line want = normalize_line(raw);
            bool hit = false;
            for (const auto& rl : lines)
                for (const auto& o : rl.orbit) hit = hit || o == want;
            CHECK(hit);
        }
    }
}

TEST_CASE("orbit-stabilizer and inertia containment") {
    const CycNumber z = root_of_unity(10);
    auto g = MatrixGroup::generate(
        {diag2(z, z.inverse()), swap2(), diag2(1L, -1L)});
    for (const auto& rl : reflection_lines(g)) {
        const auto st = stabilizer(g, rl.direction);
        const auto in = inertia(g, rl.direction);
        CHECK(st.size() * orbit_size(g, rl.direction) == g.order());
        CHECK(rl.orbit.size() == orbit_size(g, rl.direction));
        for (std::size_t i : in) CHECK(std::find(st.begin(), st.end(), i) != st.end());
        CHECK(generated_subgroup(g, rl.stabilizer_generators).size() == st.size());
        CHECK(g.element_order(rl.inertia_generator) == static_cast<int>(in.size()));
    }
}

TEST_CASE("conjugation preserves pseudo-reflection classes") {
    const CycNumber z = root_of_unity(6);
    auto g = MatrixGroup::generate({diag2(z, z.inverse()), swap2()});
    for (const auto& cls : pseudo_reflections(g))
        for (std::size_t h = 0; h < g.order(); ++h) {
            const std::size_t c = g.multiply(g.multiply(h, cls.front()), g.inverse_index(h));
            CHECK(std::find(cls.begin(), cls.end(), c) != cls.end());
        }
}

TEST_CASE("line stabilizers of the cyclic-diagonal family") {
    const int p = 3, e = 2;
    const CycNumber z = root_of_unity(p * e);
    auto g = MatrixGroup::generate({diag2(z, z.inverse()), diag2(1L, z.pow(p))});
    const Line l{1L, 0L};
    CHECK(stabilizer(g, l).size() == g.order());
    const auto in = inertia(g, l);
    CHECK(in.size() == static_cast<std::size_t>(e));
    CHECK(std::find(in.begin(), in.end(), g.generator_index(1)) != in.end());
}

TEST_CASE("trivial group") {
    auto g = MatrixGroup::generate({CycMatrix::identity(2)});
    CHECK(g.order() == 1);
    CHECK(stabilizer(g, {1L, 3L}).size() == 1);
    CHECK(inertia(g, {1L, 3L}).size() == 1);
    CHECK(reflection_lines(g).empty());
}
