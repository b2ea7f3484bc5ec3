#include "canord/cyclotomic.hpp"
#include "canord/errors.hpp"

#include "doctest.h"

#include <random>

using namespace canord;

namespace {

CycNumber random_cyc(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> coef(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    std::vector<mpq_class> c(static_cast<std::size_t>(euler_phi(n)));
    for (auto& v : c) {
        v = mpq_class(coef(rng), den(rng));
        v.canonicalize();
    }
    return CycNumber::from_coeffs(n, c);
}

CycNumber z(int n, long k = 1) { return root_of_unity(n, k); }

} // namespace

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == std::vector<long>{-1, 1});
    CHECK(cyclotomic_polynomial(3) == std::vector<long>{1, 1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<long>{1, 0, 1});
    CHECK(cyclotomic_polynomial(6) == std::vector<long>{1, -1, 1});
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(105) == 48);
    const auto& p105 = cyclotomic_polynomial(105);
    CHECK(p105[7] == -2); // the classical first coefficient outside {-1,0,1}
}

TEST_CASE("roots of unity") {
    CHECK(z(1, 0).is_one());
    CHECK(z(4) * z(4) == CycNumber(-1L));
    CHECK((z(6, 2) * z(6, 4)).is_one());
    CHECK(z(8, 9) == z(8, 1));
    CHECK(z(8, -1) == z(8, 7));
    CHECK(*multiplicative_order(z(12, 5), 12) == 12);
}

TEST_CASE("field operations") {
    CHECK(z(5).conj() == z(5, 4));
    CHECK(CycNumber(mpq_class(3, 2)).conj() == CycNumber(mpq_class(3, 2)));
    CHECK(((1 + z(3)) * (1 + z(3, 2))).is_one());
    CHECK_THROWS_AS(CycNumber(1L) / CycNumber(), DivisionByZero);
    CHECK((z(3) + z(3, 2)) == CycNumber(-1L));
    // Mixed conductors promote to the lcm.
    const CycNumber s = z(4) + z(3);
    CHECK(s.conductor() == 12);
    CHECK(s - z(3) == z(4));
    CHECK(z(12, 3) == z(4));
    // sqrt(5) = 1 + 2(z5 + z5^4)
    const CycNumber r5 = 1 + 2 * (z(5) + z(5, 4));
    CHECK(r5 * r5 == CycNumber(5L));
}

TEST_CASE("multiplicative order") {
    CHECK(*multiplicative_order(CycNumber(-1L), 4) == 2);
    CHECK(*multiplicative_order(z(6, 2), 6) == 3);
    CHECK_FALSE(multiplicative_order(CycNumber(2L), 10).has_value());
}

TEST_CASE("promotion and restriction") {
    std::mt19937 rng(7);
    for (int n : {3, 4, 5, 8, 12}) {
        for (int t = 0; t < 20; ++t) {
            const CycNumber a = random_cyc(rng, n);
            const CycNumber b = a.promoted(n * 6);
            CHECK(b == a);
            auto back = b.restricted(n);
            REQUIRE(back.has_value());
            CHECK(back->conductor() == n);
            CHECK(back->coeffs() == a.coeffs());
        }
    }
    CHECK_FALSE(z(8).restricted(4).has_value());
    CHECK(z(12, 4).minimized().conductor() == 3);
    CHECK(CycNumber(mpq_class(2, 7)).promoted(30).minimized().conductor() == 1);
}

TEST_CASE("randomized field identities") {
    std::mt19937 rng(12345);
    const int conductors[] = {3, 4, 5, 7, 8, 9, 12, 15, 20, 24};
    for (int t = 0; t < 400; ++t) {
        const int n = conductors[t % 10];
        const CycNumber a = random_cyc(rng, n), b = random_cyc(rng, n), c = random_cyc(rng, conductors[(t + 3) % 10]);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a.conj().conj() == a);
        CHECK((a * b).conj() == a.conj() * b.conj());
        if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
    }
}

TEST_CASE("matrix basics") {
    const CycMatrix d = CycMatrix::diag({CycNumber(1L), z(3), z(3, 2)});
    CHECK(det(d).is_one());
    CHECK(nullspace(CycMatrix(2, 2)).size() == 2);
    const CycMatrix tau = CycMatrix::from_rows({{0L, 1L}, {1L, 0L}});
    CHECK(det(tau) == CycNumber(-1L));
    CHECK(*matrix_order(tau, 10) == 2);
    CHECK(*matrix_order(CycMatrix::diag({z(8), z(8, -1)}), 20) == 8);
    const CycMatrix tp = CycMatrix::from_rows({{0L, -1L}, {1L, 0L}});
    CHECK(*matrix_order(tp, 10) == 4);
    CHECK_THROWS_AS(inverse(CycMatrix(2, 2)), MathError);
    CHECK(inverse(tp) * tp == CycMatrix::identity(2));
}

TEST_CASE("eigen_split") {
    auto es = eigen_split(CycMatrix::diag({CycNumber(1L), z(3), z(3, 2)}), 3);
    CHECK(es.size() == 3);
    for (const auto& e : es) CHECK(e.dim == 1);
    auto id = eigen_split(CycMatrix::identity(4), 1);
    REQUIRE(id.size() == 1);
    CHECK(id[0].dim == 4);
    // P = diag(1, zeta^2, zeta^4) with zeta a primitive 6th root
    const CycNumber zeta = z(6);
    auto pe = eigen_split(CycMatrix::diag({CycNumber(1L), zeta.pow(2), zeta.pow(4)}), 3);
    REQUIRE(pe.size() == 3);
    CHECK(pe[0].value.is_one());
    CHECK(pe[1].value == zeta.pow(2));
    CHECK(pe[2].value == zeta.pow(4));
    CHECK_THROWS_AS(eigen_split(CycMatrix::diag({z(4), CycNumber(1L)}), 2), MathError);
}

TEST_CASE("eigen reconstruction on random conjugates") {
    std::mt19937 rng(99);
    for (int t = 0; t < 10; ++t) {
        const int n = 3;
        CycMatrix s(n, n);
        do {
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) s(i, j) = CycNumber(static_cast<long>(rng() % 5) - 2);
        } while (det(s).is_zero());
        const CycMatrix dm = CycMatrix::diag({z(4, static_cast<long>(rng() % 4)), z(4, static_cast<long>(rng() % 4)), CycNumber(1L)});
        const CycMatrix m = s * dm * inverse(s);
        const auto es = eigen_split(m, 4);
        int total = 0;
        // Build the eigenbasis and check M = B D B^-1.
        CycMatrix b(n, n);
        std::vector<CycNumber> vals;
        for (const auto& e : es) {
            for (const auto& v : e.basis) {
                for (int i = 0; i < n; ++i) b(i, total) = v[static_cast<std::size_t>(i)];
                vals.push_back(e.value);
                ++total;
            }
        }
        CHECK(total == n);
        CHECK(b * CycMatrix::diag(vals) * inverse(b) == m);
    }
}

TEST_CASE("solve round trip") {
    std::mt19937 rng(5);
    for (int t = 0; t < 20; ++t) {
        CycMatrix m(3, 4);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 4; ++j) m(i, j) = random_cyc(rng, 5);
        std::vector<CycNumber> x(4);
        for (auto& v : x) v = random_cyc(rng, 5);
        const auto rhs = m.apply(x);
        auto sol = solve(m, rhs);
        REQUIRE(sol.has_value());
        CHECK(m.apply(*sol) == rhs);
    }
    const CycMatrix zero(2, 2);
    CHECK_FALSE(solve(zero, {CycNumber(1L), CycNumber()}).has_value());
}
