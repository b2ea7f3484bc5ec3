#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace canord {

/// Euler's totient.
int euler_phi(int n);

/// Coefficients (low to high degree) of the N-th cyclotomic polynomial.
const std::vector<long>& cyclotomic_polynomial(int n);

/// Exact element of the cyclotomic field Q(zeta_N), N >= 1.
///
/// The value is stored in the power basis 1, z, ..., z^(phi(N)-1) reduced
/// modulo Phi_N. Coefficients are kept as integer numerators over one
/// positive common denominator in lowest terms, so the representation is
/// canonical for a fixed conductor. Values of different conductors are
/// promoted to the lcm before any binary operation.
class CycNumber {
public:
    CycNumber();
    CycNumber(long v); // NOLINT(google-explicit-constructor)
    CycNumber(const mpz_class& v); // NOLINT(google-explicit-constructor)
    CycNumber(const mpq_class& v); // NOLINT(google-explicit-constructor)

    /// Builds a value from power-basis coefficients of length phi(n).
    static CycNumber from_coeffs(int n, const std::vector<mpq_class>& coeffs);

    int conductor() const { return n_; }
    std::vector<mpq_class> coeffs() const;

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    /// Requires is_rational().
    mpq_class rational_value() const;

    /// Same value expressed at conductor m (n must divide m).
    CycNumber promoted(int m) const;
    /// Same value at conductor d dividing n, when it lies in Q(zeta_d).
    std::optional<CycNumber> restricted(int d) const;
    /// Smallest conductor containing the value.
    CycNumber minimized() const;

    /// Complex conjugation zeta -> zeta^-1.
    CycNumber conj() const;
    /// Galois automorphism zeta -> zeta^j, gcd(j, N) = 1.
    CycNumber galois(long j) const;
    /// Throws DivisionByZero on zero.
    CycNumber inverse() const;
    CycNumber pow(long k) const;

    CycNumber operator-() const;
    CycNumber& operator+=(const CycNumber& o);
    CycNumber& operator-=(const CycNumber& o);
    CycNumber& operator*=(const CycNumber& o);
    CycNumber& operator/=(const CycNumber& o);

    friend CycNumber operator+(CycNumber a, const CycNumber& b) { return a += b; }
    friend CycNumber operator-(CycNumber a, const CycNumber& b) { return a -= b; }
    friend CycNumber operator*(const CycNumber& a, const CycNumber& b);
    friend CycNumber operator/(const CycNumber& a, const CycNumber& b) { return a * b.inverse(); }
    friend bool operator==(const CycNumber& a, const CycNumber& b);
    friend bool operator!=(const CycNumber& a, const CycNumber& b) { return !(a == b); }

    /// Hash of the reduced coefficient vector; equal values of equal conductor hash equally.
    std::size_t hash() const;

    /// Human-readable form such as "1/2 + 3*z8^2 - z8^3".
    std::string to_string() const;

private:
    int n_ = 1;
    std::vector<mpz_class> num_; // length phi(n_)
    mpz_class den_ = 1;          // > 0, coprime to the numerators as a whole

    void normalize();
    friend CycNumber add_sub(const CycNumber& a, const CycNumber& b, bool sub);
};

/// zeta_N^k.
CycNumber root_of_unity(int n, long k = 1);

/// Least k <= bound with x^k = 1, or nullopt.
std::optional<int> multiplicative_order(const CycNumber& x, int bound);

/// Dense row-major matrix over cyclotomic fields.
class CycMatrix {
public:
    CycMatrix() = default;
    CycMatrix(int rows, int cols);
    CycMatrix(int rows, int cols, std::vector<CycNumber> entries);

    static CycMatrix identity(int n);
    static CycMatrix diag(const std::vector<CycNumber>& d);
    static CycMatrix scalar(int n, const CycNumber& c);
    static CycMatrix from_rows(const std::vector<std::vector<CycNumber>>& rows);

    int rows() const { return r_; }
    int cols() const { return c_; }
    bool is_square() const { return r_ == c_; }

    CycNumber& operator()(int i, int j) { return e_[static_cast<std::size_t>(i) * c_ + j]; }
    const CycNumber& operator()(int i, int j) const { return e_[static_cast<std::size_t>(i) * c_ + j]; }
    const std::vector<CycNumber>& entries() const { return e_; }

    CycMatrix operator*(const CycMatrix& o) const;
    CycMatrix operator+(const CycMatrix& o) const;
    CycMatrix operator-(const CycMatrix& o) const;
    CycMatrix operator*(const CycNumber& c) const;
    std::vector<CycNumber> apply(const std::vector<CycNumber>& v) const;
    friend bool operator==(const CycMatrix& a, const CycMatrix& b);
    friend bool operator!=(const CycMatrix& a, const CycMatrix& b) { return !(a == b); }

    CycMatrix transpose() const;
    /// Entry-wise complex conjugation.
    CycMatrix conj() const;
    CycMatrix pow(long k) const;
    CycMatrix kron(const CycMatrix& o) const;
    CycMatrix direct_sum(const CycMatrix& o) const;

    bool is_zero() const;
    bool is_identity() const;
    /// The scalar c when the matrix equals c * I.
    std::optional<CycNumber> scalar_value() const;
    CycNumber trace() const;

    /// Largest conductor among the entries' lcm.
    int conductor() const;
    /// All entries promoted to conductor m.
    CycMatrix promoted(int m) const;
    /// All entries promoted to the common conductor.
    CycMatrix unified() const;

    std::size_t hash() const;
    std::string to_string() const;

private:
    int r_ = 0;
    int c_ = 0;
    std::vector<CycNumber> e_;
};

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<int> rref(CycMatrix& m);
int rank(const CycMatrix& m);
CycNumber det(const CycMatrix& m);
/// Throws MathError on singular or non-square input.
CycMatrix inverse(const CycMatrix& m);
/// Basis of {x : m x = 0}.
std::vector<std::vector<CycNumber>> nullspace(const CycMatrix& m);
/// A particular solution of m x = v, or nullopt when inconsistent.
std::optional<std::vector<CycNumber>> solve(const CycMatrix& m, const std::vector<CycNumber>& v);

struct Eigenspace {
    CycNumber value;
    int dim = 0;
    std::vector<std::vector<CycNumber>> basis;
};

/// Eigenspace decomposition of a matrix with m^order = I.
/// Eigenvalues are returned as zeta_order^k in increasing k.
std::vector<Eigenspace> eigen_split(const CycMatrix& m, int order);

/// Least k <= bound with m^k = I, or nullopt.
std::optional<int> matrix_order(const CycMatrix& m, int bound);

} // namespace canord
