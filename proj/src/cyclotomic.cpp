#include "canord/cyclotomic.hpp"

#include "canord/errors.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace canord {

namespace {

/// Per-conductor tables: Phi_N and the reduced images of z^k, 0 <= k < N.
struct FieldData {
    int n = 1;
    int phi = 1;
    std::vector<long> poly;             // Phi_N, low to high, monic
    std::vector<std::vector<long>> red; // red[k] = z^k mod Phi_N, length phi
    std::vector<long> units;            // residues coprime to N
};

std::vector<long> poly_divide_exact(std::vector<long> num, const std::vector<long>& den) {
    // den is monic
    const std::size_t dn = den.size() - 1;
    std::vector<long> q(num.size() - dn, 0);
    for (std::size_t i = num.size(); i-- > dn;) {
        const long c = num[i];
        if (c == 0) continue;
        q[i - dn] = c;
        for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
    }
    for (std::size_t i = 0; i < dn; ++i)
        if (num[i] != 0) throw MathError("cyclotomic polynomial division left a remainder");
    return q;
}

std::vector<long> compute_phi_poly(int n, const std::map<int, std::unique_ptr<FieldData>>& known);

const FieldData& field_data(int n) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<FieldData>> cache;
    if (n < 1) throw MathError("conductor must be positive");
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return *it->second;

    // Build divisors first so the recursive division has the smaller polynomials.
    std::vector<int> divs;
    for (int d = 1; d <= n; ++d)
        if (n % d == 0) divs.push_back(d);
    for (int d : divs) {
        if (cache.count(d)) continue;
        auto fd = std::make_unique<FieldData>();
        fd->n = d;
        fd->poly = compute_phi_poly(d, cache);
        fd->phi = static_cast<int>(fd->poly.size()) - 1;
        const int phi = fd->phi;
        fd->red.assign(static_cast<std::size_t>(d), std::vector<long>(static_cast<std::size_t>(phi), 0));
        std::vector<long> cur(static_cast<std::size_t>(phi), 0);
        cur[0] = 1;
        for (int k = 0; k < d; ++k) {
            fd->red[static_cast<std::size_t>(k)] = cur;
            // multiply by z and reduce
            const long top = cur[static_cast<std::size_t>(phi - 1)];
            for (int j = phi - 1; j > 0; --j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)];
            cur[0] = 0;
            if (top != 0)
                for (int j = 0; j < phi; ++j) cur[static_cast<std::size_t>(j)] -= top * fd->poly[static_cast<std::size_t>(j)];
        }
        for (long u = 0; u < d; ++u)
            if (std::gcd(u, static_cast<long>(d)) == 1) fd->units.push_back(u);
        cache.emplace(d, std::move(fd));
    }
    return *cache.at(n);
}

std::vector<long> compute_phi_poly(int n, const std::map<int, std::unique_ptr<FieldData>>& known) {
    std::vector<long> p(static_cast<std::size_t>(n) + 1, 0);
    p[0] = -1;
    p[static_cast<std::size_t>(n)] = 1;
    for (int d = 1; d < n; ++d)
        if (n % d == 0) p = poly_divide_exact(p, known.at(d)->poly);
    return p;
}

void addmul_long(mpz_class& acc, const mpz_class& x, long c) {
    if (c > 0)
        mpz_addmul_ui(acc.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(c));
    else if (c < 0)
        mpz_submul_ui(acc.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(-c));
}

int lcm_int(int a, int b) { return std::lcm(a, b); }

/// Solves A x = b over Q by Gaussian elimination; nullopt if inconsistent.
std::optional<std::vector<mpq_class>> rational_solve(std::vector<std::vector<mpq_class>> a, std::vector<mpq_class> b) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    std::vector<std::size_t> pivcol;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        std::swap(b[p], b[r]);
        const mpq_class inv = 1 / a[r][c];
        for (auto& v : a[r]) v *= inv;
        b[r] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            const mpq_class f = a[i][c];
            for (std::size_t j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
            b[i] -= f * b[r];
        }
        pivcol.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (b[i] != 0) return std::nullopt;
    std::vector<mpq_class> x(cols, 0);
    for (std::size_t i = 0; i < r; ++i) x[pivcol[i]] = b[i];
    return x;
}

} // namespace

int euler_phi(int n) { return field_data(n).phi; }

const std::vector<long>& cyclotomic_polynomial(int n) { return field_data(n).poly; }

// ---------------------------------------------------------------- CycNumber

CycNumber::CycNumber() : n_(1), num_(1), den_(1) {}

CycNumber::CycNumber(long v) : n_(1), num_{mpz_class(v)}, den_(1) {}

CycNumber::CycNumber(const mpz_class& v) : n_(1), num_{v}, den_(1) {}

CycNumber::CycNumber(const mpq_class& v) : n_(1), num_{v.get_num()}, den_(v.get_den()) {}

CycNumber CycNumber::from_coeffs(int n, const std::vector<mpq_class>& coeffs) {
    const FieldData& fd = field_data(n);
    if (static_cast<int>(coeffs.size()) != fd.phi) throw MathError("coefficient vector length must equal phi(N)");
    mpz_class den = 1;
    for (const auto& c : coeffs) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    CycNumber r;
    r.n_ = n;
    r.den_ = den;
    r.num_.resize(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) r.num_[i] = coeffs[i].get_num() * (den / coeffs[i].get_den());
    r.normalize();
    return r;
}

void CycNumber::normalize() {
    if (den_ == 1) return;
    if (den_ < 0) {
        den_ = -den_;
        for (auto& v : num_) v = -v;
    }
    mpz_class g = den_;
    for (const auto& v : num_) {
        if (g == 1) break;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
    if (g == 1) return;
    den_ /= g;
    for (auto& v : num_) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

std::vector<mpq_class> CycNumber::coeffs() const {
    std::vector<mpq_class> out(num_.size());
    for (std::size_t i = 0; i < num_.size(); ++i) {
        out[i] = mpq_class(num_[i], den_);
        out[i].canonicalize();
    }
    return out;
}

bool CycNumber::is_zero() const {
    return std::all_of(num_.begin(), num_.end(), [](const mpz_class& v) { return sgn(v) == 0; });
}

bool CycNumber::is_rational() const {
    for (std::size_t i = 1; i < num_.size(); ++i)
        if (sgn(num_[i]) != 0) return false;
    return true;
}

bool CycNumber::is_one() const { return den_ == 1 && num_[0] == 1 && is_rational(); }

mpq_class CycNumber::rational_value() const {
    if (!is_rational()) throw MathError("value is not rational");
    mpq_class q(num_[0], den_);
    q.canonicalize();
    return q;
}

CycNumber CycNumber::promoted(int m) const {
    if (m == n_) return *this;
    if (m % n_ != 0) throw MathError("promotion target must be a multiple of the conductor");
    const FieldData& fd = field_data(m);
    const long factor = m / n_;
    CycNumber r;
    r.n_ = m;
    r.den_ = den_;
    r.num_.assign(static_cast<std::size_t>(fd.phi), 0);
    for (std::size_t k = 0; k < num_.size(); ++k) {
        if (sgn(num_[k]) == 0) continue;
        const auto& row = fd.red[static_cast<std::size_t>((static_cast<long>(k) * factor) % m)];
        for (int j = 0; j < fd.phi; ++j) addmul_long(r.num_[static_cast<std::size_t>(j)], num_[k], row[static_cast<std::size_t>(j)]);
    }
    r.normalize();
    return r;
}

std::optional<CycNumber> CycNumber::restricted(int d) const {
    if (d == n_) return *this;
    if (n_ % d != 0) return std::nullopt;
    const FieldData& big = field_data(n_);
    const FieldData& small = field_data(d);
    const long factor = n_ / d;
    std::vector<std::vector<mpq_class>> a(static_cast<std::size_t>(big.phi),
                                          std::vector<mpq_class>(static_cast<std::size_t>(small.phi), 0));
    for (int k = 0; k < small.phi; ++k) {
        const auto& row = big.red[static_cast<std::size_t>((k * factor) % n_)];
        for (int j = 0; j < big.phi; ++j) a[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] = row[static_cast<std::size_t>(j)];
    }
    auto x = rational_solve(std::move(a), coeffs());
    if (!x) return std::nullopt;
    return from_coeffs(d, *x);
}

CycNumber CycNumber::minimized() const {
    for (int d = 1; d < n_; ++d) {
        if (n_ % d != 0) continue;
        if (auto r = restricted(d)) return *r;
    }
    return *this;
}

CycNumber CycNumber::galois(long j) const {
    const FieldData& fd = field_data(n_);
    long jj = ((j % n_) + n_) % n_;
    if (std::gcd(jj, static_cast<long>(n_)) != 1 && n_ > 1) throw MathError("Galois exponent must be a unit modulo the conductor");
    if (n_ <= 2 || jj == 1) return *this;
    CycNumber r;
    r.n_ = n_;
    r.den_ = den_;
    r.num_.assign(num_.size(), 0);
    for (std::size_t k = 0; k < num_.size(); ++k) {
        if (sgn(num_[k]) == 0) continue;
        const auto& row = fd.red[static_cast<std::size_t>((static_cast<long>(k) * jj) % n_)];
        for (int i = 0; i < fd.phi; ++i) addmul_long(r.num_[static_cast<std::size_t>(i)], num_[k], row[static_cast<std::size_t>(i)]);
    }
    return r;
}

CycNumber CycNumber::conj() const { return galois(-1); }

CycNumber CycNumber::inverse() const {
    if (is_zero()) throw DivisionByZero();
    if (is_rational()) {
        mpq_class q(den_, num_[0]);
        q.canonicalize();
        return CycNumber(q).promoted(n_);
    }
    const CycNumber c = conj();
    const CycNumber p = *this * c;
    if (p.is_one()) return c;
    if (p.is_rational()) return c * CycNumber(mpq_class(1) / p.rational_value()).promoted(n_);
    // Product of the remaining Galois conjugates divided by the norm.
    const FieldData& fd = field_data(n_);
    CycNumber prod(1L);
    prod = prod.promoted(n_);
    for (long u : fd.units)
        if (u != 1) prod *= galois(u);
    const CycNumber norm = *this * prod;
    if (!norm.is_rational()) throw MathError("norm computation did not produce a rational");
    return prod * CycNumber(mpq_class(1) / norm.rational_value()).promoted(n_);
}

CycNumber CycNumber::pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    CycNumber result = CycNumber(1L).promoted(n_);
    CycNumber base = *this;
    while (k > 0) {
        if (k & 1) result *= base;
        k >>= 1;
        if (k) base *= base;
    }
    return result;
}

CycNumber CycNumber::operator-() const {
    CycNumber r = *this;
    for (auto& v : r.num_) v = -v;
    return r;
}

CycNumber add_sub(const CycNumber& a0, const CycNumber& b0, bool sub) {
    if (a0.n_ != b0.n_) {
        const int m = lcm_int(a0.n_, b0.n_);
        return add_sub(a0.promoted(m), b0.promoted(m), sub);
    }
    CycNumber r;
    r.n_ = a0.n_;
    r.num_.resize(a0.num_.size());
    if (a0.den_ == b0.den_) {
        r.den_ = a0.den_;
        for (std::size_t i = 0; i < r.num_.size(); ++i) r.num_[i] = sub ? mpz_class(a0.num_[i] - b0.num_[i]) : mpz_class(a0.num_[i] + b0.num_[i]);
    } else {
        r.den_ = a0.den_ * b0.den_;
        for (std::size_t i = 0; i < r.num_.size(); ++i) {
            r.num_[i] = a0.num_[i] * b0.den_;
            if (sub)
                mpz_submul(r.num_[i].get_mpz_t(), b0.num_[i].get_mpz_t(), a0.den_.get_mpz_t());
            else
                mpz_addmul(r.num_[i].get_mpz_t(), b0.num_[i].get_mpz_t(), a0.den_.get_mpz_t());
        }
    }
    r.normalize();
    return r;
}

CycNumber& CycNumber::operator+=(const CycNumber& o) { return *this = add_sub(*this, o, false); }
CycNumber& CycNumber::operator-=(const CycNumber& o) { return *this = add_sub(*this, o, true); }
CycNumber& CycNumber::operator*=(const CycNumber& o) { return *this = *this * o; }
CycNumber& CycNumber::operator/=(const CycNumber& o) { return *this = *this / o; }

CycNumber operator*(const CycNumber& a, const CycNumber& b) {
    const int m = lcm_int(a.n_, b.n_);
    if (a.is_zero() || b.is_zero()) return CycNumber().promoted(m);
    if (a.is_rational() || b.is_rational()) {
        const CycNumber& q = a.is_rational() ? a : b;
        CycNumber r = (a.is_rational() ? b : a).promoted(m);
        for (auto& v : r.num_) v *= q.num_[0];
        r.den_ *= q.den_;
        r.normalize();
        return r;
    }
    if (a.n_ != b.n_) return a.promoted(m) * b.promoted(m);
    const FieldData& fd = field_data(m);
    const std::size_t phi = static_cast<std::size_t>(fd.phi);
    std::vector<mpz_class> conv(2 * phi - 1);
    for (std::size_t i = 0; i < phi; ++i) {
        if (sgn(a.num_[i]) == 0) continue;
        for (std::size_t j = 0; j < phi; ++j) {
            if (sgn(b.num_[j]) == 0) continue;
            mpz_addmul(conv[i + j].get_mpz_t(), a.num_[i].get_mpz_t(), b.num_[j].get_mpz_t());
        }
    }
    CycNumber r;
    r.n_ = m;
    r.num_.assign(phi, 0);
    for (std::size_t k = 0; k < phi; ++k) r.num_[k] = conv[k];
    for (std::size_t k = phi; k < conv.size(); ++k) {
        if (sgn(conv[k]) == 0) continue;
        const auto& row = fd.red[k % static_cast<std::size_t>(m)];
        for (std::size_t j = 0; j < phi; ++j) addmul_long(r.num_[j], conv[k], row[j]);
    }
    r.den_ = a.den_ * b.den_;
    r.normalize();
    return r;
}

bool operator==(const CycNumber& a, const CycNumber& b) {
    if (a.n_ != b.n_) {
        const int m = lcm_int(a.n_, b.n_);
        return a.promoted(m) == b.promoted(m);
    }
    return a.den_ == b.den_ && a.num_ == b.num_;
}

std::size_t CycNumber::hash() const {
    std::size_t h = static_cast<std::size_t>(n_) * 0x9e3779b97f4a7c15ULL;
    auto mix = [&h](const mpz_class& v) {
        const std::size_t x = mpz_get_ui(v.get_mpz_t()) ^ (static_cast<std::size_t>(sgn(v) + 1) << 62);
        h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    };
    mix(den_);
    for (const auto& v : num_) mix(v);
    return h;
}

std::string CycNumber::to_string() const {
    const auto cs = coeffs();
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < cs.size(); ++k) {
        mpq_class c = cs[k];
        if (c == 0) continue;
        const bool neg = c < 0;
        if (neg) c = -c;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        if (k == 0) {
            os << c.get_str();
        } else {
            if (c != 1) os << c.get_str() << "*";
            os << "z" << n_;
            if (k > 1) os << "^" << k;
        }
    }
    if (first) os << "0";
    return os.str();
}

CycNumber root_of_unity(int n, long k) {
    const FieldData& fd = field_data(n);
    const long kk = ((k % n) + n) % n;
    const auto& row = fd.red[static_cast<std::size_t>(kk)];
    std::vector<mpq_class> c(row.begin(), row.end());
    return CycNumber::from_coeffs(n, c);
}

std::optional<int> multiplicative_order(const CycNumber& x, int bound) {
    if (x.is_zero()) return std::nullopt;
    CycNumber p = x;
    for (int k = 1; k <= bound; ++k) {
        if (p.is_one()) return k;
        p *= x;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------- CycMatrix

CycMatrix::CycMatrix(int rows, int cols)
    : r_(rows), c_(cols), e_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {}

CycMatrix::CycMatrix(int rows, int cols, std::vector<CycNumber> entries) : r_(rows), c_(cols), e_(std::move(entries)) {
    if (e_.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols))
        throw MathError("matrix entry count does not match its shape");
}

CycMatrix CycMatrix::identity(int n) {
    CycMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = CycNumber(1L);
    return m;
}

CycMatrix CycMatrix::diag(const std::vector<CycNumber>& d) {
    const int n = static_cast<int>(d.size());
    CycMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = d[static_cast<std::size_t>(i)];
    return m;
}

CycMatrix CycMatrix::scalar(int n, const CycNumber& c) { return diag(std::vector<CycNumber>(static_cast<std::size_t>(n), c)); }

CycMatrix CycMatrix::from_rows(const std::vector<std::vector<CycNumber>>& rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r ? static_cast<int>(rows[0].size()) : 0;
    CycMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != c) throw MathError("ragged matrix rows");
        for (int j = 0; j < c; ++j) m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    return m;
}

CycMatrix CycMatrix::operator*(const CycMatrix& o) const {
    if (c_ != o.r_) throw MathError("matrix product shape mismatch");
    CycMatrix out(r_, o.c_);
    for (int i = 0; i < r_; ++i)
        for (int k = 0; k < c_; ++k) {
            const CycNumber& a = (*this)(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < o.c_; ++j) {
                const CycNumber& b = o(k, j);
                if (b.is_zero()) continue;
                out(i, j) += a * b;
            }
        }
    return out;
}

CycMatrix CycMatrix::operator+(const CycMatrix& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw MathError("matrix sum shape mismatch");
    CycMatrix out = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] += o.e_[i];
    return out;
}

CycMatrix CycMatrix::operator-(const CycMatrix& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw MathError("matrix difference shape mismatch");
    CycMatrix out = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] -= o.e_[i];
    return out;
}

CycMatrix CycMatrix::operator*(const CycNumber& c) const {
    CycMatrix out = *this;
    for (auto& v : out.e_) v = v * c;
    return out;
}

std::vector<CycNumber> CycMatrix::apply(const std::vector<CycNumber>& v) const {
    if (static_cast<int>(v.size()) != c_) throw MathError("matrix-vector shape mismatch");
    std::vector<CycNumber> out(static_cast<std::size_t>(r_));
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) {
            const CycNumber& a = (*this)(i, j);
            if (a.is_zero() || v[static_cast<std::size_t>(j)].is_zero()) continue;
            out[static_cast<std::size_t>(i)] += a * v[static_cast<std::size_t>(j)];
        }
    return out;
}

bool operator==(const CycMatrix& a, const CycMatrix& b) {
    if (a.r_ != b.r_ || a.c_ != b.c_) return false;
    for (std::size_t i = 0; i < a.e_.size(); ++i)
        if (a.e_[i] != b.e_[i]) return false;
    return true;
}

CycMatrix CycMatrix::transpose() const {
    CycMatrix out(c_, r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

CycMatrix CycMatrix::conj() const {
    CycMatrix out = *this;
    for (auto& v : out.e_) v = v.conj();
    return out;
}

CycMatrix CycMatrix::pow(long k) const {
    if (!is_square()) throw MathError("power of a non-square matrix");
    if (k < 0) return canord::inverse(*this).pow(-k);
    CycMatrix result = identity(r_);
    CycMatrix base = *this;
    while (k > 0) {
        if (k & 1) result = result * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return result;
}

CycMatrix CycMatrix::kron(const CycMatrix& o) const {
    CycMatrix out(r_ * o.r_, c_ * o.c_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) {
            const CycNumber& a = (*this)(i, j);
            if (a.is_zero()) continue;
            for (int k = 0; k < o.r_; ++k)
                for (int l = 0; l < o.c_; ++l) out(i * o.r_ + k, j * o.c_ + l) = a * o(k, l);
        }
    return out;
}

CycMatrix CycMatrix::direct_sum(const CycMatrix& o) const {
    CycMatrix out(r_ + o.r_, c_ + o.c_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) out(i, j) = (*this)(i, j);
    for (int i = 0; i < o.r_; ++i)
        for (int j = 0; j < o.c_; ++j) out(r_ + i, c_ + j) = o(i, j);
    return out;
}

bool CycMatrix::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](const CycNumber& v) { return v.is_zero(); });
}

bool CycMatrix::is_identity() const {
    if (!is_square()) return false;
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) {
            const CycNumber& v = (*this)(i, j);
            if (i == j ? !v.is_one() : !v.is_zero()) return false;
        }
    return true;
}

std::optional<CycNumber> CycMatrix::scalar_value() const {
    if (!is_square() || r_ == 0) return std::nullopt;
    const CycNumber& c = (*this)(0, 0);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) {
            const CycNumber& v = (*this)(i, j);
            if (i == j ? v != c : !v.is_zero()) return std::nullopt;
        }
    return c;
}

CycNumber CycMatrix::trace() const {
    CycNumber t;
    for (int i = 0; i < std::min(r_, c_); ++i) t += (*this)(i, i);
    return t;
}

int CycMatrix::conductor() const {
    int m = 1;
    for (const auto& v : e_) m = std::lcm(m, v.conductor());
    return m;
}

CycMatrix CycMatrix::promoted(int m) const {
    CycMatrix out = *this;
    for (auto& v : out.e_) v = v.promoted(m);
    return out;
}

CycMatrix CycMatrix::unified() const { return promoted(conductor()); }

std::size_t CycMatrix::hash() const {
    std::size_t h = static_cast<std::size_t>(r_) * 31 + static_cast<std::size_t>(c_);
    for (const auto& v : e_) h ^= v.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

std::string CycMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < r_; ++i) {
        os << (i ? "; " : "");
        for (int j = 0; j < c_; ++j) os << (j ? ", " : "") << (*this)(i, j).to_string();
    }
    os << "]";
    return os.str();
}

// ---------------------------------------------------------------- linear algebra

std::vector<int> rref(CycMatrix& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int p = r;
        while (p < m.rows() && m(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        const CycNumber inv = m(r, c).inverse();
        for (int j = c; j < m.cols(); ++j)
            if (!m(r, j).is_zero()) m(r, j) = m(r, j) * inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            const CycNumber f = m(i, c);
            for (int j = c; j < m.cols(); ++j)
                if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

int rank(const CycMatrix& m) {
    CycMatrix w = m;
    return static_cast<int>(rref(w).size());
}

CycNumber det(const CycMatrix& m0) {
    if (!m0.is_square()) throw MathError("determinant of a non-square matrix");
    CycMatrix m = m0;
    const int n = m.rows();
    CycNumber d(1L);
    for (int c = 0; c < n; ++c) {
        int p = c;
        while (p < n && m(p, c).is_zero()) ++p;
        if (p == n) return CycNumber().promoted(m0.conductor());
        if (p != c) {
            for (int j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
            d = -d;
        }
        d *= m(c, c);
        const CycNumber inv = m(c, c).inverse();
        for (int i = c + 1; i < n; ++i) {
            if (m(i, c).is_zero()) continue;
            const CycNumber f = m(i, c) * inv;
            for (int j = c; j < n; ++j)
                if (!m(c, j).is_zero()) m(i, j) -= f * m(c, j);
        }
    }
    return d;
}

CycMatrix inverse(const CycMatrix& m) {
    if (!m.is_square()) throw MathError("inverse of a non-square matrix");
    const int n = m.rows();
    CycMatrix aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = CycNumber(1L);
    }
    const auto piv = rref(aug);
    if (static_cast<int>(piv.size()) < n || piv[static_cast<std::size_t>(n - 1)] != n - 1)
        throw MathError("matrix is singular");
    CycMatrix out(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
    return out;
}

std::vector<std::vector<CycNumber>> nullspace(const CycMatrix& m) {
    CycMatrix w = m;
    const auto piv = rref(w);
    std::vector<bool> is_piv(static_cast<std::size_t>(m.cols()), false);
    for (int p : piv) is_piv[static_cast<std::size_t>(p)] = true;
    std::vector<std::vector<CycNumber>> basis;
    for (int f = 0; f < m.cols(); ++f) {
        if (is_piv[static_cast<std::size_t>(f)]) continue;
        std::vector<CycNumber> v(static_cast<std::size_t>(m.cols()));
        v[static_cast<std::size_t>(f)] = CycNumber(1L);
        for (std::size_t r = 0; r < piv.size(); ++r) v[static_cast<std::size_t>(piv[r])] = -w(static_cast<int>(r), f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<CycNumber>> solve(const CycMatrix& m, const std::vector<CycNumber>& v) {
    if (static_cast<int>(v.size()) != m.rows()) throw MathError("right-hand side length mismatch");
    CycMatrix aug(m.rows(), m.cols() + 1);
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = v[static_cast<std::size_t>(i)];
    }
    const auto piv = rref(aug);
    if (!piv.empty() && piv.back() == m.cols()) return std::nullopt;
    std::vector<CycNumber> x(static_cast<std::size_t>(m.cols()));
    for (std::size_t r = 0; r < piv.size(); ++r) x[static_cast<std::size_t>(piv[r])] = aug(static_cast<int>(r), m.cols());
    return x;
}

std::vector<Eigenspace> eigen_split(const CycMatrix& m, int order) {
    if (!m.is_square()) throw MathError("eigen_split needs a square matrix");
    if (order < 1 || !m.pow(order).is_identity()) throw MathError("matrix power does not equal the identity");
    std::vector<Eigenspace> out;
    int total = 0;
    const int n = m.rows();
    for (int k = 0; k < order && total < n; ++k) {
        const CycNumber lam = root_of_unity(order, k);
        auto ns = nullspace(m - CycMatrix::scalar(n, lam));
        if (ns.empty()) continue;
        Eigenspace es;
        es.value = lam;
        es.dim = static_cast<int>(ns.size());
        es.basis = std::move(ns);
        total += es.dim;
        out.push_back(std::move(es));
    }
    if (total != n) throw MathError("eigenspace dimensions do not sum to the matrix size");
    return out;
}

std::optional<int> matrix_order(const CycMatrix& m, int bound) {
    if (!m.is_square()) throw MathError("matrix_order needs a square matrix");
    CycMatrix p = m;
    for (int k = 1; k <= bound; ++k) {
        if (p.is_identity()) return k;
        p = p * m;
    }
    return std::nullopt;
}

} // namespace canord
