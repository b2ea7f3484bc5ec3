#include "canord/poly2.hpp"

#include "canord/errors.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace canord {

Poly2 Poly2::constant(const mpq_class& c) { return monomial(0, 0, c); }
Poly2 Poly2::x() { return monomial(1, 0); }
Poly2 Poly2::y() { return monomial(0, 1); }

Poly2 Poly2::monomial(int i, int j, const mpq_class& c) {
    Poly2 p;
    p.add_term(i, j, c);
    return p;
}

void Poly2::add_term(int i, int j, const mpq_class& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(Monomial{i, j}, c);
    if (fresh) return;
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

mpq_class Poly2::coeff(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? mpq_class(0) : it->second;
}

Poly2 Poly2::operator+(const Poly2& o) const {
    Poly2 r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m.first, m.second, c);
    return r;
}

Poly2 Poly2::operator-(const Poly2& o) const { return *this + (-o); }

Poly2 Poly2::operator-() const {
    Poly2 r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

Poly2 Poly2::operator*(const Poly2& o) const {
    Poly2 r;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) r.add_term(m1.first + m2.first, m1.second + m2.second, c1 * c2);
    return r;
}

Poly2 Poly2::pow(int k) const {
    if (k < 0) throw MathError("negative polynomial power");
    Poly2 r = constant(1);
    Poly2 b = *this;
    while (k > 0) {
        if (k & 1) r = r * b;
        b = b * b;
        k >>= 1;
    }
    return r;
}

int Poly2::order() const {
    int best = -1;
    for (const auto& [m, c] : terms_) {
        const int d = m.first + m.second;
        if (best < 0 || d < best) best = d;
    }
    return best;
}

int Poly2::degree() const {
    int best = -1;
    for (const auto& [m, c] : terms_) best = std::max(best, m.first + m.second);
    return best;
}

Poly2 Poly2::homogeneous_part(int d) const {
    Poly2 r;
    for (const auto& [m, c] : terms_)
        if (m.first + m.second == d) r.terms_.emplace(m, c);
    return r;
}

Poly2 Poly2::divide_monomial(int k, int l) const {
    Poly2 r;
    for (const auto& [m, c] : terms_) {
        if (m.first < k || m.second < l) throw MathError("polynomial is not divisible by the monomial");
        r.terms_.emplace(Monomial{m.first - k, m.second - l}, c);
    }
    return r;
}

Poly2 Poly2::blowup_slope(const mpq_class& s) const {
    const int m = order();
    if (m < 0) return {};
    // x^i (x (y + s))^j = x^(i+j) (y + s)^j
    Poly2 r;
    const Poly2 shifted = y() + constant(s);
    for (const auto& [mono, c] : terms_) {
        const Poly2 part = shifted.pow(mono.second);
        for (const auto& [m2, c2] : part.terms_)
            r.add_term(mono.first + mono.second + m2.first - m, m2.second, c * c2);
    }
    return r;
}

Poly2 Poly2::blowup_vertical() const {
    const int m = order();
    Poly2 r;
    for (const auto& [mono, c] : terms_) r.add_term(mono.first, mono.first + mono.second - m, c);
    return r;
}

Poly2 Poly2::swap_xy() const {
    Poly2 r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(Monomial{m.second, m.first}, c);
    return r;
}

Poly2 Poly2::negate_y() const {
    Poly2 r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, (m.second % 2) ? mpq_class(-c) : c);
    return r;
}

Poly2 Poly2::monic() const {
    if (terms_.empty()) return {};
    const mpq_class lead = terms_.rbegin()->second;
    Poly2 r = *this;
    for (auto& [m, c] : r.terms_) c /= lead;
    return r;
}

std::string Poly2::to_string() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Monomial, mpq_class>> ordered(terms_.begin(), terms_.end());
    std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
        if (a.first.second != b.first.second) return a.first.second > b.first.second;
        return a.first.first > b.first.first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : ordered) {
        mpq_class a = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        const bool unit = a == 1;
        const bool bare = m.first == 0 && m.second == 0;
        if (!unit || bare) {
            os << a.get_str();
            if (!bare) os << "*";
        }
        bool need_star = false;
        if (m.first > 0) {
            os << "x";
            if (m.first > 1) os << "^" << m.first;
            need_star = true;
        }
        if (m.second > 0) {
            if (need_star) os << "*";
            os << "y";
            if (m.second > 1) os << "^" << m.second;
        }
    }
    return os.str();
}

// ------------------------------------------------------------------ parsing

namespace {

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    Poly2 parse_all() {
        Poly2 p = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
        return p;
    }

private:
    const std::string& s_;
    std::size_t pos_ = 0;
    int depth_ = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw SchemaError("polynomial '" + s_ + "': " + what + " at offset " + std::to_string(pos_));
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    Poly2 expr() {
        Poly2 acc;
        bool negate = false;
        if (peek('+') || peek('-')) negate = s_[pos_++] == '-';
        acc = term();
        if (negate) acc = -acc;
        while (peek('+') || peek('-')) {
            const bool minus = s_[pos_++] == '-';
            const Poly2 t = term();
            acc = minus ? acc - t : acc + t;
        }
        return acc;
    }

    bool starts_factor() {
        skip();
        if (pos_ >= s_.size()) return false;
        const char c = s_[pos_];
        return std::isdigit(static_cast<unsigned char>(c)) || c == 'x' || c == 'y' || c == '(';
    }

    Poly2 term() {
        Poly2 acc = factor();
        while (true) {
            if (peek('*')) {
                ++pos_;
                acc = acc * factor();
            } else if (starts_factor()) {
                acc = acc * factor();
            } else {
                return acc;
            }
        }
    }

    Poly2 factor() {
        Poly2 b = base();
        if (peek('^')) {
            ++pos_;
            skip();
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("exponent must be a non-negative integer");
            if (pos_ - start > 4) fail("exponent too large");
            b = b.pow(std::stoi(s_.substr(start, pos_ - start)));
        }
        return b;
    }

    Poly2 base() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        const char c = s_[pos_];
        if (c == 'x') {
            ++pos_;
            return Poly2::x();
        }
        if (c == 'y') {
            ++pos_;
            return Poly2::y();
        }
        if (c == '(') {
            if (++depth_ > 64) fail("nesting too deep");
            ++pos_;
            Poly2 inner = expr();
            if (!peek(')')) fail("missing ')'");
            ++pos_;
            --depth_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return Poly2::constant(mpq_class(mpz_class(s_.substr(start, pos_ - start))));
        }
        fail("unexpected character '" + std::string(1, c) + "'");
    }
};

// Rational roots of an integer polynomial (low to high) with multiplicities.
std::vector<std::pair<mpq_class, int>> rational_roots(std::vector<mpq_class> q) {
    std::vector<std::pair<mpq_class, int>> out;
    while (q.size() > 1 && q.back() == 0) q.pop_back();
    int zeros = 0;
    while (q.size() > 1 && q.front() == 0) {
        q.erase(q.begin());
        ++zeros;
    }
    if (zeros) out.emplace_back(mpq_class(0), zeros);
    if (q.size() <= 1) return out;

    mpz_class den = 1;
    for (const auto& c : q) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    auto divisors = [](mpz_class v) {
        v = abs(v);
        std::vector<mpz_class> d;
        for (mpz_class k = 1; k * k <= v; ++k)
            if (v % k == 0) {
                d.push_back(k);
                if (k * k != v) d.push_back(v / k);
            }
        return d;
    };
    const mpz_class a0 = mpz_class(q.front() * den);
    const mpz_class an = mpz_class(q.back() * den);
    if (abs(a0) > mpz_class("1000000000000") || abs(an) > mpz_class("1000000000000"))
        throw UnsupportedError("tangent cone coefficients are too large for rational root search");

    auto eval_divide = [](const std::vector<mpq_class>& p, const mpq_class& r, std::vector<mpq_class>& quot) {
        // Synthetic division by (t - r); returns the remainder.
        const std::size_t n = p.size();
        quot.assign(n - 1, 0);
        mpq_class acc = p[n - 1];
        for (std::size_t k = n - 1; k-- > 0;) {
            quot[k] = acc;
            acc = acc * r + p[k];
        }
        return acc;
    };

    std::vector<mpq_class> cands;
    for (const auto& p : divisors(a0))
        for (const auto& qd : divisors(an)) {
            cands.emplace_back(p, qd);
            cands.emplace_back(-p, qd);
        }
    for (auto& c : cands) c.canonicalize();
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    for (const auto& r : cands) {
        int mult = 0;
        std::vector<mpq_class> quot;
        while (q.size() > 1 && eval_divide(q, r, quot) == 0) {
            q = quot;
            ++mult;
        }
        if (mult) out.emplace_back(r, mult);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

Poly2 Poly2::parse(const std::string& text) {
    Parser p(text);
    return p.parse_all();
}

std::vector<std::pair<Direction, int>> tangent_directions(const Poly2& f) {
    const int m = f.order();
    if (m <= 0) throw MathError("tangent directions need a curve through the origin");
    const Poly2 lead = f.homogeneous_part(m);
    // lead(1, t) as a polynomial in t: coefficient of x^(m-j) y^j.
    std::vector<mpq_class> g(static_cast<std::size_t>(m) + 1, 0);
    int top = -1;
    for (const auto& [mono, c] : lead.terms()) {
        g[static_cast<std::size_t>(mono.second)] = c;
        top = std::max(top, mono.second);
    }
    std::vector<std::pair<Direction, int>> out;
    int found = m - top; // x = 0 is a root of multiplicity m - deg_t
    if (found > 0) out.push_back({Direction{true, 0}, found});
    g.resize(static_cast<std::size_t>(top) + 1);
    for (const auto& [r, mult] : rational_roots(g)) {
        out.push_back({Direction{false, r}, mult});
        found += mult;
    }
    if (found != m)
        throw UnsupportedError("tangent cone " + lead.to_string() + " has directions outside the rationals");
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

} // namespace canord
