#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace canord {

/// Polynomial in x, y with rational coefficients, stored sparsely by (deg_x, deg_y).
class Poly2 {
public:
    using Monomial = std::pair<int, int>;

    Poly2() = default;
    static Poly2 constant(const mpq_class& c);
    static Poly2 x();
    static Poly2 y();
    static Poly2 monomial(int i, int j, const mpq_class& c = 1);

    /// Integer-coefficient expressions in x, y with ^, *, +, -, parentheses and
    /// implicit multiplication of adjacent factors. Throws SchemaError.
    static Poly2 parse(const std::string& text);

    const std::map<Monomial, mpq_class>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    mpq_class coeff(int i, int j) const;

    Poly2 operator+(const Poly2& o) const;
    Poly2 operator-(const Poly2& o) const;
    Poly2 operator*(const Poly2& o) const;
    Poly2 operator-() const;
    Poly2 pow(int k) const;
    friend bool operator==(const Poly2& a, const Poly2& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Poly2& a, const Poly2& b) { return !(a == b); }
    friend bool operator<(const Poly2& a, const Poly2& b) { return a.terms_ < b.terms_; }

    /// Lowest total degree of a term (the multiplicity at the origin); -1 for zero.
    int order() const;
    /// Total degree; -1 for zero.
    int degree() const;
    /// Sum of the terms of total degree d.
    Poly2 homogeneous_part(int d) const;
    /// Exact division by x^k y^l; throws MathError when a term is not divisible.
    Poly2 divide_monomial(int k, int l) const;

    /// f(x, x (y + s)) / x^m with m = order(): the blowup chart through slope s.
    Poly2 blowup_slope(const mpq_class& s) const;
    /// f(x y, y) / y^m: the blowup chart through the vertical direction.
    Poly2 blowup_vertical() const;

    Poly2 swap_xy() const;
    Poly2 negate_y() const;
    /// Divides by the leading coefficient of the largest monomial so the result is monic.
    Poly2 monic() const;

    /// Deterministic text, terms ordered by y exponent then x exponent, both descending.
    std::string to_string() const;

private:
    std::map<Monomial, mpq_class> terms_;
    void add_term(int i, int j, const mpq_class& c);
};

/// A tangent direction: y = slope * x, or the vertical line x = 0.
struct Direction {
    bool vertical = false;
    mpq_class slope = 0;
    friend bool operator==(const Direction& a, const Direction& b) {
        return a.vertical == b.vertical && (a.vertical || a.slope == b.slope);
    }
    friend bool operator<(const Direction& a, const Direction& b) {
        if (a.vertical != b.vertical) return b.vertical;
        return !a.vertical && a.slope < b.slope;
    }
};

/// Linear factors of the leading form of f with multiplicities. Throws
/// UnsupportedError when the leading form has a factor without a rational root.
std::vector<std::pair<Direction, int>> tangent_directions(const Poly2& f);

} // namespace canord
