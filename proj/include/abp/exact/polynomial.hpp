#pragma once

#include "abp/exact/arith.hpp"

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace abp::exact {

struct RationalInterval {
    Rational lo;
    Rational hi;

    Rational width() const { return hi - lo; }
    bool contains(const Rational& q) const { return lo <= q && q <= hi; }
};

RationalInterval operator+(const RationalInterval& a, const RationalInterval& b);
RationalInterval operator*(const RationalInterval& a, const RationalInterval& b);
RationalInterval operator*(const Rational& c, const RationalInterval& a);

// Dense univariate polynomial with rational coefficients, stored low degree
// first. The zero polynomial has no coefficients and degree -1.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);
    Polynomial(std::initializer_list<long> coeffs);

    static Polynomial constant(const Rational& c);
    static Polynomial monomial(const Rational& c, int degree);
    static Polynomial from_integers(const std::vector<Integer>& coeffs);

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
    Rational coeff(int i) const;
    const Rational& leading() const { return coeffs_.back(); }

    Rational operator()(const Rational& x) const;
    int sign_at(const Rational& x) const { return sgn((*this)(x)); }
    RationalInterval evaluate(const RationalInterval& x) const;

    Polynomial derivative() const;
    Polynomial monic() const;

    // Primitive integer multiple with positive leading coefficient.
    std::vector<Integer> primitive_integer() const;
    Polynomial primitive() const { return from_integers(primitive_integer()); }

    Polynomial squarefree_part() const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& c, const Polynomial& a);
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

    // Euclidean division; divisor must be nonzero.
    static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator%(const Polynomial& a, const Polynomial& b) { return divmod(a, b).second; }
    friend Polynomial operator/(const Polynomial& a, const Polynomial& b) { return divmod(a, b).first; }

    // Monic gcd (zero if both are zero).
    static Polynomial gcd(const Polynomial& a, const Polynomial& b);

    std::string to_string(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

// Sturm chain of p (p, p', -rem, ...).
std::vector<Polynomial> sturm_chain(const Polynomial& p);

// Number of distinct real roots of p in the closed interval [lo, hi].
int count_real_roots(const Polynomial& p, const Rational& lo, const Rational& hi);

// Cauchy bound: every real root of p has |root| < bound.
Rational root_bound(const Polynomial& p);

} // namespace abp::exact
