#pragma once

#include "abp/exact/polynomial.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace abp::exact {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

inline constexpr int kDefaultDegreeCap = 8;

// Q(theta) for a real algebraic theta, given by its minimal polynomial and a
// rational interval isolating theta among the real roots. Immutable.
class NumberField : public std::enable_shared_from_this<NumberField> {
public:
    // Validates irreducibility and isolation; throws Error(Reducible) or
    // Error(NotIsolating).
    static FieldPtr create(const Polynomial& min_poly, const Rational& lo, const Rational& hi);

    // The rationals, represented as Q(0) with minimal polynomial x.
    static FieldPtr rationals();

    int degree() const noexcept { return min_poly_.degree(); }
    const Polynomial& min_poly() const noexcept { return min_poly_; }
    const RationalInterval& isolating_interval() const noexcept { return interval_; }

    // Enclosure of theta of width at most 2^-bits.
    RationalInterval enclosure(long bits) const;

    // Enclosures of theta^0 .. theta^(d-1) at the given precision.
    std::vector<RationalInterval> power_enclosures(long bits) const;

    // Same min poly and same root (not necessarily the same object).
    bool same_as(const NumberField& other) const;

    // "root(P, [lo, hi])" in the constant-expression syntax.
    std::string describe() const;

    struct Private;
    NumberField(const Private&, Polynomial min_poly, RationalInterval interval);

private:
    Polynomial min_poly_;       // primitive integer coefficients
    Polynomial monic_;          // min_poly_ made monic
    RationalInterval interval_; // isolating, endpoints are not roots (deg > 1)
    long base_bits_ = 0;
    RationalInterval base_;     // cached refinement of interval_
    std::vector<RationalInterval> base_powers_;
    std::vector<std::vector<Rational>> reduction_; // theta^(d+i) in the power basis

    friend class FieldElement;
};

// Element sum c_i theta^i of a NumberField in canonical reduced form.
class FieldElement {
public:
    FieldElement();
    FieldElement(FieldPtr field, std::vector<Rational> coeffs);
    FieldElement(FieldPtr field, const Rational& value);

    static FieldElement rational(const Rational& q);
    static FieldElement generator(FieldPtr field);

    const FieldPtr& field() const noexcept { return field_; }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
    int degree() const { return field_->degree(); }

    bool is_zero() const;
    bool is_rational() const;
    // Constant coefficient; meaningful as the value only when is_rational().
    const Rational& rational_part() const { return coeffs_[0]; }

    // Exact sign, deciding nonzero elements by interval refinement.
    int sign() const;
    Integer floor() const;
    // x - floor(x), in [0, 1).
    FieldElement frac() const;
    FieldElement inverse() const;
    FieldElement pow(long exponent) const;

    // Enclosure of the value, width roughly 2^-bits times the coefficient size.
    RationalInterval enclosure(long bits) const;

    // Interprets this element in a field that contains it: the same field, or
    // any field when the element is rational.
    FieldElement in_field(const FieldPtr& target) const;

    FieldElement& operator+=(const FieldElement& o);
    FieldElement& operator-=(const FieldElement& o);
    FieldElement& operator*=(const FieldElement& o);
    FieldElement& operator/=(const FieldElement& o);

    friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
    friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
    friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
    friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
    friend FieldElement operator-(const FieldElement& a);

    friend FieldElement operator*(const Rational& c, const FieldElement& a);
    friend FieldElement operator+(const FieldElement& a, const Rational& c);
    friend FieldElement operator-(const FieldElement& a, const Rational& c);
    friend FieldElement operator-(const Rational& c, const FieldElement& a);

    friend bool operator==(const FieldElement& a, const FieldElement& b);
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }
    friend bool operator<(const FieldElement& a, const FieldElement& b) { return (a - b).sign() < 0; }
    friend bool operator>(const FieldElement& a, const FieldElement& b) { return (a - b).sign() > 0; }
    friend bool operator<=(const FieldElement& a, const FieldElement& b) { return (a - b).sign() <= 0; }
    friend bool operator>=(const FieldElement& a, const FieldElement& b) { return (a - b).sign() >= 0; }

    // Polynomial in t, e.g. "-1 + t".
    std::string to_string(const std::string& var = "t") const;

private:
    void align(FieldElement& other);
    void reduce(std::vector<Rational> full);

    FieldPtr field_;
    std::vector<Rational> coeffs_;
};

FieldElement operator*(const Rational& c, const FieldElement& a);

// Minimal polynomial over Q of an element (primitive integer coefficients).
Polynomial minimal_polynomial(const FieldElement& x);

// Result of adjoining something to a field: the new field plus the images of
// the old generator and of the adjoined quantity.
struct Extension {
    FieldPtr field;
    FieldElement base_generator;
    FieldElement adjoined;
};

// Embeds an element through an extension of its field.
FieldElement embed(const FieldElement& x, const Extension& ext);

// Smallest field containing both fields, with embeddings.
// Throws Error(FieldTooLarge) when the result would exceed degree_cap.
struct Compositum {
    FieldPtr field;
    FieldElement first_generator;
    FieldElement second_generator;
};
Compositum compositum(const FieldPtr& a, const FieldPtr& b, int degree_cap = kDefaultDegreeCap);

// Maps an element of a (resp. b) into the compositum.
FieldElement embed_first(const FieldElement& x, const Compositum& c);
FieldElement embed_second(const FieldElement& x, const Compositum& c);

// Rewrites all elements into one common field in place.
void unify(std::vector<FieldElement>& elements, int degree_cap = kDefaultDegreeCap);

// Non-negative square root, adjoining it if necessary.
// Throws Error(DomainError) for negative input.
FieldElement sqrt(const FieldElement& x, int degree_cap = kDefaultDegreeCap);

// True iff 1, x_1, ..., x_k are linearly independent over Q (all in one field).
bool linearly_independent_with_one(const std::vector<FieldElement>& xs);

// Decimal rendering with the given number of significant digits, correctly
// rounded (ties away from zero for rational inputs).
std::string to_decimal(const FieldElement& x, int significant_digits = 10);

// delta(s, t) = 1 if s + t >= 1 else 0, for s, t in [0, 1).
// Throws Error(DomainError) otherwise.
int delta(const FieldElement& s, const FieldElement& t);

// For display only.
double to_double(const FieldElement& x);

} // namespace abp::exact
