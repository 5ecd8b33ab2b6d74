#pragma once

#include "abp/exact/number_field.hpp"

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace abp::exact {

// Parse tree of a constant expression:
//
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := base ('^' int)?
//   base   := rational | 'phi' | 'tribonacci' | 'sqrt' '(' expr ')'
//           | 'root' '(' poly ',' '[' rational ',' rational ']' ')' | '(' expr ')'
class ConstExpr {
public:
    enum class Kind { Number, Phi, Tribonacci, Sqrt, Root, Add, Sub, Mul, Div, Pow };

    struct Node {
        Kind kind;
        Rational value;     // Number
        Polynomial poly;    // Root
        Rational lo, hi;    // Root
        long exponent = 0;  // Pow
        std::vector<std::shared_ptr<const Node>> children;
    };

    // Throws Error(ParseError) with the offending column.
    static ConstExpr parse(std::string_view text);

    const Node& root() const { return *root_; }

    // Every subexpression is brought into one common field as it is combined.
    FieldElement evaluate(int degree_cap = kDefaultDegreeCap) const;

    std::string to_string() const;

private:
    explicit ConstExpr(std::shared_ptr<const Node> root) : root_(std::move(root)) {}
    std::shared_ptr<const Node> root_;
};

FieldElement parse_constant(std::string_view text, int degree_cap = kDefaultDegreeCap);

// Parses several constants and embeds them all in one field.
std::vector<FieldElement> parse_constants(const std::vector<std::string>& texts,
                                          int degree_cap = kDefaultDegreeCap);

// Integer polynomial in x, e.g. "x^3 - x^2 - x - 1" or "2*x^2-3".
Polynomial parse_polynomial(std::string_view text);

// The real root of p inside the closed interval [lo, hi]. p may be reducible;
// the interval must contain exactly one distinct real root.
FieldElement real_root(const Polynomial& p, const Rational& lo, const Rational& hi);

FieldPtr golden_field();
FieldPtr tribonacci_field();

} // namespace abp::exact
