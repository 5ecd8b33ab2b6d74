#pragma once

#include "abp/constructions.hpp"
#include "abp/error.hpp"
#include "abp/exact/const_expr.hpp"

#include <functional>
#include <string>

namespace testing_support {

inline abp::FieldElement c(const std::string& text) { return abp::exact::parse_constant(text); }

inline abp::Density density(const std::string& text) { return abp::Density(c(text)); }

inline abp::DensityTriple triple(const std::string& a, const std::string& b, const std::string& g)
{
    return abp::DensityTriple(c(a), c(b), c(g));
}

inline abp::DensityTriple triple(const std::string& a, const std::string& b)
{
    auto xs = abp::exact::parse_constants({a, b});
    return abp::DensityTriple(xs[0], xs[1], abp::Rational(1) - xs[0] - xs[1]);
}

inline abp::DensityTriple golden_table1() { return triple("1/phi^3", "1/phi^4", "1/phi"); }
inline abp::DensityTriple tribonacci_table2() { return triple("1/tribonacci^3", "1/tribonacci^2", "1/tribonacci"); }
inline abp::DensityTriple golden_equal() { return triple("1/phi^2", "1/phi^2", "1/phi^3"); }
inline abp::DensityTriple sqrt_pair() { return triple("sqrt(2)/4", "sqrt(3)/6"); }
inline abp::DensityTriple witness_triple() { return triple("sqrt(2)-1", "sqrt(5)-2", "4-sqrt(2)-sqrt(5)"); }

inline bool throws_kind(const std::function<void()>& f, abp::ErrorKind kind)
{
    try {
        f();
    } catch (const abp::Error& e) {
        return e.kind() == kind;
    }
    return false;
}

} // namespace testing_support
