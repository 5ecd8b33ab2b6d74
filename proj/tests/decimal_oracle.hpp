#pragma once

#include "abp/exact/number_field.hpp"

#include <boost/multiprecision/cpp_dec_float.hpp>

#include <string>

// Independent floor oracle: evaluates field elements in 220-digit decimal
// floating point, with the generator found by plain bisection on its
// minimal polynomial.
namespace decimal_oracle {

using Dec = boost::multiprecision::number<boost::multiprecision::cpp_dec_float<220>>;

inline Dec to_dec(const abp::exact::Rational& q)
{
    return Dec(q.get_num().get_str()) / Dec(q.get_den().get_str());
}

inline Dec generator(const abp::exact::NumberField& f)
{
    const auto& coeffs = f.min_poly().coeffs();
    auto eval = [&](const Dec& x) {
        Dec acc = 0;
        for (std::size_t i = coeffs.size(); i-- > 0;)
            acc = acc * x + to_dec(coeffs[i]);
        return acc;
    };
    Dec lo = to_dec(f.isolating_interval().lo), hi = to_dec(f.isolating_interval().hi);
    const bool rising = eval(hi) > 0;
    for (int i = 0; i < 760; ++i) {
        Dec mid = (lo + hi) / 2;
        if ((eval(mid) > 0) == rising)
            hi = mid;
        else
            lo = mid;
    }
    return (lo + hi) / 2;
}

inline abp::exact::Integer floor(const abp::exact::FieldElement& x, const Dec& theta)
{
    Dec acc = 0, p = 1;
    for (const auto& ci : x.coeffs()) {
        acc += to_dec(ci) * p;
        p *= theta;
    }
    const Dec fl = boost::multiprecision::floor(acc);
    std::string s = fl.str(0, std::ios_base::fixed);
    if (auto dot = s.find('.'); dot != std::string::npos)
        s.erase(dot);
    return abp::exact::Integer(s);
}

} // namespace decimal_oracle
