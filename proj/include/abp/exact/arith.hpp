#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace abp::exact {

using Integer = mpz_class;
using Rational = mpq_class;

inline Integer floor(const Rational& q)
{
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline Integer ceil(const Rational& q)
{
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline Integer floor_div(const Integer& a, const Integer& b)
{
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline int sign(const Rational& q) { return sgn(q); }
inline int sign(const Integer& z) { return sgn(z); }

inline Rational make_rational(const Integer& num, const Integer& den = 1)
{
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(std::int64_t num, std::int64_t den = 1)
{
    return make_rational(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
}

inline Integer to_integer(std::int64_t v) { return Integer(static_cast<long>(v)); }

// Throws std::overflow_error when the value does not fit.
std::int64_t to_int64(const Integer& z);

// 2^bits as a rational.
Rational pow2(long bits);

std::string to_string(const Rational& q);

} // namespace abp::exact
