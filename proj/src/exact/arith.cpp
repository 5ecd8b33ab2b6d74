#include "abp/exact/arith.hpp"

#include <stdexcept>

namespace abp::exact {

std::int64_t to_int64(const Integer& z)
{
    if (!z.fits_slong_p())
        throw std::overflow_error("integer does not fit in 64 bits: " + z.get_str());
    return z.get_si();
}

Rational pow2(long bits)
{
    Integer p = 1;
    if (bits >= 0) {
        mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(bits));
        return Rational(p);
    }
    mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(-bits));
    return make_rational(Integer(1), p);
}

std::string to_string(const Rational& q)
{
    return q.get_str();
}

} // namespace abp::exact
