#include "abp/exact/fixed_point.hpp"

#include <limits>
#include <stdexcept>

namespace abp::exact {

namespace {

constexpr __int128 kOne = static_cast<__int128>(1) << 64;
// Keep every scaled value well inside the 128-bit range.
constexpr __int128 kScaledLimit = static_cast<__int128>(1) << 100;

__int128 to_int128(const Integer& z)
{
    Integer mag = abs(z);
    Integer low = mag & Integer("18446744073709551615");
    Integer high = mag >> 64;
    if (high > Integer("9223372036854775807"))
        throw std::overflow_error("value does not fit in 128 bits");
    unsigned __int128 v = static_cast<unsigned __int128>(mpz_get_ui(high.get_mpz_t())) << 64;
    v |= mpz_get_ui(low.get_mpz_t());
    return sgn(z) < 0 ? -static_cast<__int128>(v) : static_cast<__int128>(v);
}

} // namespace

FixedPointBasis::FixedPointBasis(std::vector<FieldElement> xs) : xs_(std::move(xs))
{
    for (const auto& x : xs_) {
        FieldElement scaled = pow2(64) * x;
        Integer f = scaled.floor();
        if (abs(f) >= Integer(1) << 100)
            throw std::overflow_error("basis value too large for fixed point");
        scaled_.push_back(to_int128(f));
        exact_.push_back(scaled.is_rational() && scaled.rational_part() == Rational(f));
    }
}

bool FixedPointBasis::enclose(std::initializer_list<std::int64_t> a, std::int64_t c, __int128& lo,
                              __int128& hi) const
{
    if (a.size() != xs_.size())
        throw std::invalid_argument("coefficient count does not match basis size");
    __int128 base = 0;
    if (__builtin_mul_overflow(static_cast<__int128>(c), kOne, &base))
        return false;
    lo = hi = base;
    std::size_t i = 0;
    for (std::int64_t ai : a) {
        if (ai != 0) {
            __int128 term = 0;
            if (__builtin_mul_overflow(static_cast<__int128>(ai), scaled_[i], &term))
                return false;
            if (__builtin_add_overflow(lo, term, &lo) || __builtin_add_overflow(hi, term, &hi))
                return false;
            // x_i lies in [scaled, scaled + 1) * 2^-64.
            if (!exact_[i]) {
                if (ai > 0)
                    hi += ai;
                else
                    lo += ai;
            }
            if (lo > kScaledLimit || lo < -kScaledLimit || hi > kScaledLimit || hi < -kScaledLimit)
                return false;
        }
        ++i;
    }
    return true;
}

std::int64_t FixedPointBasis::floor(std::initializer_list<std::int64_t> a, std::int64_t c) const
{
    __int128 lo, hi;
    if (enclose(a, c, lo, hi)) {
        __int128 flo = lo >> 64; // arithmetic shift: floor division
        __int128 fhi = hi >> 64;
        if (flo == fhi && flo >= std::numeric_limits<std::int64_t>::min() &&
            flo <= std::numeric_limits<std::int64_t>::max())
            return static_cast<std::int64_t>(flo);
    }
    return to_int64(floor_exact(a, c));
}

int FixedPointBasis::sign(std::initializer_list<std::int64_t> a, std::int64_t c) const
{
    __int128 lo, hi;
    if (enclose(a, c, lo, hi)) {
        if (lo > 0)
            return 1;
        if (hi < 0)
            return -1;
    }
    return sign_exact(a, c);
}

FieldElement FixedPointBasis::combine(std::initializer_list<std::int64_t> a, std::int64_t c) const
{
    if (a.size() != xs_.size())
        throw std::invalid_argument("coefficient count does not match basis size");
    FieldElement acc = xs_.empty() ? FieldElement::rational(make_rational(c))
                                   : FieldElement(xs_[0].field(), make_rational(c));
    std::size_t i = 0;
    for (std::int64_t ai : a) {
        if (ai != 0)
            acc += make_rational(ai) * xs_[i];
        ++i;
    }
    return acc;
}

Integer FixedPointBasis::floor_exact(std::initializer_list<std::int64_t> a, std::int64_t c) const
{
    return combine(a, c).floor();
}

int FixedPointBasis::sign_exact(std::initializer_list<std::int64_t> a, std::int64_t c) const
{
    return combine(a, c).sign();
}

} // namespace abp::exact
