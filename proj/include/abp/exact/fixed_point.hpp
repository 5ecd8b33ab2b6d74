#pragma once

#include "abp/exact/number_field.hpp"

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace abp::exact {

// Evaluates floor and sign of integer linear forms  a_1 x_1 + ... + a_k x_k + c
// over a fixed list of reals. Each x_i is cached as floor(x_i * 2^64) in 128-bit
// fixed point; when the resulting enclosure is inconclusive (or would
// overflow) the form is evaluated exactly in the number field.
class FixedPointBasis {
public:
    FixedPointBasis() = default;
    // All xs must live in one field (see unify).
    explicit FixedPointBasis(std::vector<FieldElement> xs);

    std::size_t size() const noexcept { return xs_.size(); }
    const FieldElement& operator[](std::size_t i) const { return xs_[i]; }

    std::int64_t floor(std::initializer_list<std::int64_t> a, std::int64_t c = 0) const;
    int sign(std::initializer_list<std::int64_t> a, std::int64_t c = 0) const;

    // Exact reference versions, used as the fallback and by tests.
    Integer floor_exact(std::initializer_list<std::int64_t> a, std::int64_t c = 0) const;
    int sign_exact(std::initializer_list<std::int64_t> a, std::int64_t c = 0) const;

private:
    FieldElement combine(std::initializer_list<std::int64_t> a, std::int64_t c) const;
    // Encloses the form in [lo, hi] * 2^-64. False on overflow.
    bool enclose(std::initializer_list<std::int64_t> a, std::int64_t c, __int128& lo, __int128& hi) const;

    std::vector<FieldElement> xs_;
    std::vector<__int128> scaled_; // floor(x_i * 2^64)
    std::vector<bool> exact_;      // x_i * 2^64 is an integer
};

} // namespace abp::exact
