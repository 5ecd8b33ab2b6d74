#pragma once

#include "abp/exact/fixed_point.hpp"
#include "abp/exact/number_field.hpp"
#include "abp/sequence.hpp"

#include <cstdint>
#include <optional>

namespace abp {

using exact::FieldElement;
using exact::Integer;
using exact::Rational;

// An irrational number in (0, 1). Throws Error(DensityError) otherwise.
class Density {
public:
    explicit Density(FieldElement value);

    const FieldElement& value() const noexcept { return value_; }

private:
    FieldElement value_;
};

enum class GapClass { NotMember, GapK, GapK1 };

// B_alpha = { floor(n / alpha) : n >= 1 }.
class BeattySequence final : public SequenceSource {
public:
    explicit BeattySequence(Density alpha);

    const Density& density() const noexcept { return alpha_; }
    const FieldElement& reciprocal() const noexcept { return reciprocal_; }
    // k = floor(1/alpha): consecutive terms differ by k or k + 1.
    std::int64_t min_gap() const noexcept { return k_; }

    // floor(n / alpha), with term(0) = 0.
    std::int64_t term(std::int64_t n) const override;
    // floor((m + 1) alpha) for m >= 0.
    std::int64_t count(std::int64_t m) const override;
    // {(m + 1) alpha} < alpha.
    bool contains(std::int64_t m) const override;

    std::int64_t gap(std::int64_t n) const;
    GapClass successor_gap_class(std::int64_t m) const;

    // {(m + 1) alpha} as an exact element.
    FieldElement frac_at(std::int64_t m) const;

    std::string describe() const override;

private:
    Density alpha_;
    FieldElement reciprocal_;
    exact::FixedPointBasis basis_; // {alpha, 1/alpha}
    std::int64_t k_;
};

// Positive integers r, s with r alpha + s beta = 1.
struct DisjointnessWitness {
    std::int64_t r;
    std::int64_t s;
};

std::optional<DisjointnessWitness> disjointness_witness(const Density& alpha, const Density& beta);

// delta(u_m, v_m) for u_m = {(m+1) alpha}, v_m = {(m+1) beta}; checks
// B_alpha(m) + B_beta(m) + B_gamma(m) = m - delta. Throws Error(DensityError)
// unless alpha + beta + gamma = 1.
int counting_identity_defect(const Density& alpha, const Density& beta, const Density& gamma, std::int64_t m);

} // namespace abp
