#include "abp/beatty.hpp"

#include "abp/error.hpp"

#include <stdexcept>

namespace abp {

Density::Density(FieldElement value) : value_(std::move(value))
{
    if (value_.is_rational())
        throw Error(ErrorKind::DensityError, "density " + exact::to_decimal(value_) + " is rational");
    if (value_.sign() <= 0 || (value_ - Rational(1)).sign() >= 0)
        throw Error(ErrorKind::DensityError, "density " + exact::to_decimal(value_) + " is not in (0, 1)");
}

BeattySequence::BeattySequence(Density alpha)
    : alpha_(std::move(alpha)), reciprocal_(alpha_.value().inverse()),
      basis_({alpha_.value(), reciprocal_}), k_(exact::to_int64(reciprocal_.floor()))
{
}

std::int64_t BeattySequence::term(std::int64_t n) const
{
    if (n <= 0)
        return 0;
    return basis_.floor({0, n});
}

std::int64_t BeattySequence::count(std::int64_t m) const
{
    if (m <= 0)
        return 0;
    return basis_.floor({m + 1, 0});
}

bool BeattySequence::contains(std::int64_t m) const
{
    if (m <= 0)
        return false;
    // {(m+1) alpha} < alpha  <=>  m alpha - floor((m+1) alpha) < 0
    return basis_.sign({m, 0}, -count(m)) < 0;
}

std::int64_t BeattySequence::gap(std::int64_t n) const { return term(n + 1) - term(n); }

GapClass BeattySequence::successor_gap_class(std::int64_t m) const
{
    if (!contains(m))
        return GapClass::NotMember;
    // {1/alpha} alpha = 1 - k alpha, compared with u = (m+1) alpha - count(m).
    int s = basis_.sign({m + 1 + k_, 0}, -count(m) - 1);
    if (s == 0)
        throw std::logic_error("gap criterion hit an exact equality");
    return s < 0 ? GapClass::GapK1 : GapClass::GapK;
}

FieldElement BeattySequence::frac_at(std::int64_t m) const
{
    FieldElement x = exact::make_rational(m + 1) * alpha_.value();
    return x - Rational(x.floor());
}

std::string BeattySequence::describe() const { return "B(" + exact::to_decimal(alpha_.value()) + ")"; }

std::optional<DisjointnessWitness> disjointness_witness(const Density& alpha, const Density& beta)
{
    std::vector<FieldElement> ab{alpha.value(), beta.value()};
    exact::unify(ab);
    const FieldElement inv_beta = ab[1].inverse();
    Integer r_max = ((Rational(1) - ab[1]) / ab[0]).floor();
    for (Integer r = 1; r <= r_max; ++r) {
        FieldElement s = (Rational(1) - Rational(r) * ab[0]) * inv_beta;
        if (!s.is_rational())
            continue;
        const Rational& q = s.rational_part();
        if (q.get_den() == 1 && q >= 1)
            return DisjointnessWitness{exact::to_int64(r), exact::to_int64(q.get_num())};
    }
    return std::nullopt;
}

int counting_identity_defect(const Density& alpha, const Density& beta, const Density& gamma, std::int64_t m)
{
    std::vector<FieldElement> xs{alpha.value(), beta.value(), gamma.value()};
    exact::unify(xs);
    if (!(xs[0] + xs[1] + xs[2] - Rational(1)).is_zero())
        throw Error(ErrorKind::DensityError, "densities do not sum to 1");
    BeattySequence a(alpha), b(beta), c(gamma);
    int d = exact::delta(a.frac_at(m), b.frac_at(m));
    if (a.count(m) + b.count(m) + c.count(m) != m - d)
        throw std::logic_error("counting identity violated at m = " + std::to_string(m));
    return d;
}

} // namespace abp
