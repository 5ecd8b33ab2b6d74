#include "abp/constructions.hpp"

#include "abp/error.hpp"

#include <algorithm>
#include <stdexcept>

namespace abp {

using exact::to_decimal;

std::array<FieldElement, 3> DensityTriple::unified(FieldElement a, FieldElement b, FieldElement c)
{
    std::vector<FieldElement> xs{std::move(a), std::move(b), std::move(c)};
    exact::unify(xs);
    if (!(xs[0] + xs[1] + xs[2] - Rational(1)).is_zero())
        throw Error(ErrorKind::DensityError, "alpha + beta + gamma = " + to_decimal(xs[0] + xs[1] + xs[2]) +
                                                 ", not 1");
    return {xs[0], xs[1], xs[2]};
}

DensityTriple::DensityTriple(std::array<FieldElement, 3> xs)
    : alpha_(std::move(xs[0])), beta_(std::move(xs[1])), gamma_(std::move(xs[2]))
{
}

DensityTriple::DensityTriple(FieldElement alpha, FieldElement beta, FieldElement gamma)
    : DensityTriple(unified(std::move(alpha), std::move(beta), std::move(gamma)))
{
}

std::string to_string(SequenceRole role)
{
    switch (role) {
    case SequenceRole::ExactAlpha: return "ExactAlpha";
    case SequenceRole::ExactBeta: return "ExactBeta";
    case SequenceRole::AlmostBeta: return "AlmostBeta";
    case SequenceRole::AlmostGamma: return "AlmostGamma";
    }
    return "?";
}

std::string to_string(Construction c)
{
    switch (c) {
    case Construction::Thm1: return "thm1";
    case Construction::Thm2: return "thm2";
    case Construction::Thm3: return "thm3";
    case Construction::Thm4: return "thm4";
    }
    return "?";
}

AlmostBeattyPartition::AlmostBeattyPartition(DensityTriple triple, Construction construction,
                                             std::array<Member, 3> members, std::array<ErrorRange, 2> ranges)
    : triple_(std::move(triple)), construction_(construction), members_(std::move(members)), ranges_(ranges)
{
}

bool AlmostBeattyPartition::has(SequenceRole role) const noexcept
{
    return std::any_of(members_.begin(), members_.end(), [&](const Member& m) { return m.role == role; });
}

const Member& AlmostBeattyPartition::member(SequenceRole role) const
{
    for (const auto& m : members_)
        if (m.role == role)
            return m;
    throw Error(ErrorKind::RoleNotPresent, to_string(role) + " is not a member of this " +
                                               to_string(construction_) + " partition");
}

ErrorRange AlmostBeattyPartition::error_range(SequenceRole role) const
{
    const Member& m = member(role);
    if (!m.reference)
        throw Error(ErrorKind::RoleNotPresent, to_string(role) + " is an exact member");
    return role == SequenceRole::AlmostBeta ? ranges_[0] : ranges_[1];
}

std::vector<SequenceRole> AlmostBeattyPartition::almost_roles() const
{
    std::vector<SequenceRole> out;
    for (const auto& m : members_)
        if (m.reference)
            out.push_back(m.role);
    return out;
}

AlmostBeattyPartition AlmostBeattyPartition::with_sequence(SequenceRole role, SequencePtr sequence) const
{
    AlmostBeattyPartition copy = *this;
    for (auto& m : copy.members_)
        if (m.role == role) {
            m.sequence = std::move(sequence);
            return copy;
        }
    throw Error(ErrorKind::RoleNotPresent, to_string(role) + " is not a member");
}

std::int64_t theorem2_error_bound(const Density& alpha)
{
    const FieldElement& a = alpha.value();
    return exact::to_int64(((Rational(2) - a) / (Rational(1) - a)).floor());
}

std::int64_t theorem1_error_bound(const Density& alpha, const Density& beta)
{
    return std::max(theorem2_error_bound(alpha), theorem2_error_bound(beta));
}

namespace {

std::shared_ptr<const BeattySequence> beatty(const Density& d) { return std::make_shared<BeattySequence>(d); }

} // namespace

AlmostBeattyPartition build_theorem1(const DensityTriple& t)
{
    if (!disjointness_witness(t.alpha(), t.beta()))
        throw Error(ErrorKind::NotDisjoint, "no positive integers r, s with r*alpha + s*beta = 1");
    auto a = beatty(t.alpha());
    auto b = beatty(t.beta());
    auto c = beatty(t.gamma());
    std::array<Member, 3> members{Member{SequenceRole::ExactAlpha, a, nullptr},
                                  Member{SequenceRole::ExactBeta, b, nullptr},
                                  Member{SequenceRole::AlmostGamma, std::make_shared<ComplementSequence>(a, b), c}};
    ErrorRange range{0, theorem1_error_bound(t.alpha(), t.beta())};
    return AlmostBeattyPartition(t, Construction::Thm1, std::move(members), {range, range});
}

AlmostBeattyPartition build_theorem2(const DensityTriple& t)
{
    FieldElement ratio = t.beta().value() / t.gamma().value();
    if (ratio.is_rational())
        throw Error(ErrorKind::RatioRational, "beta/gamma = " + ratio.rational_part().get_str() + " is rational");
    const FieldElement one_minus_alpha = Rational(1) - t.alpha().value();
    Density outer(one_minus_alpha);
    Density inner_b(t.beta().value() / one_minus_alpha);
    Density inner_c(t.gamma().value() / one_minus_alpha);
    std::array<Member, 3> members{
        Member{SequenceRole::ExactAlpha, beatty(t.alpha()), nullptr},
        Member{SequenceRole::AlmostBeta, std::make_shared<IteratedBeattySequence>(outer, inner_b), beatty(t.beta())},
        Member{SequenceRole::AlmostGamma, std::make_shared<IteratedBeattySequence>(outer, inner_c),
               beatty(t.gamma())}};
    ErrorRange range{0, theorem2_error_bound(t.alpha())};
    return AlmostBeattyPartition(t, Construction::Thm2, std::move(members), {range, range});
}

AlmostBeattyPartition build_theorem3(const DensityTriple& t)
{
    const FieldElement& g = t.gamma().value();
    if (!(g > t.alpha().value() && g > t.beta().value()))
        throw Error(ErrorKind::GammaNotLargest, "gamma must exceed both alpha and beta");
    auto a = beatty(t.alpha());
    auto b = beatty(t.beta());
    auto bt = std::make_shared<ShiftedOnCollision>(b, a);
    std::array<Member, 3> members{Member{SequenceRole::ExactAlpha, a, nullptr},
                                  Member{SequenceRole::AlmostBeta, bt, b},
                                  Member{SequenceRole::AlmostGamma, std::make_shared<ComplementSequence>(a, bt),
                                         beatty(t.gamma())}};
    return AlmostBeattyPartition(t, Construction::Thm3, std::move(members), {ErrorRange{0, 1}, ErrorRange{0, 2}});
}

AlmostBeattyPartition build_theorem4(const DensityTriple& t)
{
    if (t.alpha().value() != t.beta().value())
        throw Error(ErrorKind::DensitiesNotEqual, "alpha and beta differ");
    auto a = beatty(t.alpha());
    auto b = beatty(t.beta());
    auto bt = std::make_shared<ShiftedDown>(b);
    std::array<Member, 3> members{Member{SequenceRole::ExactAlpha, a, nullptr},
                                  Member{SequenceRole::AlmostBeta, bt, b},
                                  Member{SequenceRole::AlmostGamma, std::make_shared<ComplementSequence>(a, bt),
                                         beatty(t.gamma())}};
    return AlmostBeattyPartition(t, Construction::Thm4, std::move(members), {ErrorRange{1, 1}, ErrorRange{0, 1}});
}

AlmostBeattyPartition build(Construction c, const DensityTriple& triple)
{
    switch (c) {
    case Construction::Thm1: return build_theorem1(triple);
    case Construction::Thm2: return build_theorem2(triple);
    case Construction::Thm3: return build_theorem3(triple);
    case Construction::Thm4: return build_theorem4(triple);
    }
    throw std::invalid_argument("unknown construction");
}

std::vector<PerturbationRecord> perturbations(const AlmostBeattyPartition& p, SequenceRole role, std::int64_t n_max)
{
    const Member& m = p.member(role);
    if (!m.reference)
        throw Error(ErrorKind::RoleNotPresent, to_string(role) + " is an exact member");
    std::vector<PerturbationRecord> out;
    out.reserve(static_cast<std::size_t>(std::max<std::int64_t>(n_max, 0)));
    m.sequence->for_each_index(1, n_max, [&](std::int64_t n, std::int64_t v) {
        std::int64_t exact = m.reference->term(n);
        if (exact < v)
            throw std::logic_error("negative perturbation error at n = " + std::to_string(n));
        out.push_back({n, exact, v, exact - v});
    });
    return out;
}

IteratedBeattySequence::IteratedBeattySequence(Density outer, Density inner)
    : outer_(std::move(outer)), inner_(std::move(inner))
{
}

std::int64_t IteratedBeattySequence::term(std::int64_t n) const { return outer_.term(inner_.term(n)); }

std::int64_t IteratedBeattySequence::count(std::int64_t m) const { return inner_.count(outer_.count(m)); }

std::string IteratedBeattySequence::describe() const
{
    return "floor(floor(n/" + to_decimal(inner_.density().value()) + ")/" + to_decimal(outer_.density().value()) +
           ")";
}

ShiftedOnCollision::ShiftedOnCollision(std::shared_ptr<const BeattySequence> base,
                                       std::shared_ptr<const BeattySequence> avoid)
    : base_(std::move(base)), avoid_(std::move(avoid))
{
}

std::int64_t ShiftedOnCollision::term(std::int64_t n) const
{
    if (n <= 0)
        return 0;
    std::int64_t b = base_->term(n);
    return avoid_->contains(b) ? b - 1 : b;
}

std::int64_t ShiftedOnCollision::count(std::int64_t m) const
{
    if (m <= 0)
        return 0;
    std::int64_t n0 = base_->count(m + 1);
    return n0 - (n0 >= 1 && term(n0) > m ? 1 : 0);
}

std::string ShiftedOnCollision::describe() const
{
    return base_->describe() + " shifted down on " + avoid_->describe();
}

ShiftedDown::ShiftedDown(std::shared_ptr<const BeattySequence> base) : base_(std::move(base)) {}

std::int64_t ShiftedDown::term(std::int64_t n) const { return n <= 0 ? 0 : base_->term(n) - 1; }

std::int64_t ShiftedDown::count(std::int64_t m) const { return m <= 0 ? 0 : base_->count(m + 1); }

std::string ShiftedDown::describe() const { return base_->describe() + " - 1"; }

} // namespace abp
