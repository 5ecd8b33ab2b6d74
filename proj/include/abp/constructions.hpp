#pragma once

#include "abp/beatty.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace abp {

// alpha + beta + gamma = 1, all irrational in (0, 1), in one common field.
class DensityTriple {
public:
    // Unifies the fields; throws Error(DensityError) on a bad triple.
    DensityTriple(FieldElement alpha, FieldElement beta, FieldElement gamma);

    const Density& alpha() const noexcept { return alpha_; }
    const Density& beta() const noexcept { return beta_; }
    const Density& gamma() const noexcept { return gamma_; }

private:
    static std::array<FieldElement, 3> unified(FieldElement a, FieldElement b, FieldElement c);
    DensityTriple(std::array<FieldElement, 3> xs);

    Density alpha_, beta_, gamma_;
};

enum class SequenceRole { ExactAlpha, ExactBeta, AlmostBeta, AlmostGamma };
enum class Construction { Thm1, Thm2, Thm3, Thm4 };

std::string to_string(SequenceRole role);
std::string to_string(Construction c);

struct Member {
    SequenceRole role;
    SequencePtr sequence;
    // Exact Beatty sequence an almost member approximates (null for exact members).
    std::shared_ptr<const BeattySequence> reference;
};

// Allowed values of exact - perturbed for an almost member.
struct ErrorRange {
    std::int64_t min;
    std::int64_t max;

    friend bool operator==(const ErrorRange&, const ErrorRange&) = default;
};

struct PerturbationRecord {
    std::int64_t n;
    std::int64_t exact_term;
    std::int64_t perturbed_term;
    std::int64_t error;
};

class AlmostBeattyPartition {
public:
    AlmostBeattyPartition(DensityTriple triple, Construction construction, std::array<Member, 3> members,
                          std::array<ErrorRange, 2> ranges);

    const DensityTriple& triple() const noexcept { return triple_; }
    Construction construction() const noexcept { return construction_; }
    const std::array<Member, 3>& members() const noexcept { return members_; }

    bool has(SequenceRole role) const noexcept;
    // Throws Error(RoleNotPresent).
    const Member& member(SequenceRole role) const;
    // Stated bound for an almost member. Throws Error(RoleNotPresent).
    ErrorRange error_range(SequenceRole role) const;

    std::vector<SequenceRole> almost_roles() const;

    // Replaces the sequence of one member, keeping its role and reference.
    AlmostBeattyPartition with_sequence(SequenceRole role, SequencePtr sequence) const;

private:
    DensityTriple triple_;
    Construction construction_;
    std::array<Member, 3> members_;
    std::array<ErrorRange, 2> ranges_; // AlmostBeta, AlmostGamma
};

// max(floor((2 - alpha)/(1 - alpha)), floor((2 - beta)/(1 - beta))).
std::int64_t theorem1_error_bound(const Density& alpha, const Density& beta);
// floor((2 - alpha)/(1 - alpha)).
std::int64_t theorem2_error_bound(const Density& alpha);

// Throws Error(NotDisjoint).
AlmostBeattyPartition build_theorem1(const DensityTriple& triple);
// Throws Error(RatioRational).
AlmostBeattyPartition build_theorem2(const DensityTriple& triple);
// Throws Error(GammaNotLargest).
AlmostBeattyPartition build_theorem3(const DensityTriple& triple);
// Throws Error(DensitiesNotEqual).
AlmostBeattyPartition build_theorem4(const DensityTriple& triple);

AlmostBeattyPartition build(Construction c, const DensityTriple& triple);

// Records for n = 1..n_max. Throws Error(RoleNotPresent) for exact roles, and
// std::logic_error on a negative error.
std::vector<PerturbationRecord> perturbations(const AlmostBeattyPartition& p, SequenceRole role,
                                              std::int64_t n_max);

// floor(floor(n / inner) / outer): the iterated Beatty sequence used for both
// almost members of the first two-almost construction.
class IteratedBeattySequence final : public SequenceSource {
public:
    IteratedBeattySequence(Density outer, Density inner);

    std::int64_t term(std::int64_t n) const override;
    std::int64_t count(std::int64_t m) const override;
    std::string describe() const override;

private:
    BeattySequence outer_, inner_;
};

// b(n) - [b(n) in B_alpha].
class ShiftedOnCollision final : public SequenceSource {
public:
    ShiftedOnCollision(std::shared_ptr<const BeattySequence> base, std::shared_ptr<const BeattySequence> avoid);

    std::int64_t term(std::int64_t n) const override;
    std::int64_t count(std::int64_t m) const override;
    std::string describe() const override;

private:
    std::shared_ptr<const BeattySequence> base_, avoid_;
};

// b(n) - 1.
class ShiftedDown final : public SequenceSource {
public:
    explicit ShiftedDown(std::shared_ptr<const BeattySequence> base);

    std::int64_t term(std::int64_t n) const override;
    std::int64_t count(std::int64_t m) const override;
    std::string describe() const override;

private:
    std::shared_ptr<const BeattySequence> base_;
};

} // namespace abp
