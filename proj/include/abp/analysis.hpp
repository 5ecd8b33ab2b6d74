#pragma once

#include "abp/constructions.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>

namespace abp {

// u = {(m+1) alpha}, v = {(m+1) beta}, w = {(m+1) gamma}.
struct FractionalTriple {
    FieldElement u, v, w;
};

FractionalTriple fractional_triple(const DensityTriple& t, std::int64_t m);

enum class RegionLabel { R0, R1, R2, NotInAlmostGamma };

std::string to_string(RegionLabel label);

// Evaluates the error criteria of the second two-almost construction (gamma
// largest). Every comparison is the sign of an integer linear form in alpha
// and beta, done in fixed point with an exact fallback. The *_exact members
// redo the same tests on exact fractional parts.
class ErrorAnalyzer {
public:
    // Throws Error(GammaNotLargest).
    explicit ErrorAnalyzer(const DensityTriple& t);

    int e_beta(std::int64_t m) const;
    int e_gamma(std::int64_t m) const;
    bool in_almost_gamma(std::int64_t m) const;
    RegionLabel classify(std::int64_t m) const;
    // The three region conditions evaluated independently.
    std::array<bool, 3> region_conditions(std::int64_t m) const;

    int e_beta_exact(std::int64_t m) const;
    int e_gamma_exact(std::int64_t m) const;
    RegionLabel classify_exact(std::int64_t m) const;

private:
    struct Signs {
        bool u_gt_alpha, v_gt_beta, u_gt_1ma, v_gt_1mb;
        int sum_vs_1, sum_vs_1pg;
    };
    Signs signs(std::int64_t m) const;
    Signs signs_exact(std::int64_t m) const;
    static RegionLabel label(const Signs& s);

    DensityTriple triple_;
    exact::FixedPointBasis basis_; // {alpha, beta}
};

int e_beta(const DensityTriple& t, std::int64_t m);
int e_gamma(const DensityTriple& t, std::int64_t m);
RegionLabel classify_region(const DensityTriple& t, std::int64_t m);

struct PredictedDensities {
    FieldElement p0, p1, p2;
};

// P0 = gamma/2, P1 = 1 - (alpha^2 + beta^2 + gamma^2)/(2 gamma),
// P2 = (alpha^2 + beta^2)/(2 gamma).
PredictedDensities predicted_densities(const DensityTriple& t);

struct DensityEstimate {
    std::int64_t n_max = 0;
    std::array<std::int64_t, 3> counts{};
    std::array<double, 3> empirical{};
    PredictedDensities predicted;
};

// Frequencies of the AlmostGamma errors 0, 1, 2 over n <= n_max.
// Requires a partition from build_theorem3.
DensityEstimate empirical_densities(const AlmostBeattyPartition& p, std::int64_t n_max, bool parallel = true);

struct WitnessReport {
    std::int64_t m = 0;
    // m in B_alpha, m+1 in B_beta, m+1 in B_gamma, m+2 in B_alpha.
    std::array<bool, 4> certificates{};

    bool verified() const { return certificates[0] && certificates[1] && certificates[2] && certificates[3]; }
};

std::optional<WitnessReport> find_theorem5_witness(const DensityTriple& t, std::int64_t limit, bool parallel = true);

// m + 1 cannot go into either almost sequence, nor be reached by shifting an
// element at m or m + 2 by one, without colliding with B_alpha.
bool witness_blocks(const DensityTriple& t, const WitnessReport& w);

} // namespace abp
