#pragma once

#include "abp/analysis.hpp"
#include "abp/constructions.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

// Range scans over [1, N]. Every kernel has a serial reference version and an
// OpenMP version that splits the range into chunks; each chunk recomputes its
// starting state from count() and term(), and chunk results are merged in
// order, so both versions return identical results.
namespace abp::kernels {

// threads <= 0 means the OpenMP default.
void set_threads(int threads);
int threads();

struct CoverageResult {
    std::int64_t n_max = 0;
    std::int64_t first_bad = 0; // smallest integer not covered exactly once, 0 if none
    int multiplicity = 1;       // how often first_bad was covered

    bool ok() const { return first_bad == 0; }
    friend bool operator==(const CoverageResult&, const CoverageResult&) = default;
};

struct ErrorStats {
    SequenceRole role{};
    ErrorRange allowed{0, 0};
    std::int64_t n_max = 0;
    std::vector<std::int64_t> histogram; // histogram[e] = #{n : error e}, e >= 0
    std::int64_t negative = 0;           // errors below zero
    std::int64_t min_error = 0;
    std::int64_t max_error = 0;
    std::int64_t first_max_at = 0;       // first n with error == max_error
    std::int64_t first_bound_at = 0;     // first n with error == allowed.max, 0 if never
    std::int64_t first_violation = 0;    // first n with error outside allowed, 0 if none
    std::int64_t violation_error = 0;

    bool ok() const { return first_violation == 0; }
    friend bool operator==(const ErrorStats&, const ErrorStats&) = default;
};

struct MonotoneResult {
    SequenceRole role{};
    std::int64_t first_bad = 0; // first n with s(n) <= s(n - 1), 0 if none

    friend bool operator==(const MonotoneResult&, const MonotoneResult&) = default;
};

struct VerifyReport {
    std::int64_t n_max = 0;
    CoverageResult coverage;
    std::vector<MonotoneResult> monotone;
    std::vector<ErrorStats> errors;

    bool ok() const;
    friend bool operator==(const VerifyReport&, const VerifyReport&) = default;
};

CoverageResult coverage_serial(const AlmostBeattyPartition& p, std::int64_t n_max);
CoverageResult coverage_parallel(const AlmostBeattyPartition& p, std::int64_t n_max);

MonotoneResult monotone_serial(const Member& m, std::int64_t n_max);
MonotoneResult monotone_parallel(const Member& m, std::int64_t n_max);

ErrorStats error_stats_serial(const AlmostBeattyPartition& p, SequenceRole role, std::int64_t n_max);
ErrorStats error_stats_parallel(const AlmostBeattyPartition& p, SequenceRole role, std::int64_t n_max);

VerifyReport verify_serial(const AlmostBeattyPartition& p, std::int64_t n_max);
VerifyReport verify_parallel(const AlmostBeattyPartition& p, std::int64_t n_max);

struct RegionScan {
    std::int64_t n_max = 0;
    std::array<std::int64_t, 3> counts{}; // labels R0, R1, R2
    std::int64_t first_mismatch = 0;      // first n whose label disagrees with its error

    friend bool operator==(const RegionScan&, const RegionScan&) = default;
};

// Labels c~(n) for n <= n_max on a partition from build_theorem3.
RegionScan region_scan_serial(const AlmostBeattyPartition& p, std::int64_t n_max);
RegionScan region_scan_parallel(const AlmostBeattyPartition& p, std::int64_t n_max);

// Smallest m <= limit with m, m+2 in B_alpha and m+1 in B_beta and B_gamma.
std::optional<std::int64_t> witness_search_serial(const DensityTriple& t, std::int64_t limit);
std::optional<std::int64_t> witness_search_parallel(const DensityTriple& t, std::int64_t limit);

} // namespace abp::kernels
