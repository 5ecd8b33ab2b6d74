#include "abp/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <exception>
#include <stdexcept>

namespace abp::kernels {

namespace {

int g_threads = 0;

struct Chunk {
    std::int64_t lo, hi;
};

std::vector<Chunk> split(std::int64_t first, std::int64_t last, int threads)
{
    std::vector<Chunk> out;
    if (first > last)
        return out;
    const std::int64_t len = last - first + 1;
    const std::int64_t pieces = std::clamp<std::int64_t>(len / 4096, 1, std::int64_t{threads} * 8);
    const std::int64_t step = (len + pieces - 1) / pieces;
    for (std::int64_t lo = first; lo <= last; lo += step)
        out.push_back({lo, std::min(last, lo + step - 1)});
    return out;
}

// Runs fn on every chunk in parallel and returns the results in chunk order.
// The first exception thrown by any chunk is rethrown here.
template <class R, class Fn>
std::vector<R> run_chunks(std::int64_t first, std::int64_t last, Fn fn)
{
    const int nt = threads();
    const std::vector<Chunk> chunks = split(first, last, nt);
    std::vector<R> results(chunks.size());
    std::vector<std::exception_ptr> errors(chunks.size());
    const auto count = static_cast<std::int64_t>(chunks.size());
#pragma omp parallel for schedule(dynamic) num_threads(nt)
    for (std::int64_t i = 0; i < count; ++i) {
        try {
            results[static_cast<std::size_t>(i)] = fn(chunks[static_cast<std::size_t>(i)]);
        } catch (...) {
            errors[static_cast<std::size_t>(i)] = std::current_exception();
        }
    }
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    return results;
}

// ---- coverage

CoverageResult coverage_chunk(const AlmostBeattyPartition& p, Chunk c)
{
    std::vector<std::uint8_t> mult(static_cast<std::size_t>(c.hi - c.lo + 1), 0);
    for (const auto& m : p.members())
        m.sequence->for_each_value(c.lo, c.hi, [&](std::int64_t, std::int64_t v) {
            auto& slot = mult[static_cast<std::size_t>(v - c.lo)];
            if (slot < 255)
                ++slot;
        });
    CoverageResult r;
    for (std::size_t i = 0; i < mult.size(); ++i)
        if (mult[i] != 1) {
            r.first_bad = c.lo + static_cast<std::int64_t>(i);
            r.multiplicity = mult[i];
            break;
        }
    return r;
}

CoverageResult merge_coverage(const std::vector<CoverageResult>& parts, std::int64_t n_max)
{
    CoverageResult r;
    r.n_max = n_max;
    for (const auto& part : parts)
        if (!part.ok()) {
            r.first_bad = part.first_bad;
            r.multiplicity = part.multiplicity;
            break;
        }
    return r;
}

// ---- monotonicity

MonotoneResult monotone_chunk(const Member& m, Chunk c)
{
    MonotoneResult r{m.role, 0};
    std::int64_t prev = m.sequence->term(c.lo - 1);
    m.sequence->for_each_index(c.lo, c.hi, [&](std::int64_t n, std::int64_t v) {
        if (r.first_bad == 0 && v <= prev)
            r.first_bad = n;
        prev = v;
    });
    return r;
}

MonotoneResult merge_monotone(const std::vector<MonotoneResult>& parts, SequenceRole role)
{
    for (const auto& part : parts)
        if (part.first_bad != 0)
            return part;
    return {role, 0};
}

// ---- perturbation errors

ErrorStats error_chunk(const Member& m, ErrorRange allowed, Chunk c)
{
    ErrorStats s;
    s.role = m.role;
    s.allowed = allowed;
    bool first = true;
    m.sequence->for_each_index(c.lo, c.hi, [&](std::int64_t n, std::int64_t v) {
        const std::int64_t e = m.reference->term(n) - v;
        if (e < 0) {
            ++s.negative;
        } else {
            if (static_cast<std::size_t>(e) >= s.histogram.size())
                s.histogram.resize(static_cast<std::size_t>(e) + 1, 0);
            ++s.histogram[static_cast<std::size_t>(e)];
        }
        if (first || e < s.min_error)
            s.min_error = e;
        if (first || e > s.max_error) {
            s.max_error = e;
            s.first_max_at = n;
        }
        first = false;
        if (s.first_bound_at == 0 && e == allowed.max)
            s.first_bound_at = n;
        if (s.first_violation == 0 && (e < allowed.min || e > allowed.max)) {
            s.first_violation = n;
            s.violation_error = e;
        }
    });
    return s;
}

ErrorStats merge_errors(const std::vector<ErrorStats>& parts, const Member& m, ErrorRange allowed,
                        std::int64_t n_max)
{
    ErrorStats s;
    s.role = m.role;
    s.allowed = allowed;
    s.n_max = n_max;
    bool first = true;
    for (const auto& part : parts) {
        if (part.histogram.empty() && part.negative == 0)
            continue;
        if (part.histogram.size() > s.histogram.size())
            s.histogram.resize(part.histogram.size(), 0);
        for (std::size_t e = 0; e < part.histogram.size(); ++e)
            s.histogram[e] += part.histogram[e];
        s.negative += part.negative;
        if (first || part.min_error < s.min_error)
            s.min_error = part.min_error;
        if (first || part.max_error > s.max_error) {
            s.max_error = part.max_error;
            s.first_max_at = part.first_max_at;
        }
        first = false;
        if (s.first_bound_at == 0)
            s.first_bound_at = part.first_bound_at;
        if (s.first_violation == 0 && part.first_violation != 0) {
            s.first_violation = part.first_violation;
            s.violation_error = part.violation_error;
        }
    }
    return s;
}

const Member& almost_member(const AlmostBeattyPartition& p, SequenceRole role, ErrorRange& allowed)
{
    allowed = p.error_range(role);
    return p.member(role);
}

// ---- regions

RegionScan region_chunk(const Member& gamma, const ErrorAnalyzer& an, Chunk c)
{
    RegionScan r;
    gamma.sequence->for_each_index(c.lo, c.hi, [&](std::int64_t n, std::int64_t m) {
        const std::int64_t e = gamma.reference->term(n) - m;
        RegionLabel label = an.classify(m);
        if (label != RegionLabel::NotInAlmostGamma)
            ++r.counts[static_cast<std::size_t>(label)];
        bool agrees = e >= 0 && e <= 2 && label == static_cast<RegionLabel>(e);
        if (!agrees && r.first_mismatch == 0)
            r.first_mismatch = n;
    });
    return r;
}

RegionScan merge_regions(const std::vector<RegionScan>& parts, std::int64_t n_max)
{
    RegionScan r;
    r.n_max = n_max;
    for (const auto& part : parts) {
        for (std::size_t i = 0; i < 3; ++i)
            r.counts[i] += part.counts[i];
        if (r.first_mismatch == 0)
            r.first_mismatch = part.first_mismatch;
    }
    return r;
}

const Member& thm3_gamma(const AlmostBeattyPartition& p)
{
    if (p.construction() != Construction::Thm3)
        throw std::invalid_argument("region scan needs the thm3 construction");
    return p.member(SequenceRole::AlmostGamma);
}

// ---- witness

struct WitnessSeqs {
    BeattySequence a, b, g;
    explicit WitnessSeqs(const DensityTriple& t) : a(t.alpha()), b(t.beta()), g(t.gamma()) {}

    bool matches(std::int64_t m) const
    {
        return a.contains(m) && a.contains(m + 2) && b.contains(m + 1) && g.contains(m + 1);
    }
};

std::optional<std::int64_t> witness_chunk(const WitnessSeqs& s, Chunk c)
{
    // Walk the terms of B_alpha rather than every integer.
    for (std::int64_t n = s.a.count(c.lo - 1) + 1;; ++n) {
        std::int64_t m = s.a.term(n);
        if (m > c.hi)
            break;
        if (s.matches(m))
            return m;
    }
    return std::nullopt;
}

} // namespace

void set_threads(int threads) { g_threads = threads; }

int threads() { return g_threads > 0 ? g_threads : omp_get_max_threads(); }

bool VerifyReport::ok() const
{
    if (!coverage.ok())
        return false;
    for (const auto& m : monotone)
        if (m.first_bad != 0)
            return false;
    for (const auto& e : errors)
        if (!e.ok())
            return false;
    return true;
}

CoverageResult coverage_serial(const AlmostBeattyPartition& p, std::int64_t n_max)
{
    if (n_max < 1)
        return {n_max, 0, 1};
    return merge_coverage({coverage_chunk(p, {1, n_max})}, n_max);
}

CoverageResult coverage_parallel(const AlmostBeattyPartition& p, std::int64_t n_max)
{
    auto parts = run_chunks<CoverageResult>(1, n_max, [&](Chunk c) { return coverage_chunk(p, c); });
    return merge_coverage(parts, n_max);
}

MonotoneResult monotone_serial(const Member& m, std::int64_t n_max)
{
    if (n_max < 1)
        return {m.role, 0};
    return monotone_chunk(m, {1, n_max});
}

MonotoneResult monotone_parallel(const Member& m, std::int64_t n_max)
{
    auto parts = run_chunks<MonotoneResult>(1, n_max, [&](Chunk c) { return monotone_chunk(m, c); });
    return merge_monotone(parts, m.role);
}

ErrorStats error_stats_serial(const AlmostBeattyPartition& p, SequenceRole role, std::int64_t n_max)
{
    ErrorRange allowed{};
    const Member& m = almost_member(p, role, allowed);
    std::vector<ErrorStats> parts;
    if (n_max >= 1)
        parts.push_back(error_chunk(m, allowed, {1, n_max}));
    return merge_errors(parts, m, allowed, n_max);
}

ErrorStats error_stats_parallel(const AlmostBeattyPartition& p, SequenceRole role, std::int64_t n_max)
{
    ErrorRange allowed{};
    const Member& m = almost_member(p, role, allowed);
    auto parts = run_chunks<ErrorStats>(1, n_max, [&](Chunk c) { return error_chunk(m, allowed, c); });
    return merge_errors(parts, m, allowed, n_max);
}

VerifyReport verify_serial(const AlmostBeattyPartition& p, std::int64_t n_max)
{
    VerifyReport r;
    r.n_max = n_max;
    r.coverage = coverage_serial(p, n_max);
    for (const auto& m : p.members())
        r.monotone.push_back(monotone_serial(m, n_max));
    for (SequenceRole role : p.almost_roles())
        r.errors.push_back(error_stats_serial(p, role, n_max));
    return r;
}

VerifyReport verify_parallel(const AlmostBeattyPartition& p, std::int64_t n_max)
{
    VerifyReport r;
    r.n_max = n_max;
    r.coverage = coverage_parallel(p, n_max);
    for (const auto& m : p.members())
        r.monotone.push_back(monotone_parallel(m, n_max));
    for (SequenceRole role : p.almost_roles())
        r.errors.push_back(error_stats_parallel(p, role, n_max));
    return r;
}

RegionScan region_scan_serial(const AlmostBeattyPartition& p, std::int64_t n_max)
{
    const Member& g = thm3_gamma(p);
    ErrorAnalyzer an(p.triple());
    std::vector<RegionScan> parts;
    if (n_max >= 1)
        parts.push_back(region_chunk(g, an, {1, n_max}));
    return merge_regions(parts, n_max);
}

RegionScan region_scan_parallel(const AlmostBeattyPartition& p, std::int64_t n_max)
{
    const Member& g = thm3_gamma(p);
    ErrorAnalyzer an(p.triple());
    auto parts = run_chunks<RegionScan>(1, n_max, [&](Chunk c) { return region_chunk(g, an, c); });
    return merge_regions(parts, n_max);
}

std::optional<std::int64_t> witness_search_serial(const DensityTriple& t, std::int64_t limit)
{
    if (limit < 1)
        return std::nullopt;
    WitnessSeqs s(t);
    return witness_chunk(s, {1, limit});
}

std::optional<std::int64_t> witness_search_parallel(const DensityTriple& t, std::int64_t limit)
{
    WitnessSeqs s(t);
    auto parts = run_chunks<std::optional<std::int64_t>>(1, limit, [&](Chunk c) { return witness_chunk(s, c); });
    for (const auto& part : parts)
        if (part)
            return part;
    return std::nullopt;
}

} // namespace abp::kernels
