#include "abp/analysis.hpp"

#include "abp/error.hpp"
#include "abp/kernels.hpp"

#include <stdexcept>

namespace abp {

namespace {

FieldElement frac_of(const FieldElement& x) { return x - Rational(x.floor()); }

// Exact membership via {(m+1) x} < x.
bool member_exact(const FieldElement& x, std::int64_t m)
{
    if (m <= 0)
        return false;
    return frac_of(exact::make_rational(m + 1) * x) < x;
}

int strict(int s)
{
    if (s == 0)
        throw std::logic_error("region condition hit an exact equality");
    return s;
}

} // namespace

FractionalTriple fractional_triple(const DensityTriple& t, std::int64_t m)
{
    const Rational k = exact::make_rational(m + 1);
    FractionalTriple f{frac_of(k * t.alpha().value()), frac_of(k * t.beta().value()),
                       frac_of(k * t.gamma().value())};
    if (f.w != Rational(1) - frac_of(f.u + f.v))
        throw std::logic_error("w identity violated");
    return f;
}

std::string to_string(RegionLabel label)
{
    switch (label) {
    case RegionLabel::R0: return "R0";
    case RegionLabel::R1: return "R1";
    case RegionLabel::R2: return "R2";
    case RegionLabel::NotInAlmostGamma: return "none";
    }
    return "?";
}

ErrorAnalyzer::ErrorAnalyzer(const DensityTriple& t)
    : triple_(t), basis_({t.alpha().value(), t.beta().value()})
{
    const FieldElement& g = t.gamma().value();
    if (!(g > t.alpha().value() && g > t.beta().value()))
        throw Error(ErrorKind::GammaNotLargest, "gamma must exceed both alpha and beta");
}

ErrorAnalyzer::Signs ErrorAnalyzer::signs(std::int64_t m) const
{
    const std::int64_t fu = basis_.floor({m + 1, 0});
    const std::int64_t fv = basis_.floor({0, m + 1});
    Signs s{};
    s.u_gt_alpha = strict(basis_.sign({m, 0}, -fu)) > 0;
    s.v_gt_beta = strict(basis_.sign({0, m}, -fv)) > 0;
    s.u_gt_1ma = strict(basis_.sign({m + 2, 0}, -fu - 1)) > 0;
    s.v_gt_1mb = strict(basis_.sign({0, m + 2}, -fv - 1)) > 0;
    s.sum_vs_1 = strict(basis_.sign({m + 1, m + 1}, -fu - fv - 1));
    s.sum_vs_1pg = strict(basis_.sign({m + 2, m + 2}, -fu - fv - 2));
    return s;
}

ErrorAnalyzer::Signs ErrorAnalyzer::signs_exact(std::int64_t m) const
{
    const FieldElement& a = triple_.alpha().value();
    const FieldElement& b = triple_.beta().value();
    const FieldElement& g = triple_.gamma().value();
    FractionalTriple f = fractional_triple(triple_, m);
    const FieldElement sum = f.u + f.v;
    Signs s{};
    s.u_gt_alpha = strict((f.u - a).sign()) > 0;
    s.v_gt_beta = strict((f.v - b).sign()) > 0;
    s.u_gt_1ma = strict((f.u - (Rational(1) - a)).sign()) > 0;
    s.v_gt_1mb = strict((f.v - (Rational(1) - b)).sign()) > 0;
    s.sum_vs_1 = strict((sum - Rational(1)).sign());
    s.sum_vs_1pg = strict((sum - (g + Rational(1))).sign());
    return s;
}

RegionLabel ErrorAnalyzer::label(const Signs& s)
{
    bool member = s.u_gt_alpha && s.v_gt_beta && !(s.u_gt_1ma && s.v_gt_1mb);
    if (!member)
        return RegionLabel::NotInAlmostGamma;
    if (s.sum_vs_1 < 0)
        return RegionLabel::R0;
    if (s.sum_vs_1pg < 0)
        return RegionLabel::R1;
    return RegionLabel::R2;
}

int ErrorAnalyzer::e_beta(std::int64_t m) const
{
    Signs s = signs(m);
    return s.u_gt_1ma && s.v_gt_1mb ? 1 : 0;
}

int ErrorAnalyzer::e_gamma(std::int64_t m) const
{
    Signs s = signs(m);
    return s.sum_vs_1 > 0 && (!s.u_gt_1ma || !s.v_gt_1mb) ? 1 : 0;
}

bool ErrorAnalyzer::in_almost_gamma(std::int64_t m) const
{
    Signs s = signs(m);
    return s.u_gt_alpha && s.v_gt_beta && !(s.u_gt_1ma && s.v_gt_1mb);
}

RegionLabel ErrorAnalyzer::classify(std::int64_t m) const { return label(signs(m)); }

std::array<bool, 3> ErrorAnalyzer::region_conditions(std::int64_t m) const
{
    Signs s = signs(m);
    bool base = s.u_gt_alpha && s.v_gt_beta;
    return {base && s.sum_vs_1 < 0, base && s.sum_vs_1 > 0 && s.sum_vs_1pg < 0,
            base && (!s.u_gt_1ma || !s.v_gt_1mb) && s.sum_vs_1pg > 0};
}

int ErrorAnalyzer::e_beta_exact(std::int64_t m) const
{
    Signs s = signs_exact(m);
    return s.u_gt_1ma && s.v_gt_1mb ? 1 : 0;
}

int ErrorAnalyzer::e_gamma_exact(std::int64_t m) const
{
    Signs s = signs_exact(m);
    return s.sum_vs_1 > 0 && (!s.u_gt_1ma || !s.v_gt_1mb) ? 1 : 0;
}

RegionLabel ErrorAnalyzer::classify_exact(std::int64_t m) const { return label(signs_exact(m)); }

int e_beta(const DensityTriple& t, std::int64_t m) { return ErrorAnalyzer(t).e_beta(m); }
int e_gamma(const DensityTriple& t, std::int64_t m) { return ErrorAnalyzer(t).e_gamma(m); }
RegionLabel classify_region(const DensityTriple& t, std::int64_t m) { return ErrorAnalyzer(t).classify(m); }

PredictedDensities predicted_densities(const DensityTriple& t)
{
    const FieldElement& a = t.alpha().value();
    const FieldElement& b = t.beta().value();
    const FieldElement& g = t.gamma().value();
    const FieldElement two_g = Rational(2) * g;
    PredictedDensities p{g / FieldElement(g.field(), Rational(2)), Rational(1) - (a * a + b * b + g * g) / two_g,
                         (a * a + b * b) / two_g};
    if (!(p.p0 + p.p1 + p.p2 - Rational(1)).is_zero())
        throw std::logic_error("predicted densities do not sum to 1");
    return p;
}

DensityEstimate empirical_densities(const AlmostBeattyPartition& p, std::int64_t n_max, bool parallel)
{
    if (p.construction() != Construction::Thm3)
        throw std::invalid_argument("empirical densities are defined for the thm3 construction");
    auto stats = parallel ? kernels::error_stats_parallel(p, SequenceRole::AlmostGamma, n_max)
                          : kernels::error_stats_serial(p, SequenceRole::AlmostGamma, n_max);
    DensityEstimate d;
    d.n_max = n_max;
    for (std::size_t e = 0; e < 3; ++e) {
        d.counts[e] = e < stats.histogram.size() ? stats.histogram[e] : 0;
        d.empirical[e] = n_max > 0 ? static_cast<double>(d.counts[e]) / static_cast<double>(n_max) : 0.0;
    }
    d.predicted = predicted_densities(p.triple());
    return d;
}

std::optional<WitnessReport> find_theorem5_witness(const DensityTriple& t, std::int64_t limit, bool parallel)
{
    auto m = parallel ? kernels::witness_search_parallel(t, limit) : kernels::witness_search_serial(t, limit);
    if (!m)
        return std::nullopt;
    const FieldElement& a = t.alpha().value();
    WitnessReport w;
    w.m = *m;
    w.certificates = {member_exact(a, *m), member_exact(t.beta().value(), *m + 1),
                      member_exact(t.gamma().value(), *m + 1), member_exact(a, *m + 2)};
    if (!w.verified())
        throw std::logic_error("witness certificate failed exact verification");
    return w;
}

bool witness_blocks(const DensityTriple& t, const WitnessReport& w)
{
    const FieldElement& a = t.alpha().value();
    const std::int64_t x = w.m + 1;
    // x is a term of both B_beta and B_gamma; at most one almost sequence can
    // keep it in place, so the other one has to move its term to x - 1 or x + 1.
    if (!member_exact(t.beta().value(), x) || !member_exact(t.gamma().value(), x))
        return false;
    if (member_exact(a, x))
        return false;
    for (std::int64_t target : {x - 1, x + 1})
        if (!member_exact(a, target))
            return false;
    return true;
}

} // namespace abp
