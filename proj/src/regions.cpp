#include "abp/regions.hpp"

namespace abp {

namespace {

// a*u + b*v + c >= 0
struct HalfPlane {
    FieldElement a, b, c;

    FieldElement eval(const Point& p) const { return a * p.u + b * p.v + c; }
};

Polygon clip(const Polygon& poly, const HalfPlane& h)
{
    Polygon out;
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point& p = poly[i];
        const Point& q = poly[(i + 1) % n];
        FieldElement lp = h.eval(p), lq = h.eval(q);
        int sp = lp.sign(), sq = lq.sign();
        if (sp >= 0)
            out.push_back(p);
        if ((sp > 0 && sq < 0) || (sp < 0 && sq > 0)) {
            FieldElement t = lp / (lp - lq);
            out.push_back({p.u + t * (q.u - p.u), p.v + t * (q.v - p.v)});
        }
    }
    // Drop repeated vertices left by edges lying on the clipping line.
    Polygon dedup;
    for (const auto& p : out)
        if (dedup.empty() || !(dedup.back().u == p.u && dedup.back().v == p.v))
            dedup.push_back(p);
    while (dedup.size() > 1 && dedup.front().u == dedup.back().u && dedup.front().v == dedup.back().v)
        dedup.pop_back();
    return dedup;
}

Polygon clip_all(Polygon p, const std::vector<HalfPlane>& hs)
{
    for (const auto& h : hs) {
        p = clip(p, h);
        if (p.size() < 3)
            return {};
    }
    return p;
}

FieldElement cross(const Point& o, const Point& a, const Point& b)
{
    return (a.u - o.u) * (b.v - o.v) - (a.v - o.v) * (b.u - o.u);
}

} // namespace

RegionGeometry region_polygons(const DensityTriple& t)
{
    const FieldElement& alpha = t.alpha().value();
    const FieldElement& beta = t.beta().value();
    const FieldElement& gamma = t.gamma().value();
    const auto& f = alpha.field();
    const FieldElement zero(f, Rational(0)), one(f, Rational(1)), minus_one(f, Rational(-1));

    Polygon square{{zero, zero}, {one, zero}, {one, one}, {zero, one}};

    const HalfPlane u_gt_alpha{one, zero, -alpha};
    const HalfPlane v_gt_beta{zero, one, -beta};
    const HalfPlane sum_lt_1{minus_one, minus_one, one};
    const HalfPlane sum_gt_1{one, one, minus_one};
    const HalfPlane sum_lt_1pg{minus_one, minus_one, one + gamma};
    const HalfPlane sum_gt_1pg{one, one, -(one + gamma)};
    const HalfPlane u_lt_1ma{minus_one, zero, one - alpha};
    const HalfPlane u_gt_1ma{one, zero, alpha - one};
    const HalfPlane v_lt_1mb{zero, minus_one, one - beta};

    RegionGeometry g;
    auto add = [](std::vector<Polygon>& dst, Polygon p) {
        if (!p.empty())
            dst.push_back(std::move(p));
    };
    add(g.r0, clip_all(square, {u_gt_alpha, v_gt_beta, sum_lt_1}));
    add(g.r1, clip_all(square, {u_gt_alpha, v_gt_beta, sum_gt_1, sum_lt_1pg}));
    add(g.r2, clip_all(square, {u_gt_alpha, v_gt_beta, sum_gt_1pg, u_lt_1ma}));
    add(g.r2, clip_all(square, {u_gt_alpha, v_gt_beta, sum_gt_1pg, u_gt_1ma, v_lt_1mb}));
    return g;
}

FieldElement polygon_area(const Polygon& p)
{
    if (p.size() < 3)
        return FieldElement::rational(0);
    FieldElement twice(p[0].u.field(), Rational(0));
    for (std::size_t i = 0; i < p.size(); ++i) {
        const Point& a = p[i];
        const Point& b = p[(i + 1) % p.size()];
        twice += a.u * b.v - b.u * a.v;
    }
    return Rational(1, 2) * twice;
}

FieldElement region_area(const std::vector<Polygon>& pieces)
{
    FieldElement total = FieldElement::rational(0);
    for (const auto& p : pieces)
        total += polygon_area(p);
    return total;
}

bool point_in_polygon(const Polygon& p, const Point& x)
{
    if (p.size() < 3)
        return false;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (cross(p[i], p[(i + 1) % p.size()], x).sign() <= 0)
            return false;
    return true;
}

bool point_in_region(const std::vector<Polygon>& pieces, const Point& x)
{
    for (const auto& p : pieces)
        if (point_in_polygon(p, x))
            return true;
    return false;
}

} // namespace abp
