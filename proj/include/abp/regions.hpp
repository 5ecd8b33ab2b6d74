#pragma once

#include "abp/constructions.hpp"

#include <vector>

namespace abp {

struct Point {
    FieldElement u, v;
};

// Convex polygon, counter-clockwise.
using Polygon = std::vector<Point>;

// Each region as a union of convex pieces inside the unit square.
struct RegionGeometry {
    std::vector<Polygon> r0, r1, r2;
};

RegionGeometry region_polygons(const DensityTriple& t);

FieldElement polygon_area(const Polygon& p);
FieldElement region_area(const std::vector<Polygon>& pieces);

// Strict interior test.
bool point_in_polygon(const Polygon& p, const Point& x);
bool point_in_region(const std::vector<Polygon>& pieces, const Point& x);

} // namespace abp
