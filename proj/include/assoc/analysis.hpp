#pragma once

#include <optional>
#include <vector>

#include "assoc/realization.hpp"

namespace assoc {

inline constexpr int kDefaultScanCap = 6;

// Number of triangulations whose vertex is shared with the permutahedron.
long long common_vertex_count(const LabelledPolygon& p);

// Number of integer points on the sum hyperplane satisfying every
// admissible half-space inequality, counted by scanning the bounding box
// of the vertex set. Refuses n > cap to bound runtime.
long long integer_point_count(const LabelledPolygon& p, int cap = kDefaultScanCap);

// Same for the cyclohedron: integer points of the type B slice, scanning
// the n free coordinates (the rest are forced by x_i + x_{2n+1-i} = 2n+1).
long long integer_point_count_b(const OrientationB& b, int cap = kDefaultScanCap);

// Coordinate-wise average in exact rationals.
std::vector<Rational> barycenter(const std::vector<Point>& points);

struct RealizationStats {
    Orientation orientation;
    long long vertex_count = 0;
    long long common_vertices = 0;                // n_or
    std::optional<long long> integer_points;      // I_or, when n <= cap
    std::vector<Rational> center;
};

// One row per orientation of rank n, in canonical up-set order.
std::vector<RealizationStats> stats_table(int n, int cap = kDefaultScanCap);

}  // namespace assoc
