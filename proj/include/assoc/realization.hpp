#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "assoc/maps.hpp"
#include "assoc/polygon.hpp"
#include "assoc/rational.hpp"

namespace assoc {

// Integer coordinate vector; length n (type A) or 2n (type B ambient).
using Point = std::vector<long long>;

// A proper nonempty subset K of [n], standing for the permutahedron facet
// inequality (n-k) sum_{i in K} x_i - k sum_{i not in K} x_i + nk(n-k)/2 >= 0.
struct HalfSpace {
    int n;
    std::vector<int> K;  // sorted

    int k() const { return static_cast<int>(K.size()); }

    friend bool operator==(const HalfSpace& a, const HalfSpace& b) {
        return a.n == b.n && a.K == b.K;
    }
    friend bool operator<(const HalfSpace& a, const HalfSpace& b) {
        return a.K < b.K;
    }
};

struct Hyperplane {
    enum class Kind { sum, type_b };
    Kind kind;
    int index;    // type_b only: i in [n]
    int ambient;  // coordinate count
};

// The vertex of the realization attached to a triangulation:
// x_i = weight(i) for down i, n+1-weight(i) for up i.
Point coordinates(const LabelledPolygon& p, const Triangulation& t);

// The permutahedron vertex (sigma(1),...,sigma(n)).
Point perm_point(const Permutation& sigma);

// The subset of [n] read counterclockwise along the arc from the smaller
// to the larger endpoint of d, dropping 0, n+1 and down endpoints.
// Computed both by the four-case formula and by the arc reading; the two
// must agree.
HalfSpace k_map(const LabelledPolygon& p, const Diagonal& d);

// (n-k) sum_K x - k sum_rest x + nk(n-k)/2; zero on the hyperplane,
// positive strictly inside.
long long halfspace_eval(const HalfSpace& h, const Point& x);
Rational halfspace_eval(const HalfSpace& h, const std::vector<Rational>& x);

long long hyperplane_eval(const Hyperplane& h, const Point& x);

struct HRepresentation {
    int n;
    long long sum_rhs;                  // sum x_i = n(n+1)/2
    std::vector<HalfSpace> half_spaces;  // one per diagonal, sorted by K
};

// Sum hyperplane plus the K image of all diagonals; K is injective and the
// list has (n+2)(n-1)/2 entries.
HRepresentation h_representation(const LabelledPolygon& p);

struct VertexReport {
    bool ok = true;
    std::vector<std::string> violations;
};

// Checks the vertex point of t against the H-representation: on the sum
// hyperplane, on H_{K(d)} exactly for d in t, strictly inside otherwise.
VertexReport verify_vertex(const LabelledPolygon& p, const Triangulation& t);

// The n type B hyperplanes x_i + x_{2n+1-i} = 2n+1 in ambient 2n.
std::vector<Hyperplane> type_b_hyperplanes(int n);

// True iff x lies on every type B hyperplane (ambient size must be even).
bool on_all_type_b(const Point& x);

// Vertices of the cyclohedron realization of b: the points of the
// centrally symmetric triangulations, in canonical triangulation order.
// All lie on every type B hyperplane; their number is binom(2n, n).
std::vector<Point> cyclohedron_vertices(const OrientationB& b);

struct Graph {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;  // sorted pairs i < j
};

// 1-skeleton on the canonical triangulation order: two vertices adjacent
// iff their points share exactly n-2 facet hyperplanes. Asserts that this
// coincides with the bistellar flip graph.
Graph skeleton(const LabelledPolygon& p);

// Type B skeleton on centrally symmetric triangulations: adjacency by
// centrally symmetric flips; asserts it matches sharing exactly n-1 of
// the n facet classes each vertex lies on.
Graph skeleton_b(const OrientationB& b);

// Loday's planar-binary-tree computation of the vertex point; only for the
// all-down orientation. Independent of mu/weight: counts leaves in the
// dual tree rooted at the edge {0, n+1}.
Point loday_coordinates(const LabelledPolygon& p, const Triangulation& t);

// Brute-force vertex enumeration of the H-representation by exact rational
// elimination over all (n-1)-subsets of facets. Test-scale oracle.
std::vector<Point> h_vertex_enumeration(const HRepresentation& h);

// Same for the type B polytope: sum + type B hyperplanes + n facets chosen
// among the admissible half spaces of the symmetric A polygon.
std::vector<Point> h_vertex_enumeration_b(const OrientationB& b);

// Number of half spaces of h whose hyperplane contains x.
int facet_incidence_count(const HRepresentation& h, const Point& x);

// Groups half-space indices by identical zero sets over the given points
// (two half spaces cut the same facet of the type B polytope when their
// hyperplanes agree on it). Classes sorted by smallest member.
std::vector<std::vector<int>> facet_classes(const HRepresentation& h,
                                            const std::vector<Point>& points);

}  // namespace assoc
