#pragma once

#include <array>
#include <utility>
#include <vector>

#include "assoc/orientation.hpp"

namespace assoc {

// A diagonal of the labelled polygon, stored by its two labels a < b.
// Whether a label pair is a diagonal (and whether two diagonals cross)
// depends on positions, so validation needs the polygon.
struct Diagonal {
    int a;
    int b;

    friend bool operator==(const Diagonal& x, const Diagonal& y) {
        return x.a == y.a && x.b == y.b;
    }
    friend bool operator<(const Diagonal& x, const Diagonal& y) {
        return x.a != y.a ? x.a < y.a : x.b < y.b;
    }
};

Diagonal make_diagonal(const LabelledPolygon& p, int a, int b);

// True iff the two chords strictly interleave on the boundary circle.
bool crossing(const LabelledPolygon& p, const Diagonal& d1, const Diagonal& d2);

// n-1 pairwise non-crossing diagonals, kept sorted for canonical order.
class Triangulation {
public:
    Triangulation(const LabelledPolygon& p, std::vector<Diagonal> diagonals);

    const std::vector<Diagonal>& diagonals() const { return diags_; }
    bool contains(const Diagonal& d) const;

    friend bool operator==(const Triangulation& x, const Triangulation& y) {
        return x.diags_ == y.diags_;
    }
    friend bool operator<(const Triangulation& x, const Triangulation& y) {
        return x.diags_ < y.diags_;
    }

private:
    std::vector<Diagonal> diags_;
};

// All (n+2)(n-1)/2 diagonals, sorted.
std::vector<Diagonal> all_diagonals(const LabelledPolygon& p);

// All Catalan(n) triangulations in canonical (sorted) order.
std::vector<Triangulation> enumerate_triangulations(const LabelledPolygon& p);

// Boundary-edge count of the unique path from i to j that stays on labels
// <= i (for j < i) resp. >= i (for j >= i).
int mu(const LabelledPolygon& p, int i, int j);

// Max of mu_i over the lower/upper neighbours of i in T (boundary edges of
// the polygon count as edges of T).
int p_left(const LabelledPolygon& p, const Triangulation& t, int i);
int p_right(const LabelledPolygon& p, const Triangulation& t, int i);

// weight(i) = p_left(i) * p_right(i).
long long weight(const LabelledPolygon& p, const Triangulation& t, int i);

// The n triangles of T as sorted label triples.
std::vector<std::array<int, 3>> triangles(const LabelledPolygon& p, const Triangulation& t);

// Replaces d by the opposite diagonal of its surrounding quadrilateral.
// Returns the new triangulation and the new diagonal.
std::pair<Triangulation, Diagonal> bistellar_flip(const LabelledPolygon& p,
                                                  const Triangulation& t,
                                                  const Diagonal& d);

// Position-wise antipode (k -> k + m/2 mod m); polygon size must be even.
Diagonal antipodal(const LabelledPolygon& p, const Diagonal& d);

// True iff the antipodal map sends the diagonal set onto itself.
bool is_centrally_symmetric(const LabelledPolygon& p, const Triangulation& t);

// Flips d together with its antipodal image (a single flip when d is its
// own antipode); the result is again centrally symmetric.
Triangulation centrally_symmetric_flip(const LabelledPolygon& p,
                                       const Triangulation& t,
                                       const Diagonal& d);

// The centrally symmetric triangulations, in canonical order.
std::vector<Triangulation> symmetric_triangulations(const LabelledPolygon& p);

}  // namespace assoc
