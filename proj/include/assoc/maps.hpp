#pragma once

#include <map>
#include <vector>

#include "assoc/polygon.hpp"

namespace assoc {

// A permutation of [n] in one-line notation: images[i-1] = sigma(i).
class Permutation {
public:
    explicit Permutation(std::vector<int> images);

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[i - 1]; }
    const std::vector<int>& images() const { return images_; }

    Permutation inverse() const;

    friend bool operator==(const Permutation& a, const Permutation& b) {
        return a.images_ == b.images_;
    }
    friend bool operator<(const Permutation& a, const Permutation& b) {
        return a.images_ < b.images_;
    }

private:
    std::vector<int> images_;
};

// All n! permutations in lexicographic one-line order.
std::vector<Permutation> enumerate_permutations(int n);

// True iff sigma lies in the hyperoctahedral group W_n inside S_{2n}:
// sigma(i) + sigma(2n+1-i) = 2n+1 for all i.
bool in_hyperoctahedral(const Permutation& sigma);

// All 2^n n! signed permutations of W_n as elements of S_{2n},
// lexicographically ordered.
std::vector<Permutation> enumerate_w(int n);

// The surjection from permutations to triangulations: walk sigma^{-1} left
// to right, deleting down letters from the 0->(n+1) path and inserting up
// letters between their largest predecessor and smallest successor; the
// union of all path edges minus the boundary is the triangulation.
Triangulation phi(const LabelledPolygon& p, const Permutation& sigma);

// Preimage of t under phi, ordered.
std::vector<Permutation> fiber(const LabelledPolygon& p, const Triangulation& t);

// All fibers at once, keyed by triangulation; they partition S_n.
std::map<Triangulation, std::vector<Permutation>> all_fibers(const LabelledPolygon& p);

// True iff p_left(i) = 1 or p_right(i) = 1 for every i, i.e. the vertex of
// the realization is shared with the permutahedron.
bool is_common_vertex(const LabelledPolygon& p, const Triangulation& t);

// phi restricted to W_n on the symmetric A_{2n-1} polygon; the image is
// centrally symmetric.
Triangulation phi_b(const LabelledPolygon& p, const Permutation& sigma);

}  // namespace assoc
