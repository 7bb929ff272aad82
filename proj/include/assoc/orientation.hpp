#pragma once

#include <set>
#include <vector>

#include "assoc/common.hpp"

namespace assoc {

// An oriented Coxeter graph of type A_{n-1}, encoded by its set of up
// elements. Elements 1 and n are always down; up sets live in {2,...,n-1}.
class Orientation {
public:
    Orientation(int n, std::set<int> up);

    int rank() const { return n_; }
    const std::set<int>& up() const { return up_; }
    std::set<int> down() const;

    bool is_up(int i) const;
    bool is_down(int i) const { return !is_up(i); }

    // All edges reversed: up' = {2,...,n-1} \ up.
    Orientation reversed() const;

    // The graph rotated by 180 degrees (tau_k -> tau_{n-k}):
    // up' = { n+1-i : i in {2,...,n-1} \ up }.
    Orientation rotated180() const;

    // For even rank 2m: true iff i in Up <=> 2m+1-i not in Up for all
    // i in {2,...,2m-1}. Rejects odd rank.
    bool symmetric() const;

    friend bool operator==(const Orientation& a, const Orientation& b) {
        return a.n_ == b.n_ && a.up_ == b.up_;
    }
    friend bool operator<(const Orientation& a, const Orientation& b) {
        if (a.n_ != b.n_) return a.n_ < b.n_;
        return a.up_ < b.up_;
    }

private:
    int n_;
    std::set<int> up_;
};

// An oriented Coxeter graph of type B_n: vertices t, s_1, ..., s_{n-1};
// the 4-labelled edge is {t, s_1}. Edge {s_{i-1}, s_i} is "up" (i in
// up_core) when directed towards t's side, mirroring the type A convention.
class OrientationB {
public:
    OrientationB(int n, std::set<int> up_core, bool t_edge_up);

    int rank() const { return n_; }
    const std::set<int>& up_core() const { return up_core_; }
    bool t_edge_up() const { return t_edge_up_; }

    // The symmetric orientation of A_{2n-1} obtained by placing this
    // orientation on tau_n,...,tau_{2n-1} (t = tau_n, s_i = tau_{n+i})
    // and completing symmetrically with respect to tau_n.
    Orientation symmetric_a() const;

    friend bool operator==(const OrientationB& a, const OrientationB& b) {
        return a.n_ == b.n_ && a.up_core_ == b.up_core_ && a.t_edge_up_ == b.t_edge_up_;
    }
    friend bool operator<(const OrientationB& a, const OrientationB& b);

private:
    int n_;
    std::set<int> up_core_;
    bool t_edge_up_;
};

// The (n+2)-gon labelled from an orientation: counterclockwise from 0 the
// down elements in increasing order, then n+1, then the up elements in
// decreasing order. Labels are data attached to positions; adjacency and
// crossing are always decided on positions.
class LabelledPolygon {
public:
    explicit LabelledPolygon(Orientation o);

    const Orientation& orientation() const { return o_; }
    int rank() const { return o_.rank(); }
    int size() const { return static_cast<int>(ccw_.size()); }  // n+2

    const std::vector<int>& ccw_labels() const { return ccw_; }
    int label_at(int pos) const;
    int position_of(int label) const;

    // True when the two labels sit on adjacent positions.
    bool boundary_edge(int a, int b) const;

private:
    Orientation o_;
    std::vector<int> ccw_;
    std::vector<int> pos_;  // pos_[label] = position
};

// All 2^(n-2) orientations of fixed rank, ordered by up-set.
std::vector<Orientation> all_orientations(int n);

// All 2^(n-1) type B orientations of fixed rank.
std::vector<OrientationB> all_orientations_b(int n);

// Partition of all orientations of rank n under the transitive closure of
// {reversed, rotated180}. Classes ordered by their smallest member;
// members ordered by (|up|, up).
std::vector<std::vector<Orientation>> equivalence_classes(int n);

}  // namespace assoc
