#include "assoc/analysis.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <thread>

namespace assoc {

long long common_vertex_count(const LabelledPolygon& p) {
    long long c = 0;
    for (const Triangulation& t : enumerate_triangulations(p))
        if (is_common_vertex(p, t)) ++c;
    return c;
}

namespace {

struct SubsetSumConstraint {
    unsigned mask;       // members of K as bits over coordinates 0..n-1
    long long min_sum;   // sum over K must be >= k(k+1)/2
};

// On the sum hyperplane the facet inequality reduces to
// sum_{i in K} x_i >= k(k+1)/2.
std::vector<SubsetSumConstraint> subset_constraints(const HRepresentation& rep) {
    std::vector<SubsetSumConstraint> out;
    for (const HalfSpace& hs : rep.half_spaces) {
        unsigned mask = 0;
        for (int i : hs.K) mask |= 1u << (i - 1);
        long long k = hs.k();
        out.push_back({mask, k * (k + 1) / 2});
    }
    return out;
}

bool satisfies_all(const std::vector<SubsetSumConstraint>& cons, const Point& x) {
    for (const SubsetSumConstraint& c : cons) {
        long long s = 0;
        unsigned m = c.mask;
        while (m) {
            int i = __builtin_ctz(m);
            s += x[i];
            m &= m - 1;
        }
        if (s < c.min_sum) return false;
    }
    return true;
}

struct Box {
    std::vector<long long> lo, hi;
};

Box vertex_box(const std::vector<Point>& verts) {
    Box box;
    box.lo = verts.front();
    box.hi = verts.front();
    for (const Point& v : verts)
        for (size_t i = 0; i < v.size(); ++i) {
            box.lo[i] = std::min(box.lo[i], v[i]);
            box.hi[i] = std::max(box.hi[i], v[i]);
        }
    return box;
}

// Depth-first scan of the box slice { sum = target }: coordinates dim-1
// choices deep, the last one forced. suffix bounds prune on partial sums.
long long scan_slice(const Box& box, const std::vector<SubsetSumConstraint>& cons, Point& x,
                     size_t depth, long long remaining,
                     const std::vector<long long>& suffix_lo,
                     const std::vector<long long>& suffix_hi) {
    const size_t dim = box.lo.size();
    if (depth == dim - 1) {
        if (remaining < box.lo[depth] || remaining > box.hi[depth]) return 0;
        x[depth] = remaining;
        return satisfies_all(cons, x) ? 1 : 0;
    }
    long long count = 0;
    for (long long v = box.lo[depth]; v <= box.hi[depth]; ++v) {
        long long rest = remaining - v;
        if (rest < suffix_lo[depth + 1] || rest > suffix_hi[depth + 1]) continue;
        x[depth] = v;
        count += scan_slice(box, cons, x, depth + 1, rest, suffix_lo, suffix_hi);
    }
    return count;
}

// Partitions the first coordinate across workers; counts are summed, so
// the result does not depend on scheduling.
long long parallel_slice_count(const Box& box, long long target,
                               const std::vector<SubsetSumConstraint>& cons) {
    const size_t dim = box.lo.size();
    std::vector<long long> suffix_lo(dim + 1, 0), suffix_hi(dim + 1, 0);
    for (size_t i = dim; i-- > 0;) {
        suffix_lo[i] = suffix_lo[i + 1] + box.lo[i];
        suffix_hi[i] = suffix_hi[i + 1] + box.hi[i];
    }
    std::vector<std::future<long long>> tasks;
    for (long long v0 = box.lo[0]; v0 <= box.hi[0]; ++v0) {
        tasks.push_back(std::async(std::launch::async, [&, v0]() {
            Point x(dim);
            x[0] = v0;
            long long rest = target - v0;
            if (rest < suffix_lo[1] || rest > suffix_hi[1]) return 0LL;
            return scan_slice(box, cons, x, 1, rest, suffix_lo, suffix_hi);
        }));
    }
    long long total = 0;
    for (auto& t : tasks) total += t.get();
    return total;
}

}  // namespace

long long integer_point_count(const LabelledPolygon& p, int cap) {
    const int n = p.rank();
    require(n <= cap, "integer_point_count: rank exceeds the enumeration cap");
    std::vector<Point> verts;
    for (const Triangulation& t : enumerate_triangulations(p))
        verts.push_back(coordinates(p, t));
    HRepresentation rep = h_representation(p);
    return parallel_slice_count(vertex_box(verts), rep.sum_rhs, subset_constraints(rep));
}

long long integer_point_count_b(const OrientationB& b, int cap) {
    const int n = b.rank();
    require(n <= cap, "integer_point_count_b: rank exceeds the enumeration cap");
    LabelledPolygon p(b.symmetric_a());
    HRepresentation rep = h_representation(p);
    std::vector<SubsetSumConstraint> cons = subset_constraints(rep);

    std::vector<Point> verts = cyclohedron_vertices(b);
    Box free_box;  // first n coordinates; the rest are mirrored
    free_box.lo.assign(verts.front().begin(), verts.front().begin() + n);
    free_box.hi = free_box.lo;
    for (const Point& v : verts)
        for (int i = 0; i < n; ++i) {
            free_box.lo[i] = std::min(free_box.lo[i], v[i]);
            free_box.hi[i] = std::max(free_box.hi[i], v[i]);
        }

    const int two_n = 2 * n;
    long long count = 0;
    Point x(two_n);
    std::function<long long(int)> rec = [&](int depth) -> long long {
        if (depth == n) return satisfies_all(cons, x) ? 1 : 0;
        long long c = 0;
        for (long long v = free_box.lo[depth]; v <= free_box.hi[depth]; ++v) {
            x[depth] = v;
            x[two_n - 1 - depth] = two_n + 1 - v;
            c += rec(depth + 1);
        }
        return c;
    };
    count = rec(0);
    check(count >= static_cast<long long>(verts.size()),
          "lattice point count below the vertex count");
    return count;
}

std::vector<Rational> barycenter(const std::vector<Point>& points) {
    require(!points.empty(), "barycenter of an empty set");
    const size_t dim = points.front().size();
    std::vector<long long> sums(dim, 0);
    for (const Point& p : points) {
        check(p.size() == dim, "barycenter: mixed dimensions");
        for (size_t i = 0; i < dim; ++i) sums[i] += p[i];
    }
    std::vector<Rational> out;
    out.reserve(dim);
    for (long long s : sums) out.emplace_back(s, static_cast<long long>(points.size()));
    return out;
}

std::vector<RealizationStats> stats_table(int n, int cap) {
    std::vector<RealizationStats> rows;
    for (const Orientation& o : all_orientations(n)) {
        LabelledPolygon p(o);
        RealizationStats row{o, 0, 0, std::nullopt, {}};
        std::vector<Point> verts;
        for (const Triangulation& t : enumerate_triangulations(p))
            verts.push_back(coordinates(p, t));
        row.vertex_count = static_cast<long long>(verts.size());
        row.common_vertices = common_vertex_count(p);
        if (n <= cap) row.integer_points = integer_point_count(p, cap);
        row.center = barycenter(verts);
        check(row.common_vertices <= row.vertex_count, "n_or exceeds the vertex count");
        if (row.integer_points)
            check(*row.integer_points >= row.vertex_count,
                  "I_or below the vertex count");
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace assoc
