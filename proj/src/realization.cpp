#include "assoc/realization.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace assoc {

Point coordinates(const LabelledPolygon& p, const Triangulation& t) {
    const int n = p.rank();
    Point x(n);
    long long sum = 0;
    for (int i = 1; i <= n; ++i) {
        long long w = weight(p, t, i);
        x[i - 1] = p.orientation().is_down(i) ? w : n + 1 - w;
        sum += x[i - 1];
    }
    check(sum == static_cast<long long>(n) * (n + 1) / 2,
          "vertex coordinates must sum to n(n+1)/2");
    return x;
}

Point perm_point(const Permutation& sigma) {
    Point x(sigma.size());
    for (int i = 1; i <= sigma.size(); ++i) x[i - 1] = sigma(i);
    return x;
}

namespace {

HalfSpace k_by_cases(const LabelledPolygon& p, const Diagonal& d) {
    const Orientation& o = p.orientation();
    const int n = p.rank();
    const int a = d.a, b = d.b;
    auto in_dbar = [&](int v) { return v == 0 || v == n + 1 || o.is_down(v); };
    std::vector<int> K;
    if (in_dbar(a) && in_dbar(b)) {
        for (int i = 1; i <= n; ++i)
            if (o.is_down(i) && a < i && i < b) K.push_back(i);
    } else if (in_dbar(a)) {  // b up
        for (int i = 1; i <= n; ++i)
            if ((o.is_down(i) && i > a) || (o.is_up(i) && i >= b)) K.push_back(i);
    } else if (in_dbar(b)) {  // a up
        for (int i = 1; i <= n; ++i)
            if ((o.is_down(i) && i < b) || (o.is_up(i) && i <= a)) K.push_back(i);
    } else {  // both up
        for (int i = 1; i <= n; ++i)
            if (o.is_down(i) || (o.is_up(i) && (i <= a || i >= b))) K.push_back(i);
    }
    return HalfSpace{n, K};
}

HalfSpace k_by_arc(const LabelledPolygon& p, const Diagonal& d) {
    const Orientation& o = p.orientation();
    const int n = p.rank();
    const int m = p.size();
    std::vector<int> K;
    auto keep = [&](int label) {
        if (label == 0 || label == n + 1) return false;
        if ((label == d.a || label == d.b) && o.is_down(label)) return false;
        return true;
    };
    int pos = p.position_of(d.a);
    if (keep(d.a)) K.push_back(d.a);
    while (p.label_at(pos) != d.b) {
        pos = (pos + 1) % m;
        if (keep(p.label_at(pos))) K.push_back(p.label_at(pos));
    }
    std::sort(K.begin(), K.end());
    return HalfSpace{n, K};
}

}  // namespace

HalfSpace k_map(const LabelledPolygon& p, const Diagonal& d) {
    make_diagonal(p, d.a, d.b);  // validates
    HalfSpace by_cases = k_by_cases(p, d);
    HalfSpace by_arc = k_by_arc(p, d);
    check(by_cases == by_arc, "K map: case formula and arc reading disagree");
    check(!by_cases.K.empty() && by_cases.k() < p.rank(),
          "K map must land in proper nonempty subsets");
    return by_cases;
}

long long halfspace_eval(const HalfSpace& h, const Point& x) {
    check(static_cast<int>(x.size()) == h.n, "halfspace_eval: dimension mismatch");
    const long long n = h.n, k = h.k();
    check((n * k * (n - k)) % 2 == 0, "nk(n-k) must be even");
    long long sum_k = 0, sum_all = 0;
    size_t idx = 0;
    for (int i = 1; i <= h.n; ++i) {
        sum_all += x[i - 1];
        if (idx < h.K.size() && h.K[idx] == i) {
            sum_k += x[i - 1];
            ++idx;
        }
    }
    return (n - k) * sum_k - k * (sum_all - sum_k) + n * k * (n - k) / 2;
}

Rational halfspace_eval(const HalfSpace& h, const std::vector<Rational>& x) {
    check(static_cast<int>(x.size()) == h.n, "halfspace_eval: dimension mismatch");
    const long long n = h.n, k = h.k();
    Rational sum_k(0), sum_all(0);
    size_t idx = 0;
    for (int i = 1; i <= h.n; ++i) {
        sum_all += x[i - 1];
        if (idx < h.K.size() && h.K[idx] == i) {
            sum_k += x[i - 1];
            ++idx;
        }
    }
    return Rational(n - k) * sum_k - Rational(k) * (sum_all - sum_k) +
           Rational(n * k * (n - k), 2);
}

long long hyperplane_eval(const Hyperplane& h, const Point& x) {
    check(static_cast<int>(x.size()) == h.ambient, "hyperplane_eval: dimension mismatch");
    if (h.kind == Hyperplane::Kind::sum) {
        long long s = 0;
        for (long long v : x) s += v;
        return s - static_cast<long long>(h.ambient) * (h.ambient + 1) / 2;
    }
    const int two_n = h.ambient;
    return x[h.index - 1] + x[two_n - h.index] - (two_n + 1);
}

HRepresentation h_representation(const LabelledPolygon& p) {
    const int n = p.rank();
    HRepresentation rep;
    rep.n = n;
    rep.sum_rhs = static_cast<long long>(n) * (n + 1) / 2;
    for (const Diagonal& d : all_diagonals(p)) rep.half_spaces.push_back(k_map(p, d));
    std::sort(rep.half_spaces.begin(), rep.half_spaces.end());
    check(std::adjacent_find(rep.half_spaces.begin(), rep.half_spaces.end()) ==
              rep.half_spaces.end(),
          "K map must be injective on diagonals");
    check(static_cast<int>(rep.half_spaces.size()) == (n + 2) * (n - 1) / 2,
          "H-representation must have (n+2)(n-1)/2 half spaces");
    return rep;
}

VertexReport verify_vertex(const LabelledPolygon& p, const Triangulation& t) {
    VertexReport report;
    auto flag = [&](std::string msg) {
        report.ok = false;
        report.violations.push_back(std::move(msg));
    };
    const int n = p.rank();
    Point x = coordinates(p, t);
    long long sum = 0;
    for (long long v : x) sum += v;
    if (sum != static_cast<long long>(n) * (n + 1) / 2)
        flag("point off the sum hyperplane");
    for (const Diagonal& d : all_diagonals(p)) {
        long long v = halfspace_eval(k_map(p, d), x);
        bool refined = t.contains(d);
        if (refined && v != 0)
            flag("refined diagonal {" + std::to_string(d.a) + "," + std::to_string(d.b) +
                 "} not on its hyperplane (value " + std::to_string(v) + ")");
        if (!refined && v <= 0)
            flag("non-refined diagonal {" + std::to_string(d.a) + "," + std::to_string(d.b) +
                 "} not strictly inside (value " + std::to_string(v) + ")");
    }
    return report;
}

std::vector<Hyperplane> type_b_hyperplanes(int n) {
    require(n >= 1, "rank must be >= 1");
    std::vector<Hyperplane> out;
    for (int i = 1; i <= n; ++i)
        out.push_back(Hyperplane{Hyperplane::Kind::type_b, i, 2 * n});
    return out;
}

bool on_all_type_b(const Point& x) {
    require(x.size() % 2 == 0, "type B points live in even ambient dimension");
    const int n = static_cast<int>(x.size()) / 2;
    for (const Hyperplane& h : type_b_hyperplanes(n))
        if (hyperplane_eval(h, x) != 0) return false;
    return true;
}

namespace {

long long binomial(int n, int k) {
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

std::vector<Point> cyclohedron_vertices(const OrientationB& b) {
    LabelledPolygon p(b.symmetric_a());
    std::vector<Point> out;
    for (const Triangulation& t : symmetric_triangulations(p)) {
        Point x = coordinates(p, t);
        check(on_all_type_b(x), "cyclohedron vertex off a type B hyperplane");
        out.push_back(std::move(x));
    }
    check(static_cast<long long>(out.size()) == binomial(2 * b.rank(), b.rank()),
          "cyclohedron must have binom(2n,n) vertices");
    return out;
}

namespace {

std::vector<std::set<int>> facet_sets(const LabelledPolygon& p,
                                      const std::vector<Triangulation>& ts,
                                      const HRepresentation& rep) {
    std::map<std::vector<int>, int> facet_index;
    for (int i = 0; i < static_cast<int>(rep.half_spaces.size()); ++i)
        facet_index[rep.half_spaces[i].K] = i;
    std::vector<std::set<int>> out;
    for (const Triangulation& t : ts) {
        std::set<int> s;
        for (const Diagonal& d : t.diagonals()) s.insert(facet_index.at(k_map(p, d).K));
        out.push_back(std::move(s));
    }
    return out;
}

int shared(const std::set<int>& a, const std::set<int>& b) {
    int c = 0;
    for (int v : a) c += b.count(v);
    return c;
}

}  // namespace

Graph skeleton(const LabelledPolygon& p) {
    const int n = p.rank();
    std::vector<Triangulation> ts = enumerate_triangulations(p);
    HRepresentation rep = h_representation(p);
    std::vector<std::set<int>> facets = facet_sets(p, ts, rep);

    Graph g;
    g.vertex_count = static_cast<int>(ts.size());
    for (int i = 0; i < g.vertex_count; ++i)
        for (int j = i + 1; j < g.vertex_count; ++j)
            if (shared(facets[i], facets[j]) == n - 2) g.edges.emplace_back(i, j);

    // must coincide with the bistellar flip graph
    std::map<Triangulation, int> index;
    for (int i = 0; i < g.vertex_count; ++i) index[ts[i]] = i;
    std::set<std::pair<int, int>> flip_edges;
    for (int i = 0; i < g.vertex_count; ++i) {
        for (const Diagonal& d : ts[i].diagonals()) {
            int j = index.at(bistellar_flip(p, ts[i], d).first);
            flip_edges.insert({std::min(i, j), std::max(i, j)});
        }
    }
    check(std::set<std::pair<int, int>>(g.edges.begin(), g.edges.end()) == flip_edges,
          "facet-sharing skeleton differs from the flip graph");
    return g;
}

Graph skeleton_b(const OrientationB& b) {
    const int n = b.rank();
    LabelledPolygon p(b.symmetric_a());
    std::vector<Triangulation> ts = symmetric_triangulations(p);
    std::map<Triangulation, int> index;
    for (int i = 0; i < static_cast<int>(ts.size()); ++i) index[ts[i]] = i;

    Graph g;
    g.vertex_count = static_cast<int>(ts.size());
    std::set<std::pair<int, int>> edges;
    for (int i = 0; i < g.vertex_count; ++i) {
        for (const Diagonal& d : ts[i].diagonals()) {
            int j = index.at(centrally_symmetric_flip(p, ts[i], d));
            edges.insert({std::min(i, j), std::max(i, j)});
        }
    }
    g.edges.assign(edges.begin(), edges.end());

    // cross-check with facet classes: each vertex on exactly n classes,
    // adjacency = sharing exactly n-1 of them
    HRepresentation rep = h_representation(p);
    std::vector<Point> points;
    points.reserve(ts.size());
    for (const Triangulation& t : ts) points.push_back(coordinates(p, t));
    std::vector<std::vector<int>> classes = facet_classes(rep, points);
    std::vector<std::set<int>> on_classes(ts.size());
    for (int c = 0; c < static_cast<int>(classes.size()); ++c) {
        const HalfSpace& rep_hs = rep.half_spaces[classes[c].front()];
        for (int i = 0; i < g.vertex_count; ++i)
            if (halfspace_eval(rep_hs, points[i]) == 0) on_classes[i].insert(c);
    }
    for (int i = 0; i < g.vertex_count; ++i)
        check(static_cast<int>(on_classes[i].size()) == n,
              "cyclohedron vertex must lie on exactly n facet classes");
    std::set<std::pair<int, int>> class_edges;
    for (int i = 0; i < g.vertex_count; ++i)
        for (int j = i + 1; j < g.vertex_count; ++j)
            if (shared(on_classes[i], on_classes[j]) == n - 1) class_edges.insert({i, j});
    check(edges == class_edges,
          "centrally symmetric flip graph differs from the facet-class skeleton");
    return g;
}

Point loday_coordinates(const LabelledPolygon& p, const Triangulation& t) {
    const int n = p.rank();
    require(p.orientation().up().empty(), "loday_coordinates needs the all-down orientation");

    const int top = n + 1;
    std::vector<std::vector<char>> adj(top + 1, std::vector<char>(top + 1, 0));
    for (int a = 0; a <= top; ++a)
        for (int b = a + 1; b <= top; ++b)
            if (p.boundary_edge(a, b)) adj[a][b] = adj[b][a] = 1;
    for (const Diagonal& d : t.diagonals()) adj[d.a][d.b] = adj[d.b][d.a] = 1;

    Point x(n, 0);
    // leaves(u,v): leaf count of the dual subtree below edge {u,v}; the
    // apex w of the triangle on the inner side is the unique label with
    // u < w < v and both {u,w}, {w,v} edges of T.
    std::function<long long(int, int)> leaves = [&](int u, int v) -> long long {
        if (v - u == 1) return 1;  // boundary edge, a leaf of the dual tree
        int apex = -1;
        for (int w = u + 1; w < v; ++w) {
            if (adj[u][w] && adj[w][v]) {
                check(apex == -1, "dual tree: apex must be unique");
                apex = w;
            }
        }
        check(apex != -1, "dual tree: no apex below an edge");
        long long left = leaves(u, apex);
        long long right = leaves(apex, v);
        check(x[apex - 1] == 0, "dual tree: label visited twice");
        x[apex - 1] = left * right;
        return left + right;
    };
    leaves(0, top);
    for (int i = 1; i <= n; ++i) check(x[i - 1] > 0, "dual tree: label never visited");
    return x;
}

namespace {

// Gauss-Jordan over exact rationals; returns the unique solution of
// A x = rhs or nullopt when the system is singular.
std::optional<std::vector<Rational>> solve_unique(std::vector<std::vector<Rational>> a,
                                                  std::vector<Rational> rhs) {
    const int m = static_cast<int>(a.size());
    for (int col = 0; col < m; ++col) {
        int pivot = -1;
        for (int row = col; row < m; ++row)
            if (!a[row][col].is_zero()) {
                pivot = row;
                break;
            }
        if (pivot == -1) return std::nullopt;
        std::swap(a[col], a[pivot]);
        std::swap(rhs[col], rhs[pivot]);
        Rational inv = Rational(1) / a[col][col];
        for (int j = col; j < m; ++j) a[col][j] *= inv;
        rhs[col] *= inv;
        for (int row = 0; row < m; ++row) {
            if (row == col || a[row][col].is_zero()) continue;
            Rational f = a[row][col];
            for (int j = col; j < m; ++j) a[row][j] -= f * a[col][j];
            rhs[row] -= f * rhs[col];
        }
    }
    return rhs;
}

std::vector<Rational> halfspace_row(const HalfSpace& h) {
    std::vector<Rational> row(h.n, Rational(-h.k()));
    for (int i : h.K) row[i - 1] = Rational(h.n - h.k());
    return row;
}

// rhs moving the constant to the right: (n-k) sum_K - k sum_rest = -nk(n-k)/2
Rational halfspace_rhs(const HalfSpace& h) {
    const long long n = h.n, k = h.k();
    return Rational(-n * k * (n - k), 2);
}

Point to_integer_point(const std::vector<Rational>& x) {
    Point p(x.size());
    for (size_t i = 0; i < x.size(); ++i) {
        check(x[i].is_integer(), "H-representation vertex is not integral");
        p[i] = x[i].num();
    }
    return p;
}

std::vector<Point> enumerate_vertices(int ambient,
                                      const std::vector<std::vector<Rational>>& fixed_rows,
                                      const std::vector<Rational>& fixed_rhs,
                                      const std::vector<HalfSpace>& half_spaces,
                                      int choose) {
    const int f = static_cast<int>(half_spaces.size());
    std::set<Point> found;
    std::vector<int> pick(choose);
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == choose) {
            std::vector<std::vector<Rational>> a = fixed_rows;
            std::vector<Rational> rhs = fixed_rhs;
            for (int idx : pick) {
                a.push_back(halfspace_row(half_spaces[idx]));
                rhs.push_back(halfspace_rhs(half_spaces[idx]));
            }
            check(static_cast<int>(a.size()) == ambient, "vertex enumeration: system shape");
            auto sol = solve_unique(std::move(a), std::move(rhs));
            if (!sol) return;
            bool feasible = true;
            for (const HalfSpace& hs : half_spaces) {
                if (halfspace_eval(hs, *sol) < Rational(0)) {
                    feasible = false;
                    break;
                }
            }
            if (feasible) found.insert(to_integer_point(*sol));
            return;
        }
        for (int i = start; i < f; ++i) {
            pick[depth] = i;
            rec(i + 1, depth + 1);
        }
    };
    rec(0, 0);
    return {found.begin(), found.end()};
}

}  // namespace

std::vector<Point> h_vertex_enumeration(const HRepresentation& h) {
    std::vector<std::vector<Rational>> fixed_rows{
        std::vector<Rational>(h.n, Rational(1))};
    std::vector<Rational> fixed_rhs{Rational(h.sum_rhs)};
    return enumerate_vertices(h.n, fixed_rows, fixed_rhs, h.half_spaces, h.n - 1);
}

std::vector<Point> h_vertex_enumeration_b(const OrientationB& b) {
    const int n = b.rank();
    const int ambient = 2 * n;
    LabelledPolygon p(b.symmetric_a());
    HRepresentation rep = h_representation(p);

    std::vector<std::vector<Rational>> fixed_rows;
    std::vector<Rational> fixed_rhs;
    fixed_rows.emplace_back(ambient, Rational(1));
    fixed_rhs.emplace_back(rep.sum_rhs);
    for (int i = 1; i <= n - 1; ++i) {
        std::vector<Rational> row(ambient, Rational(0));
        row[i - 1] = Rational(1);
        row[ambient - i] = Rational(1);
        fixed_rows.push_back(std::move(row));
        fixed_rhs.emplace_back(ambient + 1);
    }
    return enumerate_vertices(ambient, fixed_rows, fixed_rhs, rep.half_spaces, n);
}

int facet_incidence_count(const HRepresentation& h, const Point& x) {
    int c = 0;
    for (const HalfSpace& hs : h.half_spaces)
        if (halfspace_eval(hs, x) == 0) ++c;
    return c;
}

std::vector<std::vector<int>> facet_classes(const HRepresentation& h,
                                            const std::vector<Point>& points) {
    std::map<std::vector<char>, std::vector<int>> by_trace;
    for (int i = 0; i < static_cast<int>(h.half_spaces.size()); ++i) {
        std::vector<char> trace(points.size());
        for (size_t j = 0; j < points.size(); ++j)
            trace[j] = halfspace_eval(h.half_spaces[i], points[j]) == 0;
        by_trace[trace].push_back(i);
    }
    std::vector<std::vector<int>> classes;
    for (auto& [trace, members] : by_trace) classes.push_back(members);
    std::sort(classes.begin(), classes.end());
    return classes;
}

}  // namespace assoc
