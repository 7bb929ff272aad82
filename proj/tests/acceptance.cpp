// Acceptance suite: each criterion prints one pass/fail line; the binary
// exits nonzero if any criterion fails. All tolerances are exact equalities
// of integers or rationals.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include "assoc/analysis.hpp"
#include "assoc/io.hpp"

using namespace assoc;

namespace {

struct Failure : std::runtime_error {
    explicit Failure(const std::string& m) : std::runtime_error(m) {}
};

void expect(bool cond, const std::string& msg) {
    if (!cond) throw Failure(msg);
}

std::string show(const Point& x) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < x.size(); ++i) os << (i ? "," : "") << x[i];
    os << ")";
    return os.str();
}

Triangulation make_t(const LabelledPolygon& p, std::vector<std::pair<int, int>> pairs) {
    std::vector<Diagonal> ds;
    for (auto [a, b] : pairs) ds.push_back(make_diagonal(p, a, b));
    return Triangulation(p, std::move(ds));
}

// ---- criterion 1: the two hexagon realizations ---------------------------

void criterion_fig2() {
    LabelledPolygon left{Orientation(4, {2})};
    expect(coordinates(left, make_t(left, {{0, 3}, {2, 3}, {2, 4}})) == Point{1, 2, 3, 4},
           "left hexagon T1 must map to (1,2,3,4)");
    expect(coordinates(left, make_t(left, {{1, 2}, {1, 5}, {3, 5}})) == Point{4, 3, 2, 1},
           "left hexagon T3 must map to (4,3,2,1)");
    LabelledPolygon right{Orientation(4, {2, 3})};
    expect(coordinates(right, make_t(right, {{0, 4}, {2, 4}, {3, 4}})) == Point{1, 2, 3, 4},
           "right hexagon T2 must map to (1,2,3,4)");
    expect(coordinates(right, make_t(right, {{1, 2}, {1, 3}, {1, 5}})) == Point{4, 3, 2, 1},
           "right hexagon T4 must map to (4,3,2,1)");
}

// ---- criterion 2: the B_3 vertex table -----------------------------------

void criterion_b3_table() {
    auto start = std::chrono::steady_clock::now();
    const std::set<Point> expected{
        {3, 5, 6, 1, 2, 4},  {3, 6, 5, 2, 1, 4},  {2, 4, 6, 1, 3, 5},  {1, 6, 3, 4, 1, 6},
        {1, 4, 5, 2, 3, 6},  {1, 6, -1, 8, 1, 6}, {1, 3, 5, 2, 4, 6},  {1, 2, 3, 4, 5, 6},
        {1, 2, 4, 3, 5, 6},  {6, -3, 3, 4, 10, 1}, {6, -3, 4, 3, 10, 1}, {2, 3, 6, 1, 4, 5},
        {6, -1, 6, 1, 8, 1}, {6, 5, -5, 12, 2, 1}, {5, 6, -5, 12, 1, 2}, {6, 3, 6, 1, 4, 1},
        {6, 5, 4, 3, 2, 1},  {5, 6, 4, 3, 1, 2},  {4, 6, 5, 2, 1, 3},  {4, 5, 6, 1, 2, 3}};
    std::vector<Point> got = cyclohedron_vertices(OrientationB(3, {}, false));
    expect(got.size() == 20, "B_3 must have 20 vertices");
    std::set<Point> got_set(got.begin(), got.end());
    expect(got_set.size() == 20, "B_3 vertices must be distinct");
    for (const Point& x : expected)
        expect(got_set.count(x) == 1, "missing B_3 vertex " + show(x));
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    expect(secs < 1.0, "B_3 table must be produced in under a second");
}

// ---- criterion 3: the per-orientation invariant tables --------------------

void criterion_tables() {
    using Row = std::pair<long long, long long>;  // (n_common, lattice points)
    std::map<int, std::map<std::set<int>, Row>> expected;
    expected[3] = {{{}, {4, 8}}, {{2}, {4, 8}}};
    expected[4] = {{{}, {8, 55}}, {{2, 3}, {8, 55}}, {{2}, {9, 60}}, {{3}, {9, 60}}};
    expected[5] = {{{}, {16, 567}},      {{2, 3, 4}, {16, 567}}, {{2}, {19, 672}},
                   {{3, 4}, {19, 672}},  {{4}, {19, 672}},       {{2, 3}, {19, 672}},
                   {{2, 4}, {20, 742}},  {{3}, {20, 742}}};
    expected[6] = {{{}, {32, 7958}},        {{2, 3, 4, 5}, {32, 7958}},
                   {{2}, {39, 10116}},      {{3, 4, 5}, {39, 10116}},
                   {{5}, {39, 10116}},      {{2, 3, 4}, {39, 10116}},
                   {{2, 3}, {42, 11155}},   {{4, 5}, {42, 11155}},
                   {{3}, {42, 12294}},      {{2, 4, 5}, {42, 12294}},
                   {{4}, {42, 12294}},      {{2, 3, 5}, {42, 12294}},
                   {{2, 5}, {44, 12310}},   {{3, 4}, {44, 12310}},
                   {{2, 4}, {45, 13795}},   {{3, 5}, {45, 13795}}};
    for (auto& [n, rows] : expected) {
        std::vector<RealizationStats> got = stats_table(n);
        expect(got.size() == rows.size(), "table row count for n=" + std::to_string(n));
        for (const RealizationStats& row : got) {
            auto it = rows.find(row.orientation.up());
            expect(it != rows.end(), "unexpected orientation row");
            expect(row.common_vertices == it->second.first,
                   "common-vertex count mismatch at n=" + std::to_string(n));
            expect(row.integer_points.has_value() && *row.integer_points == it->second.second,
                   "lattice point count mismatch at n=" + std::to_string(n));
        }
    }
}

// ---- criterion 4: vertex incidence sweep ----------------------------------

void criterion_incidence() {
    for (int n = 2; n <= 6; ++n) {
        for (const Orientation& o : all_orientations(n)) {
            LabelledPolygon p(o);
            for (const Triangulation& t : enumerate_triangulations(p)) {
                VertexReport r = verify_vertex(p, t);
                expect(r.ok, "vertex incidence violation at n=" + std::to_string(n) +
                                 (r.violations.empty() ? "" : ": " + r.violations.front()));
            }
        }
    }
}

// ---- criterion 5: flip lemmas ---------------------------------------------

void criterion_flip_lemmas() {
    for (int n = 2; n <= 6; ++n) {
        for (const Orientation& o : all_orientations(n)) {
            LabelledPolygon p(o);
            auto ts = enumerate_triangulations(p);
            for (const Triangulation& t : ts) {
                Point x = coordinates(p, t);
                long long sum_x = 0;
                for (long long v : x) sum_x += v;
                for (const Diagonal& d : t.diagonals()) {
                    HalfSpace k = k_map(p, d);
                    long long dk = k.k();
                    long long partial = 0;
                    for (int i : k.K) partial += x[i - 1];
                    expect(partial == dk * (dk + 1) / 2,
                           "refined diagonal must meet the d(d+1)/2 partial sum");

                    auto [t2, d2] = bistellar_flip(p, t, d);
                    Point y = coordinates(p, t2);
                    long long sum_y = 0, partial_after = 0;
                    for (long long v : y) sum_y += v;
                    for (int i : k.K) partial_after += y[i - 1];
                    expect(sum_x == sum_y, "flip must preserve the coordinate sum");
                    expect(partial_after > partial,
                           "flipping a diagonal out must strictly raise its partial sum");

                    // only x_b, x_c of the quadrilateral a<b<c<d change,
                    // with x_b + x_c preserved
                    std::set<int> quad{d.a, d.b, d2.a, d2.b};
                    std::vector<int> q(quad.begin(), quad.end());
                    expect(q.size() == 4, "flip quadrilateral must have four labels");
                    long long bc_before = 0, bc_after = 0;
                    for (int i = 1; i <= n; ++i) {
                        if (i == q[1] || i == q[2]) {
                            bc_before += x[i - 1];
                            bc_after += y[i - 1];
                        } else {
                            expect(x[i - 1] == y[i - 1],
                                   "flip must only move the middle quadrilateral labels");
                        }
                    }
                    expect(bc_before == bc_after, "flip must preserve x_b + x_c");
                }
                // off-facet strictness for every non-refined diagonal
                for (const Diagonal& d : all_diagonals(p)) {
                    if (t.contains(d)) continue;
                    HalfSpace k = k_map(p, d);
                    long long dk = k.k();
                    long long partial = 0;
                    for (int i : k.K) partial += x[i - 1];
                    expect(partial > dk * (dk + 1) / 2,
                           "non-refined diagonal must exceed the d(d+1)/2 bound");
                }
            }
        }
    }
}

// ---- criterion 6: common-vertex characterizations -------------------------

bool nested_chain(const LabelledPolygon& p, const Triangulation& t) {
    std::vector<std::vector<int>> ks;
    for (const Diagonal& d : t.diagonals()) ks.push_back(k_map(p, d).K);
    std::sort(ks.begin(), ks.end(),
              [](const auto& a, const auto& b) { return a.size() < b.size(); });
    for (size_t i = 0; i + 1 < ks.size(); ++i) {
        if (ks[i].size() >= ks[i + 1].size()) return false;
        if (!std::includes(ks[i + 1].begin(), ks[i + 1].end(), ks[i].begin(), ks[i].end()))
            return false;
    }
    return true;
}

void criterion_common_vertices() {
    for (int n = 2; n <= 5; ++n) {
        std::vector<Permutation> sn = enumerate_permutations(n);
        for (const Orientation& o : all_orientations(n)) {
            LabelledPolygon p(o);
            auto fibers = all_fibers(p);
            for (const auto& [t, sigmas] : fibers) {
                Point x = coordinates(p, t);
                Point sorted = x;
                std::sort(sorted.begin(), sorted.end());
                bool perm_pt = true;
                for (int i = 1; i <= n; ++i) perm_pt &= sorted[i - 1] == i;
                bool singleton = sigmas.size() == 1;
                bool p_cond = is_common_vertex(p, t);
                bool nested = nested_chain(p, t);
                expect(perm_pt == singleton && singleton == p_cond && p_cond == nested,
                       "type A common-vertex conditions (a)-(d) diverge at n=" +
                           std::to_string(n));
                if (singleton)
                    expect(x == perm_point(sigmas.front()),
                           "singleton fiber must sit on its permutahedron vertex");
            }
        }
    }
    // type B analogue over W_n
    for (int n = 1; n <= 3; ++n) {
        std::vector<Permutation> wn = enumerate_w(n);
        for (const OrientationB& b : all_orientations_b(n)) {
            LabelledPolygon p(b.symmetric_a());
            std::map<Triangulation, std::vector<Permutation>> fibers;
            for (const Permutation& w : wn) fibers[phi_b(p, w)].push_back(w);
            long long covered = 0;
            for (auto& [t, ws] : fibers) covered += static_cast<long long>(ws.size());
            expect(covered == static_cast<long long>(wn.size()), "W_n fibers must partition W_n");
            expect(fibers.size() == symmetric_triangulations(p).size(),
                   "phi_b must be surjective");
            for (const auto& [t, ws] : fibers) {
                Point x = coordinates(p, t);
                Point sorted = x;
                std::sort(sorted.begin(), sorted.end());
                bool perm_pt = true;
                for (int i = 1; i <= 2 * n; ++i) perm_pt &= sorted[i - 1] == i;
                bool singleton = ws.size() == 1;
                bool p_cond = is_common_vertex(p, t);
                bool nested = nested_chain(p, t);
                expect(perm_pt == singleton && singleton == p_cond && p_cond == nested,
                       "type B common-vertex conditions (a)-(d) diverge at n=" +
                           std::to_string(n));
                if (singleton)
                    expect(x == perm_point(ws.front()),
                           "singleton W_n fiber must sit on its permutahedron vertex");
            }
        }
    }
}

// ---- criterion 7: V = H ----------------------------------------------------

void criterion_v_equals_h() {
    for (int n = 2; n <= 5; ++n) {
        for (const Orientation& o : all_orientations(n)) {
            LabelledPolygon p(o);
            HRepresentation rep = h_representation(p);
            std::set<Point> expected;
            for (const Triangulation& t : enumerate_triangulations(p))
                expected.insert(coordinates(p, t));
            std::vector<Point> got = h_vertex_enumeration(rep);
            expect(std::set<Point>(got.begin(), got.end()) == expected,
                   "type A H-representation vertices differ at n=" + std::to_string(n));
            for (const Point& x : got)
                expect(facet_incidence_count(rep, x) == n - 1,
                       "type A vertex must lie on exactly n-1 facet hyperplanes");
            skeleton(p);  // asserts facet-sharing graph == flip graph
        }
    }
    for (int n = 1; n <= 3; ++n) {
        for (const OrientationB& b : all_orientations_b(n)) {
            LabelledPolygon p(b.symmetric_a());
            std::vector<Point> verts = cyclohedron_vertices(b);
            std::set<Point> expected(verts.begin(), verts.end());
            std::vector<Point> got = h_vertex_enumeration_b(b);
            expect(std::set<Point>(got.begin(), got.end()) == expected,
                   "type B H-representation vertices differ at n=" + std::to_string(n));
            HRepresentation rep = h_representation(p);
            auto classes = facet_classes(rep, got);
            for (const Point& x : got) {
                int on = 0;
                for (const auto& cls : classes)
                    if (halfspace_eval(rep.half_spaces[cls.front()], x) == 0) ++on;
                expect(on == n, "type B vertex must lie on exactly n facet classes");
            }
            skeleton_b(b);  // asserts flip adjacency == facet-class adjacency
        }
    }
}

// ---- criterion 8: the Loday oracle -----------------------------------------

void criterion_loday() {
    for (int n = 2; n <= 7; ++n) {
        LabelledPolygon p{Orientation(n, {})};
        for (const Triangulation& t : enumerate_triangulations(p))
            expect(loday_coordinates(p, t) == coordinates(p, t),
                   "tree rule and weight rule differ at n=" + std::to_string(n));
    }
}

// ---- criterion 9: the type B slice -----------------------------------------

void criterion_type_b_slice() {
    for (int n = 1; n <= 4; ++n) {
        for (const OrientationB& b : all_orientations_b(n)) {
            LabelledPolygon p(b.symmetric_a());
            for (const Triangulation& t : enumerate_triangulations(p)) {
                bool symmetric = is_centrally_symmetric(p, t);
                bool on_b = on_all_type_b(coordinates(p, t));
                expect(symmetric == on_b,
                       "central symmetry and the type B slice must coincide at n=" +
                           std::to_string(n));
            }
        }
    }
    // a non-symmetric orientation breaks the equivalence
    LabelledPolygon p{Orientation(4, {})};
    bool some_off = false;
    for (const Triangulation& t : symmetric_triangulations(p))
        some_off |= !on_all_type_b(coordinates(p, t));
    expect(some_off,
           "the all-down hexagon orientation must push some symmetric triangulation off "
           "the type B slice");
}

// ---- criterion 10: barycenters ----------------------------------------------

void criterion_barycenters() {
    for (int n = 2; n <= 7; ++n) {
        for (const Orientation& o : all_orientations(n)) {
            LabelledPolygon p(o);
            std::vector<Point> pts;
            for (const Triangulation& t : enumerate_triangulations(p))
                pts.push_back(coordinates(p, t));
            for (const Rational& c : barycenter(pts))
                expect(c == Rational(n + 1, 2),
                       "type A barycenter must be ((n+1)/2,...) at n=" + std::to_string(n));
        }
    }
    for (int n = 1; n <= 4; ++n) {
        for (const OrientationB& b : all_orientations_b(n)) {
            for (const Rational& c : barycenter(cyclohedron_vertices(b)))
                expect(c == Rational(2 * n + 1, 2),
                       "type B barycenter must be ((2n+1)/2,...) at n=" + std::to_string(n));
        }
    }
}

}  // namespace

int main() {
    struct Criterion {
        int number;
        std::string name;
        std::function<void()> body;
    };
    std::vector<Criterion> criteria{
        {1, "hexagon worked example", criterion_fig2},
        {2, "B_3 vertex table", criterion_b3_table},
        {3, "invariant tables n=3..6", criterion_tables},
        {4, "vertex incidence sweep n<=6", criterion_incidence},
        {5, "flip lemma sweep n<=6", criterion_flip_lemmas},
        {6, "common-vertex characterizations", criterion_common_vertices},
        {7, "V=H cross-check", criterion_v_equals_h},
        {8, "Loday tree oracle n<=7", criterion_loday},
        {9, "type B slice equivalence", criterion_type_b_slice},
        {10, "barycenters", criterion_barycenters},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        std::string message;
        bool ok = true;
        try {
            c.body();
        } catch (const std::exception& e) {
            ok = false;
            message = e.what();
        }
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << c.number << ": " << c.name
                  << " (" << secs << " s)";
        if (!ok) std::cout << " -- " << message;
        std::cout << "\n";
        if (!ok) ++failures;
    }
    if (failures) std::cout << failures << " criterion(s) failed\n";
    return failures == 0 ? 0 : 1;
}
