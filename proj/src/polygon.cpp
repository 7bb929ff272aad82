#include "assoc/polygon.hpp"

#include <algorithm>
#include <set>

namespace assoc {

Diagonal make_diagonal(const LabelledPolygon& p, int a, int b) {
    if (a > b) std::swap(a, b);
    require(a >= 0 && b <= p.rank() + 1 && a != b, "diagonal labels out of range");
    require(!p.boundary_edge(a, b), "label pair is a boundary edge, not a diagonal");
    return Diagonal{a, b};
}

bool crossing(const LabelledPolygon& p, const Diagonal& d1, const Diagonal& d2) {
    int p1 = p.position_of(d1.a), q1 = p.position_of(d1.b);
    int p2 = p.position_of(d2.a), q2 = p.position_of(d2.b);
    if (p1 > q1) std::swap(p1, q1);
    if (p2 == p1 || p2 == q1 || q2 == p1 || q2 == q1) return false;  // shared endpoint
    auto inside = [&](int x) { return p1 < x && x < q1; };
    return inside(p2) != inside(q2);
}

Triangulation::Triangulation(const LabelledPolygon& p, std::vector<Diagonal> diagonals)
    : diags_(std::move(diagonals)) {
    std::sort(diags_.begin(), diags_.end());
    check(std::adjacent_find(diags_.begin(), diags_.end()) == diags_.end(),
          "triangulation has a repeated diagonal");
    check(static_cast<int>(diags_.size()) == p.rank() - 1,
          "triangulation must have exactly n-1 diagonals");
    for (const Diagonal& d : diags_) make_diagonal(p, d.a, d.b);
    for (size_t i = 0; i < diags_.size(); ++i)
        for (size_t j = i + 1; j < diags_.size(); ++j)
            check(!crossing(p, diags_[i], diags_[j]), "triangulation has crossing diagonals");
}

bool Triangulation::contains(const Diagonal& d) const {
    return std::binary_search(diags_.begin(), diags_.end(), d);
}

std::vector<Diagonal> all_diagonals(const LabelledPolygon& p) {
    std::vector<Diagonal> out;
    const int top = p.rank() + 1;
    for (int a = 0; a <= top; ++a)
        for (int b = a + 1; b <= top; ++b)
            if (!p.boundary_edge(a, b)) out.push_back(Diagonal{a, b});
    std::sort(out.begin(), out.end());
    check(static_cast<int>(out.size()) == (p.rank() + 2) * (p.rank() - 1) / 2,
          "diagonal count must be (n+2)(n-1)/2");
    return out;
}

namespace {

using PosPairs = std::vector<std::pair<int, int>>;

// Triangulations of the sub-polygon on consecutive positions lo..hi, as
// lists of position chords. Every triangulation has a unique triangle on
// the chord (lo,hi); its apex k splits the arc, so each one is produced
// exactly once.
std::vector<PosPairs> ear_rec(int lo, int hi) {
    if (hi - lo == 2) return {PosPairs{}};
    std::vector<PosPairs> out;
    for (int k = lo + 1; k < hi; ++k) {
        std::vector<PosPairs> left =
            k - lo >= 2 ? ear_rec(lo, k) : std::vector<PosPairs>{PosPairs{}};
        std::vector<PosPairs> right =
            hi - k >= 2 ? ear_rec(k, hi) : std::vector<PosPairs>{PosPairs{}};
        for (const PosPairs& l : left) {
            for (const PosPairs& r : right) {
                PosPairs d = l;
                d.insert(d.end(), r.begin(), r.end());
                if (k - lo > 1) d.emplace_back(lo, k);
                if (hi - k > 1) d.emplace_back(k, hi);
                out.push_back(std::move(d));
            }
        }
    }
    return out;
}

}  // namespace

std::vector<Triangulation> enumerate_triangulations(const LabelledPolygon& p) {
    const int m = p.size();
    std::vector<Triangulation> out;
    for (const PosPairs& chords : ear_rec(0, m - 1)) {
        std::vector<Diagonal> diags;
        diags.reserve(chords.size());
        for (auto [u, v] : chords) {
            int a = p.label_at(u), b = p.label_at(v);
            if (a > b) std::swap(a, b);
            diags.push_back(Diagonal{a, b});
        }
        out.emplace_back(p, std::move(diags));
    }
    std::sort(out.begin(), out.end());
    check(std::adjacent_find(out.begin(), out.end()) == out.end(),
          "triangulation enumeration produced duplicates");
    return out;
}

int mu(const LabelledPolygon& p, int i, int j) {
    const int n = p.rank();
    require(i >= 1 && i <= n, "mu: i must lie in [n]");
    require(j >= 0 && j <= n + 1, "mu: j out of range");
    if (j == i) return 0;
    const int m = p.size();
    auto allowed = [&](int label) { return j < i ? label <= i : label >= i; };
    for (int dir : {1, -1}) {
        int pos = p.position_of(i);
        int steps = 0;
        while (true) {
            int next = (pos + dir + m) % m;
            if (!allowed(p.label_at(next))) break;
            ++steps;
            pos = next;
            if (p.label_at(pos) == j) return steps;
        }
    }
    fail("mu: no admissible boundary path (labelling invariant broken)");
}

namespace {

// Lower/upper neighbours of i in T, boundary edges included.
std::vector<int> neighbours(const LabelledPolygon& p, const Triangulation& t, int i,
                            bool lower) {
    std::vector<int> out;
    for (int other = 0; other <= p.rank() + 1; ++other) {
        if (other == i) continue;
        bool is_edge = p.boundary_edge(other, i) ||
                       t.contains(Diagonal{std::min(other, i), std::max(other, i)});
        if (!is_edge) continue;
        if (lower ? other < i : other > i) out.push_back(other);
    }
    return out;
}

}  // namespace

int p_left(const LabelledPolygon& p, const Triangulation& t, int i) {
    require(i >= 1 && i <= p.rank(), "p_left: i must lie in [n]");
    std::vector<int> lv = neighbours(p, t, i, true);
    check(!lv.empty(), "p_left: lower neighbour set is empty");
    int best = 0;
    for (int a : lv) best = std::max(best, mu(p, i, a));
    return best;
}

int p_right(const LabelledPolygon& p, const Triangulation& t, int i) {
    require(i >= 1 && i <= p.rank(), "p_right: i must lie in [n]");
    std::vector<int> rv = neighbours(p, t, i, false);
    check(!rv.empty(), "p_right: upper neighbour set is empty");
    int best = 0;
    for (int b : rv) best = std::max(best, mu(p, i, b));
    return best;
}

long long weight(const LabelledPolygon& p, const Triangulation& t, int i) {
    long long w = static_cast<long long>(p_left(p, t, i)) * p_right(p, t, i);
    long long n = p.rank();
    check(w >= 1 && w <= (n + 1) * (n + 1) / 4, "weight out of bounds");
    return w;
}

std::vector<std::array<int, 3>> triangles(const LabelledPolygon& p, const Triangulation& t) {
    const int top = p.rank() + 1;
    std::vector<std::vector<char>> adj(top + 1, std::vector<char>(top + 1, 0));
    auto set_edge = [&](int a, int b) { adj[a][b] = adj[b][a] = 1; };
    for (int a = 0; a <= top; ++a)
        for (int b = a + 1; b <= top; ++b)
            if (p.boundary_edge(a, b)) set_edge(a, b);
    for (const Diagonal& d : t.diagonals()) set_edge(d.a, d.b);

    // In a convex-polygon triangulation every 3-clique bounds a face.
    std::vector<std::array<int, 3>> out;
    for (int u = 0; u <= top; ++u)
        for (int v = u + 1; v <= top; ++v) {
            if (!adj[u][v]) continue;
            for (int w = v + 1; w <= top; ++w)
                if (adj[u][w] && adj[v][w]) out.push_back({u, v, w});
        }
    check(static_cast<int>(out.size()) == p.rank(), "triangulation must have n triangles");
    return out;
}

std::pair<Triangulation, Diagonal> bistellar_flip(const LabelledPolygon& p,
                                                  const Triangulation& t,
                                                  const Diagonal& d) {
    require(t.contains(d), "bistellar_flip: diagonal not in triangulation");
    std::vector<int> apexes;
    for (const auto& tri : triangles(p, t)) {
        bool has_a = tri[0] == d.a || tri[1] == d.a || tri[2] == d.a;
        bool has_b = tri[0] == d.b || tri[1] == d.b || tri[2] == d.b;
        if (has_a && has_b)
            for (int v : tri)
                if (v != d.a && v != d.b) apexes.push_back(v);
    }
    check(apexes.size() == 2, "diagonal must bound exactly two triangles");
    Diagonal replacement =
        make_diagonal(p, std::min(apexes[0], apexes[1]), std::max(apexes[0], apexes[1]));
    std::vector<Diagonal> diags;
    for (const Diagonal& e : t.diagonals())
        if (!(e == d)) diags.push_back(e);
    diags.push_back(replacement);
    return {Triangulation(p, std::move(diags)), replacement};
}

Diagonal antipodal(const LabelledPolygon& p, const Diagonal& d) {
    const int m = p.size();
    require(m % 2 == 0, "antipodal map needs an even polygon");
    int a = p.label_at((p.position_of(d.a) + m / 2) % m);
    int b = p.label_at((p.position_of(d.b) + m / 2) % m);
    if (a > b) std::swap(a, b);
    return Diagonal{a, b};
}

bool is_centrally_symmetric(const LabelledPolygon& p, const Triangulation& t) {
    for (const Diagonal& d : t.diagonals())
        if (!t.contains(antipodal(p, d))) return false;
    return true;
}

Triangulation centrally_symmetric_flip(const LabelledPolygon& p, const Triangulation& t,
                                       const Diagonal& d) {
    require(is_centrally_symmetric(p, t), "centrally_symmetric_flip needs a symmetric input");
    Diagonal mirror = antipodal(p, d);
    auto [once, unused] = bistellar_flip(p, t, d);
    (void)unused;
    Triangulation result = once;
    if (!(mirror == d)) {
        check(once.contains(mirror), "antipodal diagonal vanished after first flip");
        result = bistellar_flip(p, once, mirror).first;
    }
    check(is_centrally_symmetric(p, result), "centrally symmetric flip broke symmetry");
    return result;
}

std::vector<Triangulation> symmetric_triangulations(const LabelledPolygon& p) {
    std::vector<Triangulation> out;
    for (const Triangulation& t : enumerate_triangulations(p))
        if (is_centrally_symmetric(p, t)) out.push_back(t);
    return out;
}

}  // namespace assoc
