#include "assoc/io.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace assoc {

json to_json(const Orientation& o) {
    json j;
    j["type"] = "A";
    j["n"] = o.rank();
    j["up"] = std::vector<int>(o.up().begin(), o.up().end());
    return j;
}

json to_json(const OrientationB& b) {
    Orientation a = b.symmetric_a();
    json j;
    j["type"] = "B";
    j["n"] = b.rank();
    j["edges"] = b_edges_string(b);
    j["up"] = std::vector<int>(a.up().begin(), a.up().end());
    return j;
}

json to_json(const Triangulation& t) {
    json j = json::array();
    for (const Diagonal& d : t.diagonals()) j.push_back({d.a, d.b});
    return j;
}

json to_json(const Point& x) { return json(x); }

json to_json(const HalfSpace& h) {
    long long k = h.k();
    json j;
    j["K"] = h.K;
    j["rhs"] = k * (k + 1) / 2;
    return j;
}

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep))
        if (!item.empty()) out.push_back(item);
    return out;
}

int parse_int(const std::string& s) {
    size_t used = 0;
    int v = std::stoi(s, &used);
    require(used == s.size(), "bad integer: '" + s + "'");
    return v;
}

}  // namespace

std::vector<Diagonal> parse_diagonals(const LabelledPolygon& p, const std::string& text) {
    std::vector<Diagonal> out;
    for (const std::string& part : split(text, ',')) {
        std::vector<std::string> ends = split(part, '-');
        require(ends.size() == 2, "diagonal must look like 'a-b': '" + part + "'");
        out.push_back(make_diagonal(p, parse_int(ends[0]), parse_int(ends[1])));
    }
    return out;
}

Permutation parse_permutation(const std::string& text) {
    std::vector<int> images;
    for (const std::string& part : split(text, ',')) images.push_back(parse_int(part));
    return Permutation(std::move(images));
}

OrientationB parse_b_edges(int n, const std::string& edges) {
    require(static_cast<int>(edges.size()) == std::max(0, n - 1),
            "type B_" + std::to_string(n) + " needs " + std::to_string(std::max(0, n - 1)) +
                " edge directions");
    for (char c : edges) require(c == 'r' || c == 'l', "edge directions are 'r' or 'l'");
    bool t_edge_up = n >= 2 && edges[0] == 'l';
    std::set<int> core;
    for (int i = 2; i <= n - 1; ++i)
        if (edges[i - 1] == 'l') core.insert(i);
    return OrientationB(n, core, t_edge_up);
}

std::string b_edges_string(const OrientationB& b) {
    std::string s;
    for (int i = 1; i <= b.rank() - 1; ++i) {
        bool up = i == 1 ? b.t_edge_up() : b.up_core().count(i) > 0;
        s += up ? 'l' : 'r';
    }
    return s;
}

namespace {

// In a simple 3-polytope each vertex of a 2-face has exactly two skeleton
// neighbours inside the face; walking them yields the boundary cycle.
std::vector<int> face_cycle(const std::vector<int>& face, const Graph& skel) {
    std::set<int> in_face(face.begin(), face.end());
    std::map<int, std::vector<int>> nbr;
    for (auto [u, v] : skel.edges) {
        if (in_face.count(u) && in_face.count(v)) {
            nbr[u].push_back(v);
            nbr[v].push_back(u);
        }
    }
    for (int v : face)
        check(nbr[v].size() == 2, "face walk: vertex degree inside a 2-face must be 2");
    int start = *std::min_element(face.begin(), face.end());
    std::vector<int> cycle{start};
    int prev = -1, cur = start;
    // deterministic direction: begin with the smaller neighbour
    std::sort(nbr[start].begin(), nbr[start].end());
    int next = nbr[start][0];
    while (next != start) {
        cycle.push_back(next);
        int after = nbr[next][0] == cur ? nbr[next][1] : nbr[next][0];
        prev = cur;
        cur = next;
        next = after;
        (void)prev;
    }
    check(cycle.size() == face.size(), "face walk: cycle misses vertices");
    return cycle;
}

}  // namespace

std::string off_text(int ambient, const std::vector<Point>& vertices,
                     const std::vector<std::vector<int>>& facet_vertex_sets,
                     const Graph& skel) {
    long long edge_count = skel.edges.size();
    std::ostringstream os;
    os << "nOFF\n" << ambient << "\n";
    os << vertices.size() << " " << facet_vertex_sets.size() << " " << edge_count << "\n";
    for (const Point& v : vertices) {
        for (size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
        os << "\n";
    }
    for (const std::vector<int>& face : facet_vertex_sets) {
        std::vector<int> cycle = face_cycle(face, skel);
        os << cycle.size();
        for (int v : cycle) os << " " << v;
        os << "\n";
    }
    return os.str();
}

}  // namespace assoc
