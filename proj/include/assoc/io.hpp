#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "assoc/analysis.hpp"
#include "assoc/realization.hpp"

namespace assoc {

using json = nlohmann::json;

json to_json(const Orientation& o);
json to_json(const OrientationB& b);
json to_json(const Triangulation& t);
json to_json(const Point& x);
json to_json(const HalfSpace& h);  // {"K": [...], "rhs": k(k+1)/2}, meaning sum_K x >= rhs

// "a-b,c-d" -> diagonals; "3,1,2" -> one-line permutation.
std::vector<Diagonal> parse_diagonals(const LabelledPolygon& p, const std::string& text);
Permutation parse_permutation(const std::string& text);

// B-graph edge word: one char per edge t-s1, s1-s2, ...; 'r' points away
// from t, 'l' towards t.
OrientationB parse_b_edges(int n, const std::string& edges);
std::string b_edges_string(const OrientationB& b);

// Geomview nOFF text for a simple 3-polytope: exact integer vertex rows in
// the given ambient dimension, facet vertex cycles walked along skeleton
// edges.
std::string off_text(int ambient, const std::vector<Point>& vertices,
                     const std::vector<std::vector<int>>& facet_vertex_sets,
                     const Graph& skel);

}  // namespace assoc
