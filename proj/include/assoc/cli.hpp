#pragma once

#include <iosfwd>
#include <optional>
#include <set>
#include <string>

#include "assoc/analysis.hpp"

namespace assoc {

struct RunConfig {
    std::string command;         // vertices|facets|verify|phi|fiber|stats|tables|skeleton|export
    char type = 'A';
    int n = 0;
    std::set<int> up;            // type A up set
    std::string edges;           // type B edge word ('r'/'l' per edge)
    std::string format = "json";  // json|csv|off|md
    std::string out_dir;          // empty: stdout
    std::string perm;             // phi: one-line permutation "2,1,3"
    std::string diagonals;        // fiber: "0-3,2-3"
    std::string group = "orientation";  // tables: orientation|class
    int cap = kDefaultScanCap;
};

// exit codes: 0 ok, 1 verification failure, 2 bad input/config
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

int main_with_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace assoc
