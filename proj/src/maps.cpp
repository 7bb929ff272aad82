#include "assoc/maps.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace assoc {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int n = static_cast<int>(images_.size());
    require(n >= 1, "permutation must be nonempty");
    std::vector<char> seen(n + 1, 0);
    for (int v : images_) {
        require(v >= 1 && v <= n, "permutation image out of range");
        require(!seen[v], "permutation image repeated");
        seen[v] = 1;
    }
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(images_.size());
    for (int i = 1; i <= size(); ++i) inv[images_[i - 1] - 1] = i;
    return Permutation(std::move(inv));
}

std::vector<Permutation> enumerate_permutations(int n) {
    require(n >= 1, "rank must be >= 1");
    std::vector<int> one_line(n);
    std::iota(one_line.begin(), one_line.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(one_line);
    } while (std::next_permutation(one_line.begin(), one_line.end()));
    return out;
}

bool in_hyperoctahedral(const Permutation& sigma) {
    const int two_n = sigma.size();
    if (two_n % 2 != 0) return false;
    for (int i = 1; i <= two_n / 2; ++i)
        if (sigma(i) + sigma(two_n + 1 - i) != two_n + 1) return false;
    return true;
}

std::vector<Permutation> enumerate_w(int n) {
    require(n >= 1, "rank must be >= 1");
    // sigma(i) for i in [n] picks one element of each pair {j, 2n+1-j};
    // the other half is forced by sigma(2n+1-i) = 2n+1 - sigma(i).
    std::vector<int> base(n);
    std::iota(base.begin(), base.end(), 1);
    std::vector<Permutation> out;
    do {
        for (unsigned signs = 0; signs < (1u << n); ++signs) {
            std::vector<int> images(2 * n);
            for (int i = 1; i <= n; ++i) {
                int v = base[i - 1];
                if (signs & (1u << (i - 1))) v = 2 * n + 1 - v;
                images[i - 1] = v;
                images[2 * n - i] = 2 * n + 1 - v;
            }
            out.emplace_back(std::move(images));
        }
    } while (std::next_permutation(base.begin(), base.end()));
    std::sort(out.begin(), out.end());
    for (const Permutation& w : out) check(in_hyperoctahedral(w), "W_n element invalid");
    return out;
}

Triangulation phi(const LabelledPolygon& p, const Permutation& sigma) {
    const int n = p.rank();
    require(sigma.size() == n, "phi: permutation size must equal the rank");
    const Orientation& o = p.orientation();

    std::vector<int> path;
    path.push_back(0);
    for (int i = 1; i <= n; ++i)
        if (o.is_down(i)) path.push_back(i);
    path.push_back(n + 1);

    std::set<std::pair<int, int>> edges;
    auto record = [&]() {
        check(std::is_sorted(path.begin(), path.end()), "phi path must stay value-sorted");
        for (size_t i = 0; i + 1 < path.size(); ++i)
            edges.insert({path[i], path[i + 1]});
    };
    record();

    Permutation word = sigma.inverse();
    for (int step = 1; step <= n; ++step) {
        int letter = word(step);
        if (o.is_down(letter)) {
            auto it = std::find(path.begin(), path.end(), letter);
            check(it != path.end(), "phi: down letter missing from path");
            path.erase(it);
        } else {
            auto it = std::lower_bound(path.begin(), path.end(), letter);
            check(it != path.begin() && it != path.end(),
                  "phi: up letter needs both a predecessor and a successor");
            path.insert(it, letter);
        }
        record();
    }

    std::vector<Diagonal> diags;
    for (const auto& [a, b] : edges)
        if (!p.boundary_edge(a, b)) diags.push_back(Diagonal{a, b});
    check(static_cast<int>(diags.size()) == n - 1, "phi must produce n-1 diagonals");
    return Triangulation(p, std::move(diags));
}

std::vector<Permutation> fiber(const LabelledPolygon& p, const Triangulation& t) {
    std::vector<Permutation> out;
    for (const Permutation& sigma : enumerate_permutations(p.rank()))
        if (phi(p, sigma) == t) out.push_back(sigma);
    return out;
}

std::map<Triangulation, std::vector<Permutation>> all_fibers(const LabelledPolygon& p) {
    std::map<Triangulation, std::vector<Permutation>> out;
    for (const Permutation& sigma : enumerate_permutations(p.rank()))
        out[phi(p, sigma)].push_back(sigma);
    return out;
}

bool is_common_vertex(const LabelledPolygon& p, const Triangulation& t) {
    for (int i = 1; i <= p.rank(); ++i)
        if (p_left(p, t, i) != 1 && p_right(p, t, i) != 1) return false;
    return true;
}

Triangulation phi_b(const LabelledPolygon& p, const Permutation& sigma) {
    require(p.rank() % 2 == 0 && p.orientation().symmetric(),
            "phi_b needs a symmetric orientation of even rank");
    require(in_hyperoctahedral(sigma), "phi_b: permutation must lie in W_n");
    Triangulation t = phi(p, sigma);
    check(is_centrally_symmetric(p, t), "phi_b image must be centrally symmetric");
    return t;
}

}  // namespace assoc
