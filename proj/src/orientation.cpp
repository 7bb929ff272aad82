#include "assoc/orientation.hpp"

#include <algorithm>
#include <map>

namespace assoc {

Orientation::Orientation(int n, std::set<int> up) : n_(n), up_(std::move(up)) {
    require(n >= 2, "orientation rank must be >= 2");
    for (int i : up_) {
        require(i >= 2 && i <= n - 1,
                "up elements must lie in {2,...,n-1}; got " + std::to_string(i));
    }
}

std::set<int> Orientation::down() const {
    std::set<int> d;
    for (int i = 1; i <= n_; ++i)
        if (!up_.count(i)) d.insert(i);
    return d;
}

bool Orientation::is_up(int i) const {
    check(i >= 1 && i <= n_, "element out of range");
    return up_.count(i) > 0;
}

Orientation Orientation::reversed() const {
    std::set<int> up;
    for (int i = 2; i <= n_ - 1; ++i)
        if (!up_.count(i)) up.insert(i);
    return Orientation(n_, up);
}

Orientation Orientation::rotated180() const {
    std::set<int> up;
    for (int i = 2; i <= n_ - 1; ++i)
        if (!up_.count(i)) up.insert(n_ + 1 - i);
    return Orientation(n_, up);
}

bool Orientation::symmetric() const {
    require(n_ % 2 == 0, "symmetry is defined for even rank only");
    for (int i = 2; i <= n_ - 1; ++i) {
        bool i_up = up_.count(i) > 0;
        bool partner_up = up_.count(n_ + 1 - i) > 0;
        if (i_up == partner_up) return false;
    }
    return true;
}

OrientationB::OrientationB(int n, std::set<int> up_core, bool t_edge_up)
    : n_(n), up_core_(std::move(up_core)), t_edge_up_(t_edge_up) {
    require(n >= 1, "type B rank must be >= 1");
    for (int i : up_core_) {
        require(i >= 2 && i <= n - 1,
                "up_core elements must lie in {2,...,n-1}; got " + std::to_string(i));
    }
    if (n == 1) require(!t_edge_up_, "B_1 has no edges; t_edge_up must be false");
}

bool operator<(const OrientationB& a, const OrientationB& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    if (a.t_edge_up_ != b.t_edge_up_) return !a.t_edge_up_;
    return a.up_core_ < b.up_core_;
}

Orientation OrientationB::symmetric_a() const {
    std::set<int> up;
    for (int i = 1; i <= n_ - 1; ++i) {
        bool dir_up = (i == 1) ? t_edge_up_ : up_core_.count(i) > 0;
        if (dir_up)
            up.insert(n_ + i);
        else
            up.insert(n_ + 1 - i);  // symmetric partner is up when n+i is down
    }
    Orientation o(2 * n_, up);
    check(o.symmetric(), "symmetric completion failed to be symmetric");
    return o;
}

LabelledPolygon::LabelledPolygon(Orientation o) : o_(std::move(o)) {
    const int n = o_.rank();
    ccw_.reserve(n + 2);
    ccw_.push_back(0);
    for (int i = 1; i <= n; ++i)
        if (o_.is_down(i)) ccw_.push_back(i);
    ccw_.push_back(n + 1);
    for (int i = n; i >= 2; --i)
        if (o_.is_up(i)) ccw_.push_back(i);
    check(static_cast<int>(ccw_.size()) == n + 2, "labelling must place n+2 labels");

    pos_.assign(n + 2, -1);
    for (int p = 0; p < static_cast<int>(ccw_.size()); ++p) {
        check(pos_[ccw_[p]] == -1, "labels must be distinct");
        pos_[ccw_[p]] = p;
    }

    // The labels <= i (and >= i) must each form a contiguous boundary arc.
    const int m = n + 2;
    for (int i = 0; i <= n + 1; ++i) {
        for (int pass = 0; pass < 2; ++pass) {
            int blocks = 0;
            for (int p = 0; p < m; ++p) {
                bool in_now = pass == 0 ? ccw_[p] <= i : ccw_[p] >= i;
                bool in_prev = pass == 0 ? ccw_[(p + m - 1) % m] <= i : ccw_[(p + m - 1) % m] >= i;
                if (in_now && !in_prev) ++blocks;
            }
            check(blocks <= 1, "labels <= i (>= i) must form a contiguous arc");
        }
    }
}

int LabelledPolygon::label_at(int pos) const {
    check(pos >= 0 && pos < size(), "position out of range");
    return ccw_[pos];
}

int LabelledPolygon::position_of(int label) const {
    check(label >= 0 && label < size(), "label out of range");
    return pos_[label];
}

bool LabelledPolygon::boundary_edge(int a, int b) const {
    int pa = position_of(a);
    int pb = position_of(b);
    int d = (pa - pb + size()) % size();
    return d == 1 || d == size() - 1;
}

std::vector<Orientation> all_orientations(int n) {
    require(n >= 2, "rank must be >= 2");
    const int bits = std::max(0, n - 2);
    std::vector<Orientation> out;
    out.reserve(1u << bits);
    for (unsigned mask = 0; mask < (1u << bits); ++mask) {
        std::set<int> up;
        for (int b = 0; b < bits; ++b)
            if (mask & (1u << b)) up.insert(b + 2);
        out.emplace_back(n, up);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<OrientationB> all_orientations_b(int n) {
    require(n >= 1, "rank must be >= 1");
    const int core_bits = std::max(0, n - 2);
    const int t_options = n >= 2 ? 2 : 1;
    std::vector<OrientationB> out;
    for (int t = 0; t < t_options; ++t) {
        for (unsigned mask = 0; mask < (1u << core_bits); ++mask) {
            std::set<int> core;
            for (int b = 0; b < core_bits; ++b)
                if (mask & (1u << b)) core.insert(b + 2);
            out.emplace_back(n, core, t != 0);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

unsigned up_mask(const Orientation& o) {
    unsigned m = 0;
    for (int i : o.up()) m |= 1u << (i - 2);
    return m;
}

}  // namespace

std::vector<std::vector<Orientation>> equivalence_classes(int n) {
    std::vector<Orientation> all = all_orientations(n);
    std::map<unsigned, int> index;
    for (int i = 0; i < static_cast<int>(all.size()); ++i) index[up_mask(all[i])] = i;

    std::vector<int> cls(all.size(), -1);
    std::vector<std::vector<Orientation>> classes;
    for (int i = 0; i < static_cast<int>(all.size()); ++i) {
        if (cls[i] != -1) continue;
        // breadth-first closure under {reversed, rotated180}
        std::vector<int> queue{i};
        cls[i] = static_cast<int>(classes.size());
        std::vector<Orientation> members;
        while (!queue.empty()) {
            int cur = queue.back();
            queue.pop_back();
            members.push_back(all[cur]);
            for (const Orientation& next :
                 {all[cur].reversed(), all[cur].rotated180()}) {
                int j = index.at(up_mask(next));
                if (cls[j] == -1) {
                    cls[j] = cls[i];
                    queue.push_back(j);
                }
            }
        }
        std::sort(members.begin(), members.end(), [](const Orientation& a, const Orientation& b) {
            if (a.up().size() != b.up().size()) return a.up().size() < b.up().size();
            return a.up() < b.up();
        });
        classes.push_back(std::move(members));
    }
    return classes;
}

}  // namespace assoc
