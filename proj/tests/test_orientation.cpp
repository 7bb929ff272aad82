#include <doctest.h>

#include <algorithm>
#include <set>

#include "assoc/orientation.hpp"

using namespace assoc;

namespace {

std::set<std::set<int>> up_sets(const std::vector<Orientation>& os) {
    std::set<std::set<int>> out;
    for (const Orientation& o : os) out.insert(o.up());
    return out;
}

}  // namespace

TEST_CASE("orientation construction and validation") {
    Orientation o(5, {2, 4});
    CHECK(o.down() == std::set<int>{1, 3, 5});
    CHECK(o.is_up(2));
    CHECK(o.is_down(3));

    Orientation loday(4, {});
    CHECK(loday.down() == std::set<int>{1, 2, 3, 4});

    CHECK_THROWS_AS(Orientation(5, {1, 3}), std::invalid_argument);  // 1 may not be up
    CHECK_THROWS_AS(Orientation(5, {5}), std::invalid_argument);     // n may not be up
    CHECK_THROWS_AS(Orientation(5, {7}), std::invalid_argument);
    CHECK_THROWS_AS(Orientation(1, {}), std::invalid_argument);
}

TEST_CASE("polygon labelling") {
    CHECK(LabelledPolygon(Orientation(5, {2, 4})).ccw_labels() ==
          std::vector<int>{0, 1, 3, 5, 6, 4, 2});
    CHECK(LabelledPolygon(Orientation(4, {})).ccw_labels() ==
          std::vector<int>{0, 1, 2, 3, 4, 5});
    CHECK(LabelledPolygon(Orientation(4, {2, 3})).ccw_labels() ==
          std::vector<int>{0, 1, 4, 5, 3, 2});
}

TEST_CASE("labelling invariants hold for every orientation up to rank 8") {
    for (int n = 2; n <= 8; ++n) {
        for (const Orientation& o : all_orientations(n)) {
            LabelledPolygon p(o);
            std::vector<int> sorted = p.ccw_labels();
            std::sort(sorted.begin(), sorted.end());
            for (int i = 0; i <= n + 1; ++i) {
                CHECK(sorted[i] == i);
                CHECK(p.label_at(p.position_of(i)) == i);
            }
            CHECK(p.label_at(0) == 0);
        }
    }
}

TEST_CASE("symmetric A orientation from a type B graph") {
    // all edges left-to-right on B_3
    OrientationB b3(3, {}, false);
    CHECK(b3.symmetric_a().up() == std::set<int>{2, 3});

    // everything reversed gives the reverse-equivalent orientation
    OrientationB b3_rev(3, {2}, true);
    CHECK(b3_rev.symmetric_a().up() == std::set<int>{4, 5});
    CHECK(b3_rev.symmetric_a() == b3.symmetric_a().reversed());

    for (int n : {2, 3}) {
        for (const OrientationB& b : all_orientations_b(n))
            CHECK(b.symmetric_a().symmetric());
    }
}

TEST_CASE("is_symmetric") {
    CHECK(Orientation(6, {2, 3}).symmetric());
    CHECK_FALSE(Orientation(6, {}).symmetric());
    CHECK(Orientation(2, {}).symmetric());
    CHECK_THROWS_AS(Orientation(5, {2}).symmetric(), std::invalid_argument);
}

TEST_CASE("symmetric orientations biject with type B orientations") {
    for (int n = 1; n <= 4; ++n) {
        std::set<std::set<int>> from_b;
        for (const OrientationB& b : all_orientations_b(n))
            from_b.insert(b.symmetric_a().up());
        CHECK(from_b.size() == (1u << (n - 1)));

        std::set<std::set<int>> symmetric;
        for (const Orientation& o : all_orientations(2 * n))
            if (o.symmetric()) symmetric.insert(o.up());
        CHECK(from_b == symmetric);
    }
}

TEST_CASE("reverse") {
    CHECK(Orientation(5, {2}).reversed().up() == std::set<int>{3, 4});
    CHECK(Orientation(5, {4}).reversed().up() == std::set<int>{2, 3});
    for (const Orientation& o : all_orientations(6))
        CHECK(o.reversed().reversed() == o);
}

TEST_CASE("rotate180") {
    CHECK(Orientation(5, {2}).rotated180().up() == std::set<int>{2, 3});
    CHECK(Orientation(5, {3}).rotated180().up() == std::set<int>{2, 4});
    CHECK(Orientation(6, {}).rotated180().up() == std::set<int>{2, 3, 4, 5});
    for (const Orientation& o : all_orientations(6))
        CHECK(o.rotated180().rotated180() == o);
}

TEST_CASE("equivalence classes") {
    SUBCASE("n=5 matches the three published classes") {
        auto classes = equivalence_classes(5);
        REQUIRE(classes.size() == 3);
        CHECK(up_sets(classes[0]) == std::set<std::set<int>>{{}, {2, 3, 4}});
        CHECK(up_sets(classes[1]) == std::set<std::set<int>>{{2}, {4}, {2, 3}, {3, 4}});
        CHECK(up_sets(classes[2]) == std::set<std::set<int>>{{3}, {2, 4}});
    }
    SUBCASE("n=3 closes into a single class") {
        auto classes = equivalence_classes(3);
        REQUIRE(classes.size() == 1);
        CHECK(up_sets(classes[0]) == std::set<std::set<int>>{{}, {2}});
    }
    SUBCASE("n=6 has six classes refined by the eight reverse-pairs") {
        auto classes = equivalence_classes(6);
        REQUIRE(classes.size() == 6);
        CHECK(up_sets(classes[0]) == std::set<std::set<int>>{{}, {2, 3, 4, 5}});
        CHECK(up_sets(classes[1]) ==
              std::set<std::set<int>>{{2}, {5}, {3, 4, 5}, {2, 3, 4}});
        CHECK(up_sets(classes[2]) == std::set<std::set<int>>{{2, 3}, {4, 5}});
        CHECK(up_sets(classes[3]) ==
              std::set<std::set<int>>{{3}, {4}, {2, 4, 5}, {2, 3, 5}});
        CHECK(up_sets(classes[4]) == std::set<std::set<int>>{{2, 4}, {3, 5}});
        CHECK(up_sets(classes[5]) == std::set<std::set<int>>{{2, 5}, {3, 4}});
        // reverse-pairs never straddle classes
        for (const auto& cls : classes) {
            auto sets = up_sets(cls);
            for (const Orientation& o : cls) CHECK(sets.count(o.reversed().up()));
        }
    }
    SUBCASE("classes partition all orientations") {
        for (int n = 3; n <= 7; ++n) {
            size_t total = 0;
            for (const auto& cls : equivalence_classes(n)) total += cls.size();
            CHECK(total == (1u << (n - 2)));
        }
    }
}
