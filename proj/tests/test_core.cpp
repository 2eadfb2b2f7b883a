#include <catch_amalgamated.hpp>

#include <mseg/multisegment.hpp>
#include <mseg/universe.hpp>

using namespace mseg;

TEST_CASE("segments reject empty intervals", "[core]") {
    CHECK_THROWS_AS(Segment(3, 2), std::invalid_argument);
    CHECK(Segment(2, 2).length() == 1);
    CHECK(Segment(-3, 1).length() == 5);
}

TEST_CASE("linkedness", "[core]") {
    CHECK(is_linked(Segment(2, 3), Segment(4, 5)));
    CHECK(precedes(Segment(2, 3), Segment(4, 5)));
    CHECK_FALSE(is_linked(Segment(1, 3), Segment(1, 5)));
    CHECK_FALSE(is_linked(Segment(1, 4), Segment(2, 3)));
    CHECK_FALSE(is_linked(Segment(1, 2), Segment(4, 5)));
    CHECK(is_linked(Segment(1, 2), Segment(2, 3)));
}

TEST_CASE("union and intersection of linked segments", "[core]") {
    auto [u1, i1] = union_intersection(Segment(1, 2), Segment(2, 3));
    CHECK(u1 == Segment(1, 3));
    REQUIRE(i1);
    CHECK(*i1 == Segment(2, 2));

    auto [u2, i2] = union_intersection(Segment(1, 2), Segment(3, 5));
    CHECK(u2 == Segment(1, 5));
    CHECK_FALSE(i2);

    auto [u3, i3] = union_intersection(Segment(0, 3), Segment(2, 5));
    CHECK(u3 == Segment(0, 5));
    CHECK(i3 == Segment(2, 3));

    CHECK_THROWS_AS(union_intersection(Segment(1, 4), Segment(2, 3)), std::invalid_argument);
}

TEST_CASE("linkedness is symmetric and the move conserves length", "[core][property]") {
    const auto segs = segments_in(-2, 4);
    for (const auto& x : segs) {
        for (const auto& y : segs) {
            REQUIRE(is_linked(x, y) == is_linked(y, x));
            if (!is_linked(x, y)) {
                continue;
            }
            auto [u, i] = union_intersection(x, y);
            auto [u2, i2] = union_intersection(y, x);
            REQUIRE(u == u2);
            REQUIRE(i == i2);
            const long lhs = l_abs(u) + (i ? l_abs(*i) : 0);
            REQUIRE(lhs == l_abs(x) + l_abs(y));
        }
    }
}

TEST_CASE("ascending order", "[core]") {
    CHECK(ascending_sort(Multisegment{{2, 3}, {1, 2}, {4, 5}}) ==
          std::vector<Segment>{{1, 2}, {2, 3}, {4, 5}});
    CHECK(ascending_sort(Multisegment{}).empty());
    const auto nested = ascending_sort(Multisegment{{1, 5}, {1, 3}});
    CHECK(nested == std::vector<Segment>{{1, 3}, {1, 5}});
    CHECK(is_ascending(nested));

    const std::vector<Segment> ok{{1, 2}, {2, 3}};
    const std::vector<Segment> reversed{{2, 3}, {1, 2}};
    const std::vector<Segment> unlinked{{1, 4}, {2, 3}};
    CHECK(is_ascending(ok));
    CHECK_FALSE(is_ascending(reversed));
    CHECK(is_ascending(unlinked));
}

TEST_CASE("canonical ascending order always passes the check on U", "[core][property]") {
    for (const auto& m : universe({0, 3, 3, 2})) {
        REQUIRE(is_ascending(ascending_sort(m)));
    }
}

TEST_CASE("selectors", "[core]") {
    CHECK(select_a(Multisegment{{1, 4}, {1, 3}, {2, 5}}, 1) == Multisegment{{1, 4}, {1, 3}});
    CHECK(select_b(Multisegment{{1, 4}, {2, 5}, {2, 4}}, 4) == Multisegment{{1, 4}, {2, 4}});
    CHECK(select_a(Multisegment{}, 0).empty());
    CHECK(select_a(Multisegment{{1, 2}, {1, 2}}, 1).size() == 2);
}

TEST_CASE("absolute length", "[core]") {
    CHECK(l_abs(Multisegment{{1, 3}}) == 3);
    CHECK(l_abs(Multisegment{{1, 3}, {2, 2}}, Config(2)) == 8);
    CHECK(l_abs(Multisegment{}) == 0);
    CHECK_THROWS_AS(Config(0), std::invalid_argument);
}

TEST_CASE("left truncation", "[core]") {
    CHECK(left_truncate(Segment(1, 3)) == Segment(2, 3));
    CHECK_FALSE(left_truncate(Segment(2, 2)));
    CHECK(left_truncate(Segment(0, 5)) == Segment(1, 5));
    CHECK(left_truncate(Multisegment{{1, 1}, {1, 3}}) == Multisegment{{2, 3}});
}

TEST_CASE("submultisegment containment", "[core]") {
    const Multisegment two{{1, 2}, {1, 2}};
    CHECK(is_submultisegment(Multisegment{{1, 2}}, two));
    CHECK_FALSE(is_submultisegment(Multisegment{{1, 2}, {1, 2}, {1, 2}}, two));
    CHECK(is_submultisegment(Multisegment{}, two));
    CHECK(is_submultisegment(Multisegment{}, Multisegment{}));

    const auto subs = submultisegments(Multisegment{{1, 2}, {1, 2}, {2, 3}});
    CHECK(subs.size() == 6);  // (0..2 copies) x (0..1 copies)
    for (const auto& s : subs) {
        CHECK(is_submultisegment(s, Multisegment{{1, 2}, {1, 2}, {2, 3}}));
    }
}

TEST_CASE("multiset arithmetic keeps canonical form", "[core]") {
    Multisegment m{{2, 3}, {1, 2}};
    m.add(Segment(1, 1));
    CHECK(m == Multisegment{{1, 1}, {1, 2}, {2, 3}});
    CHECK(m.erase_one(Segment(1, 2)));
    CHECK_FALSE(m.erase_one(Segment(1, 2)));
    CHECK_THROWS_AS(m.subtract(Multisegment{{5, 5}}), std::invalid_argument);
    CHECK(Multisegment{{1, 2}, {2, 3}} == Multisegment{{2, 3}, {1, 2}});
}

TEST_CASE("universe size", "[core]") {
    // 10 segments in [0,3]; multisets of size <= 3 with multiplicity <= 2:
    // 1 + 10 + (45 + 10) + (120 + 90)
    CHECK(universe({0, 3, 3, 2}).size() == 276);
}
