#include <catch_amalgamated.hpp>

#include <mseg/invariants.hpp>
#include <mseg/text.hpp>
#include <mseg/universe.hpp>

using namespace mseg;

namespace {

Multisegment ms(const char* s) { return parse_multisegment(s); }
Segment seg(const char* s) { return parse_segment(s); }

const UniverseParams kU{0, 3, 3, 2};

const Multisegment kH = parse_multisegment("[1,4]+[1,3]+[1,2]+[2,5]+[2,4]");

}  // namespace

TEST_CASE("epsilon counts", "[invariants]") {
    CHECK(epsilon(seg("[1,3]"), kH) == 2);
    CHECK(epsilon(seg("[2,3]"), kH) == 2);
    CHECK(epsilon(seg("[3]"), kH) == 0);
    CHECK(epsilon(seg("[1,2]"), ms("[1,2]+[1,2]")) == 2);
}

TEST_CASE("eta vectors", "[invariants]") {
    const auto e = eta(seg("[1,3]"), kH);
    CHECK(e.counts == std::vector<int>{2, 2, 0});
    CHECK(format_eta(e) == "(2,2,0)");
    CHECK(abs_eta(seg("[1,3]"), kH) == 4);

    CHECK(format_eta(eta(seg("[2]"), Multisegment{})) == "(0)");
    CHECK(eta(seg("[2,3]"), ms("[2,3]")).counts == std::vector<int>{1, 0});
    CHECK(abs_eta(seg("[2,3]"), ms("[2,3]")) == 1);
    CHECK(abs_eta(seg("[0,5]"), Multisegment{}) == 0);
}

TEST_CASE("mx", "[invariants]") {
    CHECK(mx(kH, seg("[1,3]")) == ms("[1,3]+[1,3]+[2,3]+[2,3]"));
    CHECK(mx(ms("[5,6]"), seg("[1,3]")).empty());
    CHECK(mx(ms("[2,3]"), seg("[2,3]")) == ms("[2,3]"));
}

TEST_CASE("intermediate segment and non-overlapping", "[invariants]") {
    const auto d = seg("[1,2]");
    const auto dp = seg("[2,3]");
    CHECK(has_intermediate_segment(d, dp, ms("[1,2]+[2,3]")));
    CHECK_FALSE(has_intermediate_segment(d, dp, ms("[1,3]+[2,3]")));
    CHECK_FALSE(has_intermediate_segment(d, dp, Multisegment{}));
    CHECK_THROWS_AS(has_intermediate_segment(dp, d, Multisegment{}), std::invalid_argument);
    CHECK_THROWS_AS(has_intermediate_segment(seg("[1,4]"), dp, Multisegment{}), std::invalid_argument);

    CHECK(non_overlapping(d, dp, ms("[1,2]+[2,3]")));
    CHECK_FALSE(non_overlapping(d, dp, ms("[1,3]+[2,3]")));
    CHECK(non_overlapping(seg("[1]"), seg("[2]"), ms("[1]+[2]")));
    CHECK_THROWS_AS(non_overlapping(d, dp, ms("[2,3]")), NotAdmissible);
}

TEST_CASE("eta changes when a later segment sits inside the first pick", "[invariants][property]") {
    // The change shows up at the truncation of the last pick reaching b(d);
    // it is visible in eta_d only when that truncation starts inside d.
    const auto segs = segments_in(kU.lo, kU.hi);
    std::size_t checked = 0;
    for (const auto& h : universe(kU)) {
        for (const auto& dp : segs) {
            if (!is_admissible_segment(dp, h)) {
                continue;
            }
            const auto tr = removal_trace(dp, h);
            for (const auto& d : segs) {
                if (!precedes(dp, d) || !tr.picked.front().contains(d)) {
                    continue;
                }
                auto last = tr.picked.front();
                for (const auto& s : tr.picked) {
                    if (s.b() >= d.b()) {
                        last = s;
                    }
                }
                if (last.a() + 1 >= d.a()) {
                    ++checked;
                    REQUIRE(eta(d, tr.result) != eta(d, h));
                }
            }
        }
    }
    CHECK(checked > 0);

    // without that condition eta_d can stay put
    const auto h = ms("[0]+[0,2]+[1]");
    REQUIRE(upsilon(seg("[0,1]"), h).contains(seg("[2]")));
    CHECK(eta(seg("[2]"), *remove_segment(seg("[0,1]"), h)) == eta(seg("[2]"), h));
}

TEST_CASE("removal leaves lower left endpoints alone", "[invariants][property]") {
    const auto segs = segments_in(kU.lo, kU.hi);
    for (const auto& h : universe(kU)) {
        for (const auto& d : segs) {
            if (!is_admissible_segment(d, h)) {
                continue;
            }
            const auto r = *remove_segment(d, h);
            for (int a = kU.lo; a < d.a(); ++a) {
                REQUIRE(select_a(r, a) == select_a(h, a));
                for (int b = a; b <= kU.hi; ++b) {
                    REQUIRE(epsilon(Segment(a, b), r) == epsilon(Segment(a, b), h));
                }
            }
        }
    }
}

TEST_CASE("epsilon is the multiplicity in mx", "[invariants][property]") {
    const auto segs = segments_in(kU.lo, kU.hi);
    for (const auto& h : universe(kU)) {
        for (const auto& d : segs) {
            for (int a = kU.lo; a <= d.a(); ++a) {
                REQUIRE(mx(h, Segment(a, d.b())).count(d) == static_cast<std::size_t>(epsilon(d, h)));
            }
        }
    }
}
