#include <catch_amalgamated.hpp>

#include <set>

#include <mseg/bruhat.hpp>

using namespace mseg::bruhat;

namespace {

Permutation p(const char* s) { return parse_permutation(s); }

// Second oracle: the subword property. Elements below w are the products of
// subwords of one reduced word of w.
std::set<std::vector<int>> subword_products(const Permutation& w) {
    std::vector<int> cur = w.images();
    std::vector<std::size_t> word;  // w = s_{word.back()} ... s_{word.front()}
    for (bool moved = true; moved;) {
        moved = false;
        for (std::size_t j = 0; j + 1 < cur.size(); ++j) {
            if (cur[j] > cur[j + 1]) {
                std::swap(cur[j], cur[j + 1]);
                word.push_back(j);
                moved = true;
            }
        }
    }
    std::set<std::vector<int>> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << word.size()); ++mask) {
        std::vector<int> x = Permutation::identity(w.size()).images();
        for (std::size_t t = word.size(); t-- > 0;) {
            if (mask >> t & 1) {
                std::swap(x[word[t]], x[word[t] + 1]);
            }
        }
        out.insert(x);
    }
    return out;
}

long binom(int n, int k) {
    long r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

}  // namespace

TEST_CASE("permutations", "[bruhat]") {
    CHECK(format_permutation(p("213")) == "213");
    CHECK(p("321").length() == 3);
    CHECK(Permutation::identity(4).length() == 0);
    CHECK_THROWS_AS(p("113"), std::invalid_argument);
    CHECK_THROWS_AS(p("1a"), std::invalid_argument);
    const auto wide = parse_permutation("10,1,2,3,4,5,6,7,8,9");
    CHECK(wide(1) == 10);
    CHECK(format_permutation(wide) == "10,1,2,3,4,5,6,7,8,9");
}

TEST_CASE("w statistic", "[bruhat]") {
    CHECK(w_stat(Permutation::identity(3), 2, 2) == 1);
    CHECK(w_stat(p("321"), 1, 3) == 1);
    for (const auto& w : all_permutations(4)) {
        CHECK(w_stat(w, 4, 1) == 4);
    }
    CHECK_THROWS_AS(w_stat(p("12"), 0, 1), std::out_of_range);
    CHECK_THROWS_AS(w_stat(p("12"), 1, 3), std::out_of_range);
}

TEST_CASE("Bruhat order examples", "[bruhat]") {
    CHECK(bruhat_leq(p("123"), p("231")));
    CHECK(bruhat_leq(p("213"), p("231")));
    CHECK_FALSE(bruhat_leq(p("312"), p("231")));
    CHECK_THROWS_AS(bruhat_leq(p("12"), p("123")), std::invalid_argument);
    for (const auto& x : all_permutations(4)) {
        CHECK(bruhat_leq_oracle(x, p("4321")));
        CHECK(bruhat_leq_oracle(x, x));
    }
    CHECK_THROWS_AS(bruhat_leq_oracle(Permutation::identity(8), Permutation::identity(8)), std::invalid_argument);
}

TEST_CASE("statistic criterion matches both oracles", "[bruhat][property]") {
    for (int n = 1; n <= 5; ++n) {
        const auto all = all_permutations(n);
        for (const auto& w : all) {
            const auto below = n <= 4 ? subword_products(w) : std::set<std::vector<int>>{};
            for (const auto& wp : all) {
                const bool leq = bruhat_leq(wp, w);
                REQUIRE(leq == bruhat_leq_oracle(wp, w));
                if (n <= 4) {
                    REQUIRE(leq == below.contains(wp.images()));
                }
            }
        }
    }
}

TEST_CASE("minimal coset representatives", "[bruhat]") {
    CHECK(min_coset_reps(3, 1).size() == 3);
    CHECK(min_coset_reps(4, 0) == std::vector<Permutation>{Permutation::identity(4)});
    CHECK(min_coset_reps(4, 2).size() == 6);
    CHECK_THROWS_AS(min_coset_reps(3, 4), std::invalid_argument);

    for (int n = 0; n <= 6; ++n) {
        for (int i = 0; i <= n; ++i) {
            const auto reps = min_coset_reps(n, i);
            REQUIRE(static_cast<long>(reps.size()) == binom(n, i));
            for (const auto& w : reps) {
                REQUIRE(is_min_coset_rep(w, i));
            }
        }
    }
}

TEST_CASE("each representative is the least element of its coset", "[bruhat][property]") {
    for (int n = 1; n <= 5; ++n) {
        for (int i = 0; i <= n; ++i) {
            for (const auto& w : all_permutations(n)) {
                // coset w (S_{n-i} x S_i): sort each block of positions
                auto img = w.images();
                std::sort(img.begin(), img.end() - i);
                std::sort(img.end() - i, img.end());
                const Permutation rep(img);
                REQUIRE(is_min_coset_rep(rep, i));
                REQUIRE(bruhat_leq_oracle(rep, w));
                REQUIRE(rep.length() <= w.length());
            }
        }
    }
}

TEST_CASE("coset criteria coincide", "[bruhat][property]") {
    CHECK_THROWS_AS(coset_criteria_check(p("213"), p("123"), 1), std::invalid_argument);
    for (int n = 1; n <= 6; ++n) {
        for (int i = 0; i <= n; ++i) {
            const auto reps = min_coset_reps(n, i);
            for (const auto& w : reps) {
                const auto self = coset_criteria_check(w, w, i);
                REQUIRE((self.leq && self.front && self.back));
                for (const auto& wp : reps) {
                    const auto c = coset_criteria_check(wp, w, i);
                    REQUIRE(c.leq == c.front);
                    REQUIRE(c.front == c.back);
                }
            }
        }
    }
}
