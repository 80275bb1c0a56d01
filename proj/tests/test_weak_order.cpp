#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "bruhat/weak_order.hpp"

using namespace bruhat;

namespace {
Perm P(const std::string& s) { return Perm::parse(s); }

// word-shuffle oracle: interleavings of a and (b shifted by m)
void word_shuffles(const std::vector<int>& a, const std::vector<int>& b,
                   std::vector<int>& cur, std::size_t i, std::size_t j,
                   std::set<std::vector<int>>& out) {
    if (i == a.size() && j == b.size()) {
        out.insert(cur);
        return;
    }
    if (i < a.size()) {
        cur.push_back(a[i]);
        word_shuffles(a, b, cur, i + 1, j, out);
        cur.pop_back();
    }
    if (j < b.size()) {
        cur.push_back(b[j]);
        word_shuffles(a, b, cur, i, j + 1, out);
        cur.pop_back();
    }
}
}  // namespace

TEST_CASE("leq_left") {
    for (const Perm& r : all_perms(3)) CHECK(leq_left(Perm::identity(3), r));
    CHECK(leq_left(P("14325"), P("24315")));
    CHECK_FALSE(leq_left(P("21"), P("12")));
}

TEST_CASE("interval basics") {
    Interval one = interval(P("231"), P("231"));
    CHECK(one.size() == 1);

    Interval two = interval(P("14325"), P("24315"));
    CHECK(two.size() == 2);
    REQUIRE(two.edges.size() == 1);
    CHECK(two.edges[0].color == 1);
    CHECK(two.vertices[two.edges[0].from] == P("14325"));
    CHECK(two.vertices[two.edges[0].to] == P("24315"));

    CHECK(interval(P("1234"), P("3421")).size() == 12);
    CHECK_THROWS_AS(interval(P("21"), P("12")), std::domain_error);
}

TEST_CASE("interval vertices are rank graded and canonical") {
    Interval iv = interval(P("1234"), P("4231"));
    for (int k = 1; k < iv.size(); ++k) {
        CHECK(iv.vertices[k - 1].length() <= iv.vertices[k].length());
    }
    for (const auto& e : iv.edges) {
        CHECK(iv.vertices[e.to].length() == iv.vertices[e.from].length() + 1);
        CHECK(iv.vertices[e.from].lmul_s(e.color) == iv.vertices[e.to]);
    }
}

TEST_CASE("shuffle sets") {
    auto s11 = shuffle_set(P("1"), P("1"));
    CHECK(s11.size() == 2);

    // Example: [12,12] sh [12,21] = [1234, 3421], 12 elements
    std::set<std::vector<int>> seen;
    for (const Perm& a : interval(P("12"), P("12")).vertices)
        for (const Perm& b : interval(P("12"), P("21")).vertices)
            for (const Perm& g : shuffle_set(a, b)) seen.insert(g.word());
    Interval iv = interval(P("1234"), P("3421"));
    CHECK(seen.size() == 12);
    for (const Perm& g : iv.vertices) CHECK(seen.count(g.word()));

    // standardization characterization
    for (const Perm& a : all_perms(2))
        for (const Perm& b : all_perms(2)) {
            auto sh = shuffle_set(a, b);
            std::set<std::vector<int>> by_st;
            for (const Perm& g : all_perms(4))
                if (standardize(g, 1, 2) == a && standardize(g, 3, 4) == b)
                    by_st.insert(g.word());
            CHECK(by_st.size() == sh.size());
            for (const Perm& g : sh) CHECK(by_st.count(g.word()));
        }

    // inverse-word characterization
    for (const Perm& a : all_perms(2))
        for (const Perm& b : all_perms(2)) {
            std::vector<int> bw = b.inverse().word();
            for (int& v : bw) v += 2;
            std::set<std::vector<int>> words;
            std::vector<int> cur;
            word_shuffles(a.inverse().word(), bw, cur, 0, 0, words);
            std::set<std::vector<int>> expected;
            for (const auto& w : words) expected.insert(Perm(w).inverse().word());
            auto sh = shuffle_set(a, b);
            CHECK(expected.size() == sh.size());
            for (const Perm& g : sh) CHECK(expected.count(g.word()));
        }
}

TEST_CASE("lemma: shuffles of intervals are intervals") {
    for (int m = 1; m <= 2; ++m)
        for (int n = 1; n + m <= 4; ++n)
            for (const auto& [s1, r1] : comparable_pairs(m))
                for (const auto& [s2, r2] : comparable_pairs(n)) {
                    std::set<std::vector<int>> shuffled;
                    for (const Perm& a : interval(s1, r1).vertices)
                        for (const Perm& b : interval(s2, r2).vertices)
                            for (const Perm& g : shuffle_set(a, b))
                                shuffled.insert(g.word());
                    Interval iv = interval(star(s1, s2), ostar(r1, r2));
                    CHECK(static_cast<int>(shuffled.size()) == iv.size());
                    for (const Perm& g : iv.vertices) CHECK(shuffled.count(g.word()));
                }
}

TEST_CASE("perm_J and perm^J") {
    CHECK(perm_lower({2, 3}, 4) == P("3124"));
    CHECK(perm_upper({2, 3}, 4) == P("4213"));
    CHECK(perm_lower({1, 2, 3}, 5) == Perm::identity(5));
}

TEST_CASE("J-interval identity, m+n <= 5") {
    for (int N = 2; N <= 5; ++N) {
        Interval whole = interval(Perm::identity(N), Perm::longest(N));
        for (int m = 1; m < N; ++m) {
            std::vector<int> J(m);
            for (int i = 0; i < m; ++i) J[i] = i + 1;
            while (true) {
                auto direct = frak_interval(whole, J);
                Interval frame = interval(perm_lower(J, N), perm_upper(J, N));
                CHECK(static_cast<int>(direct.size()) == frame.size());
                for (const Perm& g : direct) CHECK(frame.contains(g));
                int i = m - 1;
                while (i >= 0 && J[i] == N - (m - 1 - i)) --i;
                if (i < 0) break;
                ++J[i];
                for (int j = i + 1; j < m; ++j) J[j] = J[j - 1] + 1;
            }
        }
    }
}

TEST_CASE("restriction data reproduces the paper example") {
    auto blocks = restriction_data(P("2134"), P("4312"), 2);
    REQUIRE(blocks.size() == 3);
    CHECK(blocks[0].J == std::vector<int>{1, 2});
    CHECK(blocks[1].J == std::vector<int>{2, 3});
    CHECK(blocks[2].J == std::vector<int>{3, 4});
    CHECK(blocks[0].sigma_J == P("2134"));
    CHECK(blocks[0].rho_J == P("2134"));
    CHECK(blocks[1].sigma_J == P("3124"));
    CHECK(blocks[1].rho_J == P("4213"));
    CHECK(blocks[2].sigma_J == P("4312"));
    CHECK(blocks[2].rho_J == P("4312"));

    auto fi = frak_interval(interval(P("2134"), P("4312")), {2, 3});
    std::set<std::vector<int>> got;
    for (const Perm& g : fi) got.insert(g.word());
    std::set<std::vector<int>> expect = {P("3124").word(), P("4123").word(),
                                         P("3214").word(), P("4213").word()};
    CHECK(got == expect);
}

TEST_CASE("interval partition property, exhaustive S_4") {
    for (const auto& [s, r] : comparable_pairs(4)) {
        Interval iv = interval(s, r);
        for (int m = 1; m < 4; ++m) {
            std::vector<int> count(iv.size(), 0);
            for (const auto& blk : restriction_data(s, r, m)) {
                Interval frame = interval(blk.sigma_J, blk.rho_J);
                for (const Perm& g : frame.vertices) {
                    int idx = iv.index_of(g);
                    REQUIRE(idx >= 0);
                    ++count[idx];
                }
            }
            for (int c : count) CHECK(c == 1);
        }
    }
}

TEST_CASE("split") {
    CHECK(split(P("58326147"), 3) == std::make_pair(P("321"), P("25314")));
    CHECK(split(star(P("21"), P("132")), 2) == std::make_pair(P("21"), P("132")));
    CHECK(split(P("3412"), 2) == std::make_pair(P("12"), P("12")));
}

TEST_CASE("descent preserving isomorphism") {
    Interval a = interval(P("14325"), P("24315"));
    auto self = descent_preserving_iso(a, a);
    REQUIRE(self);
    for (std::size_t i = 0; i < self->size(); ++i) CHECK((*self)[i] == (int)i);

    Interval b = interval(P("41352"), P("42351"));
    CHECK(descent_preserving_iso(a, b));

    Interval c = interval(P("45312"), P("45321"));
    CHECK_FALSE(descent_preserving_iso(a, c));
}

TEST_CASE("serialization shapes") {
    Interval iv = interval(P("14325"), P("24315"));
    CHECK(iv.json() ==
          "{\"bottom\":\"14325\",\"top\":\"24315\",\"vertices\":[\"14325\",\"24315\"],"
          "\"edges\":[[0,1,1]]}");
    std::string dot = iv.dot();
    CHECK(dot.find("label=\"14325\"") != std::string::npos);
    CHECK(dot.find("-> v1 [label=\"1\"]") != std::string::npos);
}
