#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bruhat/hecke.hpp"
#include "bruhat/weak_order.hpp"

using namespace bruhat;

namespace {
Perm P(const std::string& s) { return Perm::parse(s); }
HeckeElem pi(int i, int n) { return HeckeElem::basis(Perm::simple(i, n)); }
HeckeElem pibar(int i, int n) {
    return HeckeElem::basis(Perm::simple(i, n)) - HeckeElem::one(n);
}
}  // namespace

TEST_CASE("monoid product on the pi basis") {
    CHECK(pi_mul_basis(P("213"), P("213")) == P("213"));
    CHECK(pi_mul_basis(P("213"), P("132")) == P("231"));
    for (const Perm& t : all_perms(4))
        CHECK(pi_mul_basis(Perm::longest(4), t) == Perm::longest(4));
}

TEST_CASE("bilinear product") {
    HeckeElem b = pibar(1, 3) + pi(2, 3) * Rat(3, 2);
    CHECK(mul(HeckeElem::one(3), b) == b);
    CHECK(mul(pibar(1, 3), pi(1, 3)).is_zero());
    CHECK(mul(pi(1, 3), pibar(1, 3)).is_zero());
    CHECK(mul(pibar(1, 3), pibar(1, 3)) == pibar(1, 3) * Rat(-1));
}

TEST_CASE("pibar expansion") {
    CHECK(pibar_of(Perm::identity(3)) == HeckeElem::one(3));
    CHECK(pibar_of(P("213")) == pi(1, 3) - HeckeElem::one(3));
    HeckeElem expect = HeckeElem::basis(P("231")) - pi(1, 3) - pi(2, 3) +
                       HeckeElem::one(3);
    CHECK(pibar_of(P("231")) == expect);
    // independence of the reduced word: squares to the right thing (w0 case)
    for (const Perm& s : all_perms(4)) {
        HeckeElem direct = HeckeElem::one(4);
        auto w = s.reduced_word();
        for (auto it = w.rbegin(); it != w.rend(); ++it) {
            HeckeElem g = pi(*it, 4) - HeckeElem::one(4);
            direct = mul(g, direct);
        }
        CHECK(direct == pibar_of(s));
    }
}

namespace {
// Bruhat order via the subword property on one fixed reduced word.
bool bruhat_leq(const Perm& g, const Perm& s) {
    auto word = s.reduced_word();
    const int p = static_cast<int>(word.size());
    for (unsigned mask = 0; mask < (1u << p); ++mask) {
        if (__builtin_popcount(mask) != g.length()) continue;
        std::vector<int> sub;
        for (int i = 0; i < p; ++i)
            if (mask & (1u << i)) sub.push_back(word[i]);
        if (from_word(sub, s.size()) == g) return true;
    }
    return false;
}
}  // namespace

TEST_CASE("pibar triangular with unit leading coefficient") {
    for (const Perm& s : all_perms(4)) {
        HeckeElem e = pibar_of(s);
        auto top = e.terms().rbegin();
        REQUIRE(top != e.terms().rend());
        CHECK(top->first == s);
        CHECK(top->second == 1);
        // support comes from subwords, i.e. lies Bruhat-below sigma
        for (const auto& [p, c] : e.terms()) CHECK(bruhat_leq(p, s));
    }
}

TEST_CASE("zero characterization") {
    auto z = pi_pibar(P("21"), P("21"));
    CHECK(z.value.is_zero());
    CHECK_FALSE(z.nonzero);
    CHECK_FALSE(z.length_additive);
    CHECK_FALSE(z.below_w0_rho_inv);

    auto id_case = pi_pibar(Perm::identity(3), P("231"));
    CHECK(id_case.value == pibar_of(P("231")));

    auto big = pi_pibar(P("14325"), P("52314"));
    CHECK(big.nonzero);
    CHECK(big.top == compose(P("14325"), P("52314")));
    auto top = big.value.terms().rbegin();
    CHECK(top->first == big.top);
    CHECK(top->second == 1);
}

TEST_CASE("mixed relations of pi and pibar, n = 4") {
    const int n = 4;
    for (int i = 1; i + 1 < n; ++i) {
        auto p = [&](int j) { return pi(j, n); };
        auto q = [&](int j) { return pibar(j, n); };
        auto M = [](const HeckeElem& a, const HeckeElem& b, const HeckeElem& c) {
            return mul(mul(a, b), c);
        };
        CHECK(M(p(i), p(i + 1), q(i)) == M(q(i + 1), p(i), p(i + 1)));
        CHECK(M(p(i + 1), p(i), q(i + 1)) == M(q(i), p(i + 1), p(i)));
        CHECK(M(p(i), q(i + 1), q(i)) == M(q(i + 1), q(i), p(i + 1)));
        CHECK(M(p(i + 1), q(i), q(i + 1)) == M(q(i), q(i + 1), p(i)));
        CHECK(M(p(i), p(i + 1), p(i)) == M(p(i + 1), p(i), p(i + 1)));
        CHECK(M(q(i), q(i + 1), q(i)) == M(q(i + 1), q(i), q(i + 1)));
    }
    for (int i = 1; i < n; ++i)
        for (int j = i + 2; j < n; ++j) {
            CHECK(mul(pi(i, n), pi(j, n)) == mul(pi(j, n), pi(i, n)));
            CHECK(mul(pi(i, n), pibar(j, n)) == mul(pibar(j, n), pi(i, n)));
            CHECK(mul(pibar(i, n), pibar(j, n)) == mul(pibar(j, n), pibar(i, n)));
        }
}

TEST_CASE("both pi and pibar are bases (unitriangular change)") {
    // expanding pibar_sigma over sigma in (length, lex) order gives a matrix
    // with unit diagonal and support strictly below in <=_L
    for (int n = 2; n <= 4; ++n) {
        auto perms = all_perms(n);
        std::sort(perms.begin(), perms.end(), LenLex{});
        for (std::size_t k = 0; k < perms.size(); ++k) {
            HeckeElem e = pibar_of(perms[k]);
            for (const auto& [p, c] : e.terms()) {
                if (p == perms[k]) CHECK(c == 1);
                else CHECK(LenLex{}(p, perms[k]));
            }
        }
    }
}

TEST_CASE("left ideals") {
    CHECK(left_ideal_basis(HeckeElem::one(3)).dim() == 6);

    HeckeElem x = mul(HeckeElem::basis(P("14325")), pibar_of(P("52314")));
    LeftIdeal ideal = left_ideal_basis(x);
    CHECK(ideal.dim() == 2);

    // alpha = (2,1): dim equals |[213, w0 w0(alpha)]_L| = |[213, 312]_L| = 2
    HeckeElem y = mul(HeckeElem::basis(P("213")), pibar_of(P("132")));
    CHECK(left_ideal_basis(y).dim() == 2);
    CHECK(compose(Perm::longest(3), P("132")) == P("312"));
    CHECK(interval(P("213"), P("312")).size() == 2);

    // embedding dimension law on all of S_3 x S_3
    for (const Perm& s : all_perms(3))
        for (const Perm& r : all_perms(3)) {
            HeckeElem e = mul(HeckeElem::basis(s), pibar_of(r));
            Perm w0rinv = compose(Perm::longest(3), r.inverse());
            int expect = leq_left(s, w0rinv) ? interval(s, w0rinv).size() : 0;
            CHECK(left_ideal_basis(e).dim() == expect);
        }
}

TEST_CASE("printing") {
    // top term (length, lex) first, matching the display convention
    HeckeElem e = HeckeElem::basis(P("24315")) - HeckeElem::basis(P("14325"));
    CHECK(e.str() == "\xCF\x80[24315] - \xCF\x80[14325]");
    CHECK(e.json() ==
          "{\"terms\":[{\"perm\":\"24315\",\"coeff\":\"1\"},"
          "{\"perm\":\"14325\",\"coeff\":\"-1\"}]}");
}
