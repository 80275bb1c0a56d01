#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bruhat/qsym.hpp"

using namespace bruhat;

namespace {
Composition C(const std::string& s) { return Composition::parse(s); }
}

TEST_CASE("set/comp round trip, all n <= 8") {
    for (int n = 0; n <= 8; ++n) {
        auto all = all_compositions(n);
        CHECK(static_cast<int>(all.size()) == (n == 0 ? 1 : 1 << (n - 1)));
        for (const auto& a : all) {
            CHECK(Composition::of_set(a.to_set(), n) == a);
            CHECK(a.transpose() == a.reverse().complement());
            CHECK(a.transpose() == a.complement().reverse());
        }
    }
}

TEST_CASE("involutions") {
    CHECK(C("3,2").reverse() == C("2,3"));
    CHECK(C("2,1").complement() == C("1,2"));
    CHECK(C("2,1").transpose() == C("2,1"));
}

TEST_CASE("comp of a permutation") {
    CHECK(comp_of_perm(Perm::identity(3)) == C("3"));
    CHECK(comp_of_perm(Perm::parse("24315")) == C("1,2,2"));
    CHECK(comp_of_perm(Perm::longest(3)) == C("1,1,1"));
}

TEST_CASE("f_expand") {
    Poly one = f_expand(Composition(), 3);
    CHECK(one.size() == 1);
    CHECK(one.begin()->second == 1);

    Poly p = f_expand(C("1,1"), 2);
    CHECK(p.size() == 1);
    CHECK(p.at({1, 1}) == 1);

    Poly q = f_expand(C("2"), 2);
    CHECK(q.size() == 3);
    CHECK(q.at({2, 0}) == 1);
    CHECK(q.at({1, 1}) == 1);
    CHECK(q.at({0, 2}) == 1);
}

TEST_CASE("f_product small goldens") {
    QSym f1 = QSym::fundamental(C("1"));
    QSym f2 = QSym::fundamental(C("2"));
    CHECK(f_product(QSym::one(), f2) == f2);

    QSym sq = f_product(f1, f1);
    QSym expect;
    expect.add(C("2"), 1);
    expect.add(C("1,1"), 1);
    CHECK(sq == expect);

    QSym p = f_product(f1, f2);
    QSym expect2;
    expect2.add(C("3"), 1);
    expect2.add(C("1,2"), 1);
    expect2.add(C("2,1"), 1);
    CHECK(p == expect2);
}

TEST_CASE("f_product commutative and associative on degree <= 3") {
    std::vector<Composition> small;
    for (int n = 1; n <= 3; ++n)
        for (const auto& a : all_compositions(n)) small.push_back(a);
    for (const auto& a : small)
        for (const auto& b : small) {
            QSym ab = f_product(QSym::fundamental(a), QSym::fundamental(b));
            QSym ba = f_product(QSym::fundamental(b), QSym::fundamental(a));
            CHECK(ab == ba);
        }
    for (const auto& a : small)
        for (const auto& b : small)
            for (const auto& c : small) {
                if (a.size() + b.size() + c.size() > 6) continue;
                QSym l = f_product(f_product(QSym::fundamental(a), QSym::fundamental(b)),
                                   QSym::fundamental(c));
                QSym r = f_product(QSym::fundamental(a),
                                   f_product(QSym::fundamental(b), QSym::fundamental(c)));
                CHECK(l == r);
            }
}

TEST_CASE("product agrees with the polynomial oracle, |a|+|b| <= 5") {
    for (int da = 1; da <= 2; ++da)
        for (int db = 1; db <= 5 - da; ++db)
            for (const auto& a : all_compositions(da))
                for (const auto& b : all_compositions(db)) {
                    int d = da + db;
                    Poly lhs = poly_mul(f_expand(a, d), f_expand(b, d));
                    Poly rhs;
                    QSym prod = f_product(QSym::fundamental(a), QSym::fundamental(b));
                    for (const auto& [g, c] : prod.coeffs()) {
                        CHECK(c.get_den() == 1);
                        Poly fg = f_expand(g, d);
                        for (const auto& [e, cf] : fg) rhs[e] += c.get_num() * cf;
                    }
                    CHECK(lhs == rhs);
                }
}

TEST_CASE("qsym automorphisms") {
    QSym f21 = QSym::fundamental(C("2,1"));
    CHECK(qsym_automorphism(f21, QSymAuto::Psi) == QSym::fundamental(C("1,2")));
    CHECK(qsym_automorphism(QSym::fundamental(C("3,2")), QSymAuto::Rho) ==
          QSym::fundamental(C("2,3")));
    for (int n = 1; n <= 5; ++n)
        for (const auto& a : all_compositions(n)) {
            QSym f = QSym::fundamental(a);
            CHECK(qsym_automorphism(qsym_automorphism(f, QSymAuto::Omega),
                                    QSymAuto::Omega) == f);
        }
}

TEST_CASE("printing") {
    QSym x;
    x.add(C("3,2"), 1);
    x.add(C("1,1,3"), 2);
    CHECK(x.str() == "2*F[1,1,3] + F[3,2]");
    CHECK(x.json() ==
          "{\"F\":[{\"comp\":[1,1,3],\"coeff\":\"2\"},{\"comp\":[3,2],\"coeff\":\"1\"}]}");
}

TEST_CASE("generalized compositions") {
    GeneralizedComposition g = GeneralizedComposition::parse("2,1|3");
    CHECK(g.size() == 6);
    CHECK(g.blocks().size() == 2);
    CHECK(g.complement().str() == "1,2|1,1,1");
    // blockwise w0: set((2,1)) = {2}, block (3) has empty set
    CHECK(g.w0() == star(parabolic_longest({2}, 3), Perm::identity(3)));
    // single block reduces to the parabolic longest element
    GeneralizedComposition one = GeneralizedComposition::parse("2,2");
    CHECK(one.w0() == w0_of(C("2,2")));
}
