#include <doctest.h>

#include <random>

#include "cpar/scalars.hpp"

using namespace cpar;

TEST_CASE("roots of unity") {
    CHECK(Cyc::zeta_pow(1, 0).is_one());
    CHECK(Cyc::zeta_pow(2, 1) == Cyc(2, -1L));
    CHECK(Cyc::zeta_pow(3, 1) + Cyc::zeta_pow(3, 2) == Cyc(3, -1L));
    for (int r = 1; r <= 8; ++r) {
        CHECK(Cyc::zeta_pow(r, r).is_one());
        for (int j = 1; j < r; ++j) CHECK_FALSE(Cyc::zeta_pow(r, j).is_one());
        CHECK(Cyc::zeta_pow(r, -1) == Cyc::zeta_pow(r, r - 1));
    }
}

TEST_CASE("field axioms on random elements") {
    std::mt19937_64 rng(1);
    auto rnd = [&](int r) {
        Cyc x(r);
        for (int j = 0; j < r; ++j) {
            Cyc t = Cyc::zeta_pow(r, j);
            t *= Cyc(r, Rational(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 3)));
            x += t;
        }
        return x;
    };
    for (int r : {1, 2, 3, 4, 5, 6}) {
        for (int t = 0; t < 20; ++t) {
            Cyc a = rnd(r), b = rnd(r), c = rnd(r);
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a * b) * c == a * (b * c));
            if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
            CHECK(a.conj().conj() == a);
            CHECK((a * b).conj() == a.conj() * b.conj());
        }
    }
}

TEST_CASE("division by zero throws") {
    CHECK_THROWS_AS(Cyc(3, 1L) / Cyc(3), ScalarError);
}

TEST_CASE("polynomial evaluation") {
    MPoly y0 = MPoly::var(2, 0), y1 = MPoly::var(2, 1);
    std::vector<Cyc> p5 = {Cyc(2, 5L), Cyc(2, 0L)};
    CHECK(y0.eval(p5) == Cyc(2, 5L));
    MPoly p = y0 * y0 - y1 * y1;
    CHECK(p.eval({Cyc(2, 2L), Cyc(2, 1L)}) == Cyc(2, 3L));
    MPoly m = MPoly::monomial(5, {0, 0, 1, 2, 0}, Cyc(5, 1L));
    std::vector<Cyc> ones(5, Cyc(5, 1L));
    CHECK(m.eval(ones) == Cyc(5, 1L));
    CHECK_THROWS(y0.eval({Cyc(2, 1L)}));
}

TEST_CASE("leading coefficients") {
    MPoly y0 = MPoly::var(2, 0), y1 = MPoly::var(2, 1);
    auto [d, c] = (y0 * y0 - y1 * y1).leading_coeff_in(0);
    CHECK(d == 2);
    CHECK(c == MPoly::constant(2, 1));
    auto [d2, c2] = (y1 * y1 * y1).leading_coeff_in(0);
    CHECK(d2 == 0);
    CHECK(c2 == y1 * y1 * y1);
    CHECK_THROWS(MPoly(2).leading_coeff_in(0));
}

TEST_CASE("ring axioms and exact division") {
    MPoly a = MPoly::var(3, 0) + MPoly::constant(3, 2);
    MPoly b = MPoly::var(3, 1) * MPoly::var(3, 2) - MPoly(3, Cyc::zeta_pow(3, 1));
    MPoly c = MPoly::var(3, 1) + MPoly::var(3, 0) * MPoly::var(3, 0);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b).divexact(b) == a);
    CHECK((a - a).is_zero());
    CHECK((a * b * c).total_degree() == 5);
    CHECK((a * c).degree_in(0) == 3);
    CHECK_THROWS_AS(c.divexact(a), ScalarError);
}

TEST_CASE("determinants") {
    CycMatrix m = {{Cyc(3, 1L), Cyc(3, 2L)}, {Cyc(3, 3L), Cyc(3, 4L)}};
    CHECK(det(m, 3) == Cyc(3, -2L));
    CHECK(rank(m) == 2);
    CycMatrix s = {{Cyc(3, 1L), Cyc(3, 2L)}, {Cyc(3, 2L), Cyc(3, 4L)}};
    CHECK(det(s, 3).is_zero());
    CHECK(rank(s) == 1);
    MPoly y0 = MPoly::var(2, 0), y1 = MPoly::var(2, 1);
    PolyMatrix g = {{y0, y1}, {y1, y0}};
    CHECK(det(g, 2) == y0 * y0 - y1 * y1);
}
