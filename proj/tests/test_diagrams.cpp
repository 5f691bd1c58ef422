#include <doctest.h>

#include <random>

#include "cpar/diagrams.hpp"
#include "cpar/fixtures.hpp"

using namespace cpar;

namespace {

Monomial add(Monomial a, const Monomial& b) {
    for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

}  // namespace

TEST_CASE("canonicalize sorts and reduces colors") {
    Diagram a = canonicalize({{{2}, {1}, 4}, {{1}, {2}, 0}}, 3, 2, 2);
    Diagram b = canonicalize({{{1}, {2}, 0}, {{2}, {1}, 1}}, 3, 2, 2);
    CHECK(a == b);
}

TEST_CASE("canonicalize rejects malformed vertex sets") {
    CHECK_THROWS_AS(canonicalize({{{1}, {}, 0}}, 2, 2, 0), DiagramError);
    CHECK_THROWS_AS(canonicalize({{{1}, {}, 0}, {{1}, {}, 0}}, 2, 1, 0), DiagramError);
    CHECK_THROWS_AS(canonicalize({{{3}, {}, 0}}, 2, 1, 0), DiagramError);
    CHECK_THROWS_AS(canonicalize({{{}, {}, 0}}, 2, 0, 0), DiagramError);
}

TEST_CASE("compose with identity") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 50; ++t) {
        Diagram d = random_diagram(3, 3, 2, rng);
        auto left = compose(identity(3, 3), d);
        auto right = compose(d, identity(3, 2));
        CHECK(left.d == d);
        CHECK(right.d == d);
        CHECK(left.m == Monomial(3, 0));
        CHECK(right.m == Monomial(3, 0));
    }
}

TEST_CASE("self-composition of two singletons removes one trivial loop") {
    Diagram d = canonicalize({{{1}, {}, 1}, {{}, {1}, 1}}, 2, 1, 1);
    auto c = compose(d, d);
    CHECK(c.d == d);
    CHECK(c.m == Monomial{1, 0});
}

TEST_CASE("composition worked example") {
    auto ex = fixtures::composition();
    auto c = compose(ex.d1, ex.d2);
    CHECK(c.d == ex.expected);
    CHECK(c.m == ex.monomial);
    CHECK(ex.drawn_color_34 != 1);
}

TEST_CASE("compose rejects arity mismatch") {
    CHECK_THROWS_AS(compose(identity(2, 2), identity(2, 3)), DiagramError);
    CHECK_THROWS_AS(compose(identity(2, 2), identity(3, 2)), DiagramError);
}

TEST_CASE("rank") {
    CHECK(rank(identity(2, 4)) == 4);
    CHECK(rank(canonicalize({{{1}, {}, 0}, {{2}, {}, 1}, {{}, {1}, 0}}, 2, 2, 1)) == 0);
    auto ex = fixtures::composition();
    CHECK(rank(ex.d1) == 3);
    // r = 5, (7,8) diagram with five propagating parts
    Diagram d = canonicalize({{{1}, {2}, 1},
                              {{2}, {1}, 0},
                              {{3, 4}, {5, 4}, 0},
                              {{5}, {3}, 3},
                              {{6}, {7, 8}, 2},
                              {{7}, {}, 0},
                              {{}, {6}, 1}},
                             5, 7, 8);
    CHECK(rank(d) == 5);
}

TEST_CASE("tensor places diagrams side by side") {
    Diagram a = canonicalize({{{1}, {}, 1}}, 2, 1, 0);
    Diagram b = canonicalize({{{}, {1}, 0}}, 2, 0, 1);
    Diagram t = tensor(a, b);
    CHECK(t == canonicalize({{{1}, {}, 1}, {{}, {1}, 0}}, 2, 1, 1));
    CHECK(tensor(identity(3, 2), identity(3, 1)) == identity(3, 3));
}

TEST_CASE("flips") {
    Diagram d = canonicalize({{{1}, {1}, 1}}, 3, 1, 1);
    CHECK(flip_invert(d) == canonicalize({{{1}, {1}, 2}}, 3, 1, 1));
    CHECK(flip_keep(d) == d);
    std::mt19937_64 rng(11);
    for (int t = 0; t < 100; ++t) {
        Diagram e = random_diagram(4, 3, 2, rng);
        Diagram fi = flip_invert(e);
        CHECK(fi.k() == 2);
        CHECK(fi.l() == 3);
        CHECK(flip_invert(fi) == e);
        CHECK(flip_keep(flip_keep(e)) == e);
        CHECK(rank(fi) == rank(e));
    }
}

TEST_CASE("associativity with scalars, exhaustive small cases") {
    for (int r = 1; r <= 2; ++r)
        for (int k = 0; k <= 2; ++k) {
            auto A = enumerate_diagrams(r, k, k);
            auto B = enumerate_diagrams(r, k, 1);
            auto C = enumerate_diagrams(r, 1, k);
            for (const auto& a : A)
                for (const auto& b : B)
                    for (const auto& c : C) {
                        auto ab = compose(a, b);
                        auto ab_c = compose(ab.d, c);
                        auto bc = compose(b, c);
                        auto a_bc = compose(a, bc.d);
                        REQUIRE(ab_c.d == a_bc.d);
                        REQUIRE(add(ab.m, ab_c.m) == add(bc.m, a_bc.m));
                    }
        }
}

TEST_CASE("associativity with scalars, random") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 300; ++t) {
        int r = 1 + static_cast<int>(rng() % 3);
        int k = static_cast<int>(rng() % 5), l = static_cast<int>(rng() % 5);
        int m = static_cast<int>(rng() % 5), n = static_cast<int>(rng() % 5);
        Diagram a = random_diagram(r, k, l, rng), b = random_diagram(r, l, m, rng),
                c = random_diagram(r, m, n, rng);
        auto ab = compose(a, b), bc = compose(b, c);
        auto x = compose(ab.d, c), y = compose(a, bc.d);
        REQUIRE(x.d == y.d);
        REQUIRE(add(ab.m, x.m) == add(bc.m, y.m));
    }
}

TEST_CASE("interchange law") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 200; ++t) {
        int r = 1 + static_cast<int>(rng() % 3);
        Diagram a = random_diagram(r, 2, 1, rng), b = random_diagram(r, 1, 2, rng);
        Diagram c = random_diagram(r, 1, 2, rng), d = random_diagram(r, 2, 2, rng);
        auto lhs = compose(tensor(a, c), tensor(b, d));
        auto ab = compose(a, b), cd = compose(c, d);
        REQUIRE(lhs.d == tensor(ab.d, cd.d));
        REQUIRE(lhs.m == add(ab.m, cd.m));
    }
}

TEST_CASE("triangular factorization worked example") {
    auto ex = fixtures::triangular();
    CHECK(is_normal_upward(ex.up));
    CHECK(is_colored_permutation(ex.perm));
    CHECK(is_normal_downward(ex.down));
    auto c1 = compose(ex.up, ex.perm);
    auto c2 = compose(c1.d, ex.down);
    CHECK(c2.d == ex.d);
    auto f = factor_triangular(ex.d);
    CHECK(f.up == ex.up);
    CHECK(f.perm == ex.perm);
    CHECK(f.down == ex.down);
}

TEST_CASE("triangular factorization of identity and random diagrams") {
    auto f = factor_triangular(identity(2, 3));
    CHECK(f.up == identity(2, 3));
    CHECK(f.perm == identity(2, 3));
    CHECK(f.down == identity(2, 3));
    std::mt19937_64 rng(9);
    for (int t = 0; t < 200; ++t) {
        int r = 1 + static_cast<int>(rng() % 3);
        Diagram d = random_diagram(r, static_cast<int>(rng() % 5), static_cast<int>(rng() % 5), rng);
        auto g = factor_triangular(d);
        CHECK(is_normal_upward(g.up));
        CHECK(is_colored_permutation(g.perm));
        CHECK(is_normal_downward(g.down));
        auto c = compose(compose(g.up, g.perm).d, g.down);
        REQUIRE(c.d == d);
        CHECK(c.m == Monomial(r, 0));
    }
}

TEST_CASE("enumeration counts") {
    CHECK(enumerate_diagrams(2, 1, 1).size() == 6);
    CHECK(enumerate_diagrams(2, 2, 2).size() == 94);
    CHECK(enumerate_diagrams(1, 1, 1).size() == 2);
    CHECK(enumerate_diagrams(3, 0, 0).size() == 1);
}
