#include <doctest.h>

#include "cpar/fixtures.hpp"
#include "cpar/groupoid.hpp"

using namespace cpar;

TEST_CASE("identity composition") {
    Diagram D = canonicalize({{{1}, {1}, 1}, {{2}, {2}, 0}}, 2, 2, 2);
    auto c = gcompose(D, D);
    REQUIRE_FALSE(c.is_zero());
    CHECK(*c.d == D);
}

TEST_CASE("color mismatch gives zero") {
    Diagram a = canonicalize({{{1}, {1}, 1}}, 2, 1, 1);
    Diagram b = canonicalize({{{1}, {1}, 0}}, 2, 1, 1);
    CHECK(gcompose(a, b).is_zero());
    CHECK(top_colors(a) == ColorSequence{1});
    CHECK(bottom_colors(b) == ColorSequence{0});
}

TEST_CASE("Psi of single strands") {
    const int r = 2;
    Diagram plain = canonicalize({{{1}, {1}, 0}}, r, 1, 1);
    Diagram twisted = canonicalize({{{1}, {1}, 1}}, r, 1, 1);
    GSum a = psi(plain), b = psi(twisted);
    GSum ea, eb;
    gsum_add(ea, plain, Cyc(r, 1L));
    gsum_add(ea, twisted, Cyc(r, 1L));
    gsum_add(eb, plain, Cyc(r, 1L));
    gsum_add(eb, twisted, Cyc(r, -1L));
    CHECK(a == ea);
    CHECK(b == eb);
}

TEST_CASE("Psi worked figure") {
    auto ex = fixtures::psi();
    CHECK(ex.image.size() == 8);
    CHECK(psi(ex.d) == ex.image);
}

TEST_CASE("Psi is a functor on random pairs") {
    for (int r = 1; r <= 3; ++r) {
        auto rep = psi_hom_check(300, 4, r, 17 + r);
        CHECK_MESSAGE(rep.ok(), rep.first_failure);
        CHECK(rep.samples == 300);
    }
}

TEST_CASE("Psi is invertible on small hom spaces") {
    for (int r = 1; r <= 3; ++r)
        for (int k = 0; k <= 2; ++k)
            for (int l = k; l <= 3; ++l) {
                auto d = psi_dimension_check(k, l, r);
                CHECK(d.colored == d.groupoid);
                CHECK(d.rank == d.colored);
            }
}

TEST_CASE("hom spaces") {
    auto h = hom_g({0}, {0, 0}, 2);
    CHECK(h.size() == 3);
    for (const auto& D : h) {
        CHECK(top_colors(D) == ColorSequence{0});
        CHECK(bottom_colors(D) == ColorSequence{0, 0});
    }
}
