#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "cpar/algebra.hpp"

using namespace cpar;

TEST_CASE("generators") {
    CHECK(generator(Gen::S0, 0, 1, 2) == canonicalize({{{1}, {1}, 1}}, 2, 1, 1));
    CHECK(generator(Gen::P, 1, 1, 2) == canonicalize({{{1}, {}, 0}, {{}, {1}, 0}}, 2, 1, 1));
    CHECK(generator(Gen::E, 3, 3, 2) == identity(2, 3));
}

TEST_CASE("parameter relations") {
    const int r = 3;
    LinComb p = LinComb::of(generator(Gen::P, 1, 1, r));
    LinComb s0 = LinComb::of(generator(Gen::S0, 0, 1, r));
    LinComb pp = multiply(p, p);
    LinComb expect(r, 1, 1);
    expect.add(generator(Gen::P, 1, 1, r), MPoly::var(r, 0));
    CHECK(pp == expect);
    LinComb psp = multiply(multiply(p, s0), p);
    LinComb expect1(r, 1, 1);
    expect1.add(generator(Gen::P, 1, 1, r), MPoly::var(r, 1));
    CHECK(psp == expect1);
    LinComb id = LinComb::of(identity(r, 1));
    CHECK(multiply(id, s0) == s0);
}

TEST_CASE("multiply is associative") {
    const int r = 2, k = 2;
    auto all = enumerate_diagrams(r, k, k);
    for (size_t i = 0; i < all.size(); i += 7)
        for (size_t j = 3; j < all.size(); j += 11)
            for (size_t t = 5; t < all.size(); t += 13) {
                LinComb a = LinComb::of(all[i]);
                a += LinComb::of(all[j]);
                LinComb b = LinComb::of(all[t]);
                LinComb c = LinComb::of(all[(i + j + t) % all.size()]);
                REQUIRE(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
            }
}

TEST_CASE("presentation relations") {
    for (int k = 1; k <= 3; ++k)
        for (int r = 1; r <= 3; ++r) {
            auto rep = check_presentation(k, r);
            CHECK_MESSAGE(rep.ok(), "k=" << k << " r=" << r);
            CHECK(rep.instances > 0);
        }
}

TEST_CASE("perturbed generator violates a relation") {
    auto g = Generators::standard(2, 3);
    g.q[1] = canonicalize({{{1, 2}, {1, 2}, 1}}, 3, 2, 2);
    auto rep = check_presentation(g);
    CHECK_FALSE(rep.ok());
}

TEST_CASE("Bell counts") {
    CHECK(count_bell(0, 3) == 1);
    CHECK(count_bell(6, 2) == 2430);
    CHECK(count_bell(4, 3) == 309);
    CHECK(count_bell(2, 1) == 2);
    auto egf = egf_coefficients(3, 10);
    for (int k = 0; k <= 10; ++k) CHECK(egf[k] == count_bell(k, 3));
    for (int r = 1; r <= 3; ++r)
        for (int k = 0; k <= 2; ++k)
            CHECK(Integer(static_cast<long>(enumerate_monoid(k, r).size())) == count_bell(2 * k, r));
}

TEST_CASE("generated closure is the whole monoid") {
    CHECK(generated_closure(1, 2).size() == 6);
    CHECK(generated_closure(2, 3).size() == 309);
    CHECK(generated_closure(3, 2).size() == 2430);
}

TEST_CASE("caps are enforced") {
    Caps caps;
    caps.monoid_size = 10;
    CHECK_THROWS_AS(enumerate_monoid(2, 2, caps), CapExceeded);
}

TEST_CASE("Green classes") {
    auto M = enumerate_monoid(1, 2);
    auto J = green_classes(M, Green::J);
    std::map<int, int> sizes;
    for (int c : J) ++sizes[c];
    std::multiset<int> s;
    for (auto& [c, n] : sizes) s.insert(n);
    CHECK(s == std::multiset<int>{2, 4});

    auto M2 = enumerate_monoid(2, 2);
    auto J2 = green_classes(M2, Green::J);
    for (size_t a = 0; a < M2.size(); ++a)
        for (size_t b = 0; b < M2.size(); ++b)
            REQUIRE((J2[a] == J2[b]) == (rank(M2[a]) == rank(M2[b])));

    auto L = green_classes(M, Green::L);
    Diagram x = canonicalize({{{1}, {}, 0}, {{}, {1}, 0}}, 2, 1, 1);
    Diagram y = canonicalize({{{1}, {}, 1}, {{}, {1}, 0}}, 2, 1, 1);
    auto ix = std::find(M.begin(), M.end(), x) - M.begin();
    auto iy = std::find(M.begin(), M.end(), y) - M.begin();
    CHECK(L[ix] == L[iy]);
}
