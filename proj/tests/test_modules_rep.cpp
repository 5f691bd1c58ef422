#include <doctest.h>

#include "cpar/algebra.hpp"
#include "cpar/modules_rep.hpp"

using namespace cpar;

TEST_CASE("cross sections") {
    CHECK(enumerate_cross_section(1, 1, 2).size() == 1);
    auto s = enumerate_cross_section(1, 0, 2);
    CHECK(s.size() == 2);
    for (const auto& d : s) {
        CHECK(in_cross_section(d, 0));
        CHECK(in_L(d, 0));
    }
    CHECK(in_cross_section(identity(3, 2), 2));
    CHECK_FALSE(in_cross_section(canonicalize({{{1}, {1}, 1}}, 2, 1, 1), 1));
    CHECK(in_L(canonicalize({{{1}, {1}, 1}}, 2, 1, 1), 1));
}

TEST_CASE("L factorization roundtrip") {
    for (int r = 1; r <= 2; ++r)
        for (int k = 1; k <= 3; ++k)
            for (int i = 0; i <= k; ++i)
                for_each_diagram(r, k, k, [&](const Diagram& D) {
                    if (!in_L(D, i)) return;
                    auto f = factor_L(D, i);
                    CHECK(in_cross_section(f.d, i));
                    REQUIRE(mul(f.d, embed_group(f.g, k, r)) == D);
                });
    CHECK_THROWS_AS(factor_L(canonicalize({{{1}, {}, 0}, {{}, {1}, 1}}, 2, 1, 1), 0), ModuleError);
}

TEST_CASE("one-dimensional representations") {
    WElt z{{1}, {0}};
    CHECK(MatrixRep::get({{1}, {}}, 2).dim() == 1);
    CHECK(MatrixRep::get({{1}, {}}, 2).of(z)[0][0] == Cyc(2, 1L));
    CHECK(MatrixRep::get({{}, {1}}, 2).of(z)[0][0] == Cyc(2, -1L));
}

TEST_CASE("Specht matrices") {
    CHECK(specht_dim({2, 1}) == 2);
    CHECK(specht_dim({3, 2}) == 5);
    auto m = specht_matrix({2, 1}, {1, 0, 2}, 1);
    auto sq = mat_mul(m, m, 1);
    CHECK(sq == CycMatrix{{Cyc(1, 1L), Cyc(1, 0L)}, {Cyc(1, 0L), Cyc(1, 1L)}});
}

TEST_CASE("representations are homomorphisms with the right characters") {
    for (auto [r, n] : std::vector<std::pair<int, int>>{{1, 3}, {2, 2}, {3, 2}, {2, 3}}) {
        for (const auto& lam : multipartitions(r, n)) {
            const auto& rho = MatrixRep::get(lam, r);
            const auto& G = rho.group();
            for (int a = 0; a < G.order(); ++a) {
                Cyc tr(r);
                for (int i = 0; i < rho.dim(); ++i) tr += rho.of(a)[i][i];
                REQUIRE(tr == G.character(lam, G.elements()[a]));
            }
            for (int a = 0; a < G.order(); a += 5)
                for (int b = 0; b < G.order(); b += 3)
                    REQUIRE(mat_mul(rho.of(a), rho.of(b), r) == rho.of(static_cast<int>(G.mul(a, b))));
        }
    }
}

TEST_CASE("primitive idempotents") {
    for (const auto& lam : multipartitions(2, 2)) {
        const auto& G = WreathGroup::get(2, 2);
        auto e = primitive_idempotent(lam, 2);
        CHECK(ga_mul(G, e, e) == e);
    }
}

TEST_CASE("cell module action") {
    CellModule W(2, {{1}, {}}, 2);
    auto id = W.act(identity(2, 2));
    for (int a = 0; a < W.dim(); ++a)
        for (int b = 0; b < W.dim(); ++b) CHECK(id[a][b] == MPoly::constant(2, a == b ? 1 : 0));

    const int r = 2;
    CellModule V(1, {{}, {}}, r);
    Diagram p = canonicalize({{{1}, {}, 0}, {{}, {1}, 0}}, r, 1, 1);
    auto m = V.act(p);
    auto top_color = [](const Diagram& d) {
        for (const auto& b : d.blocks())
            if (!b.top.empty()) return b.c;
        return -1;
    };
    int d0 = -1;
    for (int a = 0; a < V.dim(); ++a)
        if (top_color(V.cross_section()[a]) == 0) d0 = a;
    REQUIRE(d0 >= 0);
    for (int a = 0; a < V.dim(); ++a) CHECK(m[d0][a] == MPoly::var(r, top_color(V.cross_section()[a])));

    CellModule U(1, {{1}, {}}, r);
    auto z = U.act(p);
    CHECK(z[0][0].is_zero());
}

TEST_CASE("action is multiplicative") {
    const int r = 2, k = 2;
    auto all = enumerate_diagrams(r, k, k);
    for (const auto& lam : std::vector<Multipartition>{{{}, {}}, {{1}, {}}, {{}, {1}}, {{1, 1}, {}}}) {
        CellModule W(k, lam, r);
        for (size_t i = 0; i < all.size(); i += 13)
            for (size_t j = 1; j < all.size(); j += 17) {
                auto c = compose(all[i], all[j]);
                PolyMatrix lhs = W.act(c.d);
                MPoly scal = monomial_poly(r, c.m);
                auto A = W.act(all[i]), B = W.act(all[j]);
                for (int a = 0; a < W.dim(); ++a)
                    for (int b = 0; b < W.dim(); ++b) {
                        MPoly s(r);
                        for (int t = 0; t < W.dim(); ++t) s += A[a][t] * B[t][b];
                        REQUIRE(s == lhs[a][b] * scal);
                    }
            }
    }
}

TEST_CASE("Gram matrices") {
    const int r = 2;
    MPoly y0 = MPoly::var(r, 0), y1 = MPoly::var(r, 1);
    auto g = gram_matrix(1, {{}, {}}, r);
    CHECK(g.G == PolyMatrix{{y0, y1}, {y1, y0}});
    CHECK(gram_det(1, {{}, {}}, r) == y0 * y0 - y1 * y1);
    CHECK(gram_matrix(1, {{1}, {}}, r).G == PolyMatrix{{MPoly::constant(r, 1)}});
    auto [deg, lc] = gram_det(1, {{}, {}}, r).leading_coeff_in(0);
    CHECK(deg == 2);
    CHECK(lc == MPoly::constant(r, 1));
}

TEST_CASE("leading coefficient of Gram determinants") {
    for (int r = 1; r <= 3; ++r)
        for (int k = 1; k <= 2; ++k)
            for (int i = 0; i <= k; ++i)
                for (const auto& lam : multipartitions(r, i)) {
                    MPoly d = gram_det(k, lam, r);
                    REQUIRE_FALSE(d.is_zero());
                    auto lc = d.leading_coeff_in(0).second;
                    CHECK_MESSAGE(lc == MPoly::constant(r, 1), "k=" << k << " " << to_string(lam));
                }
}

TEST_CASE("semisimplicity") {
    const int r = 2;
    auto a = semisimplicity_certificate(1, r, {Cyc(r, 2L), Cyc(r, 1L)});
    CHECK(a.semisimple);
    CHECK(a.dims_ok());
    CHECK(a.bell == 6);
    auto b = semisimplicity_certificate(1, r, {Cyc(r, 1L), Cyc(r, 1L)});
    CHECK_FALSE(b.semisimple);
    CHECK_THROWS_AS(semisimplicity_certificate(1, 1, {Cyc(1, 0L)}), ModuleError);
    for (int k = 1; k <= 3; ++k) CHECK(semisimplicity_certificate(k, 1, {Cyc(1, 7L)}).dims_ok());
}

TEST_CASE("Cartan matrix") {
    for (int r = 1; r <= 2; ++r) {
        auto t = cartan_matrix(2, r);
        for (size_t a = 0; a < t.index.size(); ++a)
            for (size_t b = 0; b < t.index.size(); ++b) {
                if (a == b) CHECK(t.B[a][b] == 1);
                if (weight(t.index[b]) > weight(t.index[a])) CHECK(t.B[a][b] == 0);
            }
        CHECK(cartan_tensor_check(2, r).ok());
    }
    CHECK(cartan_entry({{1}, {}}, {{}, {}}, 2) == 1);
    CHECK(cartan_entry({{2}}, {{}}, 1) == 2);
    CHECK(cartan_entry({{1, 1}}, {{1}}, 1) == 1);
}
