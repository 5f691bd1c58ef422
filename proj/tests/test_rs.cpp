#include <doctest.h>

#include <set>

#include "cpar/algebra.hpp"
#include "cpar/fixtures.hpp"
#include "cpar/rs.hpp"

using namespace cpar;

TEST_CASE("colored array") {
    auto cols = colored_array(fixtures::rs_diagram());
    std::vector<int> colors;
    for (const auto& c : cols) colors.push_back(c.color);
    CHECK(colors == std::vector<int>{0, 2, 3, 0, 1, 2});
    CHECK(colored_array(canonicalize({{{1}, {}, 0}, {{}, {1}, 0}}, 1, 1, 1)).empty());
    auto id = colored_array(identity(2, 3));
    REQUIRE(id.size() == 3);
    for (int j = 0; j < 3; ++j) {
        CHECK(id[j].color == 0);
        CHECK(id[j].top == SetBlock{j + 1});
        CHECK(id[j].bot == SetBlock{j + 1});
    }
}

TEST_CASE("row insertion") {
    Tableau t;
    for (int v : {3, 1, 2}) row_insert(t, {v});
    CHECK(t == Tableau{{{1}, {2}}, {{3}}});
    CHECK(shape(t) == std::vector<int>{2, 1});
    CHECK(cell_count(t) == 3);
    CHECK(max_less({5}, {1, 6}));
}

TEST_CASE("worked example") {
    Diagram d = fixtures::rs_diagram();
    RSPair x = rs_forward(d);
    RSPair e;
    e.P = {{{{4}}, {{5}}}, {{{2}}}, {{{3}, {6, 8}}}, {{{1}}}, {}};
    e.Q = {{{{1}}, {{4}}}, {{{5, 7}}}, {{{2}, {6, 9}}}, {{{3}}}, {}};
    e.S = {{{9}}, {{11}}, {{7, 10}}, {}, {}};
    e.T = {{{8}}, {{10, 11}}, {}, {}, {}};
    CHECK(x == e);
    CHECK(rs_inverse(x, 11, 5) == d);
}

TEST_CASE("identity and rank zero") {
    RSPair x = rs_forward(identity(2, 3));
    Tableau row = {{{1}, {2}, {3}}};
    CHECK(x.P[0] == row);
    CHECK(x.Q[0] == row);
    CHECK(x.P[1].empty());
    CHECK(x.S[0].empty());
    CHECK(x.T[1].empty());

    Diagram z = canonicalize({{{1}, {}, 1}, {{}, {1}, 0}}, 2, 1, 1);
    RSPair y = rs_forward(z);
    CHECK(y.P[0].empty());
    CHECK(y.P[1].empty());
    CHECK(y.S == RowTuple{{{1}}, {}});
    CHECK(y.T == RowTuple{{}, {{1}}});
    CHECK(rs_inverse(y, 1, 2) == z);
}

TEST_CASE("roundtrip over all small diagrams") {
    for (int r = 1; r <= 2; ++r)
        for (int k = 0; k <= 3; ++k) {
            long n = 0;
            for_each_diagram(r, k, k, [&](const Diagram& d) {
                ++n;
                REQUIRE(rs_inverse(rs_forward(d), k, r) == d);
            });
            CHECK(Integer(n) == count_bell(2 * k, r));
        }
}

TEST_CASE("inverse rejects inconsistent input") {
    RSPair x = rs_forward(identity(1, 2));
    x.T[0].push_back({1});
    CHECK_THROWS_AS(rs_inverse(x, 2, 1), RSError);
}

TEST_CASE("Green relations match the tableau description") {
    for (int r = 1; r <= 2; ++r)
        for (int k = 1; k <= 2; ++k) {
            auto M = enumerate_monoid(k, r);
            for (Green rel : {Green::L, Green::R, Green::J}) {
                auto cls = green_classes(M, rel);
                for (size_t a = 0; a < M.size(); ++a)
                    for (size_t b = a; b < M.size(); b += 3)
                        REQUIRE((cls[a] == cls[b]) == green_characterize(M[a], M[b], rel));
            }
        }
    Diagram a = canonicalize({{{1}, {1}, 0}, {{2}, {}, 0}, {{}, {2}, 0}}, 3, 2, 2);
    Diagram b = canonicalize({{{1}, {1}, 2}, {{2}, {}, 0}, {{}, {2}, 0}}, 3, 2, 2);
    CHECK(green_characterize(a, b, Green::L));
    CHECK(green_characterize(a, b, Green::R));
    CHECK_FALSE(green_characterize(identity(3, 2), a, Green::J));
}
