#include "cpar/fixtures.hpp"

#include <sstream>

namespace cpar::fixtures {

namespace {

// "1 1 5,7/2 2" -> rows of "{1}" style labels
Grid grid(const std::string& text) {
    Grid g;
    std::stringstream rows(text);
    std::string row;
    while (std::getline(rows, row, '/')) {
        std::stringstream cells(row);
        std::string cell;
        std::vector<std::string> out;
        while (cells >> cell) out.push_back("{" + cell + "}");
        g.push_back(std::move(out));
    }
    return g;
}

}  // namespace

CompositionExample composition() {
    const int r = 5;
    CompositionExample ex;
    ex.d1 = canonicalize({{{1}, {2}, 1},
                          {{2}, {1}, 2},
                          {{3, 4}, {}, 1},
                          {{5}, {3}, 4},
                          {{6}, {}, 3},
                          {{7}, {}, 0},
                          {{}, {4, 5}, 1},
                          {{}, {6}, 0},
                          {{}, {7, 8}, 2}},
                         r, 7, 8);
    ex.d2 = canonicalize({{{1, 2}, {}, 1},
                          {{3}, {3}, 2},
                          {{4, 5}, {}, 2},
                          {{6}, {}, 2},
                          {{7, 8}, {}, 1},
                          {{}, {1}, 0},
                          {{}, {2}, 1},
                          {{}, {4, 6}, 1},
                          {{}, {5}, 0}},
                         r, 8, 6);
    ex.expected = canonicalize({{{1, 2}, {}, 4},
                                {{3, 4}, {}, 1},
                                {{5}, {3}, 1},
                                {{6}, {}, 3},
                                {{7}, {}, 0},
                                {{}, {1}, 0},
                                {{}, {2}, 1},
                                {{}, {4, 6}, 1},
                                {{}, {5}, 0}},
                               r, 7, 6);
    ex.drawn_color_34 = 4;
    ex.monomial = {0, 0, 1, 2, 0};
    return ex;
}

TriangularExample triangular() {
    const int r = 3;
    TriangularExample ex;
    ex.d = canonicalize({{{1, 3}, {2, 3}, 0},
                         {{2, 4}, {1}, 1},
                         {{5}, {}, 2},
                         {{6}, {}, 0},
                         {{7}, {8}, 0},
                         {{8}, {7}, 0},
                         {{}, {4}, 0},
                         {{}, {5, 6}, 0}},
                        r, 8, 8);
    ex.up = canonicalize({{{1, 3}, {1}, 0},
                          {{2, 4}, {2}, 0},
                          {{5}, {}, 2},
                          {{6}, {}, 0},
                          {{7}, {3}, 0},
                          {{8}, {4}, 0}},
                         r, 8, 4);
    ex.perm = canonicalize({{{1}, {2}, 0}, {{2}, {1}, 1}, {{3}, {4}, 0}, {{4}, {3}, 0}}, r, 4, 4);
    ex.down = canonicalize({{{1}, {1}, 0},
                            {{2}, {2, 3}, 0},
                            {{3}, {7}, 0},
                            {{4}, {8}, 0},
                            {{}, {4}, 0},
                            {{}, {5, 6}, 0}},
                           r, 4, 8);
    return ex;
}

PsiExample psi() {
    const int r = 2;
    PsiExample ex;
    ex.d = canonicalize({{{1}, {1, 2}, 0}, {{2}, {3}, 1}, {{}, {4}, 0}}, r, 2, 4);
    // vertex colors: top 1, top 2 / bottom 1..4, then the exponent of zeta
    const std::vector<std::pair<std::string, int>> terms = {
        {"00/0000", 0}, {"10/1100", 0}, {"11/1110", 1}, {"11/1111", 1},
        {"01/0010", 1}, {"01/0011", 1}, {"00/0001", 0}, {"10/1101", 0},
    };
    for (const auto& [cols, e] : terms) {
        auto at = [&](int pos) { return cols[pos] - '0'; };
        if (at(0) != at(3) || at(0) != at(4) || at(1) != at(5)) throw DiagramError("inconsistent coloring");
        Diagram D = canonicalize({{{1}, {1, 2}, at(0)}, {{2}, {3}, at(1)}, {{}, {4}, at(6)}}, r, 2, 4);
        gsum_add(ex.image, D, Cyc::zeta_pow(r, e));
    }
    return ex;
}

Diagram rs_diagram() {
    return canonicalize({{{1}, {5}, 0},
                         {{2}, {3}, 2},
                         {{3}, {1}, 3},
                         {{4}, {4}, 0},
                         {{5, 7}, {2}, 1},
                         {{6, 9}, {6, 8}, 2},
                         {{8}, {}, 0},
                         {{10, 11}, {}, 1},
                         {{}, {9}, 0},
                         {{}, {7, 10}, 2},
                         {{}, {11}, 1}},
                        5, 11, 11);
}

RSExpected rs_expected() {
    RSExpected e;
    e.P = {grid("4/5"), grid("2"), grid("3 6,8"), grid("1"), {}};
    e.Q = {grid("1/4"), grid("5,7"), grid("2 6,9"), grid("3"), {}};
    e.S = {{"{9}"}, {"{11}"}, {"{7,10}"}, {}, {}};
    e.T = {{"{8}"}, {"{10,11}"}, {}, {}, {}};
    return e;
}

SWExpected sw_expected() {
    SWExpected e;
    e.P = {
        grid("5 5 5 5 5"),
        grid("3 3 3 5 5/3 5 5 5/3"),
        grid("1 1 3 5 5/1 3 3 5/1 3 5 5/1 3"),
        grid("1 1 3 4 4 4 4 4/1 3 3 5 5 5/1 3 5 5/1 3"),
        grid("1 1 2 2 2 4 4 4/1 2 2 3 4 4/1 3 3 3/1 3 5 5/5 5 5"),
        grid("1 1 2 2 2 4 4 4/1 2 2 3 4 4/1 3 3 3/1 3 5 5/5 5 5/6,8 6,8 6,8/6,8/6,8"),
    };
    e.Q = {
        grid("1 1 1 1 1"),
        grid("1 1 1 1 1/2 2 2 2/2"),
        grid("1 1 1 1 1/2 2 2 2/2 3 3 3/3 3"),
        grid("1 1 1 1 1 4 4 4/2 2 2 2 4 4/2 3 3 3/3 3"),
        grid("1 1 1 1 1 4 4 4/2 2 2 2 4 4/2 3 3 3/3 3 5,7 5,7/5,7 5,7 5,7"),
        grid("1 1 1 1 1 4 4 4/2 2 2 2 4 4/2 3 3 3/3 3 5,7 5,7/5,7 5,7 5,7/6,9 6,9 6,9/6,9/6,9"),
    };
    e.S = grid("9 9 9 9 9/7,10 7,10 7,10 11 11/7,10 11 11 11/7,10");
    e.T = grid("8 8 8 8 8/10,11 10,11 10,11/10,11/10,11");
    return e;
}

CoefficientExample coefficient() { return {{{}, {1, 1}, {}}, {{}, {2}, {}}, {{}, {2}, {}}, 3}; }

}  // namespace cpar::fixtures
