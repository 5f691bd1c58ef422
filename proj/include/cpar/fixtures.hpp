#pragma once

#include <string>
#include <vector>

#include "cpar/characters.hpp"
#include "cpar/diagrams.hpp"
#include "cpar/groupoid.hpp"

namespace cpar::fixtures {

// r = 5 composition with two removed components of color 3 and one of color 2.
struct CompositionExample {
    Diagram d1, d2;
    Diagram expected;  // drawn result, with the {3,4} part colored as in d1
    int drawn_color_34;  // color printed next to {3,4} in the drawing
    Monomial monomial;
};
CompositionExample composition();

struct TriangularExample {
    Diagram d, up, perm, down;
};
TriangularExample triangular();

// r = 2 downward diagram with eight groupoid terms.
struct PsiExample {
    Diagram d;
    GSum image;
};
PsiExample psi();

// r = 5, eleven vertices per row.
Diagram rs_diagram();

struct RSExpected {
    // per color: P rows, Q rows, S row, T row as label strings such as "{6,8}"
    std::vector<std::vector<std::vector<std::string>>> P, Q;
    std::vector<std::vector<std::string>> S, T;
};
RSExpected rs_expected();

using Grid = std::vector<std::vector<std::string>>;
struct SWExpected {
    std::vector<Grid> P, Q;  // after each insertion step
    Grid S, T;
};
SWExpected sw_expected();

struct CoefficientExample {
    Multipartition lambda, mu, nu;
    int r;
};
CoefficientExample coefficient();

}  // namespace cpar::fixtures
