#pragma once

#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cpar/diagrams.hpp"
#include "cpar/scalars.hpp"

namespace cpar {

// Object of the category: a color for each of k dots.
using ColorSequence = std::vector<int>;

// A color-preserving downward diagram is stored as a Diagram whose block color
// is the common color of all vertices of that block.
ColorSequence top_colors(const Diagram& D);
ColorSequence bottom_colors(const Diagram& D);

// Either a diagram or the zero morphism.
struct GMorphism {
    std::optional<Diagram> d;
    bool is_zero() const { return !d.has_value(); }
};

GMorphism gcompose(const Diagram& D1, const Diagram& D2);

// Formal sum of color-preserving diagrams.
using GSum = std::map<Diagram, Cyc>;

void gsum_add(GSum& s, const Diagram& d, const Cyc& c);
GSum gcompose(const GSum& a, const GSum& b);

// Basis of Hom(f_bottom, f_top): downward diagrams with top colors `top` and bottom colors `bottom`.
std::vector<Diagram> hom_g(const ColorSequence& top, const ColorSequence& bottom, int r);

GSum psi(const Diagram& d);
GSum psi(const std::map<Diagram, Cyc>& x);

Diagram random_downward(int r, int k, int l, std::mt19937_64& rng);

struct PsiReport {
    int samples = 0;
    int failures = 0;
    std::string first_failure;
    bool ok() const { return failures == 0; }
};

// Psi(d d') == Psi(d) Psi(d') on random composable downward pairs with arities <= kmax.
PsiReport psi_hom_check(int samples, int kmax, int r, unsigned long long seed);

struct PsiDimension {
    long long colored;    // downward colored (k,l)-diagrams
    long long groupoid;   // color-preserving diagrams over all objects
    int rank;             // rank of the matrix of Psi on that hom-space
};
PsiDimension psi_dimension_check(int k, int l, int r);

}  // namespace cpar
