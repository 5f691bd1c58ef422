#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cpar/diagrams.hpp"
#include "cpar/rs.hpp"

namespace cpar {

struct RibbonError : std::logic_error {
    using std::logic_error::logic_error;
};

using Shape = std::vector<int>;
using Cell = std::pair<int, int>;  // (row, column), 0-based
using Ribbon = std::vector<Cell>;  // sorted

std::vector<Cell> cells_of(const Shape& s);
// lambda / mu as a sorted cell list; throws if mu is not contained in lambda.
std::vector<Cell> skew(const Shape& lambda, const Shape& mu);
Shape add_cells(const Shape& mu, const Ribbon& h);

bool is_ribbon(const Ribbon& h);
// Northeastmost and southwestmost cells.
Cell head(const Ribbon& h);
Cell tail(const Ribbon& h);
int spin(const Ribbon& h);

std::vector<Ribbon> addable_ribbons(const Shape& mu, int r);

// Which end of the candidate list firstr/nextr take. SouthWest is the mirrored choice,
// kept only for comparison with hand-drawn tableaux; it is not injective.
enum class RibbonOrder { NorthEast, SouthWest };

Ribbon firstr(const Shape& mu, int c, int r, RibbonOrder order = RibbonOrder::NorthEast);
// Northeastmost addable ribbon of spin(h) whose head lies on a strictly lower diagonal than h's head.
Ribbon nextr(const Shape& mu, const Ribbon& h, int r, RibbonOrder order = RibbonOrder::NorthEast);
Ribbon bumpout(const Ribbon& h1, const Ribbon& h2);

struct RibbonEntry {
    SetBlock label;
    Ribbon cells;
    bool operator==(const RibbonEntry& o) const { return label == o.label && cells == o.cells; }
};
bool operator<(const RibbonEntry& a, const RibbonEntry& b);

// Entries in increasing label order; each entry's cells form a ribbon on top of the previous shape.
struct RibbonTableau {
    int r = 1;
    std::vector<RibbonEntry> entries;
    Shape shape() const;
    bool operator==(const RibbonTableau& o) const { return r == o.r && entries == o.entries; }
    bool operator<(const RibbonTableau& o) const;
    // Rows of labels, one string per cell, as in a drawn tableau.
    std::vector<std::vector<std::string>> grid() const;
};

bool is_valid(const RibbonTableau& t);
RibbonTableau insert(const RibbonTableau& t, int c, const SetBlock& v, RibbonOrder order = RibbonOrder::NorthEast);
// Successive firstr ribbons with the given colors, labeled in order.
RibbonTableau special_type(const std::vector<int>& colors, const std::vector<SetBlock>& labels, int r,
                           RibbonOrder order = RibbonOrder::NorthEast);

struct SWGroup {
    RibbonTableau P, Q;
};
// Colored permutation with columns (colors[j]; j+1; sigma[j]); sigma is 1-based.
SWGroup sw_forward_group(const std::vector<int>& colors, const std::vector<int>& sigma, int r,
                         RibbonOrder order = RibbonOrder::NorthEast);

struct SWPair {
    RibbonTableau P, S, Q, T;
    bool operator==(const SWPair& o) const { return P == o.P && S == o.S && Q == o.Q && T == o.T; }
    bool operator<(const SWPair& o) const;
};
SWPair sw_forward_diagram(const Diagram& d, RibbonOrder order = RibbonOrder::NorthEast);

}  // namespace cpar
