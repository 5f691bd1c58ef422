#pragma once

#include <stdexcept>
#include <vector>

#include "cpar/algebra.hpp"
#include "cpar/diagrams.hpp"

namespace cpar {

struct RSError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Nonempty sorted set of vertex labels; ordered by maximum entry.
using SetBlock = std::vector<int>;
bool max_less(const SetBlock& a, const SetBlock& b);

using Tableau = std::vector<std::vector<SetBlock>>;  // rows
using RTuple = std::vector<Tableau>;                 // one tableau per color
using RowTuple = std::vector<std::vector<SetBlock>>; // one row (possibly empty) per color

std::vector<int> shape(const Tableau& t);
int cell_count(const Tableau& t);

struct ArrayColumn {
    int color;
    SetBlock top;
    SetBlock bot;
};

// Propagating parts ordered by their top constituents in maximum entry order.
std::vector<ArrayColumn> colored_array(const Diagram& d);

// Classical row insertion of v into t (comparison by maximum); returns the row of the new cell.
int row_insert(Tableau& t, const SetBlock& v);

struct RSPair {
    RTuple P;
    RowTuple S;
    RTuple Q;
    RowTuple T;
    bool operator==(const RSPair& o) const { return P == o.P && S == o.S && Q == o.Q && T == o.T; }
};

RSPair rs_forward(const Diagram& d);
Diagram rs_inverse(const RSPair& x, int k, int r);

bool green_characterize(const Diagram& a, const Diagram& b, Green rel);

}  // namespace cpar
