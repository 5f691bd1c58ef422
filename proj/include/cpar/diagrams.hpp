#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace cpar {

struct DiagramError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Block {
    std::vector<int> top;  // sorted, 1-based
    std::vector<int> bot;  // sorted, 1-based
    int c = 0;             // color exponent mod r

    bool propagating() const { return !top.empty() && !bot.empty(); }
    bool operator==(const Block& o) const { return top == o.top && bot == o.bot && c == o.c; }
    bool operator<(const Block& o) const;
};

// Exponents m_0..m_{r-1} of removed middle components.
using Monomial = std::vector<int>;

class Diagram {
public:
    Diagram() = default;

    int r() const { return r_; }
    int k() const { return k_; }
    int l() const { return l_; }
    const std::vector<Block>& blocks() const { return blocks_; }

    bool operator==(const Diagram& o) const {
        return r_ == o.r_ && k_ == o.k_ && l_ == o.l_ && blocks_ == o.blocks_;
    }
    bool operator!=(const Diagram& o) const { return !(*this == o); }
    bool operator<(const Diagram& o) const;
    size_t hash() const;
    std::string str() const;

    friend Diagram canonicalize(std::vector<Block> blocks, int r, int k, int l);

private:
    int r_ = 1, k_ = 0, l_ = 0;
    std::vector<Block> blocks_;
};

struct DiagramHash {
    size_t operator()(const Diagram& d) const { return d.hash(); }
};

// Sorts vertices and blocks, reduces colors mod r, validates the partition.
Diagram canonicalize(std::vector<Block> blocks, int r, int k, int l);

Diagram identity(int r, int k);

struct Composite {
    Diagram d;
    Monomial m;
};

Composite compose(const Diagram& d1, const Diagram& d2);
int rank(const Diagram& d);
Diagram tensor(const Diagram& d1, const Diagram& d2);
// Horizontal flip, colors inverted.
Diagram flip_invert(const Diagram& d);
// Horizontal flip, colors kept.
Diagram flip_keep(const Diagram& d);

// Propagating parts trivially colored, each bottom vertex its own propagating
// part, ordered by minimum top constituent.
bool is_normal_upward(const Diagram& d);
// Dual of is_normal_upward.
bool is_normal_downward(const Diagram& d);
// Rank equals k equals l and every block is a single top/bottom pair.
bool is_colored_permutation(const Diagram& d);
// Every top vertex lies in its own propagating part (rank equals k, k <= l).
bool is_downward(const Diagram& d);

struct Triangular {
    Diagram up;    // (k, m)
    Diagram perm;  // (m, m)
    Diagram down;  // (m, l)
};

Triangular factor_triangular(const Diagram& d);

// All colored (k,l)-partition diagrams, in a deterministic order.
std::vector<Diagram> enumerate_diagrams(int r, int k, int l);
void for_each_diagram(int r, int k, int l, const std::function<void(const Diagram&)>& f);
Diagram random_diagram(int r, int k, int l, std::mt19937_64& rng);

// Colored permutation diagram with blocks {sigma(j), j'} colored h(sigma(j)).
// sigma and h are 0-based arrays.
Diagram perm_diagram(int r, const std::vector<int>& sigma, const std::vector<int>& h);

}  // namespace cpar
