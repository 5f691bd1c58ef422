#include "cpar/diagrams.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <tuple>

namespace cpar {

namespace {

// (min vertex, 0 for top / 1 for bottom)
std::pair<int, int> block_key(const Block& b) {
    std::pair<int, int> k{1 << 30, 2};
    if (!b.top.empty()) k = std::min(k, {b.top.front(), 0});
    if (!b.bot.empty()) k = std::min(k, {b.bot.front(), 1});
    return k;
}

struct UnionFind {
    std::vector<int> p;
    explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    void unite(int a, int b) { p[find(a)] = find(b); }
};

int mod(int a, int r) { return ((a % r) + r) % r; }

}  // namespace

bool Block::operator<(const Block& o) const { return block_key(*this) < block_key(o); }

bool Diagram::operator<(const Diagram& o) const {
    if (r_ != o.r_) return r_ < o.r_;
    if (k_ != o.k_) return k_ < o.k_;
    if (l_ != o.l_) return l_ < o.l_;
    return std::lexicographical_compare(
        blocks_.begin(), blocks_.end(), o.blocks_.begin(), o.blocks_.end(),
        [](const Block& a, const Block& b) { return std::tie(a.top, a.bot, a.c) < std::tie(b.top, b.bot, b.c); });
}

size_t Diagram::hash() const {
    size_t h = std::hash<int>()(r_ * 131 + k_ * 17 + l_);
    auto mix = [&h](size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
    for (const auto& b : blocks_) {
        for (int t : b.top) mix(t);
        mix(1000);
        for (int v : b.bot) mix(v);
        mix(2000 + b.c);
    }
    return h;
}

std::string Diagram::str() const {
    std::ostringstream os;
    os << "r=" << r_ << " (" << k_ << "," << l_ << ") ";
    for (const auto& b : blocks_) {
        os << "{";
        bool first = true;
        for (int t : b.top) {
            os << (first ? "" : ",") << t;
            first = false;
        }
        for (int v : b.bot) {
            os << (first ? "" : ",") << v << "'";
            first = false;
        }
        os << "}";
        if (b.c) os << "^" << b.c;
    }
    return os.str();
}

Diagram canonicalize(std::vector<Block> blocks, int r, int k, int l) {
    if (r < 1 || k < 0 || l < 0) throw DiagramError("bad diagram parameters");
    std::vector<int> seen_t(k + 1, 0), seen_b(l + 1, 0);
    for (auto& b : blocks) {
        if (b.top.empty() && b.bot.empty()) throw DiagramError("empty block");
        std::sort(b.top.begin(), b.top.end());
        std::sort(b.bot.begin(), b.bot.end());
        for (int t : b.top) {
            if (t < 1 || t > k || seen_t[t]++) throw DiagramError("malformed diagram: top vertex " + std::to_string(t));
        }
        for (int v : b.bot) {
            if (v < 1 || v > l || seen_b[v]++) throw DiagramError("malformed diagram: bottom vertex " + std::to_string(v));
        }
        b.c = mod(b.c, r);
    }
    for (int i = 1; i <= k; ++i)
        if (!seen_t[i]) throw DiagramError("malformed diagram: missing top vertex " + std::to_string(i));
    for (int i = 1; i <= l; ++i)
        if (!seen_b[i]) throw DiagramError("malformed diagram: missing bottom vertex " + std::to_string(i));
    std::sort(blocks.begin(), blocks.end());
    Diagram d;
    d.r_ = r;
    d.k_ = k;
    d.l_ = l;
    d.blocks_ = std::move(blocks);
    return d;
}

Diagram identity(int r, int k) {
    std::vector<Block> bs;
    for (int i = 1; i <= k; ++i) bs.push_back({{i}, {i}, 0});
    return canonicalize(bs, r, k, k);
}

Composite compose(const Diagram& d1, const Diagram& d2) {
    if (d1.l() != d2.k()) throw DiagramError("composition arity mismatch");
    if (d1.r() != d2.r()) throw DiagramError("composition color modulus mismatch");
    const int r = d1.r(), k = d1.k(), l = d1.l(), m = d2.l();
    const int n = k + l + m;
    UnionFind uf(n);
    auto link = [&uf](const std::vector<int>& vs) {
        for (size_t i = 1; i < vs.size(); ++i) uf.unite(vs[0], vs[i]);
    };
    std::vector<int> vs;
    for (const auto& b : d1.blocks()) {
        vs.clear();
        for (int t : b.top) vs.push_back(t - 1);
        for (int v : b.bot) vs.push_back(k + v - 1);
        link(vs);
    }
    for (const auto& b : d2.blocks()) {
        vs.clear();
        for (int t : b.top) vs.push_back(k + t - 1);
        for (int v : b.bot) vs.push_back(k + l + v - 1);
        link(vs);
    }
    std::vector<int> color(n, 0);
    for (const auto& b : d1.blocks()) {
        int v = b.top.empty() ? k + b.bot[0] - 1 : b.top[0] - 1;
        color[uf.find(v)] += b.c;
    }
    for (const auto& b : d2.blocks()) {
        int v = b.top.empty() ? k + l + b.bot[0] - 1 : k + b.top[0] - 1;
        color[uf.find(v)] += b.c;
    }
    std::vector<int> slot(n, -1);
    std::vector<Block> out;
    auto block_of = [&](int root) -> Block& {
        if (slot[root] < 0) {
            slot[root] = static_cast<int>(out.size());
            out.push_back({{}, {}, mod(color[root], r)});
        }
        return out[slot[root]];
    };
    for (int i = 0; i < k; ++i) block_of(uf.find(i)).top.push_back(i + 1);
    for (int i = 0; i < m; ++i) block_of(uf.find(k + l + i)).bot.push_back(i + 1);
    Monomial mono(r, 0);
    for (int i = k; i < k + l; ++i) {
        int root = uf.find(i);
        if (slot[root] >= 0 || slot[root] == -2) continue;
        slot[root] = -2;
        mono[mod(color[root], r)]++;
    }
    return {canonicalize(std::move(out), r, k, m), mono};
}

int rank(const Diagram& d) {
    int n = 0;
    for (const auto& b : d.blocks()) n += b.propagating();
    return n;
}

Diagram tensor(const Diagram& d1, const Diagram& d2) {
    if (d1.r() != d2.r()) throw DiagramError("tensor color modulus mismatch");
    std::vector<Block> bs = d1.blocks();
    for (auto b : d2.blocks()) {
        for (int& t : b.top) t += d1.k();
        for (int& v : b.bot) v += d1.l();
        bs.push_back(std::move(b));
    }
    return canonicalize(std::move(bs), d1.r(), d1.k() + d2.k(), d1.l() + d2.l());
}

Diagram flip_invert(const Diagram& d) {
    std::vector<Block> bs;
    for (const auto& b : d.blocks()) bs.push_back({b.bot, b.top, mod(-b.c, d.r())});
    return canonicalize(std::move(bs), d.r(), d.l(), d.k());
}

Diagram flip_keep(const Diagram& d) {
    std::vector<Block> bs;
    for (const auto& b : d.blocks()) bs.push_back({b.bot, b.top, b.c});
    return canonicalize(std::move(bs), d.r(), d.l(), d.k());
}

bool is_normal_upward(const Diagram& d) {
    std::vector<const Block*> props;
    for (const auto& b : d.blocks()) {
        if (!b.bot.empty() && (b.top.empty() || b.bot.size() != 1 || b.c != 0)) return false;
        if (b.propagating()) props.push_back(&b);
    }
    if (static_cast<int>(props.size()) != d.l()) return false;
    std::sort(props.begin(), props.end(), [](const Block* a, const Block* b) { return a->top[0] < b->top[0]; });
    for (size_t j = 0; j < props.size(); ++j)
        if (props[j]->bot[0] != static_cast<int>(j) + 1) return false;
    return true;
}

bool is_normal_downward(const Diagram& d) { return is_normal_upward(flip_keep(d)); }

bool is_colored_permutation(const Diagram& d) {
    if (d.k() != d.l()) return false;
    for (const auto& b : d.blocks())
        if (b.top.size() != 1 || b.bot.size() != 1) return false;
    return true;
}

bool is_downward(const Diagram& d) { return d.k() <= d.l() && rank(d) == d.k(); }

Triangular factor_triangular(const Diagram& d) {
    const int r = d.r();
    std::vector<const Block*> props;
    std::vector<Block> up, down, perm;
    for (const auto& b : d.blocks()) {
        if (b.propagating())
            props.push_back(&b);
        else if (b.bot.empty())
            up.push_back(b);
        else
            down.push_back(b);
    }
    const int m = static_cast<int>(props.size());
    std::vector<const Block*> by_top = props, by_bot = props;
    std::sort(by_top.begin(), by_top.end(), [](const Block* a, const Block* b) { return a->top[0] < b->top[0]; });
    std::sort(by_bot.begin(), by_bot.end(), [](const Block* a, const Block* b) { return a->bot[0] < b->bot[0]; });
    for (int a = 0; a < m; ++a) {
        up.push_back({by_top[a]->top, {a + 1}, 0});
        int b = static_cast<int>(std::find(by_bot.begin(), by_bot.end(), by_top[a]) - by_bot.begin());
        perm.push_back({{a + 1}, {b + 1}, by_top[a]->c});
    }
    for (int b = 0; b < m; ++b) down.push_back({{b + 1}, by_bot[b]->bot, 0});
    return {canonicalize(std::move(up), r, d.k(), m), canonicalize(std::move(perm), r, m, m),
            canonicalize(std::move(down), r, m, d.l())};
}

void for_each_diagram(int r, int k, int l, const std::function<void(const Diagram&)>& f) {
    const int n = k + l;
    std::vector<int> rgs(n, 0), mx(n + 1, 0);
    auto emit = [&](int nb) {
        std::vector<Block> base(nb);
        for (int v = 0; v < n; ++v) {
            if (v < k)
                base[rgs[v]].top.push_back(v + 1);
            else
                base[rgs[v]].bot.push_back(v - k + 1);
        }
        std::vector<int> col(nb, 0);
        while (true) {
            for (int i = 0; i < nb; ++i) base[i].c = col[i];
            f(canonicalize(base, r, k, l));
            int i = 0;
            while (i < nb && ++col[i] == r) col[i++] = 0;
            if (i == nb) break;
        }
    };
    if (n == 0) {
        f(canonicalize({}, r, k, l));
        return;
    }
    // Restricted growth strings.
    std::function<void(int, int)> rec = [&](int v, int nb) {
        if (v == n) {
            emit(nb);
            return;
        }
        for (int b = 0; b <= nb; ++b) {
            rgs[v] = b;
            rec(v + 1, std::max(nb, b + 1));
        }
    };
    rec(0, 0);
}

std::vector<Diagram> enumerate_diagrams(int r, int k, int l) {
    std::vector<Diagram> out;
    for_each_diagram(r, k, l, [&out](const Diagram& d) { out.push_back(d); });
    return out;
}

Diagram random_diagram(int r, int k, int l, std::mt19937_64& rng) {
    const int n = k + l;
    std::vector<Block> bs;
    for (int v = 0; v < n; ++v) {
        std::uniform_int_distribution<int> pick(0, static_cast<int>(bs.size()));
        int b = pick(rng);
        if (b == static_cast<int>(bs.size())) bs.push_back({{}, {}, 0});
        if (v < k)
            bs[b].top.push_back(v + 1);
        else
            bs[b].bot.push_back(v - k + 1);
    }
    std::uniform_int_distribution<int> col(0, r - 1);
    for (auto& b : bs) b.c = col(rng);
    return canonicalize(std::move(bs), r, k, l);
}

Diagram perm_diagram(int r, const std::vector<int>& sigma, const std::vector<int>& h) {
    const int n = static_cast<int>(sigma.size());
    std::vector<Block> bs;
    for (int j = 0; j < n; ++j) bs.push_back({{sigma[j] + 1}, {j + 1}, h[sigma[j]]});
    return canonicalize(std::move(bs), r, n, n);
}

}  // namespace cpar
