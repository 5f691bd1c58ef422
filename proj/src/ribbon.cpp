#include "cpar/ribbon.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace cpar {

std::vector<Cell> cells_of(const Shape& s) {
    std::vector<Cell> out;
    for (int i = 0; i < static_cast<int>(s.size()); ++i)
        for (int j = 0; j < s[i]; ++j) out.emplace_back(i, j);
    return out;
}

std::vector<Cell> skew(const Shape& lambda, const Shape& mu) {
    if (mu.size() > lambda.size()) throw RibbonError("skew: mu not contained in lambda");
    std::vector<Cell> out;
    for (int i = 0; i < static_cast<int>(lambda.size()); ++i) {
        int m = i < static_cast<int>(mu.size()) ? mu[i] : 0;
        if (m > lambda[i]) throw RibbonError("skew: mu not contained in lambda");
        for (int j = m; j < lambda[i]; ++j) out.emplace_back(i, j);
    }
    return out;
}

Shape add_cells(const Shape& mu, const Ribbon& h) {
    Shape s = mu;
    for (const auto& [i, j] : h) {
        if (i >= static_cast<int>(s.size())) s.resize(i + 1, 0);
        s[i]++;
        (void)j;
    }
    for (size_t i = 1; i < s.size(); ++i)
        if (s[i] > s[i - 1]) throw RibbonError("cells do not extend the shape to a partition");
    // Cells must be exactly the new ones.
    std::vector<Cell> got = skew(s, mu), want = h;
    std::sort(want.begin(), want.end());
    if (got != want) throw RibbonError("cells do not extend the shape to a partition");
    return s;
}

bool is_ribbon(const Ribbon& h) {
    if (h.empty()) return false;
    std::set<Cell> s(h.begin(), h.end());
    if (s.size() != h.size()) return false;
    std::set<int> diag;
    for (const auto& [i, j] : h)
        if (!diag.insert(j - i).second) return false;
    // Consecutive diagonals, each step moving right or down.
    std::vector<Cell> v(s.begin(), s.end());
    std::sort(v.begin(), v.end(), [](const Cell& a, const Cell& b) { return a.second - a.first < b.second - b.first; });
    for (size_t t = 1; t < v.size(); ++t) {
        auto [i0, j0] = v[t - 1];
        auto [i1, j1] = v[t];
        bool right = i1 == i0 && j1 == j0 + 1;
        bool up = i1 == i0 - 1 && j1 == j0;
        if (!right && !up) return false;
    }
    return true;
}

Cell head(const Ribbon& h) {
    return *std::max_element(h.begin(), h.end(), [](const Cell& a, const Cell& b) {
        return a.second - a.first < b.second - b.first;
    });
}

Cell tail(const Ribbon& h) {
    return *std::min_element(h.begin(), h.end(), [](const Cell& a, const Cell& b) {
        return a.second - a.first < b.second - b.first;
    });
}

int spin(const Ribbon& h) {
    if (!is_ribbon(h)) throw RibbonError("not a ribbon");
    return tail(h).first - head(h).first;
}

std::vector<Ribbon> addable_ribbons(const Shape& mu, int r) {
    const int n = static_cast<int>(mu.size()) + r;
    std::vector<int> beta(n);
    std::set<int> bs;
    for (int i = 0; i < n; ++i) {
        beta[i] = (i < static_cast<int>(mu.size()) ? mu[i] : 0) + n - 1 - i;
        bs.insert(beta[i]);
    }
    std::vector<Ribbon> out;
    for (int i = 0; i < n; ++i) {
        if (bs.count(beta[i] + r)) continue;
        std::vector<int> nb = beta;
        nb[i] += r;
        std::sort(nb.rbegin(), nb.rend());
        Shape lam;
        for (int t = 0; t < n; ++t)
            if (int p = nb[t] - (n - 1 - t); p > 0) lam.push_back(p);
        out.push_back(skew(lam, mu));
    }
    return out;
}

namespace {

// Northeastmost: head column descending, then head row ascending.
const Ribbon& pick(const std::vector<Ribbon>& cand, RibbonOrder order) {
    auto ne = [](const Ribbon& a, const Ribbon& b) {
        Cell x = head(a), y = head(b);
        if (x.second != y.second) return x.second > y.second;
        return x.first < y.first;
    };
    return order == RibbonOrder::NorthEast ? *std::min_element(cand.begin(), cand.end(), ne)
                                           : *std::max_element(cand.begin(), cand.end(), ne);
}

int content(const Cell& c) { return c.second - c.first; }

}  // namespace

Ribbon firstr(const Shape& mu, int c, int r, RibbonOrder order) {
    std::vector<Ribbon> cand;
    for (auto& h : addable_ribbons(mu, r))
        if (spin(h) == c) cand.push_back(std::move(h));
    if (cand.empty()) throw RibbonError("no addable ribbon of the requested spin");
    return pick(cand, order);
}

Ribbon nextr(const Shape& mu, const Ribbon& h, int r, RibbonOrder order) {
    const int c = spin(h);
    const int hc = content(head(h));
    std::vector<Ribbon> cand;
    for (auto& g : addable_ribbons(mu, r))
        if (spin(g) == c && content(head(g)) < hc) cand.push_back(std::move(g));
    if (cand.empty()) throw RibbonError("no addable ribbon southwest of the given ribbon");
    return pick(cand, order);
}

Ribbon bumpout(const Ribbon& h1, const Ribbon& h2) {
    std::set<Cell> a(h1.begin(), h1.end()), b(h2.begin(), h2.end());
    if (a == b) throw RibbonError("bumpout of equal ribbons");
    std::set<Cell> out;
    bool meet = false;
    for (const auto& x : b) {
        if (a.count(x)) {
            meet = true;
            out.insert({x.first + 1, x.second + 1});
        } else {
            out.insert(x);
        }
    }
    if (!meet) throw RibbonError("bumpout of disjoint ribbons");
    return Ribbon(out.begin(), out.end());
}

Shape RibbonTableau::shape() const {
    Shape s;
    for (const auto& e : entries) s = add_cells(s, e.cells);
    return s;
}

bool RibbonTableau::operator<(const RibbonTableau& o) const {
    return std::tie(r, entries) < std::tie(o.r, o.entries);
}

bool operator<(const RibbonEntry& a, const RibbonEntry& b) {
    return std::tie(a.label, a.cells) < std::tie(b.label, b.cells);
}

std::vector<std::vector<std::string>> RibbonTableau::grid() const {
    Shape s = shape();
    std::vector<std::vector<std::string>> g(s.size());
    for (size_t i = 0; i < s.size(); ++i) g[i].resize(s[i]);
    for (const auto& e : entries) {
        std::string lab = "{";
        for (size_t t = 0; t < e.label.size(); ++t) lab += (t ? "," : "") + std::to_string(e.label[t]);
        lab += "}";
        for (const auto& [i, j] : e.cells) g[i][j] = lab;
    }
    return g;
}

bool is_valid(const RibbonTableau& t) {
    Shape s;
    for (size_t i = 0; i < t.entries.size(); ++i) {
        const auto& e = t.entries[i];
        if (e.label.empty() || static_cast<int>(e.cells.size()) != t.r || !is_ribbon(e.cells)) return false;
        if (i > 0 && !max_less(t.entries[i - 1].label, e.label)) return false;
        try {
            s = add_cells(s, e.cells);
        } catch (const RibbonError&) {
            return false;
        }
    }
    return true;
}

RibbonTableau insert(const RibbonTableau& t, int c, const SetBlock& v, RibbonOrder order) {
    const int r = t.r;
    auto pos = std::lower_bound(t.entries.begin(), t.entries.end(), v,
                                [](const RibbonEntry& e, const SetBlock& x) { return max_less(e.label, x); });
    if (pos != t.entries.end() && pos->label.back() == v.back()) throw RibbonError("value already present");
    RibbonTableau P{r, std::vector<RibbonEntry>(t.entries.begin(), pos)};
    Shape tshape = P.shape();  // sh(T_{j-1})
    Shape pshape = tshape;
    Ribbon h0 = firstr(pshape, c, r, order);
    pshape = add_cells(pshape, h0);
    P.entries.push_back({v, h0});
    for (auto it = pos; it != t.entries.end(); ++it) {
        const Ribbon& hj = it->cells;
        std::vector<Cell> prev = skew(pshape, tshape);  // h'_{j-1}
        std::set<Cell> a(prev.begin(), prev.end());
        bool meet = false;
        for (const auto& x : hj) meet = meet || a.count(x);
        Ribbon place;
        if (!meet)
            place = hj;
        else if (prev == hj)
            place = nextr(pshape, hj, r, order);
        else
            place = bumpout(prev, hj);
        if (!is_ribbon(place)) throw RibbonError("insertion produced a non-ribbon");
        pshape = add_cells(pshape, place);
        tshape = add_cells(tshape, hj);
        P.entries.push_back({it->label, place});
    }
    return P;
}

RibbonTableau special_type(const std::vector<int>& colors, const std::vector<SetBlock>& labels, int r,
                           RibbonOrder order) {
    RibbonTableau t{r, {}};
    Shape s;
    for (size_t j = 0; j < colors.size(); ++j) {
        Ribbon h = firstr(s, colors[j], r, order);
        s = add_cells(s, h);
        t.entries.push_back({labels[j], h});
    }
    return t;
}

namespace {
void record(RibbonTableau& Q, const Shape& before, const Shape& after, const SetBlock& label) {
    Q.entries.push_back({label, skew(after, before)});
}
}  // namespace

SWGroup sw_forward_group(const std::vector<int>& colors, const std::vector<int>& sigma, int r, RibbonOrder order) {
    SWGroup out{{r, {}}, {r, {}}};
    Shape s;
    for (size_t j = 0; j < sigma.size(); ++j) {
        out.P = insert(out.P, colors[j], {sigma[j]}, order);
        Shape ns = out.P.shape();
        record(out.Q, s, ns, {static_cast<int>(j) + 1});
        s = std::move(ns);
    }
    return out;
}

bool SWPair::operator<(const SWPair& o) const { return std::tie(P, S, Q, T) < std::tie(o.P, o.S, o.Q, o.T); }

SWPair sw_forward_diagram(const Diagram& d, RibbonOrder order) {
    const int r = d.r();
    SWPair out{{r, {}}, {r, {}}, {r, {}}, {r, {}}};
    Shape s;
    for (const auto& col : colored_array(d)) {
        out.P = insert(out.P, col.color, col.bot, order);
        Shape ns = out.P.shape();
        record(out.Q, s, ns, col.top);
        s = std::move(ns);
    }
    for (int top = 0; top < 2; ++top) {
        std::vector<std::pair<SetBlock, int>> parts;
        for (const auto& b : d.blocks()) {
            if (b.propagating()) continue;
            const SetBlock& x = top ? b.top : b.bot;
            if (!x.empty()) parts.emplace_back(x, b.c);
        }
        std::sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) { return max_less(a.first, b.first); });
        std::vector<int> colors;
        std::vector<SetBlock> labels;
        for (const auto& [x, c] : parts) {
            labels.push_back(x);
            colors.push_back(c);
        }
        (top ? out.T : out.S) = special_type(colors, labels, r, order);
    }
    return out;
}

}  // namespace cpar
