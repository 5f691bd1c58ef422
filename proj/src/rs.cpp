#include "cpar/rs.hpp"

#include <algorithm>
#include <set>

namespace cpar {

bool max_less(const SetBlock& a, const SetBlock& b) { return a.back() < b.back(); }

std::vector<int> shape(const Tableau& t) {
    std::vector<int> s;
    for (const auto& row : t) s.push_back(static_cast<int>(row.size()));
    return s;
}

int cell_count(const Tableau& t) {
    int n = 0;
    for (const auto& row : t) n += static_cast<int>(row.size());
    return n;
}

std::vector<ArrayColumn> colored_array(const Diagram& d) {
    std::vector<ArrayColumn> out;
    for (const auto& b : d.blocks())
        if (b.propagating()) out.push_back({b.c, b.top, b.bot});
    std::sort(out.begin(), out.end(), [](const ArrayColumn& a, const ArrayColumn& b) { return max_less(a.top, b.top); });
    return out;
}

int row_insert(Tableau& t, const SetBlock& v) {
    SetBlock x = v;
    for (size_t i = 0;; ++i) {
        if (i == t.size()) {
            t.push_back({x});
            return static_cast<int>(i);
        }
        auto& row = t[i];
        auto it = std::upper_bound(row.begin(), row.end(), x, max_less);
        if (it == row.end()) {
            row.push_back(x);
            return static_cast<int>(i);
        }
        std::swap(*it, x);
    }
}

namespace {

RowTuple nonpropagating(const Diagram& d, bool top) {
    RowTuple out(d.r());
    for (const auto& b : d.blocks()) {
        if (b.propagating()) continue;
        if (top && !b.top.empty()) out[b.c].push_back(b.top);
        if (!top && !b.bot.empty()) out[b.c].push_back(b.bot);
    }
    for (auto& row : out) std::sort(row.begin(), row.end(), max_less);
    return out;
}

// Remove the cell at the end of row i and reverse-bump to the first row.
SetBlock reverse_bump(Tableau& t, size_t i) {
    SetBlock x = t[i].back();
    t[i].pop_back();
    if (t[i].empty()) t.erase(t.begin() + static_cast<long>(i));
    for (size_t j = i; j-- > 0;) {
        auto& row = t[j];
        auto it = std::lower_bound(row.begin(), row.end(), x, max_less);
        if (it == row.begin()) throw RSError("reverse bumping failed");
        --it;
        std::swap(*it, x);
    }
    return x;
}

}  // namespace

RSPair rs_forward(const Diagram& d) {
    const int r = d.r();
    RSPair out{RTuple(r), nonpropagating(d, false), RTuple(r), nonpropagating(d, true)};
    for (const auto& col : colored_array(d)) {
        int row = row_insert(out.P[col.color], col.bot);
        auto& Q = out.Q[col.color];
        if (row == static_cast<int>(Q.size())) Q.emplace_back();
        Q[row].push_back(col.top);
    }
    return out;
}

Diagram rs_inverse(const RSPair& x, int k, int r) {
    if (static_cast<int>(x.P.size()) != r || static_cast<int>(x.Q.size()) != r ||
        static_cast<int>(x.S.size()) != r || static_cast<int>(x.T.size()) != r)
        throw RSError("tuple length differs from r");
    std::vector<Block> bs;
    for (int c = 0; c < r; ++c) {
        if (shape(x.P[c]) != shape(x.Q[c])) throw RSError("P and Q shapes differ");
        Tableau P = x.P[c], Q = x.Q[c];
        while (!Q.empty()) {
            // Largest recorded entry sits at a corner of Q.
            size_t best = 0;
            for (size_t i = 1; i < Q.size(); ++i)
                if (max_less(Q[best].back(), Q[i].back())) best = i;
            SetBlock top = Q[best].back();
            Q[best].pop_back();
            if (Q[best].empty()) Q.erase(Q.begin() + static_cast<long>(best));
            SetBlock bot = reverse_bump(P, best);
            bs.push_back({top, bot, c});
        }
        for (const auto& b : x.S[c]) bs.push_back({{}, b, c});
        for (const auto& t : x.T[c]) bs.push_back({t, {}, c});
    }
    try {
        return canonicalize(std::move(bs), r, k, k);
    } catch (const DiagramError& e) {
        throw RSError(std::string("inconsistent tableau contents: ") + e.what());
    }
}

namespace {
std::set<SetBlock> content(const RTuple& t) {
    std::set<SetBlock> out;
    for (const auto& tab : t)
        for (const auto& row : tab)
            for (const auto& c : row) out.insert(c);
    return out;
}
}  // namespace

bool green_characterize(const Diagram& a, const Diagram& b, Green rel) {
    RSPair x = rs_forward(a), y = rs_forward(b);
    switch (rel) {
        case Green::L:
            return content(x.P) == content(y.P) && x.S == y.S;
        case Green::R:
            return content(x.Q) == content(y.Q) && x.T == y.T;
        case Green::J: {
            int nx = 0, ny = 0;
            for (const auto& t : x.P) nx += cell_count(t);
            for (const auto& t : y.P) ny += cell_count(t);
            return nx == ny;
        }
    }
    return false;
}

}  // namespace cpar
