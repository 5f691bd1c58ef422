#include "cpar/groupoid.hpp"

#include <algorithm>
#include <functional>

#include "cpar/algebra.hpp"

namespace cpar {

ColorSequence top_colors(const Diagram& D) {
    ColorSequence out(D.k());
    for (const auto& b : D.blocks())
        for (int t : b.top) out[t - 1] = b.c;
    return out;
}

ColorSequence bottom_colors(const Diagram& D) {
    ColorSequence out(D.l());
    for (const auto& b : D.blocks())
        for (int v : b.bot) out[v - 1] = b.c;
    return out;
}

GMorphism gcompose(const Diagram& D1, const Diagram& D2) {
    if (D1.l() != D2.k() || D1.r() != D2.r()) throw DiagramError("composition arity mismatch");
    if (bottom_colors(D1) != top_colors(D2)) return {};
    Diagram shape = compose(D1, D2).d;
    const ColorSequence tc = top_colors(D1), bc = bottom_colors(D2);
    std::vector<Block> bs = shape.blocks();
    for (auto& b : bs) b.c = b.top.empty() ? bc[b.bot[0] - 1] : tc[b.top[0] - 1];
    return {canonicalize(std::move(bs), D1.r(), D1.k(), D2.l())};
}

void gsum_add(GSum& s, const Diagram& d, const Cyc& c) {
    if (c.is_zero()) return;
    auto it = s.find(d);
    if (it == s.end()) {
        s.emplace(d, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) s.erase(it);
}

GSum gcompose(const GSum& a, const GSum& b) {
    GSum out;
    for (const auto& [da, ca] : a)
        for (const auto& [db, cb] : b) {
            GMorphism m = gcompose(da, db);
            if (!m.is_zero()) gsum_add(out, *m.d, ca * cb);
        }
    return out;
}

std::vector<Diagram> hom_g(const ColorSequence& top, const ColorSequence& bottom, int r) {
    const int k = static_cast<int>(top.size()), l = static_cast<int>(bottom.size());
    std::vector<Diagram> out;
    if (k > l) return out;
    for_each_diagram(1, k, l, [&](const Diagram& d) {
        if (!is_downward(d)) return;
        std::vector<Block> bs = d.blocks();
        for (auto& b : bs) {
            int c = b.top.empty() ? bottom[b.bot[0] - 1] : top[b.top[0] - 1];
            for (int v : b.bot)
                if (bottom[v - 1] != c) return;
            b.c = c;
        }
        out.push_back(canonicalize(std::move(bs), r, k, l));
    });
    return out;
}

GSum psi(const Diagram& d) {
    if (!is_downward(d)) throw DiagramError("psi is defined on downward diagrams only");
    const int r = d.r();
    const auto& blocks = d.blocks();
    const size_t nb = blocks.size();
    std::vector<int> j(nb, 0);
    GSum out;
    while (true) {
        long e = 0;
        std::vector<Block> bs = blocks;
        for (size_t s = 0; s < nb; ++s) {
            e += static_cast<long>(blocks[s].c) * j[s];
            bs[s].c = j[s];
        }
        gsum_add(out, canonicalize(std::move(bs), r, d.k(), d.l()), Cyc::zeta_pow(r, e));
        size_t s = 0;
        while (s < nb && ++j[s] == r) j[s++] = 0;
        if (s == nb) break;
    }
    return out;
}

GSum psi(const std::map<Diagram, Cyc>& x) {
    GSum out;
    for (const auto& [d, c] : x)
        for (const auto& [D, v] : psi(d)) gsum_add(out, D, c * v);
    return out;
}

Diagram random_downward(int r, int k, int l, std::mt19937_64& rng) {
    if (k > l) throw DiagramError("downward diagram needs k <= l");
    std::vector<int> bots(l);
    for (int i = 0; i < l; ++i) bots[i] = i + 1;
    std::shuffle(bots.begin(), bots.end(), rng);
    std::vector<Block> bs;
    for (int t = 1; t <= k; ++t) bs.push_back({{t}, {bots[t - 1]}, 0});
    for (int i = k; i < l; ++i) {
        std::uniform_int_distribution<int> pick(0, static_cast<int>(bs.size()));
        int b = pick(rng);
        if (b == static_cast<int>(bs.size())) bs.push_back({{}, {}, 0});
        bs[b].bot.push_back(bots[i]);
    }
    std::uniform_int_distribution<int> col(0, r - 1);
    for (auto& b : bs) b.c = col(rng);
    return canonicalize(std::move(bs), r, k, l);
}

PsiReport psi_hom_check(int samples, int kmax, int r, unsigned long long seed) {
    std::mt19937_64 rng(seed);
    PsiReport rep;
    std::uniform_int_distribution<int> ar(0, kmax);
    for (int s = 0; s < samples; ++s) {
        int a = ar(rng), b = ar(rng), c = ar(rng);
        int sz[3] = {a, b, c};
        std::sort(sz, sz + 3);
        Diagram d1 = random_downward(r, sz[0], sz[1], rng);
        Diagram d2 = random_downward(r, sz[1], sz[2], rng);
        Composite p = compose(d1, d2);
        bool ok = true;
        for (int m : p.m) ok = ok && m == 0;
        GSum lhs = ok ? psi(p.d) : GSum{};
        GSum rhs = gcompose(psi(d1), psi(d2));
        rep.samples++;
        if (!ok || lhs != rhs) {
            if (rep.failures++ == 0) rep.first_failure = d1.str() + " * " + d2.str();
        }
    }
    return rep;
}

PsiDimension psi_dimension_check(int k, int l, int r) {
    PsiDimension out{0, 0, 0};
    std::vector<Diagram> rows;
    for_each_diagram(r, k, l, [&](const Diagram& d) {
        if (is_downward(d)) rows.push_back(d);
    });
    out.colored = static_cast<long long>(rows.size());
    std::map<Diagram, int> col;
    auto seqs = [r](int n) {
        std::vector<ColorSequence> all;
        ColorSequence c(n, 0);
        while (true) {
            all.push_back(c);
            int i = 0;
            while (i < n && ++c[i] == r) c[i++] = 0;
            if (i == n) break;
        }
        return all;
    };
    for (const auto& top : seqs(k))
        for (const auto& bot : seqs(l))
            for (const auto& D : hom_g(top, bot, r)) col.emplace(D, static_cast<int>(col.size()));
    out.groupoid = static_cast<long long>(col.size());
    CycMatrix M(rows.size(), std::vector<Cyc>(col.size(), Cyc(r)));
    for (size_t i = 0; i < rows.size(); ++i)
        for (const auto& [D, c] : psi(rows[i])) M[i][col.at(D)] = c;
    out.rank = rank(M);
    return out;
}

}  // namespace cpar
