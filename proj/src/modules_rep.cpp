#include "cpar/modules_rep.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <mutex>
#include <numeric>

#include "cpar/algebra.hpp"

namespace cpar {

namespace {

Rational frac(long a, long b) {
    Rational q(a, b);
    q.canonicalize();
    return q;
}

const Block* bottom_block(const Diagram& d, int v) {
    for (const auto& b : d.blocks())
        if (std::binary_search(b.bot.begin(), b.bot.end(), v)) return &b;
    return nullptr;
}

// Set partitions of 1..k as lists of sorted blocks.
void set_partitions(int k, const std::function<void(const std::vector<std::vector<int>>&)>& f) {
    std::vector<std::vector<int>> cur;
    std::function<void(int)> rec = [&](int v) {
        if (v > k) {
            f(cur);
            return;
        }
        for (size_t b = 0; b < cur.size(); ++b) {
            cur[b].push_back(v);
            rec(v + 1);
            cur[b].pop_back();
        }
        cur.push_back({v});
        rec(v + 1);
        cur.pop_back();
    };
    rec(1);
}

}  // namespace

bool in_L(const Diagram& d, int i) {
    const int k = d.k();
    if (d.l() != k || i < 0 || i > k || rank(d) != i) return false;
    for (int v = 1; v <= k; ++v) {
        const Block* b = bottom_block(d, v);
        if (b->bot.size() != 1) return false;
        if (v <= i && !b->propagating()) return false;
        if (v > i && (!b->top.empty() || b->c != 0)) return false;
    }
    return true;
}

bool in_cross_section(const Diagram& d, int i) {
    if (!in_L(d, i)) return false;
    std::vector<const Block*> props;
    for (const auto& b : d.blocks())
        if (b.propagating()) {
            if (b.c != 0) return false;
            props.push_back(&b);
        }
    std::sort(props.begin(), props.end(), [](const Block* a, const Block* b) { return a->top[0] < b->top[0]; });
    for (size_t j = 0; j < props.size(); ++j)
        if (props[j]->bot[0] != static_cast<int>(j) + 1) return false;
    return true;
}

std::vector<Diagram> enumerate_cross_section(int k, int i, int r) {
    if (i < 0 || i > k) throw ModuleError("cross section needs 0 <= i <= k");
    std::vector<Diagram> out;
    set_partitions(k, [&](const std::vector<std::vector<int>>& parts) {
        const int nb = static_cast<int>(parts.size());
        if (nb < i) return;
        // Blocks come ordered by minimum; choose which i of them propagate.
        std::vector<int> mask(nb, 0);
        std::fill(mask.begin(), mask.begin() + i, 1);
        std::sort(mask.begin(), mask.end());
        do {
            std::vector<int> free;
            for (int b = 0; b < nb; ++b)
                if (!mask[b]) free.push_back(b);
            std::vector<int> col(free.size(), 0);
            while (true) {
                std::vector<Block> bs;
                int j = 0;
                for (int b = 0; b < nb; ++b)
                    if (mask[b]) bs.push_back({parts[b], {++j}, 0});
                for (size_t f = 0; f < free.size(); ++f) bs.push_back({parts[free[f]], {}, col[f]});
                for (int v = i + 1; v <= k; ++v) bs.push_back({{}, {v}, 0});
                out.push_back(canonicalize(std::move(bs), r, k, k));
                size_t t = 0;
                while (t < col.size() && ++col[t] == r) col[t++] = 0;
                if (t == col.size()) break;
            }
        } while (std::next_permutation(mask.begin(), mask.end()));
    });
    std::sort(out.begin(), out.end());
    return out;
}

Diagram embed_group(const WElt& g, int k, int r) {
    const int i = static_cast<int>(g.s.size());
    std::vector<int> s(k), h(k, 0);
    std::iota(s.begin(), s.end(), 0);
    for (int j = 0; j < i; ++j) {
        s[j] = g.s[j];
        h[j] = g.h[j];
    }
    return perm_diagram(r, s, h);
}

LFactor factor_L(const Diagram& D, int i) {
    if (!in_L(D, i)) throw ModuleError("diagram is not in L_{k,i}");
    const int k = D.k(), r = D.r();
    std::vector<const Block*> at(i);
    for (int v = 1; v <= i; ++v) at[v - 1] = bottom_block(D, v);
    std::vector<int> pi(i);  // pi[t] = bottom (0-based) of the t-th part in min-top order
    std::iota(pi.begin(), pi.end(), 0);
    std::sort(pi.begin(), pi.end(), [&](int a, int b) { return at[a]->top[0] < at[b]->top[0]; });
    WElt g{std::vector<int>(i), std::vector<int>(i)};
    std::vector<Block> bs;
    for (int t = 0; t < i; ++t) {
        const Block* b = at[pi[t]];
        bs.push_back({b->top, {t + 1}, 0});
        g.s[pi[t]] = t;
        g.h[t] = b->c;
    }
    for (const auto& b : D.blocks())
        if (!b.propagating()) bs.push_back(b);
    return {canonicalize(std::move(bs), r, k, k), g};
}

// ---- Specht modules in Young's seminormal form ----

namespace {

using Tab = std::vector<std::pair<int, int>>;  // position (row, col) of each entry 0..n-1

std::vector<Tab> standard_tableaux(const Partition& lambda) {
    const int n = size(lambda);
    std::vector<Tab> out;
    std::vector<int> filled(lambda.size(), 0);
    Tab cur(n);
    std::function<void(int)> rec = [&](int v) {
        if (v == n) {
            out.push_back(cur);
            return;
        }
        for (size_t row = 0; row < lambda.size(); ++row) {
            if (filled[row] >= lambda[row]) continue;
            if (row > 0 && filled[row - 1] <= filled[row]) continue;
            cur[v] = {static_cast<int>(row), filled[row]};
            filled[row]++;
            rec(v + 1);
            filled[row]--;
        }
    };
    rec(0);
    return out;
}

struct SpechtData {
    std::vector<Tab> tabs;
    std::map<Tab, int> pos;
    std::vector<CycMatrix> gens;  // s_0..s_{n-2} (swap entries j, j+1)
    std::map<std::vector<int>, CycMatrix> cache;
};

std::mutex g_specht_mutex;
std::map<std::pair<Partition, int>, std::unique_ptr<SpechtData>> g_specht;

SpechtData& specht_data(const Partition& lambda, int r) {
    auto key = std::make_pair(lambda, r);
    auto it = g_specht.find(key);
    if (it != g_specht.end()) return *it->second;
    auto sd = std::make_unique<SpechtData>();
    sd->tabs = standard_tableaux(lambda);
    const int f = static_cast<int>(sd->tabs.size()), n = size(lambda);
    for (int t = 0; t < f; ++t) sd->pos[sd->tabs[t]] = t;
    for (int j = 0; j + 1 < n; ++j) {
        CycMatrix m(f, std::vector<Cyc>(f, Cyc(r)));
        for (int t = 0; t < f; ++t) {
            const Tab& T = sd->tabs[t];
            auto [ra, ca] = T[j];
            auto [rb, cb] = T[j + 1];
            if (ra == rb) {
                m[t][t] = Cyc(r, 1L);
                continue;
            }
            if (ca == cb) {
                m[t][t] = Cyc(r, -1L);
                continue;
            }
            const long d = (cb - rb) - (ca - ra);
            Tab U = T;
            std::swap(U[j], U[j + 1]);
            const int u = sd->pos.at(U);
            m[t][t] = Cyc(r, frac(1, d));
            // Column t holds the image of v_T.
            if (ra < rb)
                m[u][t] = Cyc(r, 1L);
            else
                m[u][t] = Cyc(r, frac(d * d - 1, d * d));
        }
        sd->gens.push_back(std::move(m));
    }
    return *g_specht.emplace(key, std::move(sd)).first->second;
}

CycMatrix ident(int n, int r) {
    CycMatrix m(n, std::vector<Cyc>(n, Cyc(r)));
    for (int t = 0; t < n; ++t) m[t][t] = Cyc(r, 1L);
    return m;
}

CycMatrix specht_rec(SpechtData& sd, const std::vector<int>& perm, int r) {
    auto it = sd.cache.find(perm);
    if (it != sd.cache.end()) return it->second;
    CycMatrix out;
    const int n = static_cast<int>(perm.size());
    int j = 0;
    while (j + 1 < n && perm[j] < perm[j + 1]) ++j;
    if (j + 1 >= n) {
        out = ident(static_cast<int>(sd.tabs.size()), r);
    } else {
        // perm = (perm o s_j) o s_j with one inversion fewer on the left factor.
        std::vector<int> p = perm;
        std::swap(p[j], p[j + 1]);
        out = mat_mul(specht_rec(sd, p, r), sd.gens[j], r);
    }
    sd.cache.emplace(perm, out);
    return out;
}

}  // namespace

CycMatrix mat_mul(const CycMatrix& a, const CycMatrix& b, int r) {
    const size_t n = a.size(), m = b.empty() ? 0 : b[0].size(), l = b.size();
    CycMatrix out(n, std::vector<Cyc>(m, Cyc(r)));
    for (size_t i = 0; i < n; ++i)
        for (size_t t = 0; t < l; ++t) {
            if (a[i][t].is_zero()) continue;
            for (size_t j = 0; j < m; ++j)
                if (!b[t][j].is_zero()) out[i][j] += a[i][t] * b[t][j];
        }
    return out;
}

int specht_dim(const Partition& lambda) { return static_cast<int>(standard_tableaux(lambda).size()); }

CycMatrix specht_matrix(const Partition& lambda, const std::vector<int>& perm, int r) {
    if (static_cast<int>(perm.size()) != size(lambda)) throw ModuleError("permutation size differs from |lambda|");
    std::lock_guard<std::mutex> lock(g_specht_mutex);
    return specht_rec(specht_data(lambda, r), perm, r);
}

// ---- induced wreath representations ----

namespace {
std::mutex g_rep_mutex;
std::map<std::pair<Multipartition, int>, std::unique_ptr<MatrixRep>> g_reps;

CycMatrix kron(const CycMatrix& a, const CycMatrix& b, int r) {
    const size_t n = a.size(), m = b.size();
    CycMatrix out(n * m, std::vector<Cyc>(n * m, Cyc(r)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (a[i][j].is_zero()) continue;
            for (size_t p = 0; p < m; ++p)
                for (size_t q = 0; q < m; ++q)
                    if (!b[p][q].is_zero()) out[i * m + p][j * m + q] = a[i][j] * b[p][q];
        }
    return out;
}
}  // namespace

const MatrixRep& MatrixRep::get(const Multipartition& lambda, int r) {
    std::lock_guard<std::mutex> lock(g_rep_mutex);
    auto key = std::make_pair(lambda, r);
    auto it = g_reps.find(key);
    if (it != g_reps.end()) return *it->second;
    std::unique_ptr<MatrixRep> rep(new MatrixRep(lambda, r));
    return *g_reps.emplace(key, std::move(rep)).first->second;
}

MatrixRep::MatrixRep(const Multipartition& lambda, int r) : lambda_(lambda), r_(r) {
    if (static_cast<int>(lambda.size()) != r) throw ModuleError("multipartition length differs from r");
    const int n = weight(lambda);
    G_ = &WreathGroup::get(r, n);
    std::vector<int> off(r + 1, 0);
    for (int c = 0; c < r; ++c) off[c + 1] = off[c] + size(lambda[c]);
    // Cosets of the Young subgroup: a component label for each position.
    std::vector<int> label0;
    for (int c = 0; c < r; ++c) label0.insert(label0.end(), size(lambda[c]), c);
    std::vector<std::vector<int>> labels;
    std::map<std::vector<int>, int> label_pos;
    std::vector<int> lab = label0;
    do {
        label_pos[lab] = static_cast<int>(labels.size());
        labels.push_back(lab);
    } while (std::next_permutation(lab.begin(), lab.end()));
    std::vector<WElt> reps;
    for (const auto& L : labels) {
        WElt g{std::vector<int>(n, 0), std::vector<int>(n)};
        std::vector<int> fill(r, 0);
        for (int p = 0; p < n; ++p) g.s[off[L[p]] + fill[L[p]]++] = p;
        reps.push_back(std::move(g));
    }
    std::vector<WElt> rep_inv;
    for (const auto& g : reps) rep_inv.push_back(winv(g, r));
    int block = 1;
    for (int c = 0; c < r; ++c) block *= specht_dim(lambda[c]);
    const int ncos = static_cast<int>(labels.size());
    dim_ = block * ncos;
    for (const auto& g : G_->elements()) {
        CycMatrix m(dim_, std::vector<Cyc>(dim_, Cyc(r)));
        for (int t = 0; t < ncos; ++t) {
            std::vector<int> L(n);
            for (int p = 0; p < n; ++p) L[g.s[p]] = labels[t][p];
            const int s = label_pos.at(L);
            WElt x = wmul(rep_inv[s], wmul(g, reps[t], r), r);
            CycMatrix sub = ident(1, r);
            for (int c = 0; c < r; ++c) {
                std::vector<int> p(off[c + 1] - off[c]);
                long e = 0;
                for (int j = off[c]; j < off[c + 1]; ++j) {
                    if (x.s[j] < off[c] || x.s[j] >= off[c + 1]) throw ModuleError("coset bookkeeping failed");
                    p[j - off[c]] = x.s[j] - off[c];
                    e += x.h[j];
                }
                CycMatrix sp = specht_matrix(lambda[c], p, r);
                for (auto& row : sp)
                    for (auto& v : row)
                        if (!v.is_zero()) v.mul_zeta(e * c);
                sub = kron(sub, sp, r);
            }
            for (int a = 0; a < block; ++a)
                for (int b = 0; b < block; ++b) m[s * block + a][t * block + b] = sub[a][b];
        }
        mats_.push_back(std::move(m));
    }
}

GroupAlg ga_mul(const WreathGroup& G, const GroupAlg& a, const GroupAlg& b) {
    const int r = G.r();
    GroupAlg out(G.order(), Cyc(r));
    for (int x = 0; x < G.order(); ++x) {
        if (a[x].is_zero()) continue;
        for (int y = 0; y < G.order(); ++y)
            if (!b[y].is_zero()) out[G.mul(x, y)] += a[x] * b[y];
    }
    return out;
}

GroupAlg primitive_idempotent(const Multipartition& lambda, int r) {
    const MatrixRep& rho = MatrixRep::get(lambda, r);
    const WreathGroup& G = rho.group();
    GroupAlg e(G.order(), Cyc(r));
    const Cyc scale(r, frac(rho.dim(), G.order()));
    for (int x = 0; x < G.order(); ++x) {
        int xi = G.index(winv(G.elements()[x], r));
        e[x] = rho.of(xi)[0][0] * scale;
    }
    return e;
}

// ---- cell modules ----

CellModule::CellModule(int k, const Multipartition& lambda, int r)
    : k_(k), i_(weight(lambda)), r_(r), rep_(&MatrixRep::get(lambda, r)), cross_(enumerate_cross_section(k, i_, r)) {
    for (size_t t = 0; t < cross_.size(); ++t) pos_[cross_[t]] = static_cast<int>(t);
}

PolyMatrix CellModule::act(const Diagram& d) const {
    if (d.k() != k_ || d.l() != k_ || d.r() != r_) throw ModuleError("acting diagram has the wrong shape");
    const int n = dim(), f = rep_->dim();
    PolyMatrix M(n, std::vector<MPoly>(n, MPoly(r_)));
    for (size_t t = 0; t < cross_.size(); ++t) {
        Composite c = compose(d, cross_[t]);
        if (rank(c.d) != i_) continue;
        LFactor fac = factor_L(c.d, i_);
        const int row = pos_.at(fac.d);
        const CycMatrix& g = rep_->of(fac.g);
        MPoly mono = monomial_poly(r_, c.m);
        for (int a = 0; a < f; ++a)
            for (int j = 0; j < f; ++j)
                if (!g[a][j].is_zero()) M[row * f + a][t * f + j] = mono * g[a][j];
    }
    return M;
}

GramData gram_matrix(int k, const Multipartition& lambda, int r) {
    const int i = weight(lambda);
    if (i > k) throw ModuleError("weight exceeds k");
    const MatrixRep& rho = MatrixRep::get(lambda, r);
    const WreathGroup& G = rho.group();
    const int f = rho.dim();
    GramData out;
    out.cross = enumerate_cross_section(k, i, r);
    // g_a with rho(g_a) e_1 independent.
    CycMatrix cols;
    for (int x = 0; x < G.order() && static_cast<int>(out.g.size()) < f; ++x) {
        std::vector<Cyc> v(f, Cyc(r));
        for (int a = 0; a < f; ++a) v[a] = rho.of(x)[a][0];
        cols.push_back(v);
        if (rank(cols) == static_cast<int>(cols.size()))
            out.g.push_back(G.elements()[x]);
        else
            cols.pop_back();
    }
    const GroupAlg eps = primitive_idempotent(lambda, r);
    const int id = G.index(widentity(i));
    std::vector<int> inv(G.order());
    for (int x = 0; x < G.order(); ++x) inv[x] = G.index(winv(G.elements()[x], r));
    // coefficient of eps in eps w eps
    auto alpha = [&](const WElt& w) {
        const int wi = G.index(w);
        Cyc s(r);
        for (int x = 0; x < G.order(); ++x)
            if (!eps[x].is_zero()) s += eps[x] * eps[inv[G.mul(x, wi)]];
        return s / eps[id];
    };
    const int nc = static_cast<int>(out.cross.size());
    out.G.assign(nc * f, std::vector<MPoly>(nc * f, MPoly(r)));
    for (int p = 0; p < nc; ++p)
        for (int q = 0; q < nc; ++q) {
            Composite c = compose(flip_invert(out.cross[p]), out.cross[q]);
            if (rank(c.d) < i) continue;
            if (!in_L(c.d, i) || !in_L(flip_keep(c.d), i))
                throw ModuleError("product of cross-section elements left the group part: " + c.d.str());
            const WElt u = factor_L(c.d, i).g;
            const MPoly mono = monomial_poly(r, c.m);
            for (int a = 0; a < f; ++a)
                for (int b = 0; b < f; ++b) {
                    WElt w = wmul(wmul(winv(out.g[a], r), u, r), out.g[b], r);
                    Cyc al = alpha(w);
                    if (!al.is_zero()) out.G[p * f + a][q * f + b] = mono * al;
                }
        }
    return out;
}

MPoly gram_det(int k, const Multipartition& lambda, int r) { return det(gram_matrix(k, lambda, r).G, r); }

SemisimpleReport semisimplicity_certificate(int k, int r, const std::vector<Cyc>& x) {
    if (static_cast<int>(x.size()) != r) throw ModuleError("parameter point has the wrong length");
    if (std::all_of(x.begin(), x.end(), [](const Cyc& v) { return v.is_zero(); }))
        throw ModuleError("all parameters are zero");
    SemisimpleReport rep;
    rep.dim_sum = 0;
    for (int i = 0; i <= k; ++i) {
        const Integer ncross = static_cast<long>(enumerate_cross_section(k, i, r).size());
        for (const auto& lam : multipartitions(r, i)) {
            Cyc v = gram_det(k, lam, r).eval(x);
            if (v.is_zero()) rep.semisimple = false;
            rep.dets.emplace_back(lam, v);
            Integer d = ncross * MatrixRep::get(lam, r).dim();
            rep.dim_sum += d * d;
        }
    }
    rep.bell = count_bell(2 * k, r);
    return rep;
}

// ---- Cartan matrix ----

long long cartan_entry(const Multipartition& lambda, const Multipartition& mu, int r) {
    const int l = weight(lambda), m = weight(mu);
    if (m > l) return 0;
    std::vector<Diagram> ds;
    std::map<Diagram, int> pos;
    for_each_diagram(r, m, l, [&](const Diagram& d) {
        if (is_downward(d)) {
            pos.emplace(d, static_cast<int>(ds.size()));
            ds.push_back(d);
        }
    });
    const WreathGroup& G1 = WreathGroup::get(r, m);
    const WreathGroup& G2 = WreathGroup::get(r, l);
    const int N = static_cast<int>(ds.size());
    auto table = [&](const WreathGroup& G, bool left) {
        std::vector<std::vector<int>> t(G.order(), std::vector<int>(N));
        for (int g = 0; g < G.order(); ++g) {
            const WElt& e = G.elements()[g];
            Diagram pg = perm_diagram(r, e.s, e.h);
            for (int d = 0; d < N; ++d) t[g][d] = pos.at(left ? compose(pg, ds[d]).d : compose(ds[d], pg).d);
        }
        return t;
    };
    const auto L = table(G1, true), R = table(G2, false);
    const auto& chi_mu = G1.character_row(mu);
    const auto& chi_la = G2.character_row(lambda);
    // Fixed points only depend on the pair of elements; sum character weights per class pair.
    std::map<std::pair<int, int>, long long> fixes;
    for (int a = 0; a < G1.order(); ++a)
        for (int b = 0; b < G2.order(); ++b) {
            long long f = 0;
            for (int d = 0; d < N; ++d)
                if (L[a][R[b][d]] == d) ++f;
            if (f) fixes[{G1.class_of(a), G2.class_of(b)}] += f;
        }
    Cyc s(r);
    for (const auto& [cls, f] : fixes) s += (chi_mu[cls.first] * chi_la[cls.second]).conj() * Cyc(r, static_cast<long>(f));
    s /= Cyc(r, static_cast<long>(G1.order() * G2.order()));
    if (!s.is_rational() || s.to_rational().get_den() != 1 || s.to_rational() < 0)
        throw ModuleError("Cartan entry is not a nonnegative integer: " + s.str());
    return s.to_rational().get_num().get_si();
}

CartanTable cartan_matrix(int max_weight, int r) {
    CartanTable t;
    for (int n = 0; n <= max_weight; ++n)
        for (auto& m : multipartitions(r, n)) t.index.push_back(m);
    const size_t N = t.index.size();
    t.B.assign(N, std::vector<long long>(N, 0));
    for (size_t a = 0; a < N; ++a)
        for (size_t b = 0; b < N; ++b) t.B[a][b] = cartan_entry(t.index[a], t.index[b], r);
    return t;
}

CartanCheck cartan_tensor_check(int max_weight, int r) {
    CartanCheck out;
    CartanTable Br = cartan_matrix(max_weight, r);
    CartanTable B1 = cartan_matrix(max_weight, 1);
    std::map<Partition, int> p1;
    for (size_t a = 0; a < B1.index.size(); ++a) p1[B1.index[a][0]] = static_cast<int>(a);
    auto fail = [&](const std::string& msg) {
        if (out.first_failure.empty()) out.first_failure = msg;
    };
    for (size_t a = 0; a < Br.index.size(); ++a)
        for (size_t b = 0; b < Br.index.size(); ++b) {
            const auto &la = Br.index[a], &mu = Br.index[b];
            const long long v = Br.B[a][b];
            const int wl = weight(la), wm = weight(mu);
            if ((a == b && v != 1) || (a != b && (wm > wl || (wm == wl)) && v != 0)) {
                out.unitriangular = false;
                fail("B[" + to_string(la) + "," + to_string(mu) + "]=" + std::to_string(v));
            }
            long long prod = 1;
            for (int c = 0; c < r; ++c) prod *= B1.B[p1.at(la[c])][p1.at(mu[c])];
            if (prod != v) {
                out.tensor = false;
                fail("tensor mismatch at B[" + to_string(la) + "," + to_string(mu) + "]");
            }
        }
    return out;
}

}  // namespace cpar
