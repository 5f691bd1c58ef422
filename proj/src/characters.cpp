#include "cpar/characters.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace cpar {

int size(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

int weight(const Multipartition& m) {
    int w = 0;
    for (const auto& p : m) w += size(p);
    return w;
}

std::vector<Partition> partitions(int n) {
    std::vector<Partition> out;
    Partition cur;
    std::function<void(int, int)> rec = [&](int left, int maxp) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(left, maxp); p >= 1; --p) {
            cur.push_back(p);
            rec(left - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

std::vector<Multipartition> multipartitions(int r, int n) {
    std::vector<Multipartition> out;
    Multipartition cur(r);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == r - 1) {
            for (const auto& p : partitions(left)) {
                cur[i] = p;
                out.push_back(cur);
            }
            return;
        }
        for (int s = left; s >= 0; --s) {
            for (const auto& p : partitions(s)) {
                cur[i] = p;
                rec(i + 1, left - s);
            }
        }
    };
    if (r >= 1) rec(0, n);
    return out;
}

Partition cycle_type(const std::vector<int>& perm) {
    std::vector<bool> seen(perm.size(), false);
    Partition out;
    for (size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (size_t j = i; !seen[j]; j = perm[j]) {
            seen[j] = true;
            ++len;
        }
        out.push_back(len);
    }
    std::sort(out.rbegin(), out.rend());
    return out;
}

Integer class_size(const Partition& mu) {
    Integer z = 1;
    std::map<int, int> mult;
    for (int p : mu) {
        z *= p;
        mult[p]++;
    }
    for (auto [p, c] : mult)
        for (int i = 2; i <= c; ++i) z *= i;
    Integer f = 1;
    for (int i = 2; i <= size(mu); ++i) f *= i;
    return f / z;
}

std::string to_string(const Partition& p) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
    os << ")";
    return os.str();
}

std::string to_string(const Multipartition& m) {
    std::string s = "(";
    for (size_t i = 0; i < m.size(); ++i) s += (i ? "," : "") + (m[i].empty() ? std::string("0") : to_string(m[i]));
    return s + ")";
}

namespace {

std::mutex g_mn_mutex;
std::map<std::pair<Partition, Partition>, long long> g_mn_cache;

long long mn_rec(const Partition& lambda, const Partition& mu) {
    if (mu.empty()) return lambda.empty() ? 1 : 0;
    {
        std::lock_guard<std::mutex> lock(g_mn_mutex);
        auto it = g_mn_cache.find({lambda, mu});
        if (it != g_mn_cache.end()) return it->second;
    }
    const int k = mu[0];
    Partition rest(mu.begin() + 1, mu.end());
    const int L = static_cast<int>(lambda.size());
    // beta numbers b_i = lambda_i + (L - 1 - i), strictly decreasing
    std::vector<int> beta(L);
    for (int i = 0; i < L; ++i) beta[i] = lambda[i] + (L - 1 - i);
    std::set<int> bs(beta.begin(), beta.end());
    long long total = 0;
    for (int i = 0; i < L; ++i) {
        int b = beta[i], nb = b - k;
        if (nb < 0 || bs.count(nb)) continue;
        int between = 0;
        for (int x : beta)
            if (x > nb && x < b) ++between;
        std::vector<int> nbeta = beta;
        nbeta[i] = nb;
        std::sort(nbeta.rbegin(), nbeta.rend());
        Partition nl;
        for (int j = 0; j < L; ++j) {
            int part = nbeta[j] - (L - 1 - j);
            if (part > 0) nl.push_back(part);
        }
        long long v = mn_rec(nl, rest);
        total += (between % 2 ? -v : v);
    }
    std::lock_guard<std::mutex> lock(g_mn_mutex);
    g_mn_cache[{lambda, mu}] = total;
    return total;
}

}  // namespace

long long mn_character(const Partition& lambda, const Partition& mu) {
    if (size(lambda) != size(mu)) throw std::invalid_argument("character arguments have different sizes");
    Partition m = mu;
    std::sort(m.rbegin(), m.rend());
    return mn_rec(lambda, m);
}

long long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (size(nu) != size(lambda) + size(mu)) return 0;
    if (lambda.size() > nu.size()) return 0;
    for (size_t i = 0; i < lambda.size(); ++i)
        if (lambda[i] > nu[i]) return 0;
    auto lam = [&](size_t i) { return i < lambda.size() ? lambda[i] : 0; };
    std::vector<std::pair<int, int>> cells;  // reading order: rows top-down, right to left
    for (size_t i = 0; i < nu.size(); ++i)
        for (int j = nu[i] - 1; j >= lam(i); --j) cells.push_back({static_cast<int>(i), j});
    std::vector<std::vector<int>> T(nu.size());
    for (size_t i = 0; i < nu.size(); ++i) T[i].assign(nu[i], 0);
    const int h = static_cast<int>(mu.size());
    std::vector<int> count(h + 1, 0);
    long long total = 0;
    std::function<void(size_t)> rec = [&](size_t idx) {
        if (idx == cells.size()) {
            ++total;
            return;
        }
        auto [i, j] = cells[idx];
        for (int v = 1; v <= h; ++v) {
            if (count[v] >= mu[v - 1]) continue;
            if (v > 1 && count[v] + 1 > count[v - 1]) continue;
            if (j + 1 < nu[i] && v > T[i][j + 1]) continue;
            if (i > 0 && j >= lam(i - 1) && v <= T[i - 1][j]) continue;
            T[i][j] = v;
            count[v]++;
            rec(idx + 1);
            count[v]--;
            T[i][j] = 0;
        }
    };
    rec(0);
    return total;
}

long long lr_tuple(const Multipartition& lambda, const Multipartition& mu, const Multipartition& nu) {
    long long p = 1;
    for (size_t i = 0; i < nu.size() && p; ++i) p *= lr_coefficient(lambda[i], mu[i], nu[i]);
    return p;
}

long long lr_triple(const Multipartition& lambda, const Multipartition& beta, const Multipartition& delta,
                    const Multipartition& gamma) {
    long long p = 1;
    for (size_t i = 0; i < lambda.size() && p; ++i) {
        long long s = 0;
        int e = size(delta[i]) + size(gamma[i]);
        if (size(beta[i]) + e != size(lambda[i])) return 0;
        for (const auto& eps : partitions(e)) {
            long long a = lr_coefficient(beta[i], eps, lambda[i]);
            if (a) s += a * lr_coefficient(delta[i], gamma[i], eps);
        }
        p *= s;
    }
    return p;
}

Integer kronecker(const Partition& lambda, const Partition& mu, const Partition& nu) {
    int n = size(lambda);
    if (size(mu) != n || size(nu) != n) throw std::invalid_argument("Kronecker arguments have different sizes");
    Integer s = 0, f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    for (const auto& c : partitions(n))
        s += class_size(c) * static_cast<long>(mn_character(lambda, c) * mn_character(mu, c) * mn_character(nu, c));
    if (s % f != 0) throw std::logic_error("non-integral Kronecker coefficient");
    return s / f;
}

std::optional<Partition> pad(const Partition& lambda, int n) {
    int first = n - size(lambda);
    if (first < 0 || (!lambda.empty() && first < lambda[0])) return std::nullopt;
    Partition out{first};
    out.insert(out.end(), lambda.begin(), lambda.end());
    if (out[0] == 0) out.erase(out.begin());
    return out;
}

ReducedKronecker reduced_kronecker_detail(const Partition& lambda, const Partition& mu, const Partition& nu) {
    int n0 = size(lambda) + size(mu) + size(nu);
    for (const auto* p : {&lambda, &mu, &nu})
        if (!p->empty()) n0 = std::max(n0, size(*p) + (*p)[0]);
    auto value = [&](int n) {
        Integer v = kronecker(*pad(lambda, n), *pad(mu, n), *pad(nu, n));
        return v.get_si();
    };
    long long prev = value(n0);
    for (int n = n0 + 1; n <= n0 + 4; ++n) {
        long long cur = value(n);
        if (cur == prev) return {cur, n0, n - 1};
        prev = cur;
    }
    throw std::runtime_error("reduced Kronecker coefficient did not stabilize");
}

long long reduced_kronecker(const Partition& lambda, const Partition& mu, const Partition& nu) {
    return reduced_kronecker_detail(lambda, mu, nu).value;
}

WElt wmul(const WElt& a, const WElt& b, int r) {
    const size_t n = a.s.size();
    WElt out;
    out.h.resize(n);
    out.s.resize(n);
    std::vector<int> ainv(n);
    for (size_t i = 0; i < n; ++i) ainv[a.s[i]] = static_cast<int>(i);
    for (size_t i = 0; i < n; ++i) {
        out.s[i] = a.s[b.s[i]];
        out.h[i] = (a.h[i] + b.h[ainv[i]]) % r;
    }
    return out;
}

WElt winv(const WElt& a, int r) {
    const size_t n = a.s.size();
    WElt out;
    out.h.resize(n);
    out.s.resize(n);
    for (size_t i = 0; i < n; ++i) {
        out.s[a.s[i]] = static_cast<int>(i);
        out.h[i] = (r - a.h[a.s[i]] % r) % r;
    }
    return out;
}

WElt widentity(int n) {
    WElt e;
    e.h.assign(n, 0);
    e.s.resize(n);
    std::iota(e.s.begin(), e.s.end(), 0);
    return e;
}

std::vector<WElt> wreath_elements(int r, int n) {
    std::vector<WElt> out;
    std::vector<int> s(n);
    std::iota(s.begin(), s.end(), 0);
    do {
        std::vector<int> h(n, 0);
        while (true) {
            out.push_back({h, s});
            int i = 0;
            while (i < n && ++h[i] == r) h[i++] = 0;
            if (i == n) break;
        }
    } while (std::next_permutation(s.begin(), s.end()));
    return out;
}

Cyc from_exponents(int r, const std::vector<Integer>& a) {
    Cyc out(r);
    for (int e = 0; e < r; ++e) {
        if (a[e] == 0) continue;
        Cyc t = Cyc::zeta_pow(r, e);
        t *= Cyc(r, Rational(a[e]));
        out += t;
    }
    return out;
}

namespace {
std::mutex g_group_mutex;
std::map<std::pair<int, int>, std::unique_ptr<WreathGroup>> g_groups;
}  // namespace

const WreathGroup& WreathGroup::get(int r, int n) {
    std::lock_guard<std::mutex> lock(g_group_mutex);
    auto key = std::make_pair(r, n);
    auto it = g_groups.find(key);
    if (it != g_groups.end()) return *it->second;
    std::unique_ptr<WreathGroup> g(new WreathGroup(r, n));
    return *g_groups.emplace(key, std::move(g)).first->second;
}

long WreathGroup::code(const WElt& g) const {
    long base = std::max({n_, r_, 2});
    long c = 0;
    for (int i = n_ - 1; i >= 0; --i) c = c * base + g.s[i];
    for (int i = n_ - 1; i >= 0; --i) c = c * base + g.h[i];
    return c;
}

WreathGroup::WreathGroup(int r, int n) : r_(r), n_(n) {
    elems_ = wreath_elements(r, n);
    for (size_t i = 0; i < elems_.size(); ++i) index_.emplace(code(elems_[i]), static_cast<int>(i));
    class_of_.assign(elems_.size(), -1);
    std::vector<WElt> inverses;
    inverses.reserve(elems_.size());
    for (const auto& x : elems_) inverses.push_back(winv(x, r));
    for (size_t g = 0; g < elems_.size(); ++g) {
        if (class_of_[g] >= 0) continue;
        int cid = static_cast<int>(classes_.size());
        classes_.emplace_back();
        for (size_t x = 0; x < elems_.size(); ++x) {
            int y = index(wmul(wmul(elems_[x], elems_[g], r), inverses[x], r));
            if (class_of_[y] < 0) {
                class_of_[y] = cid;
                classes_[cid].push_back(y);
            }
        }
    }
    irreps_ = multipartitions(r, n);
}

int WreathGroup::index(const WElt& g) const {
    auto it = index_.find(code(g));
    if (it == index_.end()) throw std::invalid_argument("element not in group");
    return it->second;
}

long WreathGroup::mul(int a, int b) const { return index(wmul(elems_[a], elems_[b], r_)); }

const std::vector<Cyc>& WreathGroup::character_row(const Multipartition& lambda) const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = table_.find(lambda);
        if (it != table_.end()) return it->second;
    }
    if (static_cast<int>(lambda.size()) != r_ || weight(lambda) != n_)
        throw std::invalid_argument("multipartition does not index an irreducible of this group");
    std::vector<int> seg(n_);
    std::vector<int> off(r_ + 1, 0);
    for (int i = 0; i < r_; ++i) off[i + 1] = off[i] + size(lambda[i]);
    for (int i = 0; i < r_; ++i)
        for (int j = off[i]; j < off[i + 1]; ++j) seg[j] = i;
    Integer horder = 1;
    for (int i = 0; i < r_; ++i) {
        int k = size(lambda[i]);
        for (int j = 0; j < k; ++j) horder *= r_;
        for (int j = 2; j <= k; ++j) horder *= j;
    }
    std::vector<Cyc> row;
    for (const auto& cls : classes_) {
        std::vector<Integer> acc(r_, 0);
        for (int y : cls) {
            const WElt& g = elems_[y];
            bool inH = true;
            for (int j = 0; j < n_ && inH; ++j) inH = seg[g.s[j]] == seg[j];
            if (!inH) continue;
            long long val = 1;
            int e = 0;
            for (int i = 0; i < r_ && val; ++i) {
                int k = off[i + 1] - off[i];
                std::vector<int> sub(k);
                int hs = 0;
                for (int j = 0; j < k; ++j) {
                    sub[j] = g.s[off[i] + j] - off[i];
                    hs += g.h[off[i] + j];
                }
                e += i * hs;
                val *= mn_character(lambda[i], cycle_type(sub));
            }
            acc[e % r_] += static_cast<long>(val);
        }
        Rational scale(Integer(order()), horder * static_cast<long>(cls.size()));
        scale.canonicalize();
        Cyc v = from_exponents(r_, acc);
        v *= Cyc(r_, scale);
        row.push_back(v);
    }
    std::lock_guard<std::mutex> lock(mu_);
    return table_.emplace(lambda, std::move(row)).first->second;
}

Cyc WreathGroup::character(const Multipartition& lambda, const WElt& g) const {
    return character_row(lambda)[class_of_[index(g)]];
}

Cyc wreath_character(const Multipartition& lambda, const WElt& g, int r) {
    int n = static_cast<int>(g.s.size());
    if (weight(lambda) != n) throw std::invalid_argument("multipartition weight does not match element size");
    return WreathGroup::get(r, n).character(lambda, g);
}

Cyc inner_product(const WreathGroup& G, const std::vector<Cyc>& a, const std::vector<Cyc>& b) {
    Cyc s(G.r());
    for (size_t c = 0; c < G.classes().size(); ++c) {
        Cyc t = a[c] * b[c].conj();
        t *= Cyc(G.r(), static_cast<long>(G.classes()[c].size()));
        s += t;
    }
    s *= Cyc(G.r(), Rational(1, G.order()));
    return s;
}

namespace {
long long to_count(const Cyc& v, const char* what) {
    Rational q = v.to_rational();
    q.canonicalize();
    if (q.get_den() != 1 || sgn(q) < 0) throw std::logic_error(std::string("non-integral ") + what + ": " + q.get_str());
    return q.get_num().get_si();
}
}  // namespace

long long k_coefficient(const Multipartition& d0, const Multipartition& d1, const Multipartition& d2, int r) {
    int t = weight(d0);
    if (weight(d1) != t || weight(d2) != t) throw std::invalid_argument("K-coefficient weights differ");
    const WreathGroup& G = WreathGroup::get(r, t);
    const auto& c0 = G.character_row(d0);
    const auto& c1 = G.character_row(d1);
    const auto& c2 = G.character_row(d2);
    // Sum over ((w,u),xi): element (w,xi) indexes g, (u,xi) indexes g'.
    Cyc s(r);
    std::vector<int> hsum(t);
    for (size_t a = 0; a < G.elements().size(); ++a) {
        const WElt& g = G.elements()[a];
        for (size_t b = 0; b < G.elements().size(); ++b) {
            const WElt& g2 = G.elements()[b];
            if (g2.s != g.s) continue;
            WElt g3{std::vector<int>(t), g.s};
            for (int i = 0; i < t; ++i) g3.h[i] = (g.h[i] + g2.h[i]) % r;
            int k0 = G.class_of(static_cast<int>(a)), k1 = G.class_of(static_cast<int>(b));
            int k2 = G.class_of(G.index(g3));
            s += c0[k0] * c1[k1] * c2[k2].conj();
        }
    }
    Integer horder = 1;
    for (int i = 0; i < 2 * t; ++i) horder *= r;
    for (int i = 2; i <= t; ++i) horder *= i;
    s *= Cyc(r, Rational(Integer(1), horder));
    return to_count(s, "K-coefficient");
}

std::vector<AdmissibleData> admissible_set(int l, int m, int n) {
    std::vector<AdmissibleData> out;
    int hi = std::min({l + m - n, l + n - m, m + n - l});
    for (int t = 0; t <= hi; ++t) {
        if ((t - (l + m + n)) % 2 != 0) continue;
        out.push_back({t, (m + n - l - t) / 2, (l + n - m - t) / 2, (l + m - n - t) / 2});
    }
    return out;
}

long long xt_formula(int t, const Multipartition& lambda, const Multipartition& mu, const Multipartition& nu) {
    const int r = static_cast<int>(lambda.size());
    const int l = weight(lambda), m = weight(mu), n = weight(nu);
    std::optional<AdmissibleData> ad;
    for (const auto& d : admissible_set(l, m, n))
        if (d.t == t) ad = d;
    if (!ad) throw std::invalid_argument("t is not admissible");
    const auto A = multipartitions(r, ad->a), B = multipartitions(r, ad->b), C = multipartitions(r, ad->c),
               D = multipartitions(r, t);
    long long total = 0;
    for (const auto& al : A)
        for (const auto& be : B)
            for (const auto& ga : C)
                for (const auto& d0 : D) {
                    long long x = lr_triple(lambda, be, d0, ga);
                    if (!x) continue;
                    for (const auto& d1 : D) {
                        long long y = lr_triple(mu, ga, d1, al);
                        if (!y) continue;
                        for (const auto& d2 : D) {
                            long long z = lr_triple(nu, al, d2, be);
                            if (!z) continue;
                            total += x * y * z * k_coefficient(d0, d1, d2, r);
                        }
                    }
                }
    return total;
}

long long r_coefficient(const Multipartition& lambda, const Multipartition& mu, const Multipartition& nu) {
    long long total = 0;
    for (const auto& d : admissible_set(weight(lambda), weight(mu), weight(nu)))
        total += xt_formula(d.t, lambda, mu, nu);
    return total;
}

FormulaCheck theorem_formula_check(const Multipartition& lambda, const Multipartition& mu, const Multipartition& nu) {
    long long lhs = 1;
    for (size_t i = 0; i < lambda.size(); ++i) lhs *= reduced_kronecker(lambda[i], mu[i], nu[i]);
    long long rhs = r_coefficient(lambda, mu, nu);
    return {lhs, rhs, lhs == rhs};
}

namespace {

// Part of an element of X^t: vertex in each of the three rows (-1 if absent) and a color.
struct XPart {
    int i, j, k, c;
    bool operator<(const XPart& o) const { return std::tie(i, j, k, c) < std::tie(o.i, o.j, o.k, o.c); }
    bool operator==(const XPart& o) const { return i == o.i && j == o.j && k == o.k && c == o.c; }
};
using XElt = std::vector<XPart>;

std::vector<XElt> xt_set(int l, int m, int n, const AdmissibleData& ad, int r) {
    std::vector<XElt> shapes;
    XElt cur;
    std::vector<bool> ui(l, false), uj(m, false), uk(n, false);
    int na = 0, nb = 0, nc = 0, nt = 0;
    auto first_free = [](const std::vector<bool>& u) {
        for (size_t x = 0; x < u.size(); ++x)
            if (!u[x]) return static_cast<int>(x);
        return -1;
    };
    std::function<void()> rec = [&]() {
        int i = first_free(ui);
        if (i >= 0) {
            ui[i] = true;
            for (int j = -1; j < m; ++j) {
                if (j >= 0 && uj[j]) continue;
                for (int k = -1; k < n; ++k) {
                    if (k >= 0 && uk[k]) continue;
                    if (j < 0 && k < 0) continue;
                    int* cnt = j >= 0 && k >= 0 ? &nt : (j >= 0 ? &nc : &nb);
                    int cap = j >= 0 && k >= 0 ? ad.t : (j >= 0 ? ad.c : ad.b);
                    if (*cnt >= cap) continue;
                    ++*cnt;
                    if (j >= 0) uj[j] = true;
                    if (k >= 0) uk[k] = true;
                    cur.push_back({i, j, k, 0});
                    rec();
                    cur.pop_back();
                    if (j >= 0) uj[j] = false;
                    if (k >= 0) uk[k] = false;
                    --*cnt;
                }
            }
            ui[i] = false;
            return;
        }
        int j = first_free(uj);
        if (j >= 0) {
            uj[j] = true;
            for (int k = 0; k < n; ++k) {
                if (uk[k] || na >= ad.a) continue;
                ++na;
                uk[k] = true;
                cur.push_back({-1, j, k, 0});
                rec();
                cur.pop_back();
                uk[k] = false;
                --na;
            }
            uj[j] = false;
            return;
        }
        if (first_free(uk) >= 0) return;
        shapes.push_back(cur);
    };
    rec();
    std::vector<XElt> out;
    for (const auto& s : shapes) {
        std::vector<int> col(s.size(), 0);
        while (true) {
            XElt e = s;
            for (size_t p = 0; p < e.size(); ++p) e[p].c = col[p];
            std::sort(e.begin(), e.end());
            out.push_back(e);
            size_t p = 0;
            while (p < col.size() && ++col[p] == r) col[p++] = 0;
            if (p == col.size()) break;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

long long xt_multiplicity_oracle(int l, int m, int n, int t, const Multipartition& lambda, const Multipartition& mu,
                                 const Multipartition& nu) {
    const int r = static_cast<int>(lambda.size());
    if (weight(lambda) != l || weight(mu) != m || weight(nu) != n)
        throw std::invalid_argument("multipartition weights do not match (l,m,n)");
    std::optional<AdmissibleData> ad;
    for (const auto& d : admissible_set(l, m, n))
        if (d.t == t) ad = d;
    if (!ad) throw std::invalid_argument("t is not admissible");
    const auto X = xt_set(l, m, n, *ad, r);
    const WreathGroup &G1 = WreathGroup::get(r, l), &G2 = WreathGroup::get(r, m), &G3 = WreathGroup::get(r, n);
    const auto &c1 = G1.character_row(lambda), &c2 = G2.character_row(mu), &c3 = G3.character_row(nu);
    Cyc total(r);
    for (size_t a = 0; a < G1.elements().size(); ++a) {
        const WElt& g1 = G1.elements()[a];
        for (size_t b = 0; b < G2.elements().size(); ++b) {
            const WElt& g2 = G2.elements()[b];
            std::vector<int> s2inv(m);
            for (int j = 0; j < m; ++j) s2inv[g2.s[j]] = j;
            for (size_t c = 0; c < G3.elements().size(); ++c) {
                const WElt& g3 = G3.elements()[c];
                std::vector<int> s3inv(n);
                for (int k = 0; k < n; ++k) s3inv[g3.s[k]] = k;
                long fix = 0;
                for (const auto& x : X) {
                    XElt y;
                    y.reserve(x.size());
                    for (const auto& p : x) {
                        XPart q{-1, -1, -1, p.c};
                        if (p.i >= 0) {
                            q.i = g1.s[p.i];
                            q.c += g1.h[q.i];
                        }
                        if (p.j >= 0) {
                            q.j = s2inv[p.j];
                            q.c += g2.h[p.j];
                        }
                        if (p.k >= 0) {
                            q.k = s3inv[p.k];
                            q.c += g3.h[p.k];
                        }
                        q.c %= r;
                        y.push_back(q);
                    }
                    std::sort(y.begin(), y.end());
                    fix += (y == x);
                }
                if (!fix) continue;
                Cyc v = c1[G1.class_of(static_cast<int>(a))] * c2[G2.class_of(static_cast<int>(b))] *
                        c3[G3.class_of(static_cast<int>(c))];
                v = v.conj();
                v *= Cyc(r, fix);
                total += v;
            }
        }
    }
    Integer order = Integer(G1.order()) * G2.order() * G3.order();
    total *= Cyc(r, Rational(Integer(1), order));
    return to_count(total, "permutation multiplicity");
}

}  // namespace cpar
