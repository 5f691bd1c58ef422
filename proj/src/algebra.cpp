#include "cpar/algebra.hpp"

#include <deque>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace cpar {

LinComb LinComb::of(const Diagram& d) {
    LinComb a(d.r(), d.k(), d.l());
    a.add(d, MPoly::constant(d.r(), 1));
    return a;
}

void LinComb::add(const Diagram& d, const MPoly& c) {
    if (d.r() != r_ || d.k() != k_ || d.l() != l_) throw DiagramError("linear combination arity mismatch");
    if (c.is_zero()) return;
    auto it = t_.find(d);
    if (it == t_.end()) {
        t_.emplace(d, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
}

MPoly LinComb::coeff(const Diagram& d) const {
    auto it = t_.find(d);
    return it == t_.end() ? MPoly(r_) : it->second;
}

LinComb& LinComb::operator+=(const LinComb& o) {
    for (const auto& [d, c] : o.t_) add(d, c);
    return *this;
}

std::string LinComb::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, c] : t_) {
        os << (first ? "" : " + ") << "(" << c.str() << ")*[" << d.str() << "]";
        first = false;
    }
    return os.str();
}

MPoly monomial_poly(int r, const Monomial& m) { return MPoly::monomial(r, m, Cyc(r, 1L)); }

LinComb multiply(const LinComb& a, const LinComb& b) {
    if (a.l() != b.k() || a.r() != b.r()) throw DiagramError("composition arity mismatch");
    LinComb out(a.r(), a.k(), b.l());
    for (const auto& [da, ca] : a.terms()) {
        for (const auto& [db, cb] : b.terms()) {
            Composite c = compose(da, db);
            out.add(c.d, ca * cb * monomial_poly(a.r(), c.m));
        }
    }
    return out;
}

Diagram mul(const Diagram& a, const Diagram& b) { return compose(a, b).d; }

Diagram generator(Gen g, int i, int k, int r) {
    auto bad = [] { throw DiagramError("generator index out of range"); };
    std::vector<Block> bs;
    switch (g) {
        case Gen::S0:
            if (k < 1) bad();
            for (int j = 1; j <= k; ++j) bs.push_back({{j}, {j}, j == 1 ? 1 : 0});
            break;
        case Gen::S:
            if (i < 1 || i > k - 1) bad();
            for (int j = 1; j <= k; ++j) {
                int t = j == i ? i + 1 : (j == i + 1 ? i : j);
                bs.push_back({{t}, {j}, 0});
            }
            break;
        case Gen::P:
            if (i < 1 || i > k) bad();
            for (int j = 1; j <= k; ++j) {
                if (j == i) {
                    bs.push_back({{j}, {}, 0});
                    bs.push_back({{}, {j}, 0});
                } else {
                    bs.push_back({{j}, {j}, 0});
                }
            }
            break;
        case Gen::Q:
            if (i < 1 || i > k - 1) bad();
            for (int j = 1; j <= k; ++j) {
                if (j == i)
                    bs.push_back({{i, i + 1}, {i, i + 1}, 0});
                else if (j != i + 1)
                    bs.push_back({{j}, {j}, 0});
            }
            break;
        case Gen::E:
            if (i < 0 || i > k) bad();
            for (int j = 1; j <= k; ++j) {
                if (j <= i) {
                    bs.push_back({{j}, {j}, 0});
                } else {
                    bs.push_back({{j}, {}, 0});
                    bs.push_back({{}, {j}, 0});
                }
            }
            break;
    }
    return canonicalize(std::move(bs), r, k, k);
}

Generators Generators::standard(int k, int r) {
    Generators g;
    g.r = r;
    g.k = k;
    g.s0 = generator(Gen::S0, 0, k, r);
    g.s.resize(k);
    g.q.resize(k);
    g.p.resize(k + 1);
    for (int i = 1; i < k; ++i) {
        g.s[i] = generator(Gen::S, i, k, r);
        g.q[i] = generator(Gen::Q, i, k, r);
    }
    for (int i = 1; i <= k; ++i) g.p[i] = generator(Gen::P, i, k, r);
    return g;
}

PresentationReport check_presentation(const Generators& g) {
    const int k = g.k, r = g.r;
    PresentationReport rep;
    rep.k = k;
    rep.r = r;
    const Diagram one = identity(r, k);
    auto prod = [&](std::initializer_list<const Diagram*> ds) {
        Diagram acc = one;
        for (const Diagram* d : ds) acc = mul(acc, *d);
        return acc;
    };
    auto check = [&](int rel, const std::string& inst, const Diagram& a, const Diagram& b) {
        rep.instances++;
        rep.per_relation[rel]++;
        if (a != b) rep.failures.push_back({rel, inst, a.str(), b.str()});
    };
    auto idx = [](const char* name, int i, int j = -1) {
        std::string s = std::string(name) + " i=" + std::to_string(i);
        if (j >= 0) s += " j=" + std::to_string(j);
        return s;
    };
    // w_l = s_l ... s_1 s_0 s_1 ... s_l
    std::vector<Diagram> w(k);
    for (int l = 0; l < k; ++l) {
        Diagram acc = one;
        for (int j = l; j >= 1; --j) acc = mul(acc, g.s[j]);
        acc = mul(acc, g.s0);
        for (int j = 1; j <= l; ++j) acc = mul(acc, g.s[j]);
        w[l] = acc;
    }
    auto power = [&](const Diagram& d, int n) {
        Diagram acc = one;
        for (int t = 0; t < n; ++t) acc = mul(acc, d);
        return acc;
    };

    check(1, "", power(g.s0, r), one);
    if (k >= 2) check(2, "", prod({&g.s0, &g.s[1], &g.s0, &g.s[1]}), prod({&g.s[1], &g.s0, &g.s[1], &g.s0}));
    for (int i = 2; i < k; ++i) check(3, idx("", i), prod({&g.s0, &g.s[i]}), prod({&g.s[i], &g.s0}));
    for (int i = 1; i < k; ++i) check(4, idx("", i), prod({&g.s[i], &g.s[i]}), one);
    for (int i = 1; i + 1 < k; ++i)
        check(5, idx("", i), prod({&g.s[i], &g.s[i + 1], &g.s[i]}), prod({&g.s[i + 1], &g.s[i], &g.s[i + 1]}));
    for (int i = 1; i < k; ++i)
        for (int j = 1; j < k; ++j)
            if (std::abs(i - j) > 1) check(6, idx("", i, j), prod({&g.s[i], &g.s[j]}), prod({&g.s[j], &g.s[i]}));
    for (int i = 1; i <= k; ++i) check(7, idx("", i), prod({&g.p[i], &g.p[i]}), g.p[i]);
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j) check(8, idx("", i, j), prod({&g.p[i], &g.p[j]}), prod({&g.p[j], &g.p[i]}));
    for (int i = 2; i <= k; ++i) check(9, idx("", i), prod({&g.s0, &g.p[i]}), prod({&g.p[i], &g.s0}));
    for (int i = 1; i < k; ++i)
        for (int j = 1; j <= k; ++j)
            if (std::abs(i - j) > 1) check(10, idx("", i, j), prod({&g.s[i], &g.p[j]}), prod({&g.p[j], &g.s[i]}));
    for (int i = 1; i < k; ++i) check(11, idx("", i), prod({&g.s[i], &g.p[i]}), prod({&g.p[i + 1], &g.s[i]}));
    for (int i = 1; i <= k; ++i) check(12, idx("", i), prod({&g.p[i], &w[i - 1], &g.p[i]}), g.p[i]);
    for (int i = 1; i < k; ++i)
        check(13, idx("", i), prod({&g.p[i], &g.p[i + 1]}), prod({&g.p[i], &g.p[i + 1], &g.s[i]}));
    for (int i = 1; i < k; ++i) check(14, idx("", i), prod({&g.q[i], &g.q[i]}), g.q[i]);
    for (int i = 1; i < k; ++i)
        for (int j = 1; j < k; ++j) check(15, idx("", i, j), prod({&g.q[i], &g.q[j]}), prod({&g.q[j], &g.q[i]}));
    for (int i = 1; i < k; ++i) check(16, idx("", i), prod({&g.s0, &g.q[i]}), prod({&g.q[i], &g.s0}));
    for (int i = 1; i < k; ++i)
        for (int j = 1; j < k; ++j)
            if (std::abs(i - j) > 1) check(17, idx("", i, j), prod({&g.s[i], &g.q[j]}), prod({&g.q[j], &g.s[i]}));
    for (int i = 1; i < k; ++i)
        for (int j = 1; j < k; ++j)
            if (std::abs(i - j) == 1)
                check(18, idx("", i, j), prod({&g.s[i], &g.s[j], &g.q[i]}), prod({&g.q[j], &g.s[i], &g.s[j]}));
    for (int i = 1; i < k; ++i) {
        check(19, idx("left", i), prod({&g.s[i], &g.q[i]}), g.q[i]);
        check(19, idx("right", i), prod({&g.q[i], &g.s[i]}), g.q[i]);
    }
    for (int i = 1; i < k; ++i)
        for (int j = 1; j <= k; ++j)
            if (std::abs(i - j) > 1) check(20, idx("", i, j), prod({&g.q[i], &g.p[j]}), prod({&g.p[j], &g.q[i]}));
    for (int i = 1; i < k; ++i)
        for (int j : {i, i + 1}) {
            check(21, idx("", i, j), prod({&g.q[i], &g.p[j], &g.q[i]}), g.q[i]);
            check(22, idx("", i, j), prod({&g.p[j], &g.q[i], &g.p[j]}), g.p[j]);
        }
    for (int l = 0; l < k; ++l) check(23, idx("l", l), power(w[l], r), one);
    for (int i = 1; i < k; ++i)
        for (int l = 0; l < k; ++l)
            if (l != i - 1 && l != i) check(24, idx("", i, l), prod({&g.s[i], &w[l]}), prod({&w[l], &g.s[i]}));
    for (int i = 1; i < k; ++i) check(25, idx("", i), prod({&w[i - 1], &g.s[i]}), prod({&g.s[i], &w[i]}));
    for (int m = 1; m <= k; ++m)
        for (int l = 0; l < k; ++l)
            if (l != m - 1) check(26, idx("m", m, l), prod({&g.p[m], &w[l]}), prod({&w[l], &g.p[m]}));
    for (int n = 1; n < k; ++n)
        for (int l = 0; l < k; ++l) check(27, idx("n", n, l), prod({&g.q[n], &w[l]}), prod({&w[l], &g.q[n]}));
    for (int i = 1; i < k; ++i)
        check(28, idx("", i), prod({&g.p[i], &w[i - 1], &g.q[i], &g.p[i]}), prod({&g.p[i], &w[i]}));
    return rep;
}

PresentationReport check_presentation(int k, int r) { return check_presentation(Generators::standard(k, r)); }

Integer count_bell(int k, int r) {
    // B_{n} = r * sum_{l=1}^{n} C(n-1, l-1) B_{n-l}
    std::vector<Integer> b(k + 1);
    b[0] = 1;
    for (int n = 1; n <= k; ++n) {
        Integer s = 0, binom = 1;
        for (int l = 1; l <= n; ++l) {
            s += binom * b[n - l];
            binom = binom * (n - l) / l;
        }
        b[n] = s * r;
    }
    return b[k];
}

std::vector<Integer> egf_coefficients(int r, int N) {
    // f = r(e^t - 1), g = exp(f), n g_n = sum_{j=1}^{n} j f_j g_{n-j}
    std::vector<Rational> f(N + 1), g(N + 1);
    Rational fact = 1;
    for (int n = 1; n <= N; ++n) {
        fact *= n;
        f[n] = Rational(r) / fact;
    }
    g[0] = 1;
    for (int n = 1; n <= N; ++n) {
        Rational s = 0;
        for (int j = 1; j <= n; ++j) s += j * f[j] * g[n - j];
        g[n] = s / n;
    }
    std::vector<Integer> out(N + 1);
    Integer nf = 1;
    for (int n = 0; n <= N; ++n) {
        if (n > 0) nf *= n;
        Rational v = g[n] * nf;
        v.canonicalize();
        if (v.get_den() != 1) throw ScalarError("non-integral generating function coefficient");
        out[n] = v.get_num();
    }
    return out;
}

std::vector<Diagram> enumerate_monoid(int k, int r, const Caps& caps) {
    Integer size = count_bell(2 * k, r);
    if (size > static_cast<long>(caps.monoid_size)) throw CapExceeded("monoid size " + size.get_str() + " exceeds cap");
    return enumerate_diagrams(r, k, k);
}

std::vector<Diagram> generated_closure(int k, int r, const Caps& caps) {
    Integer size = count_bell(2 * k, r);
    if (size > static_cast<long>(caps.monoid_size)) throw CapExceeded("monoid size " + size.get_str() + " exceeds cap");
    Generators g = Generators::standard(k, r);
    std::vector<Diagram> gens;
    if (k >= 1) gens.push_back(g.s0);
    for (int i = 1; i < k; ++i) gens.push_back(g.s[i]), gens.push_back(g.q[i]);
    for (int i = 1; i <= k; ++i) gens.push_back(g.p[i]);
    std::unordered_set<Diagram, DiagramHash> seen;
    std::vector<Diagram> out;
    std::deque<Diagram> frontier;
    Diagram one = identity(r, k);
    seen.insert(one);
    out.push_back(one);
    frontier.push_back(one);
    long long products = 0;
    while (!frontier.empty()) {
        Diagram cur = frontier.front();
        frontier.pop_front();
        for (const auto& s : gens) {
            if (++products > caps.closure_products) throw CapExceeded("closure product budget exceeded");
            Diagram nx = mul(cur, s);
            if (seen.insert(nx).second) {
                out.push_back(nx);
                frontier.push_back(nx);
            }
        }
    }
    return out;
}

std::vector<int> green_classes(const std::vector<Diagram>& elements, Green rel) {
    const size_t n = elements.size();
    std::unordered_map<Diagram, int, DiagramHash> index;
    for (size_t i = 0; i < n; ++i) index.emplace(elements[i], static_cast<int>(i));
    auto id = [&](const Diagram& d) {
        auto it = index.find(d);
        if (it == index.end()) throw DiagramError("product left the element set");
        return it->second;
    };
    std::vector<std::vector<bool>> ideal(n, std::vector<bool>(n, false));
    for (size_t i = 0; i < n; ++i) {
        auto& I = ideal[i];
        if (rel == Green::L || rel == Green::J)
            for (size_t a = 0; a < n; ++a) I[id(mul(elements[a], elements[i]))] = true;
        if (rel == Green::R)
            for (size_t a = 0; a < n; ++a) I[id(mul(elements[i], elements[a]))] = true;
        if (rel == Green::J) {
            std::vector<int> left;
            for (size_t a = 0; a < n; ++a)
                if (I[a]) left.push_back(static_cast<int>(a));
            for (int a : left)
                for (size_t b = 0; b < n; ++b) I[id(mul(elements[a], elements[b]))] = true;
        }
    }
    std::map<std::vector<bool>, int> cls;
    std::vector<int> out(n);
    for (size_t i = 0; i < n; ++i) out[i] = cls.emplace(ideal[i], static_cast<int>(cls.size())).first->second;
    return out;
}

}  // namespace cpar
