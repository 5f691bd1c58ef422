#include "cpar/scalars.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <sstream>

namespace cpar {

namespace {

using IPoly = std::vector<long long>;

IPoly poly_divide_monic(IPoly num, const IPoly& den) {
    int dn = static_cast<int>(num.size()) - 1;
    int dd = static_cast<int>(den.size()) - 1;
    IPoly q(dn - dd + 1, 0);
    for (int i = dn; i >= dd; --i) {
        long long c = num[i];
        q[i - dd] = c;
        if (c == 0) continue;
        for (int j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
    }
    return q;
}

struct CycData {
    int r = 1;
    int phi = 1;
    IPoly phi_poly;
    // zpow[j] = z^j mod Phi_r for 0 <= j < table size.
    std::vector<IPoly> zpow;
};

std::mutex g_cyc_mutex;
std::map<int, std::unique_ptr<CycData>> g_cyc_cache;
std::map<int, IPoly> g_phi_cache;

const IPoly& phi_poly_locked(int r) {
    auto it = g_phi_cache.find(r);
    if (it != g_phi_cache.end()) return it->second;
    IPoly num(r + 1, 0);
    num[0] = -1;
    num[r] = 1;
    for (int d = 1; d < r; ++d) {
        if (r % d != 0) continue;
        num = poly_divide_monic(num, phi_poly_locked(d));
    }
    return g_phi_cache.emplace(r, num).first->second;
}

const CycData& cyc_data(int r) {
    if (r < 1) throw ScalarError("cyclotomic order must be positive");
    std::lock_guard<std::mutex> lock(g_cyc_mutex);
    auto it = g_cyc_cache.find(r);
    if (it != g_cyc_cache.end()) return *it->second;
    auto d = std::make_unique<CycData>();
    d->r = r;
    d->phi_poly = phi_poly_locked(r);
    d->phi = static_cast<int>(d->phi_poly.size()) - 1;
    int n = std::max(r, 2 * d->phi);
    IPoly cur(d->phi, 0);
    cur[0] = 1;
    for (int j = 0; j < n; ++j) {
        d->zpow.push_back(cur);
        IPoly nxt(d->phi + 1, 0);
        for (int i = 0; i < d->phi; ++i) nxt[i + 1] = cur[i];
        long long top = nxt[d->phi];
        for (int i = 0; i <= d->phi; ++i) nxt[i] -= top * d->phi_poly[i];
        nxt.resize(d->phi);
        cur = nxt;
    }
    return *g_cyc_cache.emplace(r, std::move(d)).first->second;
}

}  // namespace

const std::vector<long long>& cyclotomic_poly(int r) { return cyc_data(r).phi_poly; }

int euler_phi(int r) { return cyc_data(r).phi; }

Cyc::Cyc() : r_(1), c_(1) {}

Cyc::Cyc(int r) : r_(r), c_(cyc_data(r).phi) {}

Cyc::Cyc(int r, const Rational& q) : Cyc(r) {
    c_[0] = q;
    c_[0].canonicalize();
}

Cyc::Cyc(int r, long v) : Cyc(r) { c_[0] = v; }

Cyc Cyc::zeta_pow(int r, long j) {
    const CycData& d = cyc_data(r);
    long e = ((j % r) + r) % r;
    Cyc out(r);
    for (int i = 0; i < d.phi; ++i) out.c_[i] = static_cast<long>(d.zpow[e][i]);
    return out;
}

bool Cyc::is_zero() const {
    for (const auto& q : c_)
        if (sgn(q) != 0) return false;
    return true;
}

bool Cyc::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (sgn(c_[i]) != 0) return false;
    return true;
}

Rational Cyc::to_rational() const {
    if (!is_rational()) throw ScalarError("cyclotomic value is not rational: " + str());
    return c_[0];
}

bool Cyc::is_one() const { return is_rational() && c_[0] == 1; }

void Cyc::lift(int r) {
    if (r_ == r) return;
    if (!is_rational()) throw ScalarError("mixing cyclotomic fields of different order");
    Rational q = c_[0];
    r_ = r;
    c_.assign(cyc_data(r).phi, Rational(0));
    c_[0] = q;
}

Cyc Cyc::operator-() const {
    Cyc out = *this;
    for (auto& q : out.c_) q = -q;
    return out;
}

Cyc& Cyc::operator+=(const Cyc& o) {
    if (o.r_ != r_) {
        if (o.is_rational()) {
            c_[0] += o.c_[0];
            return *this;
        }
        lift(o.r_);
    }
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

Cyc& Cyc::operator-=(const Cyc& o) {
    if (o.r_ != r_) {
        if (o.is_rational()) {
            c_[0] -= o.c_[0];
            return *this;
        }
        lift(o.r_);
    }
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

Cyc& Cyc::operator*=(const Cyc& o) {
    if (o.is_rational()) {
        Rational q = o.c_[0];
        for (auto& x : c_) x *= q;
        return *this;
    }
    if (o.r_ != r_) lift(o.r_);
    if (is_rational()) {
        Rational q = c_[0];
        c_ = o.c_;
        for (auto& x : c_) x *= q;
        return *this;
    }
    const CycData& d = cyc_data(r_);
    int n = d.phi;
    std::vector<Rational> prod(2 * n - 1);
    for (int i = 0; i < n; ++i) {
        if (sgn(c_[i]) == 0) continue;
        for (int j = 0; j < n; ++j) {
            if (sgn(o.c_[j]) == 0) continue;
            prod[i + j] += c_[i] * o.c_[j];
        }
    }
    for (int i = 0; i < n; ++i) c_[i] = prod[i];
    for (int e = n; e < 2 * n - 1; ++e) {
        if (sgn(prod[e]) == 0) continue;
        for (int i = 0; i < n; ++i)
            if (d.zpow[e][i] != 0) c_[i] += prod[e] * static_cast<long>(d.zpow[e][i]);
    }
    return *this;
}

Cyc& Cyc::operator/=(const Cyc& o) { return *this *= o.inverse(); }

bool Cyc::operator==(const Cyc& o) const {
    if (r_ == o.r_) return c_ == o.c_;
    if (is_rational() && o.is_rational()) return c_[0] == o.c_[0];
    return false;
}

Cyc Cyc::inverse() const {
    if (is_zero()) throw ScalarError("division by zero in Q(zeta)");
    if (is_rational()) return Cyc(r_, Rational(1) / c_[0]);
    const CycData& d = cyc_data(r_);
    int n = d.phi;
    // Column j of the multiplication matrix is this * z^j.
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
    for (int j = 0; j < n; ++j) {
        Cyc col = *this * zeta_pow(r_, j);
        for (int i = 0; i < n; ++i) a[i][j] = col.c_[i];
    }
    a[0][n] = 1;
    for (int col = 0; col < n; ++col) {
        int piv = col;
        while (piv < n && sgn(a[piv][col]) == 0) ++piv;
        std::swap(a[col], a[piv]);
        for (int i = 0; i < n; ++i) {
            if (i == col || sgn(a[i][col]) == 0) continue;
            Rational f = a[i][col] / a[col][col];
            for (int j = col; j <= n; ++j) a[i][j] -= f * a[col][j];
        }
    }
    Cyc out(r_);
    for (int i = 0; i < n; ++i) out.c_[i] = a[i][n] / a[i][i];
    return out;
}

Cyc Cyc::conj() const {
    if (is_rational()) return *this;
    Cyc out(r_);
    for (size_t j = 0; j < c_.size(); ++j) {
        if (sgn(c_[j]) == 0) continue;
        Cyc t = zeta_pow(r_, -static_cast<long>(j));
        t *= Cyc(r_, c_[j]);
        out += t;
    }
    return out;
}

void Cyc::mul_zeta(long j) {
    if (((j % r_) + r_) % r_ == 0) return;
    *this *= zeta_pow(r_, j);
}

std::string Cyc::str() const {
    if (is_rational()) return c_[0].get_str();
    std::ostringstream os;
    bool first = true;
    for (size_t j = 0; j < c_.size(); ++j) {
        const Rational& q = c_[j];
        if (sgn(q) == 0) continue;
        Rational a = abs(q);
        if (sgn(q) < 0)
            os << (first ? "-" : "-");
        else if (!first)
            os << "+";
        if (j == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << "z";
            if (j > 1) os << "^" << j;
        }
        first = false;
    }
    return os.str();
}

bool Mono::divides(const Mono& o) const {
    for (int i = 0; i < kMaxVars; ++i)
        if (e[i] > o.e[i]) return false;
    return true;
}

int Mono::degree() const {
    int s = 0;
    for (auto x : e) s += x;
    return s;
}

void MPoly::check_r() const {
    if (r_ < 1 || r_ > kMaxVars) throw ScalarError("polynomial ring supports 1..8 variables");
}

MPoly::MPoly(int r, const Cyc& c) : r_(r) {
    check_r();
    add_term(Mono{}, c);
}

MPoly MPoly::var(int r, int i) {
    if (i < 0 || i >= r) throw ScalarError("variable index out of range");
    MPoly p(r);
    Mono m;
    m.e[i] = 1;
    p.add_term(m, Cyc(r, 1L));
    return p;
}

MPoly MPoly::monomial(int r, const std::vector<int>& exps, const Cyc& coeff) {
    if (static_cast<int>(exps.size()) > r) throw ScalarError("monomial has too many exponents");
    MPoly p(r);
    Mono m;
    for (size_t i = 0; i < exps.size(); ++i) m.e[i] = static_cast<uint16_t>(exps[i]);
    p.add_term(m, coeff);
    return p;
}

void MPoly::add_term(const Mono& m, const Cyc& c) {
    if (c.is_zero()) return;
    auto it = t_.find(m);
    if (it == t_.end()) {
        t_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
}

bool MPoly::is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first == Mono{}); }

Cyc MPoly::constant_term() const {
    auto it = t_.find(Mono{});
    return it == t_.end() ? Cyc(r_) : it->second;
}

int MPoly::degree_in(int var) const {
    int d = 0;
    for (const auto& [m, c] : t_) d = std::max(d, static_cast<int>(m.e[var]));
    return d;
}

int MPoly::total_degree() const {
    int d = 0;
    for (const auto& [m, c] : t_) d = std::max(d, m.degree());
    return d;
}

MPoly MPoly::operator-() const {
    MPoly out = *this;
    for (auto& [m, c] : out.t_) c = -c;
    return out;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    if (r_ == 1 && o.r_ != 1 && is_constant()) r_ = o.r_;
    for (const auto& [m, c] : o.t_) add_term(m, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    if (r_ == 1 && o.r_ != 1 && is_constant()) r_ = o.r_;
    for (const auto& [m, c] : o.t_) add_term(m, -c);
    return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly out(std::max(a.r_, b.r_));
    if (a.is_zero() || b.is_zero()) return out;
    std::vector<std::pair<Mono, Cyc>> prods;
    prods.reserve(a.t_.size() * b.t_.size());
    for (const auto& [ma, ca] : a.t_) {
        for (const auto& [mb, cb] : b.t_) {
            Mono m;
            for (int i = 0; i < kMaxVars; ++i) m.e[i] = static_cast<uint16_t>(ma.e[i] + mb.e[i]);
            prods.emplace_back(m, ca * cb);
        }
    }
    std::sort(prods.begin(), prods.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    for (size_t i = 0; i < prods.size();) {
        size_t j = i;
        Cyc acc = prods[i].second;
        for (++j; j < prods.size() && prods[j].first == prods[i].first; ++j) acc += prods[j].second;
        if (!acc.is_zero()) out.t_.emplace_hint(out.t_.end(), prods[i].first, acc);
        i = j;
    }
    return out;
}

MPoly& MPoly::operator*=(const MPoly& o) { return *this = *this * o; }

MPoly& MPoly::operator*=(const Cyc& c) {
    if (c.is_zero()) {
        t_.clear();
        return *this;
    }
    for (auto& [m, x] : t_) x *= c;
    return *this;
}

bool MPoly::operator==(const MPoly& o) const {
    if (t_.size() != o.t_.size()) return false;
    auto it = o.t_.begin();
    for (const auto& [m, c] : t_) {
        if (!(m == it->first) || c != it->second) return false;
        ++it;
    }
    return true;
}

MPoly MPoly::divexact(const MPoly& d) const {
    if (d.is_zero()) throw ScalarError("polynomial division by zero");
    MPoly q(r_), rem = *this;
    const auto& [ld_m, ld_c] = *d.t_.rbegin();
    Cyc ld_inv = ld_c.inverse();
    while (!rem.is_zero()) {
        auto [lt_m, lt_c] = *rem.t_.rbegin();
        if (!ld_m.divides(lt_m)) throw ScalarError("inexact polynomial division");
        Mono m;
        for (int i = 0; i < kMaxVars; ++i) m.e[i] = static_cast<uint16_t>(lt_m.e[i] - ld_m.e[i]);
        Cyc c = lt_c * ld_inv;
        q.add_term(m, c);
        for (const auto& [dm, dc] : d.t_) {
            Mono pm;
            for (int i = 0; i < kMaxVars; ++i) pm.e[i] = static_cast<uint16_t>(dm.e[i] + m.e[i]);
            rem.add_term(pm, -(dc * c));
        }
    }
    return q;
}

Cyc MPoly::eval(const std::vector<Cyc>& point) const {
    if (static_cast<int>(point.size()) != r_) throw ScalarError("evaluation point has wrong length");
    Cyc acc(r_);
    std::vector<std::vector<Cyc>> pw(r_);
    for (const auto& [m, c] : t_) {
        Cyc term = c;
        for (int i = 0; i < r_; ++i) {
            int e = m.e[i];
            if (e == 0) continue;
            auto& cache = pw[i];
            if (cache.empty()) cache.push_back(Cyc(r_, 1L));
            while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * point[i]);
            term *= cache[e];
        }
        acc += term;
    }
    return acc;
}

std::pair<int, MPoly> MPoly::leading_coeff_in(int var) const {
    if (is_zero()) throw ScalarError("leading coefficient of the zero polynomial");
    if (var < 0 || var >= r_) throw ScalarError("variable index out of range");
    int d = degree_in(var);
    MPoly out(r_);
    for (const auto& [m, c] : t_) {
        if (m.e[var] != d) continue;
        Mono mm = m;
        mm.e[var] = 0;
        out.add_term(mm, c);
    }
    return {d, out};
}

std::string MPoly::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        const Mono& m = it->first;
        const Cyc& c = it->second;
        std::ostringstream mono;
        bool any = false;
        for (int i = 0; i < r_; ++i) {
            if (m.e[i] == 0) continue;
            if (any) mono << "*";
            mono << "y" << i;
            if (m.e[i] > 1) mono << "^" << m.e[i];
            any = true;
        }
        std::string term;
        bool neg = false;
        if (c.is_rational()) {
            Rational q = c.to_rational();
            neg = sgn(q) < 0;
            Rational a = abs(q);
            if (!any)
                term = a.get_str();
            else if (a == 1)
                term = mono.str();
            else
                term = a.get_str() + "*" + mono.str();
        } else {
            term = "(" + c.str() + ")";
            if (any) term += "*" + mono.str();
        }
        if (first)
            os << (neg ? "-" : "") << term;
        else
            os << (neg ? " - " : " + ") << term;
        first = false;
    }
    return os.str();
}

Cyc det(CycMatrix m, int r) {
    size_t n = m.size();
    Cyc d(r, 1L);
    for (size_t k = 0; k < n; ++k) {
        size_t piv = k;
        while (piv < n && m[piv][k].is_zero()) ++piv;
        if (piv == n) return Cyc(r);
        if (piv != k) {
            std::swap(m[piv], m[k]);
            d = -d;
        }
        d *= m[k][k];
        Cyc inv = m[k][k].inverse();
        for (size_t i = k + 1; i < n; ++i) {
            if (m[i][k].is_zero()) continue;
            Cyc f = m[i][k] * inv;
            for (size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
        }
    }
    return d;
}

int rank(CycMatrix m) {
    if (m.empty()) return 0;
    size_t rows = m.size(), cols = m[0].size();
    size_t rk = 0;
    for (size_t c = 0; c < cols && rk < rows; ++c) {
        size_t piv = rk;
        while (piv < rows && m[piv][c].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[rk]);
        Cyc inv = m[rk][c].inverse();
        for (size_t i = rk + 1; i < rows; ++i) {
            if (m[i][c].is_zero()) continue;
            Cyc f = m[i][c] * inv;
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[rk][j];
        }
        ++rk;
    }
    return static_cast<int>(rk);
}

MPoly det(PolyMatrix m, int r) {
    size_t n = m.size();
    if (n == 0) return MPoly::constant(r, 1);
    bool neg = false;
    MPoly prev = MPoly::constant(r, 1);
    for (size_t k = 0; k + 1 < n; ++k) {
        size_t piv = n;
        for (size_t i = k; i < n; ++i) {
            if (m[i][k].is_zero()) continue;
            if (piv == n || m[i][k].terms().size() < m[piv][k].terms().size()) piv = i;
        }
        if (piv == n) return MPoly(r);
        if (piv != k) {
            std::swap(m[piv], m[k]);
            neg = !neg;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                MPoly v = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = v.divexact(prev);
            }
        }
        prev = m[k][k];
    }
    MPoly d = m[n - 1][n - 1];
    return neg ? -d : d;
}

}  // namespace cpar
