#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace cpar {

using Rational = mpq_class;
using Integer = mpz_class;

struct ScalarError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Coefficients of the r-th cyclotomic polynomial, constant term first.
const std::vector<long long>& cyclotomic_poly(int r);
int euler_phi(int r);

// Element of Q(zeta_r) stored as a polynomial in z of degree < phi(r), reduced mod Phi_r.
class Cyc {
public:
    Cyc();
    explicit Cyc(int r);
    Cyc(int r, const Rational& q);
    Cyc(int r, long v);
    static Cyc zeta_pow(int r, long j);

    int r() const { return r_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    Rational to_rational() const;
    bool is_one() const;

    Cyc operator-() const;
    Cyc& operator+=(const Cyc& o);
    Cyc& operator-=(const Cyc& o);
    Cyc& operator*=(const Cyc& o);
    Cyc& operator/=(const Cyc& o);
    friend Cyc operator+(Cyc a, const Cyc& b) { return a += b; }
    friend Cyc operator-(Cyc a, const Cyc& b) { return a -= b; }
    friend Cyc operator*(Cyc a, const Cyc& b) { return a *= b; }
    friend Cyc operator/(Cyc a, const Cyc& b) { return a /= b; }
    bool operator==(const Cyc& o) const;
    bool operator!=(const Cyc& o) const { return !(*this == o); }

    Cyc inverse() const;
    // Complex conjugation: zeta -> zeta^{-1}.
    Cyc conj() const;
    // Multiply by zeta^j in place.
    void mul_zeta(long j);
    std::string str() const;

private:
    void lift(int r);
    int r_;
    std::vector<Rational> c_;
};

constexpr int kMaxVars = 8;

struct Mono {
    std::array<uint16_t, kMaxVars> e{};
    bool operator<(const Mono& o) const { return e < o.e; }
    bool operator==(const Mono& o) const { return e == o.e; }
    bool divides(const Mono& o) const;
    int degree() const;
};

// Polynomial in y_0..y_{r-1} with coefficients in Q(zeta_r).
class MPoly {
public:
    MPoly() : r_(1) {}
    explicit MPoly(int r) : r_(r) { check_r(); }
    MPoly(int r, const Cyc& c);
    static MPoly constant(int r, long v) { return MPoly(r, Cyc(r, v)); }
    static MPoly var(int r, int i);
    static MPoly monomial(int r, const std::vector<int>& exps, const Cyc& coeff);

    int r() const { return r_; }
    const std::map<Mono, Cyc>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const;
    Cyc constant_term() const;
    int degree_in(int var) const;
    int total_degree() const;

    MPoly operator-() const;
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    MPoly& operator*=(const MPoly& o);
    MPoly& operator*=(const Cyc& c);
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    friend MPoly operator*(MPoly a, const Cyc& c) { return a *= c; }
    bool operator==(const MPoly& o) const;
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    // Exact quotient; throws ScalarError if d does not divide *this.
    MPoly divexact(const MPoly& d) const;
    Cyc eval(const std::vector<Cyc>& point) const;
    // Top degree in y_var and the coefficient polynomial of y_var^degree.
    std::pair<int, MPoly> leading_coeff_in(int var) const;
    std::string str() const;

private:
    void check_r() const;
    void add_term(const Mono& m, const Cyc& c);
    int r_;
    std::map<Mono, Cyc> t_;
};

using CycMatrix = std::vector<std::vector<Cyc>>;
using PolyMatrix = std::vector<std::vector<MPoly>>;

Cyc det(CycMatrix m, int r);
int rank(CycMatrix m);
MPoly det(PolyMatrix m, int r);

}  // namespace cpar
