#pragma once

#include <map>
#include <string>
#include <vector>

#include "cpar/diagrams.hpp"
#include "cpar/scalars.hpp"

namespace cpar {

struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Caps {
    long long monoid_size = 100000;
    long long closure_products = 1000000;
};

// Element of CPar(x) with coefficients in Q(zeta_r)[y_0..y_{r-1}].
class LinComb {
public:
    LinComb(int r, int k, int l) : r_(r), k_(k), l_(l) {}
    static LinComb of(const Diagram& d);

    int r() const { return r_; }
    int k() const { return k_; }
    int l() const { return l_; }
    const std::map<Diagram, MPoly>& terms() const { return t_; }
    void add(const Diagram& d, const MPoly& c);
    MPoly coeff(const Diagram& d) const;

    LinComb& operator+=(const LinComb& o);
    bool operator==(const LinComb& o) const { return t_ == o.t_; }
    std::string str() const;

private:
    int r_, k_, l_;
    std::map<Diagram, MPoly> t_;
};

MPoly monomial_poly(int r, const Monomial& m);
LinComb multiply(const LinComb& a, const LinComb& b);

// Monoid product (all parameters equal to one).
Diagram mul(const Diagram& a, const Diagram& b);

enum class Gen { S0, S, P, Q, E };
Diagram generator(Gen g, int i, int k, int r);

struct Generators {
    int r = 1, k = 0;
    Diagram s0;
    std::vector<Diagram> s, p, q;  // 1-based; index 0 unused
    static Generators standard(int k, int r);
};

struct RelationFailure {
    int relation;
    std::string instance;
    std::string lhs, rhs;
};

struct PresentationReport {
    int k = 0, r = 0;
    int instances = 0;
    std::map<int, int> per_relation;
    std::vector<RelationFailure> failures;
    bool ok() const { return failures.empty(); }
};

PresentationReport check_presentation(const Generators& g);
PresentationReport check_presentation(int k, int r);

Integer count_bell(int k, int r);
// k! [t^k] exp(r (e^t - 1)) for k = 0..N, from the power series.
std::vector<Integer> egf_coefficients(int r, int N);

std::vector<Diagram> enumerate_monoid(int k, int r, const Caps& caps = {});
std::vector<Diagram> generated_closure(int k, int r, const Caps& caps = {});

enum class Green { L, R, J };
// Class index per element of `elements` (which must be the whole monoid).
std::vector<int> green_classes(const std::vector<Diagram>& elements, Green rel);

}  // namespace cpar
