#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "cpar/scalars.hpp"

namespace cpar {

using Partition = std::vector<int>;
using Multipartition = std::vector<Partition>;

int size(const Partition& p);
int weight(const Multipartition& m);
std::vector<Partition> partitions(int n);
std::vector<Multipartition> multipartitions(int r, int n);
Partition cycle_type(const std::vector<int>& perm);
// n! / z_mu
Integer class_size(const Partition& mu);
std::string to_string(const Partition& p);
std::string to_string(const Multipartition& m);

// chi^lambda(mu) by the Murnaghan-Nakayama rule.
long long mn_character(const Partition& lambda, const Partition& mu);

// c^nu_{lambda,mu}
long long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);
// prod_i c^{nu_i}_{lambda_i, mu_i}
long long lr_tuple(const Multipartition& lambda, const Multipartition& mu, const Multipartition& nu);
// LR^{lambda}_{beta, delta, gamma} = sum_eps LR^{lambda}_{beta, eps} LR^{eps}_{delta, gamma}
long long lr_triple(const Multipartition& lambda, const Multipartition& beta, const Multipartition& delta,
                    const Multipartition& gamma);

Integer kronecker(const Partition& lambda, const Partition& mu, const Partition& nu);
// (n - |lambda|, lambda) if that is a partition.
std::optional<Partition> pad(const Partition& lambda, int n);
struct ReducedKronecker {
    long long value;
    int n_start, n_stable;
};
ReducedKronecker reduced_kronecker_detail(const Partition& lambda, const Partition& mu, const Partition& nu);
long long reduced_kronecker(const Partition& lambda, const Partition& mu, const Partition& nu);

// Element (h, sigma) of G(r,n) = C_r wr S_n; 0-based sigma, colors mod r.
struct WElt {
    std::vector<int> h;
    std::vector<int> s;
    bool operator==(const WElt& o) const { return h == o.h && s == o.s; }
};

// (f,tau)(h,sigma) = (f h_tau, tau sigma), h_tau(i) = h(tau^{-1} i)
WElt wmul(const WElt& a, const WElt& b, int r);
WElt winv(const WElt& a, int r);
WElt widentity(int n);
std::vector<WElt> wreath_elements(int r, int n);

Cyc from_exponents(int r, const std::vector<Integer>& a);

class WreathGroup {
public:
    static const WreathGroup& get(int r, int n);

    int r() const { return r_; }
    int n() const { return n_; }
    long order() const { return static_cast<long>(elems_.size()); }
    const std::vector<WElt>& elements() const { return elems_; }
    int index(const WElt& g) const;
    int class_of(int idx) const { return class_of_[idx]; }
    const std::vector<std::vector<int>>& classes() const { return classes_; }
    const std::vector<Multipartition>& irreps() const { return irreps_; }
    // Character values indexed by class.
    const std::vector<Cyc>& character_row(const Multipartition& lambda) const;
    Cyc character(const Multipartition& lambda, const WElt& g) const;
    long mul(int a, int b) const;

private:
    WreathGroup(int r, int n);
    long code(const WElt& g) const;
    int r_, n_;
    std::vector<WElt> elems_;
    std::unordered_map<long, int> index_;
    std::vector<int> class_of_;
    std::vector<std::vector<int>> classes_;
    std::vector<Multipartition> irreps_;
    mutable std::mutex mu_;
    mutable std::map<Multipartition, std::vector<Cyc>> table_;
};

Cyc wreath_character(const Multipartition& lambda, const WElt& g, int r);

Cyc inner_product(const WreathGroup& G, const std::vector<Cyc>& a, const std::vector<Cyc>& b);

// Multiplicity of S(d2)^{psi3} in S(d0)^{psi1} (x) S(d1)^{psi2} over H(r,t).
long long k_coefficient(const Multipartition& d0, const Multipartition& d1, const Multipartition& d2, int r);

struct AdmissibleData {
    int t, a, b, c;
    bool operator==(const AdmissibleData& o) const { return t == o.t && a == o.a && b == o.b && c == o.c; }
};
std::vector<AdmissibleData> admissible_set(int l, int m, int n);

long long r_coefficient(const Multipartition& lambda, const Multipartition& mu, const Multipartition& nu);

struct FormulaCheck {
    long long lhs, rhs;
    bool equal;
};
FormulaCheck theorem_formula_check(const Multipartition& lambda, const Multipartition& mu, const Multipartition& nu);

// Lemma side: the LR/K sum for a single admissible t.
long long xt_formula(int t, const Multipartition& lambda, const Multipartition& mu, const Multipartition& nu);
// Explicit permutation-character multiplicity on X^t_{l,m,n}.
long long xt_multiplicity_oracle(int l, int m, int n, int t, const Multipartition& lambda,
                                 const Multipartition& mu, const Multipartition& nu);

}  // namespace cpar
