#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "cpar/characters.hpp"
#include "cpar/diagrams.hpp"
#include "cpar/scalars.hpp"

namespace cpar {

struct ModuleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// d in L_{k,i}: rank i, bottoms 1'..i' are the whole bottom part of distinct propagating blocks,
// bottoms (i+1)'..k' are trivially colored singletons.
bool in_L(const Diagram& d, int i);
// d in S(k,i): in L_{k,i} with trivially colored propagating parts, bottom j' attached to the
// j-th propagating part in order of minimum top vertex.
bool in_cross_section(const Diagram& d, int i);
std::vector<Diagram> enumerate_cross_section(int k, int i, int r);

// Colored permutation of 1..i extended by identity strands on i+1..k.
Diagram embed_group(const WElt& g, int k, int r);

struct LFactor {
    Diagram d;  // element of S(k,i)
    WElt g;     // element of G(r,i)
};
// D = d * embed_group(g, k, r); throws ModuleError if D is not in L_{k,i}.
LFactor factor_L(const Diagram& D, int i);

// Young's seminormal form; entries are rational. perm is 0-based, perm[j] = image of j.
CycMatrix specht_matrix(const Partition& lambda, const std::vector<int>& perm, int r);
int specht_dim(const Partition& lambda);

CycMatrix mat_mul(const CycMatrix& a, const CycMatrix& b, int r);

// Irreducible representation S(lambda) of G(r,n), induced from the Young subgroup of the component sizes.
class MatrixRep {
public:
    static const MatrixRep& get(const Multipartition& lambda, int r);
    int dim() const { return dim_; }
    int r() const { return r_; }
    const Multipartition& lambda() const { return lambda_; }
    const WreathGroup& group() const { return *G_; }
    // Indexed by the WreathGroup element index.
    const CycMatrix& of(int idx) const { return mats_[idx]; }
    const CycMatrix& of(const WElt& g) const { return mats_[G_->index(g)]; }

private:
    MatrixRep(const Multipartition& lambda, int r);
    Multipartition lambda_;
    int r_, dim_;
    const WreathGroup* G_;
    std::vector<CycMatrix> mats_;
};

// Group algebra elements as coefficient vectors over WreathGroup indices.
using GroupAlg = std::vector<Cyc>;
GroupAlg ga_mul(const WreathGroup& G, const GroupAlg& a, const GroupAlg& b);
// (dim/|G|) sum_g rho(g^{-1})_{11} g
GroupAlg primitive_idempotent(const Multipartition& lambda, int r);

class CellModule {
public:
    CellModule(int k, const Multipartition& lambda, int r);
    int k() const { return k_; }
    int i() const { return i_; }
    int dim() const { return static_cast<int>(cross_.size()) * rep_->dim(); }
    const std::vector<Diagram>& cross_section() const { return cross_; }
    const MatrixRep& rep() const { return *rep_; }
    // Matrix of d acting on the basis (d1, v_j), index = pos(d1) * dim S + j.
    PolyMatrix act(const Diagram& d) const;

private:
    int k_, i_, r_;
    const MatrixRep* rep_;
    std::vector<Diagram> cross_;
    std::map<Diagram, int> pos_;
};

struct GramData {
    std::vector<Diagram> cross;
    std::vector<WElt> g;  // g_1..g_dim with g_a eps independent
    PolyMatrix G;         // rows/cols indexed by pos(d) * dim + a
};
GramData gram_matrix(int k, const Multipartition& lambda, int r);
MPoly gram_det(int k, const Multipartition& lambda, int r);

struct SemisimpleReport {
    bool semisimple = true;
    std::vector<std::pair<Multipartition, Cyc>> dets;  // Gram determinant at x for every lambda
    Integer dim_sum, bell;
    bool dims_ok() const { return dim_sum == bell; }
};
SemisimpleReport semisimplicity_certificate(int k, int r, const std::vector<Cyc>& x);

// dim eps_mu CPar# eps_lambda
long long cartan_entry(const Multipartition& lambda, const Multipartition& mu, int r);

struct CartanTable {
    std::vector<Multipartition> index;  // all multipartitions of weight <= max weight
    std::vector<std::vector<long long>> B;
};
CartanTable cartan_matrix(int max_weight, int r);
struct CartanCheck {
    bool unitriangular = true;
    bool tensor = true;
    std::string first_failure;
    bool ok() const { return unitriangular && tensor; }
};
CartanCheck cartan_tensor_check(int max_weight, int r);

}  // namespace cpar
