#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "wbr/algebra.hpp"
#include "wbr/combinat.hpp"
#include "wbr/modcore.hpp"
#include "wbr/modules.hpp"

namespace wbr {

// Element of the poset Λ = {(l, (λ,μ)) : 0 <= l <= s, λ ⊢ r-l, μ ⊢ t-l}.
struct LambdaLabel {
    int l = 0;
    Bipartition shape;

    bool operator==(const LambdaLabel& o) const = default;
    bool operator<(const LambdaLabel& o) const {
        if (l != o.l) return l < o.l;
        return shape < o.shape;
    }
    std::string to_string() const;            // "l:(λ|μ)"
    static LambdaLabel parse(const std::string& text);
};

// The paper's order: (l,(λ,μ)) <= (m,(λ',μ')) iff m < l, or m = l and
// (λ,μ) dominates (λ',μ').
bool lambda_leq(const LambdaLabel& x, const LambdaLabel& y);

// All labels for B_{r,t}, in catalog order: layer descending, shapes
// reverse-lexicographically descending within a layer.
std::vector<LambdaLabel> all_labels(int r, int t);

// Row-space subquotient U/W with projection onto canonical coordinates.
struct SubquotientSpace {
    FieldSpec field;
    size_t ambient = 0;
    Matrix w_rref;                 // RREF rows of W
    std::vector<size_t> w_pivots;
    Matrix comp_basis;             // quotient basis rows (ambient coords)
    std::vector<size_t> comp_pivots;

    size_t dim() const { return comp_basis.rows(); }
    // Reduce ambient rows mod W and express in the quotient basis; rows must
    // lie in U (residual is checked).
    Matrix project(const Matrix& ambient_rows) const;
    Matrix induced_action(const Matrix& ambient_action) const;
};
SubquotientSpace make_subquotient(const Matrix& u_rows, const Matrix& w_rows);

// A right B-module together with the action of arbitrary algebra elements
// (generator matrices alone do not give ideal actions cheaply).
struct BModule {
    ModuleRep rep;
    std::function<Matrix(const AlgebraElement&)> act;
};

struct LayerLemmaReport {
    int l = 0, m = 0;
    // Lemma "L dec per" dimension three ways
    size_t dim_diagram_count = 0;   // enumerated diagrams with the e_l/e_m patterns
    size_t dim_coset_count = 0;     // index of H_{m-l} in S_{r-l,t-l}
    size_t dim_formula = 0;         // (r-l)!(t-l)!/(m-l)!
    size_t dim_rowspace = 0;        // rank of the e_l (B/J_{m+1}) e_m row space
    bool coset_module_isomorphic = false;   // K[G/H_{m-l}] ≅ e_l(B/J_{m+1})e_m as left modules
    // Lemma "assum I": split of e_l J_m
    bool split_verified = false;
    // Lemma "assum II": explicit tensor surjection is bijective + equivariant
    size_t assum2_lhs_dim = 0, assum2_rhs_dim = 0, assum2_product_formula = 0;
    bool assum2_isomorphic = false;
};

struct FiltrationEntry {
    LambdaLabel label;
    size_t dim = 0;
};

struct BFiltrationReport {
    LambdaLabel label;       // of the filtered permutation module
    size_t module_dim = 0;
    std::vector<size_t> chain_dims;         // strictly descending to 0
    std::vector<FiltrationEntry> entries;   // cell subquotients, top to bottom
};

struct BYoungSummand {
    LambdaLabel label;
    size_t multiplicity = 0;
    size_t dim = 0;
};

struct BYoungReport {
    LambdaLabel label;
    uint64_t seed = 0;
    size_t dim = 0;
    std::vector<BYoungSummand> summands;  // defining label first
};

// Shared computation context for one algebra B_{r,t}(δ); caches layer data,
// permutation/cell modules and the Young catalog. Cached lookups are safe
// for concurrent readers.
class WalledContext {
public:
    WalledContext(int r, int t, const Scalar& delta, uint64_t seed = 0);

    int r() const { return r_; }
    int t() const { return t_; }
    int s() const { return s_; }
    const Scalar& delta() const { return delta_; }
    FieldSpec field() const { return field_; }
    const std::shared_ptr<WalledBrauerAlgebra>& algebra() const { return algebra_; }

    // Row spaces inside B (coordinates in the diagram basis).
    Matrix elB_rows(int l);
    Matrix elJ_rows(int l, int m);
    // span{e_l·b : b has exactly m horizontal edges}
    Matrix el_exact_rows(int l, int m);

    ModuleRep cell_module(const LambdaLabel& x);
    BModule perm_module(const LambdaLabel& x);

    // Res_l N = N·e_l with the embedded S_{r-l,t-l} action.
    ModuleRep res_l(const BModule& n, int l);

    LayerLemmaReport verify_layer_lemmas(int l, int m);
    BFiltrationReport cell_filtration(const LambdaLabel& x);
    BYoungReport young_decomposition(const LambdaLabel& x, uint64_t seed);
    // The Young module itself (unique defining summand of M(x)).
    ModuleRep young_module(const LambdaLabel& x, uint64_t seed);

    // Embedded generators of S_{r-l,t-l} as algebra elements, ordered like
    // product_group_gen_names(r-l, t-l).
    std::vector<AlgebraElement> embedded_generators(int l);
    // Subgroup H_{m-l} = {(σ, w̄ σ w̄)} fixing the extra arcs of e_m over e_l.
    std::vector<ProductPermutation> stabilizer_subgroup(int l, int m);

private:
    int r_, t_, s_;
    Scalar delta_;
    FieldSpec field_;
    std::shared_ptr<WalledBrauerAlgebra> algebra_;
    uint64_t seed_;

    std::mutex mutex_;
    std::map<int, Matrix> elB_cache_;
    std::map<std::pair<int, int>, Matrix> elJ_cache_;
    std::map<LambdaLabel, ModuleRep> cell_cache_;
    std::map<LambdaLabel, BModule> perm_cache_;
    std::map<std::pair<LambdaLabel, uint64_t>, ModuleRep> young_cache_;

    SubquotientSpace cell_bimodule(int l);
    BModule build_perm_module(const LambdaLabel& x);
    ModuleRep build_cell_module(const LambdaLabel& x);
};

}  // namespace wbr
