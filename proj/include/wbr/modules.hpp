#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "wbr/algebra.hpp"
#include "wbr/combinat.hpp"
#include "wbr/matrix.hpp"

namespace wbr {

// Right module over a presented algebra: exact action matrix per generator,
// vectors are rows. Modules over structurally equal algebras (same key and
// generator list) are comparable.
struct ModuleRep {
    std::string algebra_key;
    std::vector<std::string> gen_names;
    FieldSpec field;
    size_t dim = 0;
    std::vector<Matrix> actions;

    void check_compatible(const ModuleRep& o) const;
    // Matrix of the right action of a word in generators (indices into
    // gen_names), applied left to right.
    Matrix action_word(const std::vector<size_t>& word) const;
};

struct SubmoduleWitness {
    ModuleRep rep;
    Matrix basis;  // rows: submodule basis in ambient coordinates
};

// Closure of the row space of seeds under all generator actions.
Matrix spin(const ModuleRep& m, const Matrix& seeds);
// Submodule on an explicit invariant row space (closure is verified).
SubmoduleWitness submodule(const ModuleRep& m, const Matrix& u);
SubmoduleWitness submodule_generated(const ModuleRep& m, const Matrix& seeds);
// Quotient by an invariant row space; throws NotInvariant otherwise.
ModuleRep quotient(const ModuleRep& m, const Matrix& w);
ModuleRep direct_sum(const ModuleRep& a, const ModuleRep& b);

// Right regular module of a presented algebra (guarded at dim <= 2000).
ModuleRep regular_representation(const std::shared_ptr<const PresentedAlgebra>& alg);

// ---- Symmetric group / product group constructions (spec module spechtmod).
// Modules over S_a are realized over K S_{a,0} so that one algebra key
// serves both the plain and the product case.

ModuleRep perm_module_sym(const std::vector<int>& shape, FieldSpec f);
// Signed column-stabilizer sum of the tabloid of t, as a row vector in
// M^shape coordinates.
Matrix polytabloid(const Tableau& t, FieldSpec f);
SubmoduleWitness specht_module(const Partition& lambda, FieldSpec f);
// Dual Specht module, constructed as the sign twist of S^{λ'}
// (S_λ ≅ S^{λ'} ⊗ sgn).
ModuleRep dual_specht(const Partition& lambda, FieldSpec f);

ModuleRep outer_tensor(const ModuleRep& left, const ModuleRep& right);
ModuleRep perm_module_prod(const std::vector<int>& shape_l, const std::vector<int>& shape_r,
                           FieldSpec f);
SubmoduleWitness specht_prod(const Partition& lambda, const Partition& mu, FieldSpec f);
ModuleRep dual_specht_prod(const Partition& lambda, const Partition& mu, FieldSpec f);

// D^{λ,μ} = S^{λ,μ} / rad S^{λ,μ} with rad S = S ∩ S^⊥ for the
// tabloid-orthonormal form (James convention).
ModuleRep simple_head_prod(const Partition& lambda, const Partition& mu, FieldSpec f);

// Matrix of the right action of (σ,τ) on a module over K S_{a,b}, via
// adjacent-transposition words.
Matrix action_of_product_permutation(const ModuleRep& m, int a, int b,
                                     const ProductPermutation& g);
// Alternating column sum k_t of the initial (λ,μ)-tableau pair, as an
// action matrix on a module over K S_{a,b}.
Matrix alternating_column_sum_action(const ModuleRep& m, const Partition& lambda,
                                     const Partition& mu);

std::string product_group_key(int a, int b, FieldSpec f);
std::vector<std::string> product_group_gen_names(int a, int b);

// ---- Young modules of K S_{a,b} via decomposition (Theorem-level: the
// labeling refuses characteristics 2 and 3).

struct ProdYoungEntry {
    Bipartition label;
    size_t multiplicity = 0;
    size_t dim = 0;
};

struct ProdYoungReport {
    Bipartition shape;
    std::vector<ProdYoungEntry> entries;  // every summand labeled
    ModuleRep young;                      // Y^{λ,μ}: the summand containing the Specht vector
};

// Memoized Young-module catalog for one field; labels are resolved by
// descending the dominance order from the top, reverse-lex within ties.
class ProdYoungContext {
public:
    ProdYoungContext(FieldSpec f, uint64_t seed) : field_(f), seed_(seed) {}

    const ProdYoungReport& report(const Bipartition& shape);
    const ModuleRep& young_module(const Bipartition& shape) { return report(shape).young; }
    FieldSpec field() const { return field_; }

private:
    FieldSpec field_;
    uint64_t seed_;
    std::map<Bipartition, ProdYoungReport> memo_;
    std::mutex mutex_;
};

ProdYoungReport young_modules_prod(const Partition& lambda, const Partition& mu, FieldSpec f,
                                   uint64_t seed);

}  // namespace wbr
