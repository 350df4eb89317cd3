#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wbr/matrix.hpp"
#include "wbr/modules.hpp"

namespace wbr {

// Basis of the intertwiner space Hom_A(M, N) = {Φ : ρ_M(g) Φ = Φ ρ_N(g)}.
// Computed by spinning a generating set of M and solving the dependency
// constraints, so the cost is governed by dim N, not (dim M * dim N)^3.
std::vector<Matrix> hom_space(const ModuleRep& m, const ModuleRep& n);

struct SummandClass {
    ModuleRep rep;
    size_t multiplicity = 0;
    std::vector<Matrix> embeddings;  // one basis (rows in ambient coords) per copy
    std::optional<std::string> label;
};

struct DecompositionReport {
    FieldSpec field;
    size_t dim = 0;
    uint64_t seed = 0;
    std::vector<SummandClass> classes;
    Matrix certificate;  // block-diagonalizing change of basis (rows)
    uint64_t certificate_hash = 0;

    size_t total_summands() const;
};

// Complete Krull-Schmidt decomposition. Method: Fitting sweep over End
// basis elements, then radical of End (trace form over Q, Friedl-Ronyai
// chain over F_p), idempotents of the semisimple quotient lifted by the
// quadratic iteration. Deterministic given the seed.
DecompositionReport decompose(const ModuleRep& m, uint64_t seed);

// Invertible intertwiner search per the documented strategy; nullopt means
// no isomorphism was found (conclusive for indecomposables).
std::optional<Matrix> find_isomorphism(const ModuleRep& m, const ModuleRep& n, uint64_t seed);
bool is_isomorphic(const ModuleRep& m, const ModuleRep& n, uint64_t seed);

// Jacobson radical of End(M) returned as a basis of endomorphism matrices.
std::vector<Matrix> endo_radical(const ModuleRep& m);

// M ⊗_A Q for a right-A module M and an (A,B)-bimodule Q, presented as the
// quotient of M ⊗_K Q by span{ m·a ⊗ q - m ⊗ a·q }. Residual actions can
// live on either tensor factor.
struct TensorFactorAction {
    enum class Side { M, Q } side;
    Matrix matrix;  // right action on M side, or right action on Q side
};

struct TensorQuotient {
    FieldSpec field;
    size_t dim_m = 0, dim_q = 0;
    Matrix relations_rref;
    std::vector<size_t> rel_pivots;
    std::vector<size_t> complement;  // coordinates of the quotient basis

    size_t dim() const { return complement.size(); }
    // Reduce vectors of M ⊗ K Q modulo the relation span and express them in
    // quotient coordinates.
    Matrix project(const Matrix& vectors) const;
    // Pure tensor e_i ⊗ e_j in quotient coordinates.
    Matrix pure(size_t i, size_t j) const;
    // Induced endomorphism of the quotient from an ambient action on one side.
    Matrix induce(const TensorFactorAction& action) const;
};

// relation_pairs: per subalgebra generator a, the right action of a on M and
// the LEFT action of a on Q (row j of the matrix = coords of a·q_j).
TensorQuotient tensor_over_subalgebra(FieldSpec f, size_t dim_m, size_t dim_q,
                                      const std::vector<std::pair<Matrix, Matrix>>& relation_pairs);

// Assemble a ModuleRep from a tensor quotient and residual generator actions.
ModuleRep tensor_module(const TensorQuotient& tq, const std::string& algebra_key,
                        const std::vector<std::string>& gen_names,
                        const std::vector<TensorFactorAction>& residual_actions);

}  // namespace wbr
