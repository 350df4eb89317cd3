#pragma once

#include <map>
#include <memory>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "wbr/matrix.hpp"
#include "wbr/permutation.hpp"
#include "wbr/scalar.hpp"
#include "wbr/walled.hpp"

namespace wbr {

class PresentedAlgebra;

// Finitely supported linear combination of basis elements.
class AlgebraElement {
public:
    AlgebraElement() = default;
    explicit AlgebraElement(std::shared_ptr<const PresentedAlgebra> alg);
    static AlgebraElement basis(std::shared_ptr<const PresentedAlgebra> alg, size_t index);

    const std::map<size_t, Scalar>& terms() const { return terms_; }
    const std::shared_ptr<const PresentedAlgebra>& algebra() const { return alg_; }
    bool is_zero() const { return terms_.empty(); }

    AlgebraElement operator+(const AlgebraElement& o) const;
    AlgebraElement operator-(const AlgebraElement& o) const;
    AlgebraElement operator*(const AlgebraElement& o) const;  // structure-constant product
    AlgebraElement scaled(const Scalar& c) const;
    AlgebraElement involution() const;
    bool operator==(const AlgebraElement& o) const;

    void add_term(size_t index, const Scalar& c);
    std::string to_string() const;

private:
    std::shared_ptr<const PresentedAlgebra> alg_;
    std::map<size_t, Scalar> terms_;
};

// Algebra with an enumerated basis and a structure-constant oracle.
// Products of basis elements are memoized; the memo table supports
// concurrent readers and exclusive inserts.
class PresentedAlgebra : public std::enable_shared_from_this<PresentedAlgebra> {
public:
    virtual ~PresentedAlgebra() = default;

    const FieldSpec& field() const { return field_; }
    size_t dim() const { return dim_; }
    virtual std::string key() const = 0;
    virtual std::string basis_name(size_t i) const = 0;
    virtual size_t involution_basis(size_t i) const = 0;

    const std::vector<std::string>& generator_names() const { return gen_names_; }
    AlgebraElement generator(size_t gi) const;
    AlgebraElement one() const;
    AlgebraElement basis_element(size_t i) const;

    const AlgebraElement& multiply_basis(size_t i, size_t j) const;

    // dim x dim matrix of b -> b * x (rows = basis order).
    Matrix right_multiplication_matrix(const AlgebraElement& x) const;
    Matrix left_multiplication_matrix(const AlgebraElement& x) const;

protected:
    PresentedAlgebra(FieldSpec f, size_t dim) : field_(f), dim_(dim) {}
    virtual AlgebraElement compute_product(size_t i, size_t j) const = 0;

    FieldSpec field_;
    size_t dim_;
    std::vector<std::string> gen_names_;
    std::vector<size_t> gen_indices_;  // basis index per generator
    size_t one_index_ = 0;

private:
    mutable std::unordered_map<uint64_t, AlgebraElement> memo_;
    mutable std::shared_mutex memo_mutex_;
};

// B_{r,t}(δ): basis ordered by (horizontal edge count, lex edge list), so
// each ideal J_l is a suffix of the basis.
class WalledBrauerAlgebra : public PresentedAlgebra {
public:
    static std::shared_ptr<WalledBrauerAlgebra> create(int r, int t, const Scalar& delta);

    int r() const { return r_; }
    int t() const { return t_; }
    int s() const { return std::min(r_, t_); }
    const Scalar& delta() const { return delta_; }

    std::string key() const override;
    std::string basis_name(size_t i) const override;
    size_t involution_basis(size_t i) const override;

    const WalledDiagram& diagram(size_t i) const { return basis_[i]; }
    size_t index_of(const WalledDiagram& d) const;
    AlgebraElement element_of(const WalledDiagram& d) const;

    // First basis index with at least l horizontal edges; J_l spans the
    // suffix starting there.
    size_t ideal_start(int l) const;

    // Layer idempotent e_l (Fig. 2 for δ != 0, Fig. 3 for δ = 0).
    AlgebraElement idempotent(int l) const;
    // Embedded permutation of S_{r-l,t-l} fixing the middle 2l vertices.
    AlgebraElement embedded(int l, const ProductPermutation& g) const;

private:
    WalledBrauerAlgebra(int r, int t, const Scalar& delta);
    AlgebraElement compute_product(size_t i, size_t j) const override;

    int r_, t_;
    Scalar delta_;
    std::vector<WalledDiagram> basis_;
    std::map<std::vector<std::pair<int, int>>, size_t> index_;
    std::vector<size_t> ideal_start_;
};

// K S_{a,b}: basis is the product group in lexicographic order; generators
// are the adjacent transpositions of both factors.
class ProductGroupAlgebra : public PresentedAlgebra {
public:
    static std::shared_ptr<ProductGroupAlgebra> create(int a, int b, FieldSpec f);

    int a() const { return a_; }
    int b() const { return b_; }

    std::string key() const override;
    std::string basis_name(size_t i) const override;
    size_t involution_basis(size_t i) const override;

    const ProductPermutation& element(size_t i) const { return basis_[i]; }
    size_t index_of(const ProductPermutation& g) const;
    AlgebraElement element_of(const ProductPermutation& g) const;

private:
    ProductGroupAlgebra(int a, int b, FieldSpec f);
    AlgebraElement compute_product(size_t i, size_t j) const override;

    int a_, b_;
    std::vector<ProductPermutation> basis_;
    std::map<ProductPermutation, size_t> index_;
};

}  // namespace wbr
