#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wbr/combinat.hpp"
#include "wbr/errors.hpp"

namespace wbr {

// Permutation of {1..n} stored as the image list. Composition follows the
// project-wide right-action convention: (σ·τ)(i) = τ(σ(i)).
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int n);
    static Permutation transposition(int n, int a, int b);

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const;  // 1-based
    const std::vector<int>& images() const { return images_; }

    Permutation compose(const Permutation& o) const;  // this then o
    Permutation inverse() const;
    int sign() const;
    bool is_identity() const;

    bool operator==(const Permutation& o) const = default;
    bool operator<(const Permutation& o) const { return images_ < o.images_; }

    // One-line format "[3,5,4,1,2]" (emitted); cycle format "(1 3 4)(2 5)"
    // also parses. Degree needed for cycle parsing.
    std::string to_string() const;
    static Permutation parse(const std::string& text, int degree);

    // Decomposition into adjacent transpositions s_i = (i,i+1), as indices i.
    std::vector<int> adjacent_word() const;

private:
    std::vector<int> images_;
};

// Element (σ,τ) of the direct product S_a x S_b.
struct ProductPermutation {
    Permutation left, right;
    ProductPermutation compose(const ProductPermutation& o) const {
        return {left.compose(o.left), right.compose(o.right)};
    }
    ProductPermutation inverse() const { return {left.inverse(), right.inverse()}; }
    bool is_identity() const { return left.is_identity() && right.is_identity(); }
    int sign() const { return left.sign() * right.sign(); }
    bool operator==(const ProductPermutation& o) const = default;
    bool operator<(const ProductPermutation& o) const {
        if (!(left == o.left)) return left < o.left;
        return right < o.right;
    }
};

// All of S_a in lexicographic order of image lists. Guarded at a <= 8.
std::vector<Permutation> enumerate_symmetric_group(int a);
std::vector<ProductPermutation> enumerate_product_group(int a, int b);

// Young subgroup S_shape <= S_n: generators are the adjacent transpositions
// inside each block.
std::vector<Permutation> young_subgroup_generators(int n, const std::vector<int>& shape);
std::vector<Permutation> generated_subgroup(int n, const std::vector<Permutation>& gens);
std::vector<ProductPermutation> generated_product_subgroup(
    int a, int b, const std::vector<ProductPermutation>& gens);

enum class CosetSide { Left, Right };

// Minimal-element representatives, one per coset of <gens> in S_n.
std::vector<Permutation> cosets(int n, const std::vector<Permutation>& subgroup_gens,
                                CosetSide side);

// One coset representative per right coset Hx of the subgroup H (given by
// elements) inside the product group, minimal element per coset.
std::vector<ProductPermutation> product_cosets(
    int a, int b, const std::vector<ProductPermutation>& subgroup_elements);

struct DoubleCoset {
    ProductPermutation representative;
    // Young shape (γ,δ) with S_{γ,δ} = stab ∩ rep^{-1} H rep, read off from
    // the orbit sizes of the intersection subgroup on the given letters.
    Composition gamma, delta;
    size_t size = 0;  // number of group elements in the double coset
};

// Double cosets H\G/L for subgroups given by their element lists inside
// G = S_a x S_b (enumerated exhaustively at desk scale). stab_elements is
// the subgroup whose intersection with rep^{-1} H rep is reported as a
// Young shape; its orbits are taken on left_letters / right_letters.
std::vector<DoubleCoset> double_cosets(int a, int b,
                                       const std::vector<ProductPermutation>& h_elements,
                                       const std::vector<ProductPermutation>& l_elements,
                                       const std::vector<ProductPermutation>& stab_elements,
                                       const std::vector<int>& left_letters,
                                       const std::vector<int>& right_letters);
// Convenience: stab = all of G, letters = all.
std::vector<DoubleCoset> double_cosets(int a, int b,
                                       const std::vector<ProductPermutation>& h_elements,
                                       const std::vector<ProductPermutation>& l_elements);

// Stabilizer of a partial diagram with l arcs, viewed inside S_l x S_l via
// the two-row identification: returns pairs (σ, v^{-1}σv).
std::vector<ProductPermutation> stabilizer_pairs(const Permutation& v_as_perm);

}  // namespace wbr
