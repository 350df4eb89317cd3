#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wbr/errors.hpp"

namespace wbr {

// Weakly decreasing positive parts.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p);

    int size() const;
    bool empty() const { return parts.empty(); }
    bool operator==(const Partition& o) const = default;
    bool operator<(const Partition& o) const { return parts < o.parts; }

    Partition conjugate() const;
    std::string to_string() const;  // "(p1,p2,...)"; "()" when empty
    static Partition parse(const std::string& text);
};

// Nonnegative parts, order significant, zeros allowed.
struct Composition {
    std::vector<int> parts;
    int size() const;
};

struct Bipartition {
    Partition left, right;
    bool operator==(const Bipartition& o) const = default;
    bool operator<(const Bipartition& o) const;
    std::string to_string() const;  // "(λ|μ)"
    static Bipartition parse(const std::string& text);
};

// All partitions of n in reverse-lexicographic order, (n) first.
std::vector<Partition> partitions_of(int n);

// true iff μ ⊴ λ, i.e. every prefix sum of λ dominates that of μ.
// Requires |λ| = |μ|.
bool dominance_leq(const Partition& lo, const Partition& hi);
bool dominates(const Partition& hi, const Partition& lo);
bool bipartition_dominates(const Bipartition& hi, const Bipartition& lo);

bool is_p_regular(const Partition& p, uint32_t prime);

// Row-equivalence class of a filling; canonical form sorts each row.
struct Tabloid {
    std::vector<std::vector<int>> rows;  // sorted rows partitioning {1..n}
    bool operator==(const Tabloid& o) const = default;
    bool operator<(const Tabloid& o) const { return rows < o.rows; }
    // Row index (0-based) of each entry 1..n.
    std::vector<int> row_word(int n) const;
};

// All tabloids of the given shape, ordered by lexicographic row word.
std::vector<Tabloid> tabloids(const std::vector<int>& shape);

// Bijective filling of a Young diagram by 1..n.
struct Tableau {
    Partition shape;
    std::vector<std::vector<int>> entries;

    static Tableau initial(const Partition& shape);  // row-major 1..n filling
    Tabloid tabloid() const;
    // Columns as entry lists.
    std::vector<std::vector<int>> columns() const;
    bool is_standard() const;
};

long long standard_tableaux_count(const Partition& shape);
std::vector<Tableau> standard_tableaux(const Partition& shape);

long long factorial(int n);
long long binomial(int n, int k);

}  // namespace wbr
