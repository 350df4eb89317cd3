#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wbr/errors.hpp"
#include "wbr/permutation.hpp"

namespace wbr {

// (r,t)-walled Brauer diagram: perfect matching on two rows of r+t vertices
// with a wall after position r. Vertical edges stay on one side, horizontal
// edges cross. Internally vertices are 0-based: top = 0..N-1, bottom =
// N..2N-1 with N = r+t.
class WalledDiagram {
public:
    WalledDiagram() = default;
    // edges as 0-based vertex pairs; validates the wall constraints.
    WalledDiagram(int r, int t, std::vector<std::pair<int, int>> edges);

    static WalledDiagram identity(int r, int t);
    int r() const { return r_; }
    int t() const { return t_; }
    int n() const { return r_ + t_; }
    int partner(int v) const { return match_[v]; }

    // Sorted canonical edge list (each pair (a,b) with a < b).
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    int horizontal_edges() const;  // per row

    bool operator==(const WalledDiagram& o) const {
        return r_ == o.r_ && t_ == o.t_ && edges_ == o.edges_;
    }
    // Basis order: horizontal edge count first, then lex edge list.
    bool operator<(const WalledDiagram& o) const;

    // Bit-exact text format: wbd r,t : 1-1',2-2'
    std::string to_string() const;
    static WalledDiagram parse(const std::string& text);

    WalledDiagram flip() const;

private:
    int r_ = 0, t_ = 0;
    std::vector<int> match_;
    std::vector<std::pair<int, int>> edges_;
};

// Concatenation d1 over d2: returns (closed loop count, reduced diagram).
std::pair<int, WalledDiagram> multiply_diagrams(const WalledDiagram& d1,
                                                const WalledDiagram& d2);

// Fig. 1 generators. s_i swaps top i,i+1 (i != r); e_{k,l} arcs k-l both rows.
WalledDiagram generator_s(int r, int t, int i);
WalledDiagram generator_e(int r, int t, int k, int l);

// Permutation of S_{r-l} x S_{t-l} embedded as a diagram: acts on the free
// vertices {1..r-l} and {r+l+1..r+t}, identity on the middle 2l positions.
WalledDiagram embedded_permutation(int r, int t, int l, const ProductPermutation& g);

// Layer idempotent as a plain diagram plus the coefficient exponent:
// element = delta^{-l} * diagram when delta != 0 (Fig. 2), or the Fig. 3
// diagram with coefficient 1 when delta == 0 (mirrored when l+1 > t).
struct IdempotentData {
    WalledDiagram diagram;
    int delta_exponent;  // coefficient is delta^{delta_exponent}
};
IdempotentData idempotent_data(int r, int t, int l, bool delta_is_zero);

enum class DiagramFilter { All, ExactlyL, AtLeastL };
std::vector<WalledDiagram> enumerate_diagrams(int r, int t,
                                              DiagramFilter filter = DiagramFilter::All,
                                              int l = 0);

// Top-row-only configuration with l arcs crossing the wall.
class PartialDiagram {
public:
    PartialDiagram() = default;
    // arcs as (left position, right position), 1-based, left <= r < right.
    PartialDiagram(int r, int t, std::vector<std::pair<int, int>> arcs);

    int r() const { return r_; }
    int t() const { return t_; }
    int layer() const { return static_cast<int>(arcs_.size()); }
    const std::vector<std::pair<int, int>>& arcs() const { return arcs_; }

    bool operator==(const PartialDiagram& o) const {
        return r_ == o.r_ && t_ == o.t_ && arcs_ == o.arcs_;
    }
    bool operator<(const PartialDiagram& o) const { return arcs_ < o.arcs_; }

    // True when the arcs sit exactly on the designated middle vertices
    // {r-l+1..r} x {r+1..r+l}; then the Fig. 4 two-row identification applies.
    bool is_middle_configuration() const;
    Permutation as_permutation() const;
    static PartialDiagram from_permutation(int r, int t, const Permutation& w);

    std::string to_string() const;

private:
    int r_ = 0, t_ = 0;
    std::vector<std::pair<int, int>> arcs_;  // sorted by left endpoint
};

// All partial diagrams with l arcs, C(r,l)*C(t,l)*l! of them, sorted.
std::vector<PartialDiagram> partial_diagrams(int r, int t, int l);
// The subset V_m^{m-l}: partial diagrams with m arcs containing the arcs of
// the layer-l idempotent pattern (delta != 0 pattern).
std::vector<PartialDiagram> partial_diagrams_constrained(int r, int t, int m, int l);

// v placed above d: nullopt when the edge count rises above layer(v);
// otherwise (loop count, resulting partial diagram).
std::optional<std::pair<int, PartialDiagram>> act_on_partial(const PartialDiagram& v,
                                                             const WalledDiagram& d);

}  // namespace wbr
