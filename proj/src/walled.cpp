#include "wbr/walled.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace wbr {

namespace {

// Union-find used for loop counting in concatenations.
struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

WalledDiagram::WalledDiagram(int r, int t, std::vector<std::pair<int, int>> edges)
    : r_(r), t_(t) {
    if (r < 1 || t < 1) throw ShapeMismatch("r and t must be positive");
    int n = r + t;
    match_.assign(2 * n, -1);
    for (auto& e : edges) {
        if (e.first > e.second) std::swap(e.first, e.second);
        int a = e.first, b = e.second;
        if (a < 0 || b >= 2 * n || a == b) throw ShapeMismatch("edge endpoint out of range");
        if (match_[a] != -1 || match_[b] != -1) throw ShapeMismatch("vertex matched twice");
        match_[a] = b;
        match_[b] = a;
        bool a_top = a < n, b_top = b < n;
        int pa = a_top ? a : a - n, pb = b_top ? b : b - n;  // 0-based positions
        bool a_left = pa < r, b_left = pb < r;
        if (a_top == b_top) {
            if (a_left == b_left)
                throw ShapeMismatch("horizontal edge must cross the wall");
        } else {
            if (a_left != b_left)
                throw ShapeMismatch("vertical edge must not cross the wall");
        }
    }
    for (int v = 0; v < 2 * n; ++v)
        if (match_[v] == -1) throw ShapeMismatch("vertex " + std::to_string(v) + " unmatched");
    std::sort(edges.begin(), edges.end());
    edges_ = std::move(edges);
}

WalledDiagram WalledDiagram::identity(int r, int t) {
    int n = r + t;
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.push_back({i, n + i});
    return WalledDiagram(r, t, std::move(e));
}

int WalledDiagram::horizontal_edges() const {
    int n = r_ + t_;
    int h = 0;
    for (const auto& e : edges_)
        if (e.first < n && e.second < n) ++h;
    return h;
}

bool WalledDiagram::operator<(const WalledDiagram& o) const {
    int ha = horizontal_edges(), hb = o.horizontal_edges();
    if (ha != hb) return ha < hb;
    return edges_ < o.edges_;
}

namespace {
std::string vertex_name(int v, int n) {
    if (v < n) return std::to_string(v + 1);
    return std::to_string(v - n + 1) + "'";
}
}  // namespace

std::string WalledDiagram::to_string() const {
    std::ostringstream os;
    os << "wbd " << r_ << ',' << t_ << " : ";
    for (size_t i = 0; i < edges_.size(); ++i) {
        if (i) os << ',';
        os << vertex_name(edges_[i].first, n()) << '-' << vertex_name(edges_[i].second, n());
    }
    return os.str();
}

WalledDiagram WalledDiagram::parse(const std::string& text) {
    std::istringstream is(text);
    std::string tag;
    is >> tag;
    if (tag != "wbd") throw ParseError("diagram text must start with 'wbd', got '" + text + "'");
    std::string rt;
    is >> rt;
    size_t comma = rt.find(',');
    if (comma == std::string::npos) throw ParseError("expected 'r,t' in '" + text + "'");
    int r = 0, t = 0;
    try {
        r = std::stoi(rt.substr(0, comma));
        t = std::stoi(rt.substr(comma + 1));
    } catch (const std::exception&) {
        throw ParseError("bad r,t in '" + text + "'");
    }
    std::string colon;
    is >> colon;
    if (colon != ":") throw ParseError("expected ':' in '" + text + "'");
    std::string rest;
    std::getline(is, rest);
    rest.erase(std::remove(rest.begin(), rest.end(), ' '), rest.end());
    int n = r + t;
    auto parse_vertex = [&](const std::string& tok) -> int {
        if (tok.empty()) throw ParseError("empty vertex token");
        bool primed = tok.back() == '\'';
        std::string num = primed ? tok.substr(0, tok.size() - 1) : tok;
        int v = 0;
        try {
            size_t pos = 0;
            v = std::stoi(num, &pos);
            if (pos != num.size()) throw ParseError("");
        } catch (const std::exception&) {
            throw ParseError("bad vertex token '" + tok + "'");
        }
        if (v < 1 || v > n) throw ParseError("vertex " + tok + " out of range");
        return primed ? n + v - 1 : v - 1;
    };
    std::vector<std::pair<int, int>> edges;
    std::istringstream es(rest);
    std::string etok;
    while (std::getline(es, etok, ',')) {
        size_t dash = etok.find('-');
        if (dash == std::string::npos) throw ParseError("edge '" + etok + "' missing '-'");
        edges.push_back({parse_vertex(etok.substr(0, dash)), parse_vertex(etok.substr(dash + 1))});
    }
    try {
        return WalledDiagram(r, t, std::move(edges));
    } catch (const ShapeMismatch& e) {
        throw ParseError(std::string("invalid diagram: ") + e.what());
    }
}

WalledDiagram WalledDiagram::flip() const {
    int n = this->n();
    std::vector<std::pair<int, int>> e;
    for (auto [a, b] : edges_) {
        int fa = a < n ? a + n : a - n;
        int fb = b < n ? b + n : b - n;
        e.push_back({fa, fb});
    }
    return WalledDiagram(r_, t_, std::move(e));
}

std::pair<int, WalledDiagram> multiply_diagrams(const WalledDiagram& d1,
                                                const WalledDiagram& d2) {
    if (d1.r() != d2.r() || d1.t() != d2.t())
        throw ShapeMismatch("diagram shapes differ in multiplication");
    int n = d1.n();
    // Three rows: top of d1 (0..n-1), interface (n..2n-1), bottom of d2
    // (2n..3n-1). d1 edges keep their indices; d2 edges shift by n.
    auto nbr1 = [&](int v) { return d1.partner(v); };
    auto nbr2 = [&](int v) { return d2.partner(v - n) + n; };

    std::vector<bool> seen(3 * n, false);
    std::vector<std::pair<int, int>> result_edges;
    UnionFind uf(3 * n);
    for (auto [a, b] : d1.edges()) uf.unite(a, b);
    for (auto [a, b] : d2.edges()) uf.unite(a + n, b + n);

    auto is_outer = [&](int v) { return v < n || v >= 2 * n; };
    for (int start = 0; start < 3 * n; ++start) {
        if (!is_outer(start) || seen[start]) continue;
        // Walk: at the start use the edge of the diagram the vertex belongs
        // to; at interface vertices alternate d1/d2 edges.
        seen[start] = true;
        bool use_d1 = start < n;
        int cur = start;
        while (true) {
            int nxt = use_d1 ? nbr1(cur) : nbr2(cur);
            seen[nxt] = true;
            if (is_outer(nxt)) {
                int a = start, b = nxt;
                // map back: outer top stays, outer bottom shifts down by n
                int ma = a < n ? a : a - n;
                int mb = b < n ? b : b - n;
                if (ma > mb) std::swap(ma, mb);
                result_edges.push_back({ma, mb});
                break;
            }
            cur = nxt;
            use_d1 = !use_d1;
        }
    }
    int loops = 0;
    std::vector<bool> counted(3 * n, false);
    for (int v = n; v < 2 * n; ++v) {
        if (seen[v]) continue;
        int root = uf.find(v);
        if (!counted[root]) {
            counted[root] = true;
            ++loops;
        }
    }
    return {loops, WalledDiagram(d1.r(), d1.t(), std::move(result_edges))};
}

WalledDiagram generator_s(int r, int t, int i) {
    if (i == r) throw IndexAcrossWall("s_" + std::to_string(i) + " crosses the wall");
    if (i < 1 || i > r + t - 1) throw IndexOutOfRange("s index out of range");
    int n = r + t;
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v < n; ++v) {
        int target = v;
        if (v == i - 1) target = i;
        else if (v == i) target = i - 1;
        e.push_back({v, n + target});
    }
    return WalledDiagram(r, t, std::move(e));
}

WalledDiagram generator_e(int r, int t, int k, int l) {
    if (k < 1 || k > r || l <= r || l > r + t) throw IndexOutOfRange("e_{k,l} indices out of range");
    int n = r + t;
    std::vector<std::pair<int, int>> e;
    e.push_back({k - 1, l - 1});
    e.push_back({n + k - 1, n + l - 1});
    for (int v = 0; v < n; ++v)
        if (v != k - 1 && v != l - 1) e.push_back({v, n + v});
    return WalledDiagram(r, t, std::move(e));
}

WalledDiagram embedded_permutation(int r, int t, int l, const ProductPermutation& g) {
    if (g.left.degree() != r - l || g.right.degree() != t - l)
        throw DegreeMismatch("embedded permutation degree mismatch");
    int n = r + t;
    std::vector<std::pair<int, int>> e;
    for (int pos = 1; pos <= n; ++pos) {
        int target;
        if (pos <= r - l) target = g.left(pos);
        else if (pos <= r + l) target = pos;
        else target = r + l + g.right(pos - r - l);
        e.push_back({pos - 1, n + target - 1});
    }
    return WalledDiagram(r, t, std::move(e));
}

IdempotentData idempotent_data(int r, int t, int l, bool delta_is_zero) {
    int s = std::min(r, t);
    if (l < 0 || l > s) throw LayerOutOfRange("layer " + std::to_string(l) + " outside 0.." +
                                              std::to_string(s));
    int n = r + t;
    if (l == 0) return {WalledDiagram::identity(r, t), 0};
    if (!delta_is_zero) {
        // Fig. 2: nested arcs r-l+i -- r+l+1-i in both rows, factor 1/δ^l.
        std::vector<std::pair<int, int>> e;
        for (int i = 1; i <= l; ++i) {
            int a = r - l + i, b = r + l + 1 - i;  // 1-based positions
            e.push_back({a - 1, b - 1});
            e.push_back({n + a - 1, n + b - 1});
        }
        for (int pos = 1; pos <= n; ++pos)
            if (pos <= r - l || pos > r + l) e.push_back({pos - 1, n + pos - 1});
        return {WalledDiagram(r, t, std::move(e)), -l};
    }
    if (r == 1 && t == 1)
        throw NotCellularlyStratified("B_{1,1}(0) is not cellularly stratified");
    // Fig. 3 as drawn: top arcs nested r-l+i -- r+l+1-i, bottom arcs shifted
    // one step outward on the right (r-l+i -- r+l+2-i), and the crossing
    // vertical joining top r+l+1 to the bottom vertex r+1 left open by the
    // shift. Requires the vertex r+l+1, i.e. l+1 <= t; otherwise the
    // left-right mirrored diagram is used (l+1 <= r).
    auto fig3 = [](int rr, int tt) {
        int nn = rr + tt;
        int ll = std::min(rr, tt);
        (void)ll;
        return [rr, tt, nn](int layer) {
            std::vector<std::pair<int, int>> e;
            for (int i = 1; i <= layer; ++i) {
                e.push_back({(rr - layer + i) - 1, (rr + layer + 1 - i) - 1});
                e.push_back({nn + (rr - layer + i) - 1, nn + (rr + layer + 2 - i) - 1});
            }
            e.push_back({(rr + layer + 1) - 1, nn + (rr + 1) - 1});
            for (int pos = 1; pos <= rr - layer; ++pos) e.push_back({pos - 1, nn + pos - 1});
            for (int pos = rr + layer + 2; pos <= nn; ++pos) e.push_back({pos - 1, nn + pos - 1});
            return WalledDiagram(rr, tt, std::move(e));
        };
    };
    if (l + 1 <= t) return {fig3(r, t)(l), 0};
    if (l + 1 <= r) {
        // mirror of the (t,r) diagram under pos -> n+1-pos on both rows
        WalledDiagram base = fig3(t, r)(l);
        std::vector<std::pair<int, int>> e;
        for (auto [a, b] : base.edges()) {
            auto mirror = [n](int v) {
                return v < n ? (n - 1 - v) : (n + (n - 1 - (v - n)));
            };
            e.push_back({mirror(a), mirror(b)});
        }
        return {WalledDiagram(r, t, std::move(e)), 0};
    }
    throw NotCellularlyStratified(
        "delta = 0 idempotent e_" + std::to_string(l) + " needs a vertex beyond the arcs (J_" +
        std::to_string(l) + " is nilpotent for r = t = l)");
}

std::vector<WalledDiagram> enumerate_diagrams(int r, int t, DiagramFilter filter, int l) {
    if (r + t > 10) throw DimensionTooLarge("enumerate_diagrams guarded at r+t <= 10");
    int s = std::min(r, t);
    if (filter != DiagramFilter::All && (l < 0 || l > s))
        throw LayerOutOfRange("filter layer out of range");
    std::vector<WalledDiagram> out;
    int n = r + t;

    std::vector<int> left_idx(r), right_idx(t);
    for (int i = 0; i < r; ++i) left_idx[i] = i;           // 0-based left positions
    for (int i = 0; i < t; ++i) right_idx[i] = r + i;      // 0-based right positions

    auto subsets = [](const std::vector<int>& universe, int k) {
        std::vector<std::vector<int>> result;
        std::vector<int> cur;
        std::function<void(size_t)> rec = [&](size_t at) {
            if (cur.size() == static_cast<size_t>(k)) {
                result.push_back(cur);
                return;
            }
            if (at >= universe.size()) return;
            if (universe.size() - at < static_cast<size_t>(k) - cur.size()) return;
            cur.push_back(universe[at]);
            rec(at + 1);
            cur.pop_back();
            rec(at + 1);
        };
        rec(0);
        return result;
    };

    for (int layer = 0; layer <= s; ++layer) {
        if (filter == DiagramFilter::ExactlyL && layer != l) continue;
        if (filter == DiagramFilter::AtLeastL && layer < l) continue;
        auto tl = subsets(left_idx, layer), tr = subsets(right_idx, layer);
        auto bl = tl, br = tr;
        for (const auto& topL : tl)
            for (const auto& topR : tr)
                for (const auto& botL : bl)
                    for (const auto& botR : br) {
                        // bijections: top arcs topL->perm(topR), bottom likewise,
                        // verticals map remaining top to remaining bottom.
                        std::vector<int> tperm(layer), bperm(layer);
                        for (int i = 0; i < layer; ++i) tperm[i] = i;
                        do {
                            for (int i = 0; i < layer; ++i) bperm[i] = i;
                            do {
                                std::vector<int> freeTL, freeTR, freeBL, freeBR;
                                std::vector<bool> usedT(n, false), usedB(n, false);
                                for (int i = 0; i < layer; ++i) {
                                    usedT[topL[i]] = usedT[topR[tperm[i]]] = true;
                                    usedB[botL[i]] = usedB[botR[bperm[i]]] = true;
                                }
                                for (int v = 0; v < r; ++v) {
                                    if (!usedT[v]) freeTL.push_back(v);
                                    if (!usedB[v]) freeBL.push_back(v);
                                }
                                for (int v = r; v < n; ++v) {
                                    if (!usedT[v]) freeTR.push_back(v);
                                    if (!usedB[v]) freeBR.push_back(v);
                                }
                                std::vector<int> vl(freeTL.size()), vr(freeTR.size());
                                for (size_t i = 0; i < vl.size(); ++i) vl[i] = static_cast<int>(i);
                                do {
                                    for (size_t i = 0; i < vr.size(); ++i) vr[i] = static_cast<int>(i);
                                    do {
                                        std::vector<std::pair<int, int>> e;
                                        for (int i = 0; i < layer; ++i) {
                                            e.push_back({topL[i], topR[tperm[i]]});
                                            e.push_back({n + botL[i], n + botR[bperm[i]]});
                                        }
                                        for (size_t i = 0; i < freeTL.size(); ++i)
                                            e.push_back({freeTL[i], n + freeBL[vl[i]]});
                                        for (size_t i = 0; i < freeTR.size(); ++i)
                                            e.push_back({freeTR[i], n + freeBR[vr[i]]});
                                        out.emplace_back(r, t, std::move(e));
                                    } while (std::next_permutation(vr.begin(), vr.end()));
                                } while (std::next_permutation(vl.begin(), vl.end()));
                            } while (std::next_permutation(bperm.begin(), bperm.end()));
                        } while (std::next_permutation(tperm.begin(), tperm.end()));
                    }
    }
    std::sort(out.begin(), out.end());
    return out;
}

PartialDiagram::PartialDiagram(int r, int t, std::vector<std::pair<int, int>> arcs)
    : r_(r), t_(t) {
    if (r < 1 || t < 1) throw MalformedPartialDiagram("r and t must be positive");
    std::vector<bool> used(r + t + 1, false);
    for (auto& a : arcs) {
        if (a.first > a.second) std::swap(a.first, a.second);
        if (a.first < 1 || a.first > r || a.second <= r || a.second > r + t)
            throw MalformedPartialDiagram("arc must cross the wall");
        if (used[a.first] || used[a.second]) throw MalformedPartialDiagram("vertex reused");
        used[a.first] = used[a.second] = true;
    }
    std::sort(arcs.begin(), arcs.end());
    arcs_ = std::move(arcs);
}

bool PartialDiagram::is_middle_configuration() const {
    int l = layer();
    std::vector<bool> left_ok(l, false), right_ok(l, false);
    for (auto [a, b] : arcs_) {
        if (a <= r_ - l || a > r_) return false;
        if (b <= r_ || b > r_ + l) return false;
        left_ok[a - (r_ - l) - 1] = true;
        right_ok[b - r_ - 1] = true;
    }
    return std::all_of(left_ok.begin(), left_ok.end(), [](bool b) { return b; }) &&
           std::all_of(right_ok.begin(), right_ok.end(), [](bool b) { return b; });
}

Permutation PartialDiagram::as_permutation() const {
    if (!is_middle_configuration())
        throw MalformedPartialDiagram("arcs are not on the designated middle vertices");
    int l = layer();
    std::vector<int> im(l);
    for (auto [a, b] : arcs_) im[a - (r_ - l) - 1] = b - r_;
    return Permutation(im);
}

PartialDiagram PartialDiagram::from_permutation(int r, int t, const Permutation& w) {
    int l = w.degree();
    std::vector<std::pair<int, int>> arcs;
    for (int a = 1; a <= l; ++a) arcs.push_back({r - l + a, r + w(a)});
    return PartialDiagram(r, t, std::move(arcs));
}

std::string PartialDiagram::to_string() const {
    std::ostringstream os;
    os << "pd " << r_ << ',' << t_ << " : ";
    for (size_t i = 0; i < arcs_.size(); ++i) {
        if (i) os << ',';
        os << arcs_[i].first << '-' << arcs_[i].second;
    }
    return os.str();
}

std::vector<PartialDiagram> partial_diagrams(int r, int t, int l) {
    int s = std::min(r, t);
    if (l < 0 || l > s) throw LayerOutOfRange("partial diagram layer out of range");
    std::vector<PartialDiagram> out;
    std::vector<int> left, right;
    std::function<void(int, int)> pick_left = [&](int from, int need) {
        if (need == 0) {
            std::function<void(int, int)> pick_right = [&](int rfrom, int rneed) {
                if (rneed == 0) {
                    std::vector<int> perm(l);
                    for (int i = 0; i < l; ++i) perm[i] = i;
                    do {
                        std::vector<std::pair<int, int>> arcs;
                        for (int i = 0; i < l; ++i) arcs.push_back({left[i], right[perm[i]]});
                        out.emplace_back(r, t, std::move(arcs));
                    } while (std::next_permutation(perm.begin(), perm.end()));
                    return;
                }
                for (int v = rfrom; v <= r + t - rneed + 1; ++v) {
                    right.push_back(v);
                    pick_right(v + 1, rneed - 1);
                    right.pop_back();
                }
            };
            pick_right(r + 1, l);
            return;
        }
        for (int v = from; v <= r - need + 1; ++v) {
            left.push_back(v);
            pick_left(v + 1, need - 1);
            left.pop_back();
        }
    };
    pick_left(1, l);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<PartialDiagram> partial_diagrams_constrained(int r, int t, int m, int l) {
    if (l < 0 || m < l || m > std::min(r, t)) throw LayerOutOfRange("constrained layers invalid");
    std::vector<std::pair<int, int>> required;
    for (int i = 1; i <= l; ++i) required.push_back({r - l + i, r + l + 1 - i});
    std::sort(required.begin(), required.end());
    std::vector<PartialDiagram> out;
    for (const auto& v : partial_diagrams(r, t, m)) {
        bool ok = true;
        for (const auto& q : required)
            if (!std::binary_search(v.arcs().begin(), v.arcs().end(), q)) {
                ok = false;
                break;
            }
        if (ok) out.push_back(v);
    }
    return out;
}

std::optional<std::pair<int, PartialDiagram>> act_on_partial(const PartialDiagram& v,
                                                             const WalledDiagram& d) {
    if (v.r() != d.r() || v.t() != d.t()) throw ShapeMismatch("partial/diagram shape mismatch");
    int n = d.n();
    // Interface = v's row glued to d's top (0..n-1); result lives on d's
    // bottom (n..2n-1 in d's indexing).
    std::vector<int> varc(n, -1);
    for (auto [a, b] : v.arcs()) {
        varc[a - 1] = b - 1;
        varc[b - 1] = a - 1;
    }
    std::vector<bool> seen(2 * n, false);
    std::vector<std::pair<int, int>> arcs;
    int loops = 0;

    // Walk from each bottom vertex of d.
    for (int b0 = n; b0 < 2 * n; ++b0) {
        if (seen[b0]) continue;
        seen[b0] = true;
        int cur = d.partner(b0);
        // cur is either another bottom vertex (bottom arc) or a top vertex.
        while (true) {
            seen[cur] = true;
            if (cur >= n) {  // reached a bottom vertex: arc
                arcs.push_back({b0 - n + 1, cur - n + 1});
                break;
            }
            if (varc[cur] == -1) break;  // free vertex of v: b0 stays free
            int up = varc[cur];
            seen[up] = true;
            cur = d.partner(up);
        }
    }
    // Remaining top components are either closed loops (alternating v arcs
    // and d top arcs) or dead "cap" paths ending in free vertices of v.
    // Only closed loops contribute δ factors.
    for (int v0 = 0; v0 < n; ++v0) {
        if (seen[v0]) continue;
        std::vector<int> comp{v0};
        seen[v0] = true;
        bool is_loop = true;
        for (size_t qi = 0; qi < comp.size(); ++qi) {
            int x = comp[qi];
            if (varc[x] == -1) {
                is_loop = false;
            } else if (!seen[varc[x]]) {
                seen[varc[x]] = true;
                comp.push_back(varc[x]);
            }
            int p = d.partner(x);
            if (p >= n) throw InternalError("unvisited top component touches the bottom row");
            if (!seen[p]) {
                seen[p] = true;
                comp.push_back(p);
            }
        }
        if (is_loop) ++loops;
    }
    PartialDiagram result(v.r(), v.t(), std::move(arcs));
    if (result.layer() != v.layer()) return std::nullopt;
    return std::make_pair(loops, result);
}

}  // namespace wbr
