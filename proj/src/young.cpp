#include <algorithm>

#include "wbr/modcore.hpp"
#include "wbr/modules.hpp"

namespace wbr {

namespace {

// All bipartitions of (a,b), reverse-lexicographic in each factor (the
// dominance-compatible processing order: dominating shapes come first).
std::vector<Bipartition> bipartitions_revlex(int a, int b) {
    std::vector<Bipartition> out;
    for (const auto& l : partitions_of(a))
        for (const auto& r : partitions_of(b)) out.push_back({l, r});
    return out;
}

}  // namespace

const ProdYoungReport& ProdYoungContext::report(const Bipartition& shape) {
    {
        std::lock_guard lock(mutex_);
        auto it = memo_.find(shape);
        if (it != memo_.end()) return it->second;
    }
    field_.require_char_not_2_3();
    const Partition& lambda = shape.left;
    const Partition& mu = shape.right;
    int a = lambda.size(), b = mu.size();

    ModuleRep m = perm_module_prod(
        std::vector<int>(lambda.parts.begin(), lambda.parts.end()),
        std::vector<int>(mu.parts.begin(), mu.parts.end()), field_);
    DecompositionReport dec = decompose(m, seed_);

    // The Specht vector e_t lies in exactly one indecomposable summand; that
    // summand is Y^{λ,μ} (James criterion through M·k_t = K e_t).
    Matrix et = polytabloid(Tableau::initial(lambda), field_)
                    .kron(polytabloid(Tableau::initial(mu), field_));
    Matrix kt = alternating_column_sum_action(m, lambda, mu);
    if (kt.rank() != 1) throw InternalError("M k_t is not one-dimensional");

    ProdYoungReport rep;
    rep.shape = shape;
    int defining_class = -1;
    for (size_t ci = 0; ci < dec.classes.size(); ++ci) {
        size_t hits = 0;
        for (const auto& emb : dec.classes[ci].embeddings)
            if (et.solve_rowspan(emb).has_value()) ++hits;
        if (hits > 0) {
            if (defining_class >= 0 || hits > 1)
                throw LabelAmbiguous("Specht vector lies in several summands");
            defining_class = static_cast<int>(ci);
            if (dec.classes[ci].multiplicity != 1)
                throw LabelAmbiguous("defining Young summand has multiplicity > 1");
        }
    }
    if (defining_class < 0)
        throw LabelAmbiguous("no summand contains the Specht vector");
    rep.young = dec.classes[defining_class].rep;
    rep.entries.push_back({shape, 1, rep.young.dim});

    // Remaining classes must match catalog Young modules of strictly
    // dominating shapes.
    for (size_t ci = 0; ci < dec.classes.size(); ++ci) {
        if (static_cast<int>(ci) == defining_class) continue;
        const auto& cls = dec.classes[ci];
        bool matched = false;
        for (const auto& cand : bipartitions_revlex(a, b)) {
            if (cand == shape) continue;
            if (!bipartition_dominates(cand, shape)) continue;
            const ModuleRep& y = report(cand).young;
            if (y.dim != cls.rep.dim) continue;
            if (is_isomorphic(cls.rep, y, seed_)) {
                rep.entries.push_back({cand, cls.multiplicity, cls.rep.dim});
                matched = true;
                break;
            }
        }
        if (!matched)
            throw LabelAmbiguous("summand of M^{" + lambda.to_string() + "," + mu.to_string() +
                                 "} matches no dominating Young module");
    }
    std::sort(rep.entries.begin(), rep.entries.end(),
              [](const ProdYoungEntry& x, const ProdYoungEntry& y) { return x.label < y.label; });

    std::lock_guard lock(mutex_);
    return memo_.emplace(shape, std::move(rep)).first->second;
}

ProdYoungReport young_modules_prod(const Partition& lambda, const Partition& mu, FieldSpec f,
                                   uint64_t seed) {
    ProdYoungContext ctx(f, seed);
    return ctx.report({lambda, mu});
}

}  // namespace wbr
