#include "autgrp/walk.hpp"

namespace autgrp {

std::optional<CellRef> select_cell(const Coloring& pi, SelectorPolicy policy) {
    int best = -1, best_size = 0;
    for (int s = 0; s < pi.n(); s += pi.cell_size(s)) {
        int sz = pi.cell_size(s);
        if (sz <= 1) continue;
        switch (policy) {
            case SelectorPolicy::first:
                return CellRef{s, sz};
            case SelectorPolicy::first_largest:
                if (sz > best_size) { best = s; best_size = sz; }
                break;
            case SelectorPolicy::first_smallest:
                if (best < 0 || sz < best_size) { best = s; best_size = sz; }
                break;
        }
    }
    if (best < 0) return std::nullopt;
    return CellRef{best, best_size};
}

WalkResult random_walk_from(const ColoredGraph& g, Refiner& refiner,
                            const Coloring& start, const std::vector<int>& base_prefix,
                            SelectorPolicy policy, Rng& rng, Trace& trace) {
    Coloring col = start;
    std::vector<int> base = base_prefix;
    while (auto cell = select_cell(col, policy)) {
        int v = col.vertex_at(cell->start + static_cast<int>(rng.below(cell->size)));
        col.individualize(v);
        refiner.refine(g, col, trace, v);
        base.push_back(v);
    }
    return WalkResult{Permutation(col.as_permutation_image()), std::move(base)};
}

WalkResult random_walk(const ColoredGraph& g, SelectorPolicy policy, Rng& rng) {
    Refiner refiner(g.n());
    Coloring col = g.initial_coloring();
    Trace trace;
    refiner.refine(g, col, trace);
    return random_walk_from(g, refiner, col, {}, policy, rng, trace);
}

TargetPath establish_target(const ColoredGraph& g, Refiner& refiner,
                            SelectorPolicy policy, Rng& rng) {
    TargetPath path;
    Coloring col = g.initial_coloring();
    refiner.refine(g, col, path.trace);
    path.prefix_colorings.push_back(col);
    path.prefix_trace_len.push_back(path.trace.size());
    path.cell_product = 1;
    std::vector<int> base;
    while (auto cell = select_cell(col, policy)) {
        int v = col.vertex_at(cell->start + static_cast<int>(rng.below(cell->size)));
        col.individualize(v);
        refiner.refine(g, col, path.trace, v);
        base.push_back(v);
        path.cell_sizes.push_back(cell->size);
        path.cell_product *= cell->size;
        path.prefix_colorings.push_back(col);
        path.prefix_trace_len.push_back(path.trace.size());
    }
    Permutation perm(col.as_permutation_image());
    path.leaf = TargetLeaf{perm, perm.inverse(), std::move(base)};
    return path;
}

std::optional<Permutation> derive_automorphism(const ColoredGraph& g,
                                               const TargetLeaf& target,
                                               const WalkResult& leaf) {
    Permutation phi = target.perm_inv.compose(leaf.perm);
    if (!is_automorphism(g, phi)) return std::nullopt;
    return phi;
}

} // namespace autgrp
