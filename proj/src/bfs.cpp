#include "autgrp/bfs.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

namespace autgrp {

namespace {

// Union-find over the members of one cell.
struct CellOrbits {
    std::vector<int> parent;
    explicit CellOrbits(int size) : parent(size) {
        for (int i = 0; i < size; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

bool fixes_pointwise(const Permutation& phi, const std::vector<int>& points) {
    for (int p : points)
        if (phi(p) != p) return false;
    return true;
}

} // namespace

BfsEngine::BfsEngine(const ColoredGraph& g, const TargetPath& path,
                     SchreierStructure* schreier, const SolveOptions& opts)
    : g_(g), path_(path), schreier_(schreier), opts_(opts) {
    BfsNode root;
    root.coloring = path.prefix_colorings[0];
    level_.k = 0;
    level_.nodes.push_back(std::move(root));
    level_.target_index = 0;
    level_.total_weight = 1;
    level_.trace_prefix_len = path.prefix_trace_len[0];
}

void BfsEngine::expand_parent(const BfsNode& parent, bool is_target_parent,
                              const std::vector<Permutation>& gens,
                              const BfsLevel* check_against, Refiner& refiner,
                              ParentExpansion& out) const {
    int k = level_.k;
    auto cell = select_cell(parent.coloring, opts_.selector);
    if (!cell) { out.pruned = true; return; }

    std::vector<int> members(cell->size);
    for (int q = 0; q < cell->size; ++q)
        members[q] = parent.coloring.vertex_at(cell->start + q);
    std::sort(members.begin(), members.end());
    auto local_index = [&](int v) {
        return static_cast<int>(std::lower_bound(members.begin(), members.end(), v) -
                                members.begin());
    };

    // PruBW: orbits of the cell under generators stabilizing the parent base.
    CellOrbits orbits(cell->size);
    if (opts_.use_prubw) {
        for (const Permutation& gen : gens) {
            if (!fixes_pointwise(gen, parent.base)) continue;
            for (int q = 0; q < cell->size; ++q) {
                int image = gen(members[q]);
                if (image != members[q]) orbits.unite(q, local_index(image));
            }
        }
    }
    std::vector<int> orbit_size(cell->size, 0);
    for (int q = 0; q < cell->size; ++q) ++orbit_size[orbits.find(q)];

    int target_child = is_target_parent ? path_.leaf.base[k] : -1;
    int target_root = target_child >= 0 ? orbits.find(local_index(target_child)) : -1;

    size_t expected_len = path_.prefix_trace_len[k + 1];
    const std::set<DeviationValue>* allowed =
        (!is_target_parent && opts_.use_deviation_sets && check_against)
            ? &check_against->deviation_set
            : nullptr;

    std::set<DeviationValue> seen_values;
    for (int q = 0; q < cell->size; ++q) {
        if (orbits.find(q) != q) continue;                  // merged away
        int v = (q == target_root) ? target_child : members[q];
        Coloring child_col = parent.coloring;
        child_col.individualize(v);
        Trace trace;
        trace.set_compare(&path_.trace, level_.trace_prefix_len, opts_.deviation_k);
        refiner.refine(g_, child_col, trace, v);
        ++out.refinements;

        bool matched = !trace.deviated() &&
                       level_.trace_prefix_len + trace.size() == expected_len;
        if (matched) {
            out.saw_bottom = true;
            BfsNode child;
            child.base = parent.base;
            child.base.push_back(v);
            child.coloring = std::move(child_col);
            child.internal_weight = static_cast<uint64_t>(orbit_size[q]);
            if (__builtin_mul_overflow(child.internal_weight, parent.weight,
                                       &child.weight)) {
                out.overflow = true;
                return;
            }
            out.children.push_back(std::move(child));
        } else {
            DeviationValue dv =
                trace.deviated()
                    ? *trace.deviation_value()
                    : DeviationValue{level_.trace_prefix_len + trace.size(),
                                     hash_mix(0x9d8f3afccf1f9a21ULL, trace.size())};
            out.deviations.push_back(dv);
            seen_values.insert(dv);
            if (allowed && !allowed->count(dv)) {
                // A value outside D(tau'): prune without computing the rest.
                out.pruned = true;
                out.children.clear();
                return;
            }
        }
    }
    if (allowed) {
        // Completion must cover D(tau') exactly, bottom included.
        bool has_bottom_req = check_against->deviation_set_has_bottom;
        if (seen_values != *allowed || (has_bottom_req && !out.saw_bottom) ||
            (!has_bottom_req && out.saw_bottom)) {
            out.pruned = true;
            out.children.clear();
            return;
        }
    }
    if (!is_target_parent && out.children.empty()) out.pruned = true;
}

BfsEngine::Status BfsEngine::advance(int threads) {
    auto t0 = std::chrono::steady_clock::now();
    if (at_leaf_level()) return Status::reached_leaves;

    std::vector<Permutation> gens;
    if (schreier_ && opts_.use_prubw) gens = schreier_->generators();

    // Expand the target-path node first to learn D(tau') for this level.
    Refiner refiner(g_.n());
    ParentExpansion target_exp;
    expand_parent(level_.nodes[level_.target_index], true, gens, nullptr, refiner,
                  target_exp);
    nodes_expanded_ += target_exp.refinements;
    if (target_exp.overflow) return Status::abandoned;

    BfsLevel next;
    next.k = level_.k + 1;
    next.trace_prefix_len = path_.prefix_trace_len[next.k];
    next.deviation_set.insert(target_exp.deviations.begin(),
                              target_exp.deviations.end());
    next.deviation_set_has_bottom = target_exp.saw_bottom;

    BfsLevel pruning_reference = next;  // carries D(tau') for sibling checks

    size_t parents = level_.nodes.size();
    std::vector<ParentExpansion> results(parents);
    std::atomic<size_t> cursor{0};
    std::atomic<bool> overflow{false};
    size_t chunk = std::max<size_t>(
        64, parents / (8 * static_cast<size_t>(std::max(1, threads))));

    auto work = [&]() {
        Refiner local_refiner(g_.n());
        while (true) {
            size_t begin = cursor.fetch_add(chunk);
            if (begin >= parents || overflow.load()) break;
            size_t end = std::min(parents, begin + chunk);
            for (size_t i = begin; i < end; ++i) {
                if (i == level_.target_index) continue;
                expand_parent(level_.nodes[i], false, gens, &pruning_reference,
                              local_refiner, results[i]);
                if (results[i].overflow) overflow.store(true);
            }
        }
    };
    if (threads <= 1 || parents < 2) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    for (size_t i = 0; i < parents; ++i)
        if (i != level_.target_index) nodes_expanded_ += results[i].refinements;
    if (overflow.load()) return Status::abandoned;

    // Merge in parent order; the target parent keeps its position.
    uint64_t total_weight = 0;
    size_t node_count = 0;
    for (size_t i = 0; i < parents; ++i) {
        const ParentExpansion& exp =
            (i == level_.target_index) ? target_exp : results[i];
        if (!exp.pruned) node_count += exp.children.size();
    }
    size_t per_node = sizeof(BfsNode) + 16 * static_cast<size_t>(g_.n()) +
                      4 * static_cast<size_t>(next.k);
    if (node_count * per_node > opts_.bfs_memory_cap) return Status::abandoned;

    next.nodes.reserve(node_count);
    for (size_t i = 0; i < parents; ++i) {
        ParentExpansion& exp = (i == level_.target_index) ? target_exp : results[i];
        if (exp.pruned) continue;
        for (BfsNode& child : exp.children) {
            if (i == level_.target_index &&
                child.base == std::vector<int>(path_.leaf.base.begin(),
                                               path_.leaf.base.begin() + next.k))
                next.target_index = next.nodes.size();
            if (__builtin_add_overflow(total_weight, child.weight, &total_weight))
                return Status::abandoned;
            next.nodes.push_back(std::move(child));
        }
    }
    next.total_weight = total_weight;
    level_ = std::move(next);
    last_level_ms_ = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    return at_leaf_level() ? Status::reached_leaves : Status::advanced;
}

} // namespace autgrp
