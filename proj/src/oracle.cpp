#include "autgrp/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "autgrp/dimacs.hpp"
#include "autgrp/refinement.hpp"

namespace autgrp {

OracleGroup brute_force_automorphisms(const ColoredGraph& g, bool degree_prune) {
    if (g.n() > 10)
        throw std::invalid_argument("oracle refuses graphs with n > 10");
    OracleGroup out;
    std::vector<int> image(g.n());
    std::iota(image.begin(), image.end(), 0);
    do {
        if (degree_prune) {
            bool ok = true;
            for (int v = 0; v < g.n() && ok; ++v)
                ok = g.degree(image[v]) == g.degree(v);
            if (!ok) continue;
        }
        Permutation phi(image);
        if (is_automorphism(g, phi)) out.elements.push_back(std::move(phi));
    } while (std::next_permutation(image.begin(), image.end()));
    return out;
}

size_t IrTree::count_matching(int k, const Trace& reference, size_t len) const {
    if (k >= static_cast<int>(levels.size())) return 0;
    size_t count = 0;
    for (const auto& node : levels[k]) {
        if (node.trace.size() != len) continue;
        if (std::equal(node.trace.tokens().begin(), node.trace.tokens().end(),
                       reference.tokens().begin()))
            ++count;
    }
    return count;
}

IrTree enumerate_ir_tree(const ColoredGraph& g, SelectorPolicy policy,
                         size_t node_cap) {
    IrTree tree;
    Refiner refiner(g.n());

    IrTreeNode root;
    root.coloring = g.initial_coloring();
    refiner.refine(g, root.coloring, root.trace);
    tree.levels.push_back({std::move(root)});

    size_t total_nodes = 1;
    std::map<std::string, int> class_of_key;

    auto record_leaf = [&](const IrTreeNode& node, int level, size_t idx) {
        IrLeaf leaf;
        leaf.walk = WalkResult{Permutation(node.coloring.as_permutation_image()),
                               node.base};
        leaf.trace = node.trace;
        leaf.node_index = idx;
        leaf.level = level;
        std::string key = to_dimacs(permute_graph(g, leaf.walk.perm));
        auto [it, inserted] =
            class_of_key.emplace(key, static_cast<int>(tree.classes.size()));
        if (inserted) tree.classes.emplace_back();
        leaf.equivalence_class = it->second;
        tree.classes[it->second].push_back(tree.leaves.size());
        tree.leaves.push_back(std::move(leaf));
    };

    for (int level = 0; !tree.levels[level].empty(); ++level) {
        std::vector<IrTreeNode> next;
        const auto& cur = tree.levels[level];
        for (size_t idx = 0; idx < cur.size(); ++idx) {
            const IrTreeNode& node = cur[idx];
            auto cell = select_cell(node.coloring, policy);
            if (!cell) {
                record_leaf(node, level, idx);
                continue;
            }
            std::vector<int> members;
            for (int q = 0; q < cell->size; ++q)
                members.push_back(node.coloring.vertex_at(cell->start + q));
            std::sort(members.begin(), members.end());
            for (int v : members) {
                IrTreeNode child;
                child.base = node.base;
                child.base.push_back(v);
                child.coloring = node.coloring;
                child.trace = node.trace;
                child.coloring.individualize(v);
                refiner.refine(g, child.coloring, child.trace, v);
                next.push_back(std::move(child));
                if (++total_nodes > node_cap)
                    throw std::invalid_argument("IR tree exceeds the node cap");
            }
        }
        if (next.empty()) break;
        tree.levels.push_back(std::move(next));
    }
    return tree;
}

} // namespace autgrp
