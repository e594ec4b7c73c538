#pragma once

#include <vector>

#include "autgrp/graph.hpp"
#include "autgrp/perm.hpp"
#include "autgrp/trace.hpp"
#include "autgrp/walk.hpp"

namespace autgrp {

// Independent brute-force ground truth for tests. Single-threaded, shares
// only the graph/permutation primitives with the solver.

struct OracleGroup {
    std::vector<Permutation> elements;
    size_t order() const { return elements.size(); }
};

// Tests every permutation of {0..n-1}. Throws std::invalid_argument for
// n > 10. When `degree_prune` is set, branches with mismatched degrees are
// skipped; the unpruned mode remains available for auditing.
OracleGroup brute_force_automorphisms(const ColoredGraph& g, bool degree_prune = false);

struct IrTreeNode {
    std::vector<int> base;
    Coloring coloring;
    Trace trace;       // cumulative token stream from the root
};

struct IrLeaf {
    WalkResult walk;
    Trace trace;
    size_t node_index;  // index into the level it appears on
    int level;
    int equivalence_class = -1;
};

struct IrTree {
    std::vector<std::vector<IrTreeNode>> levels;  // levels[k]: nodes with |base| == k
    std::vector<IrLeaf> leaves;
    std::vector<std::vector<size_t>> classes;     // leaf indices per equivalence class

    // Number of level-k nodes whose trace equals `reference` up to `len` tokens.
    size_t count_matching(int k, const Trace& reference, size_t len) const;
};

// Explicit search tree (node cap guards against blowup; throws
// std::invalid_argument when exceeded). Leaf equivalence classes are formed
// by relabeling the graph with each leaf permutation: two leaves are
// equivalent iff the relabeled graphs coincide.
IrTree enumerate_ir_tree(const ColoredGraph& g, SelectorPolicy policy,
                         size_t node_cap = 1000000);

} // namespace autgrp
