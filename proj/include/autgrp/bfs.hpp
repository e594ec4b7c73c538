#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "autgrp/options.hpp"
#include "autgrp/schreier.hpp"
#include "autgrp/walk.hpp"

namespace autgrp {

struct BfsNode {
    std::vector<int> base;
    Coloring coloring;
    uint64_t internal_weight = 1;  // w-bar: nodes merged into this one at its level
    uint64_t weight = 1;           // w = w-bar * w(parent)
};

struct BfsLevel {
    int k = 0;                       // |base| of every node
    std::vector<BfsNode> nodes;
    size_t target_index = 0;         // node whose base is the target prefix
    uint64_t total_weight = 1;
    size_t trace_prefix_len = 0;
    std::set<DeviationValue> deviation_set;  // D(tau') of the level below, bottom excluded
    bool deviation_set_has_bottom = true;    // whether some child matched completely
};

// Breadth-first traversal of the search tree with invariant pruning (PruA),
// automorphism pruning with weight transfer (PruBW) and trace deviation sets.
// Weights keep leaf sampling from the pruned level distributionally equal to
// sampling the unpruned level.
class BfsEngine {
public:
    enum class Status { advanced, reached_leaves, abandoned };

    BfsEngine(const ColoredGraph& g, const TargetPath& path,
              SchreierStructure* schreier, const SolveOptions& opts);

    const BfsLevel& current() const { return level_; }
    bool at_leaf_level() const { return level_.k == path_.base_length(); }

    // Expands the next level. `abandoned` leaves the current level intact
    // (memory cap breached or weight overflow).
    Status advance(int threads);

    uint64_t nodes_expanded() const { return nodes_expanded_; }
    double last_level_ms() const { return last_level_ms_; }

private:
    struct ParentExpansion {
        bool pruned = false;
        std::vector<BfsNode> children;
        std::vector<DeviationValue> deviations;
        bool saw_bottom = false;
        uint64_t refinements = 0;
        bool overflow = false;
    };

    void expand_parent(const BfsNode& parent, bool is_target_parent,
                       const std::vector<Permutation>& gens,
                       const BfsLevel* check_against, Refiner& refiner,
                       ParentExpansion& out) const;

    const ColoredGraph& g_;
    const TargetPath& path_;
    SchreierStructure* schreier_;
    const SolveOptions& opts_;
    BfsLevel level_;
    uint64_t nodes_expanded_ = 0;
    double last_level_ms_ = 0;
};

} // namespace autgrp
