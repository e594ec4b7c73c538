#pragma once

#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "autgrp/coloring.hpp"
#include "autgrp/graph.hpp"
#include "autgrp/perm.hpp"
#include "autgrp/refinement.hpp"
#include "autgrp/rng.hpp"
#include "autgrp/trace.hpp"

namespace autgrp {

using BigInt = boost::multiprecision::cpp_int;

enum class SelectorPolicy { first_largest, first_smallest, first };

struct CellRef {
    int start;
    int size;
};

// Isomorphism-invariant choice of a non-singleton cell; empty iff discrete.
std::optional<CellRef> select_cell(const Coloring& pi, SelectorPolicy policy);

// A discrete leaf of the search tree.
struct WalkResult {
    Permutation perm;        // the discrete coloring read as a permutation
    std::vector<int> base;   // individualized vertices, root to leaf
};

struct TargetLeaf {
    Permutation perm;
    Permutation perm_inv;
    std::vector<int> base;
};

// Replay data for the target leaf's root-to-leaf path.
struct TargetPath {
    TargetLeaf leaf;
    Trace trace;                             // full token stream, root to leaf
    std::vector<Coloring> prefix_colorings;  // [j] = refined coloring of prefix length j
    std::vector<size_t> prefix_trace_len;    // [j] = trace length after prefix j
    std::vector<int> cell_sizes;             // selected cell size at prefix j
    BigInt cell_product;                     // product of all selected cell sizes

    int base_length() const { return static_cast<int>(leaf.base.size()); }
};

// Uniform random walk continuing from an already refined node (Lemma-6-style
// uniform within leaf equivalence classes). `trace` collects the tokens of
// the refinements performed during the walk (appended to whatever it holds).
WalkResult random_walk_from(const ColoredGraph& g, Refiner& refiner,
                            const Coloring& start, const std::vector<int>& base_prefix,
                            SelectorPolicy policy, Rng& rng, Trace& trace);

// Walk from the root: refines the initial coloring, then walks.
WalkResult random_walk(const ColoredGraph& g, SelectorPolicy policy, Rng& rng);

// Performs the target walk and records the per-prefix replay data.
TargetPath establish_target(const ColoredGraph& g, Refiner& refiner,
                            SelectorPolicy policy, Rng& rng);

// phi = target_perm^-1 . leaf_perm, certified with is_automorphism; nullopt
// if certification fails. No uncertified permutation ever escapes.
std::optional<Permutation> derive_automorphism(const ColoredGraph& g,
                                               const TargetLeaf& target,
                                               const WalkResult& leaf);

} // namespace autgrp
