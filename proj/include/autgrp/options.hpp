#pragma once

#include <cstddef>
#include <cstdint>

#include "autgrp/walk.hpp"

namespace autgrp {

struct SolveOptions {
    double epsilon = 0.01;
    int threads = 1;
    uint64_t seed = 0;
    SelectorPolicy selector = SelectorPolicy::first_largest;

    int deviation_k = 5;           // post-deviation cell events folded into the value
    int extra_target_cap = 8;      // additional stored target leaves in level search
    double bfs_cost_factor = 64.0; // stop BFS when the next level estimate exceeds
                                   // this multiple of the cost so far
    size_t bfs_memory_cap = size_t(2) << 30;
    int hardness_factor = 3;       // base-aligned: cell-size multiple of fruitless
                                   // walks before a base point is deemed hard
    uint64_t base_aligned_budget = 100000;  // walk cap for the whole mode

    bool use_base_aligned = true;
    bool use_deviation_sets = true;
    bool use_prubw = true;

    // point-operation cap for the final Schreier-Sims completion pass
    uint64_t completion_op_budget = uint64_t(8) << 32;

    uint64_t max_walks = UINT64_MAX;  // safety budget (tests only)
};

} // namespace autgrp
