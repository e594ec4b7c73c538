#pragma once

#include <vector>

#include "autgrp/bfs.hpp"
#include "autgrp/graph.hpp"
#include "autgrp/options.hpp"
#include "autgrp/schreier.hpp"
#include "autgrp/walk.hpp"

namespace autgrp {

enum class Termination { deterministic, probabilistic };

// State of the probabilistic abort criterion: terminate once d consecutive
// uniformly sampled automorphisms sift successfully; every unsuccessful sift
// after partial progress raises the threshold.
struct AbortState {
    int c = 0;
    int d = 0;
    double epsilon = 0.01;
    uint64_t tests_completed = 0;  // tests that ended unsuccessfully
    bool sealed = false;

    static int initial_d(double epsilon);
    explicit AbortState(double eps) : d(initial_d(eps)), epsilon(eps) {}

    // Non-uniform samples never touch c/d. Returns true when c > d.
    bool record(bool sift_ok, bool uniform) {
        if (uniform) {
            if (sift_ok) {
                ++c;
            } else {
                if (c > 0) {
                    ++d;
                    ++tests_completed;
                }
                c = 0;
            }
        }
        return c > d;
    }
};

struct SolveStats {
    uint64_t walks = 0;
    uint64_t nodes_expanded = 0;
    uint64_t uniform_samples = 0;
    int bfs_levels = 0;
    double base_aligned_ms = 0;
    double bfs_ms = 0;
    double level_search_ms = 0;
};

struct SolverResult {
    std::vector<Permutation> generators;
    BigInt group_order = 1;
    std::vector<int> base;
    Termination termination = Termination::probabilistic;
    double epsilon = 0.01;
    SolveStats stats;
};

SolverResult solve(const ColoredGraph& g, const SolveOptions& opts = {});

} // namespace autgrp
