#pragma once

#include <optional>
#include <vector>

#include "autgrp/coloring.hpp"
#include "autgrp/graph.hpp"
#include "autgrp/trace.hpp"

namespace autgrp {

enum class RefineOutcome { completed, early_out };

// Color refinement with per-call scratch space, so one Refiner per thread
// supports any number of concurrent refinements.
//
// Worklist discipline: splitting cells are processed FIFO. Fragments of a
// split cell are ordered by ascending neighbor count; all fragments except
// the largest (first among ties) are enqueued, unless the split cell was
// itself pending, in which case the remaining fragments are enqueued too.
// Every split event appends two tokens to the trace: the start index of the
// split cell and a hash of its fragment (size, count) pairs. A final token
// hashing the cell count closes each call.
class Refiner {
public:
    explicit Refiner(int n);

    // Refines pi in place to the coarsest equitable coloring refining it.
    // With no seed vertex every cell seeds the worklist; with one, pi must
    // have been equitable before `seed_vertex` was individualized and only
    // its singleton seeds the worklist.
    RefineOutcome refine(const ColoredGraph& g, Coloring& pi, Trace& trace,
                         std::optional<int> seed_vertex = std::nullopt);

private:
    int n_;
    std::vector<int> count_;
    std::vector<int> touched_;
    std::vector<char> in_worklist_;
    std::vector<int> worklist_;
    std::vector<int> affected_;
    std::vector<std::pair<int, int>> scratch_members_;  // (count, vertex)
    std::vector<int> frag_vertices_;
    std::vector<int> frag_sizes_;
};

// Convenience wrapper used by tests: refine a copy and return it.
Coloring refined(const ColoredGraph& g, const Coloring& pi, Trace& trace);

} // namespace autgrp
