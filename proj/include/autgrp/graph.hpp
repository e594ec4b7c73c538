#pragma once

#include <span>
#include <string>
#include <vector>

#include "autgrp/coloring.hpp"
#include "autgrp/perm.hpp"

namespace autgrp {

// Undirected graph with an initial vertex coloring. Immutable after
// construction and safe to share across threads.
class ColoredGraph {
public:
    ColoredGraph() = default;
    // Edges as 0-based pairs; duplicates and both orientations are
    // deduplicated, self-loops are rejected. `colors` may be empty (all
    // vertices get color 0); otherwise it is compacted to 0..k-1 preserving
    // ascending color order.
    ColoredGraph(int n, const std::vector<std::pair<int, int>>& edges,
                 std::vector<int> colors = {});

    int n() const { return n_; }
    long long m() const { return static_cast<long long>(neighbors_.size()) / 2; }

    std::span<const int> neighbors(int v) const {
        return {neighbors_.data() + offsets_[v], static_cast<size_t>(degree(v))};
    }
    int degree(int v) const { return offsets_[v + 1] - offsets_[v]; }
    bool has_edge(int u, int v) const;

    const std::vector<int>& colors() const { return colors_; }
    Coloring initial_coloring() const { return Coloring::from_colors(colors_); }

    bool operator==(const ColoredGraph& o) const {
        return n_ == o.n_ && offsets_ == o.offsets_ && neighbors_ == o.neighbors_ &&
               colors_ == o.colors_;
    }

private:
    int n_ = 0;
    std::vector<int> offsets_;    // n+1 entries
    std::vector<int> neighbors_;  // sorted per vertex
    std::vector<int> colors_;     // compacted, 0-based
};

// True iff phi maps edges to edges and preserves initial colors.
bool is_automorphism(const ColoredGraph& g, const Permutation& phi);

// The relabeled graph G^phi.
ColoredGraph permute_graph(const ColoredGraph& g, const Permutation& phi);

} // namespace autgrp
