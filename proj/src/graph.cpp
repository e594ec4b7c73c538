#include "autgrp/graph.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace autgrp {

ColoredGraph::ColoredGraph(int n, const std::vector<std::pair<int, int>>& edges,
                           std::vector<int> colors)
    : n_(n) {
    std::vector<std::pair<int, int>> dir;
    dir.reserve(edges.size() * 2);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::out_of_range("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loops are not supported");
        dir.emplace_back(u, v);
        dir.emplace_back(v, u);
    }
    std::sort(dir.begin(), dir.end());
    dir.erase(std::unique(dir.begin(), dir.end()), dir.end());

    offsets_.assign(n + 1, 0);
    for (auto& [u, v] : dir) ++offsets_[u + 1];
    for (int v = 0; v < n; ++v) offsets_[v + 1] += offsets_[v];
    neighbors_.reserve(dir.size());
    for (auto& [u, v] : dir) neighbors_.push_back(v);

    if (colors.empty()) {
        colors_.assign(n, 0);
    } else {
        if (static_cast<int>(colors.size()) != n)
            throw std::invalid_argument("colors size must equal n");
        std::map<int, int> compact;
        for (int c : colors) compact.emplace(c, 0);
        int next = 0;
        for (auto& [c, id] : compact) id = next++;
        colors_.resize(n);
        for (int v = 0; v < n; ++v) colors_[v] = compact[colors[v]];
    }
}

bool ColoredGraph::has_edge(int u, int v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

bool is_automorphism(const ColoredGraph& g, const Permutation& phi) {
    if (phi.degree() != g.n() || !phi.is_valid()) return false;
    for (int v = 0; v < g.n(); ++v) {
        if (g.colors()[phi(v)] != g.colors()[v]) return false;
        if (g.degree(phi(v)) != g.degree(v)) return false;
        for (int u : g.neighbors(v))
            if (!g.has_edge(phi(v), phi(u))) return false;
    }
    return true;
}

ColoredGraph permute_graph(const ColoredGraph& g, const Permutation& phi) {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(g.m());
    for (int v = 0; v < g.n(); ++v)
        for (int u : g.neighbors(v))
            if (v < u) edges.emplace_back(phi(v), phi(u));
    std::vector<int> colors(g.n());
    for (int v = 0; v < g.n(); ++v) colors[phi(v)] = g.colors()[v];
    return ColoredGraph(g.n(), edges, std::move(colors));
}

} // namespace autgrp
