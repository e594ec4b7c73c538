#pragma once

// Shared corpus builders and helpers for the test suites.

#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "autgrp/graph.hpp"
#include "autgrp/oracle.hpp"
#include "autgrp/rng.hpp"
#include "autgrp/solver.hpp"

namespace corpus {

using autgrp::ColoredGraph;

inline ColoredGraph complete(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return ColoredGraph(n, edges);
}

inline ColoredGraph cycle(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return ColoredGraph(n, edges);
}

inline ColoredGraph path(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return ColoredGraph(n, edges);
}

inline ColoredGraph star(int n) {  // center is vertex 0
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
    return ColoredGraph(n, edges);
}

inline ColoredGraph grid(int rows, int cols) {
    std::vector<std::pair<int, int>> edges;
    auto id = [cols](int r, int c) { return r * cols + c; };
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) edges.emplace_back(id(r, c), id(r, c + 1));
            if (r + 1 < rows) edges.emplace_back(id(r, c), id(r + 1, c));
        }
    return ColoredGraph(rows * cols, edges);
}

inline ColoredGraph hypercube(int d) {
    int n = 1 << d;
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v)
        for (int b = 0; b < d; ++b)
            if (v < (v ^ (1 << b))) edges.emplace_back(v, v ^ (1 << b));
    return ColoredGraph(n, edges);
}

inline ColoredGraph petersen() {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < 5; ++v) {
        edges.emplace_back(v, (v + 1) % 5);          // outer cycle
        edges.emplace_back(5 + v, 5 + (v + 2) % 5);  // inner pentagram
        edges.emplace_back(v, 5 + v);                // spokes
    }
    return ColoredGraph(10, edges);
}

// The smallest asymmetric graphs have 6 vertices; this is one of them
// (checked against the brute-force oracle in the test suite).
inline ColoredGraph rigid6() {
    return ColoredGraph(6, {{0, 2}, {0, 3}, {0, 5}, {1, 2}, {1, 4}, {2, 3}});
}

// Smallest cubic graph with a trivial automorphism group. Regular, so color
// refinement cannot split the unit coloring: the IR tree is non-trivial even
// though the group is.
inline ColoredGraph frucht() {
    static const int lcf[12] = {-5, -2, -4, 2, 5, -2, 2, 5, -2, -5, 4, 2};
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < 12; ++v) {
        edges.emplace_back(v, (v + 1) % 12);
        edges.emplace_back(v, ((v + lcf[v]) % 12 + 12) % 12);
    }
    return ColoredGraph(12, edges);
}

inline ColoredGraph random_gnp(int n, double p, uint64_t seed) {
    autgrp::Rng rng(seed, 0xc0ffee);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.uniform01() < p) edges.emplace_back(u, v);
    return ColoredGraph(n, edges);
}

// Random d-regular graph via the pairing model with rejection.
inline ColoredGraph random_regular(int n, int d, uint64_t seed) {
    autgrp::Rng rng(seed, 0xbeef);
    for (int attempt = 0;; ++attempt) {
        std::vector<int> stubs(static_cast<size_t>(n) * d);
        for (size_t i = 0; i < stubs.size(); ++i) stubs[i] = static_cast<int>(i / d);
        for (size_t i = stubs.size(); i > 1; --i)
            std::swap(stubs[i - 1], stubs[rng.below(i)]);
        std::vector<std::pair<int, int>> edges;
        bool ok = true;
        std::map<std::pair<int, int>, bool> seen;
        for (size_t i = 0; i + 1 < stubs.size(); i += 2) {
            int u = stubs[i], v = stubs[i + 1];
            if (u == v) { ok = false; break; }
            auto key = std::minmax(u, v);
            if (seen.count({key.first, key.second})) { ok = false; break; }
            seen[{key.first, key.second}] = true;
            edges.emplace_back(u, v);
        }
        if (ok) return ColoredGraph(n, edges);
        if (attempt > 500) throw std::runtime_error("pairing model failed");
    }
}

// Cai-Furer-Immerman-style gadget expansion of a connected base graph. Each
// base edge becomes a pair of "wire" vertices; each base vertex becomes the
// even-subset gadget over its incident edges. Base vertices and edges get
// distinct colors, so Aut of the result is generated by wire swaps along
// cycles of the base: |Aut| = 2^(m - n + 1) for a connected rigid base. Color
// refinement cannot split the pairs, which makes these deep, wide instances.
inline ColoredGraph cfi(const ColoredGraph& base) {
    int bn = base.n();
    std::vector<std::pair<int, int>> base_edges;
    for (int u = 0; u < bn; ++u)
        for (int v : base.neighbors(u))
            if (u < v) base_edges.emplace_back(u, v);
    int bm = static_cast<int>(base_edges.size());

    // wire vertices: 2 per base edge, (e,0) and (e,1)
    auto wire = [](int e, int side) { return 2 * e + side; };
    int next_id = 2 * bm;
    std::vector<int> colors(2 * bm);
    for (int e = 0; e < bm; ++e) colors[wire(e, 0)] = colors[wire(e, 1)] = bn + e;

    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < bn; ++v) {
        std::vector<int> inc;
        for (int e = 0; e < bm; ++e)
            if (base_edges[e].first == v || base_edges[e].second == v)
                inc.push_back(e);
        int deg = static_cast<int>(inc.size());
        for (int mask = 0; mask < (1 << deg); ++mask) {
            if (__builtin_popcount(static_cast<unsigned>(mask)) % 2 != 0) continue;
            int mid = next_id++;
            colors.push_back(v);
            for (int i = 0; i < deg; ++i)
                edges.emplace_back(mid, wire(inc[i], (mask >> i) & 1));
        }
    }
    return ColoredGraph(next_id, edges, colors);
}

// Rook's graph of the n x n grid: vertices are cells, adjacent iff same row
// or same column (the Latin-square-style association graph used for wide
// search trees at small n).
inline ColoredGraph rook(int n) {
    std::vector<std::pair<int, int>> edges;
    auto id = [n](int r, int c) { return r * n + c; };
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            for (int c2 = c + 1; c2 < n; ++c2) edges.emplace_back(id(r, c), id(r, c2));
            for (int r2 = r + 1; r2 < n; ++r2) edges.emplace_back(id(r, c), id(r2, c));
        }
    return ColoredGraph(n * n, edges);
}

inline ColoredGraph disjoint_union(const std::vector<ColoredGraph>& parts) {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    for (const auto& g : parts) {
        for (int u = 0; u < g.n(); ++u)
            for (int v : g.neighbors(u))
                if (u < v) edges.emplace_back(n + u, n + v);
        n += g.n();
    }
    return ColoredGraph(n, edges);
}

struct NamedGraph {
    std::string name;
    ColoredGraph graph;
};

// Graphs small enough for the brute-force oracle (n <= 10).
inline std::vector<NamedGraph> small_corpus() {
    std::vector<NamedGraph> out;
    for (int n = 2; n <= 7; ++n) out.push_back({"K" + std::to_string(n), complete(n)});
    for (int n = 3; n <= 8; ++n) out.push_back({"C" + std::to_string(n), cycle(n)});
    for (int n = 2; n <= 7; ++n) out.push_back({"P" + std::to_string(n), path(n)});
    out.push_back({"star7", star(7)});
    out.push_back({"grid2x3", grid(2, 3)});
    out.push_back({"grid3x3", grid(3, 3)});
    out.push_back({"Q3", hypercube(3)});
    out.push_back({"petersen", petersen()});
    out.push_back({"rigid6", rigid6()});
    out.push_back({"gnp8a", random_gnp(8, 0.4, 11)});
    out.push_back({"gnp8b", random_gnp(8, 0.6, 12)});
    out.push_back({"gnp9", random_gnp(9, 0.5, 13)});
    out.push_back({"gnp10", random_gnp(10, 0.5, 14)});
    return out;
}

// Broad corpus for the soundness sweep: structured + random, n up to ~2000.
inline std::vector<NamedGraph> full_corpus() {
    std::vector<NamedGraph> out = small_corpus();
    out.push_back({"K12", complete(12)});
    out.push_back({"K30", complete(30)});
    out.push_back({"C50", cycle(50)});
    out.push_back({"C200", cycle(200)});
    out.push_back({"C1024", cycle(1024)});
    out.push_back({"P100", path(100)});
    out.push_back({"P2000", path(2000)});
    out.push_back({"star100", star(100)});
    out.push_back({"star150", star(150)});
    out.push_back({"C2000", cycle(2000)});
    out.push_back({"grid4x4", grid(4, 4)});
    out.push_back({"grid5x8", grid(5, 8)});
    out.push_back({"grid10x10", grid(10, 10)});
    out.push_back({"grid20x20", grid(20, 20)});
    out.push_back({"Q4", hypercube(4)});
    out.push_back({"Q5", hypercube(5)});
    out.push_back({"Q6", hypercube(6)});
    out.push_back({"Q8", hypercube(8)});
    out.push_back({"rook4", rook(4)});
    out.push_back({"rook5", rook(5)});
    out.push_back({"rook6", rook(6)});
    out.push_back({"2xPetersen", disjoint_union({petersen(), petersen()})});
    out.push_back({"3xK4", disjoint_union({complete(4), complete(4), complete(4)})});
    out.push_back({"cfi_C6", cfi(cycle(6))});
    out.push_back({"cfi_grid3x3", cfi(grid(3, 3))});
    out.push_back({"cfi_rigid6", cfi(rigid6())});
    out.push_back({"gnp20", random_gnp(20, 0.3, 21)});
    out.push_back({"gnp50", random_gnp(50, 0.2, 22)});
    out.push_back({"gnp100", random_gnp(100, 0.1, 23)});
    out.push_back({"gnp500", random_gnp(500, 0.02, 24)});
    out.push_back({"reg3_60", random_regular(60, 3, 31)});
    out.push_back({"reg3_200", random_regular(200, 3, 32)});
    out.push_back({"reg4_100", random_regular(100, 4, 33)});
    return out;
}

// A uniformly random permutation of {0..n-1}.
inline autgrp::Permutation random_perm(int n, autgrp::Rng& rng) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    for (int i = n - 1; i > 0; --i)
        std::swap(img[i], img[rng.below(static_cast<uint64_t>(i) + 1)]);
    return autgrp::Permutation(img);
}

} // namespace corpus
