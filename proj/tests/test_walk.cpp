#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>

#include "autgrp/refinement.hpp"
#include "autgrp/walk.hpp"
#include "support.hpp"

using namespace autgrp;

namespace {

Coloring refined_unit(const ColoredGraph& g) {
    Coloring pi = Coloring::unit(g.n());
    Trace trace;
    Refiner r(g.n());
    r.refine(g, pi, trace);
    return pi;
}

} // namespace

TEST_CASE("select_cell on a discrete coloring is empty") {
    Coloring pi = Coloring::from_colors({3, 1, 2, 0});
    CHECK(select_cell(pi, SelectorPolicy::first_largest) == std::nullopt);
}

TEST_CASE("select_cell on K3's single cell returns it") {
    Coloring pi = Coloring::unit(3);
    auto cell = select_cell(pi, SelectorPolicy::first_largest);
    REQUIRE(cell.has_value());
    CHECK(cell->start == 0);
    CHECK(cell->size == 3);
}

TEST_CASE("first-largest picks the size-4 cell among (1, 4, 2)") {
    Coloring pi = Coloring::from_colors({0, 1, 1, 1, 1, 2, 2});
    auto cell = select_cell(pi, SelectorPolicy::first_largest);
    REQUIRE(cell.has_value());
    CHECK(cell->start == 1);
    CHECK(cell->size == 4);
    auto small = select_cell(pi, SelectorPolicy::first_smallest);
    REQUIRE(small.has_value());
    CHECK(small->size == 2);
    auto first = select_cell(pi, SelectorPolicy::first);
    REQUIRE(first.has_value());
    CHECK(first->start == 1);  // cell {0} is singleton, skipped
}

TEST_CASE("selector is isomorphism invariant") {
    Rng rng(23);
    for (uint64_t seed = 0; seed < 15; ++seed) {
        ColoredGraph g = corpus::random_gnp(8, 0.4, 300 + seed);
        Permutation phi = corpus::random_perm(8, rng);
        ColoredGraph h = permute_graph(g, phi);
        Coloring pg = refined_unit(g), ph = refined_unit(h);
        auto cg = select_cell(pg, SelectorPolicy::first_largest);
        auto ch = select_cell(ph, SelectorPolicy::first_largest);
        REQUIRE(cg.has_value() == ch.has_value());
        if (!cg) continue;
        std::set<int> mapped, actual;
        for (int q = 0; q < cg->size; ++q) mapped.insert(phi(pg.vertex_at(cg->start + q)));
        for (int q = 0; q < ch->size; ++q) actual.insert(ph.vertex_at(ch->start + q));
        CHECK(mapped == actual);
    }
}

TEST_CASE("random_walk on K3: base length 2, all 6 leaves roughly uniform") {
    ColoredGraph k3 = corpus::complete(3);
    Rng rng(99);
    std::map<std::vector<int>, int> counts;
    const int N = 6000;
    for (int i = 0; i < N; ++i) {
        WalkResult w = random_walk(k3, SelectorPolicy::first_largest, rng);
        CHECK(w.base.size() == 2);
        counts[w.perm.image()]++;
    }
    REQUIRE(counts.size() == 6);
    for (const auto& [img, c] : counts) {
        CHECK(c > N / 6 - 250);  // ~5 sigma around N/6 = 1000
        CHECK(c < N / 6 + 250);
    }
}

TEST_CASE("random_walk on path 0-1-2: one base vertex, each endpoint half the time") {
    ColoredGraph p3 = corpus::path(3);
    Rng rng(7);
    int end0 = 0, end2 = 0;
    for (int i = 0; i < 4000; ++i) {
        WalkResult w = random_walk(p3, SelectorPolicy::first_largest, rng);
        REQUIRE(w.base.size() == 1);
        (w.base[0] == 0 ? end0 : end2)++;
    }
    CHECK(end0 + end2 == 4000);
    CHECK(end0 > 1800);
    CHECK(end2 > 1800);
}

TEST_CASE("refinement-solved graph walks with an empty base") {
    ColoredGraph g = corpus::rigid6();
    REQUIRE(refined_unit(g).is_discrete());
    Rng rng(1);
    WalkResult w = random_walk(g, SelectorPolicy::first_largest, rng);
    CHECK(w.base.empty());
}

TEST_CASE("derive_automorphism: leaf equal to target gives the identity") {
    ColoredGraph k3 = corpus::complete(3);
    Rng rng(5);
    Refiner refiner(3);
    TargetPath path = establish_target(k3, refiner, SelectorPolicy::first_largest, rng);
    WalkResult same{path.leaf.perm, path.leaf.base};
    auto phi = derive_automorphism(k3, path.leaf, same);
    REQUIRE(phi.has_value());
    CHECK(phi->is_identity());
}

TEST_CASE("derive_automorphism on K3 leaves is always certified") {
    ColoredGraph k3 = corpus::complete(3);
    Rng rng(5);
    Refiner refiner(3);
    TargetPath path = establish_target(k3, refiner, SelectorPolicy::first_largest, rng);
    for (int i = 0; i < 200; ++i) {
        WalkResult w = random_walk(k3, SelectorPolicy::first_largest, rng);
        auto phi = derive_automorphism(k3, path.leaf, w);
        REQUIRE(phi.has_value());  // K3: every leaf is an occurrence
        CHECK(is_automorphism(k3, *phi));
    }
}

TEST_CASE("derive_automorphism on a rigid graph's distinct leaves is none") {
    ColoredGraph g = corpus::frucht();
    Rng rng(13);
    Refiner refiner(g.n());
    TargetPath path = establish_target(g, refiner, SelectorPolicy::first_largest, rng);
    int distinct = 0;
    for (int i = 0; i < 60 && distinct < 20; ++i) {
        WalkResult w = random_walk(g, SelectorPolicy::first_largest, rng);
        if (w.perm == path.leaf.perm) continue;
        ++distinct;
        CHECK(derive_automorphism(g, path.leaf, w) == std::nullopt);
    }
    CHECK(distinct >= 20);
}

TEST_CASE("establish_target records consistent replay data") {
    for (const auto& [name, g] : corpus::small_corpus()) {
        CAPTURE(name);
        Rng rng(42);
        Refiner refiner(g.n());
        TargetPath path =
            establish_target(g, refiner, SelectorPolicy::first_largest, rng);
        int len = path.base_length();
        REQUIRE(static_cast<int>(path.prefix_colorings.size()) == len + 1);
        REQUIRE(static_cast<int>(path.prefix_trace_len.size()) == len + 1);
        REQUIRE(static_cast<int>(path.cell_sizes.size()) == len);
        CHECK(path.prefix_trace_len[len] == path.trace.size());
        BigInt prod = 1;
        for (int j = 0; j < len; ++j) {
            CHECK(path.cell_sizes[j] >= 2);
            prod *= path.cell_sizes[j];
            // the recorded coloring really contains the next base vertex in a
            // cell of the recorded size
            auto cell = select_cell(path.prefix_colorings[j],
                                    SelectorPolicy::first_largest);
            REQUIRE(cell.has_value());
            CHECK(cell->size == path.cell_sizes[j]);
        }
        CHECK(prod == path.cell_product);
        CHECK(path.prefix_colorings[len].is_discrete());
        CHECK(path.leaf.perm.compose(path.leaf.perm_inv).is_identity());
    }
}

TEST_CASE("random_walk_from the root coincides with random_walk distributionally") {
    ColoredGraph k3 = corpus::complete(3);
    Coloring root = refined_unit(k3);
    Refiner refiner(3);
    Rng rng(77);
    std::map<std::vector<int>, int> counts;
    for (int i = 0; i < 3000; ++i) {
        Trace trace;
        WalkResult w = random_walk_from(k3, refiner, root, {},
                                        SelectorPolicy::first_largest, rng, trace);
        CHECK(w.base.size() == 2);
        counts[w.perm.image()]++;
    }
    REQUIRE(counts.size() == 6);
    for (const auto& [img, c] : counts) CHECK(c > 300);
}
