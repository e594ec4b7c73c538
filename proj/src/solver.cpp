#include "autgrp/solver.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <mutex>
#include <thread>

namespace autgrp {

int AbortState::initial_d(double epsilon) {
    return static_cast<int>(std::ceil(-std::log2(epsilon / 2.0)));
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

enum class LsOutcome { terminated, back_to_bfs };

class Solver {
public:
    Solver(const ColoredGraph& g, const SolveOptions& opts)
        : g_(g), opts_(opts), state_(opts.epsilon) {
        if (opts_.threads < 1) opts_.threads = 1;
    }

    SolverResult run() {
        SolverResult res;
        res.epsilon = opts_.epsilon;

        Refiner refiner(g_.n());
        Rng rng(opts_.seed, 0);
        path_ = establish_target(g_, refiner, opts_.selector, rng);
        ++stats_.walks;
        res.base = path_.leaf.base;

        if (path_.base_length() == 0) {
            // Refinement-solved: the root coloring is discrete, Aut is trivial.
            res.group_order = 1;
            res.termination = Termination::deterministic;
            res.stats = stats_;
            return res;
        }

        schreier_.emplace(g_.n(), path_.leaf.base);
        extra_targets_.reserve(opts_.extra_target_cap);

        if (opts_.use_base_aligned && !deterministic_) run_base_aligned();
        // The c/d criterion certifies <S> = Aut(G) (up to epsilon), but the
        // reported order is the transversal product, which lags behind |<S>|
        // while S is not yet strong. Completing the structure closes that gap
        // and often upgrades termination to deterministic before any BFS.
        if (!deterministic_) complete_transversals();
        if (!deterministic_) run_probabilistic();
        if (!deterministic_) complete_transversals();

        res.generators = schreier_->generators();
        res.group_order = schreier_->group_order();
        res.termination =
            deterministic_ ? Termination::deterministic : Termination::probabilistic;
        res.stats = stats_;
        return res;
    }

private:
    bool deterministic_reached() const {
        return schreier_->group_order() == path_.cell_product;
    }

    // ---- base-aligned search (non-uniform, never touches c/d) ----
    void run_base_aligned() {
        auto t0 = Clock::now();
        std::atomic<uint64_t> walks_used{0};
        for (int j = path_.base_length() - 1; j >= 0 && !deterministic_; --j) {
            int cell_size = path_.cell_sizes[j];
            int hardness_limit = opts_.hardness_factor * cell_size;
            std::atomic<int> no_growth{0};
            std::atomic<bool> stop{false};
            std::vector<int> prefix(path_.leaf.base.begin(),
                                    path_.leaf.base.begin() + j);
            // generators found at deeper levels may already close this orbit
            schreier_->close_level(j);
            if (deterministic_reached()) {
                deterministic_ = true;
                break;
            }

            auto worker = [&](int tid) {
                Rng wrng(opts_.seed,
                         0x10000ull + static_cast<uint64_t>(j) * 1024 + tid);
                Refiner wref(g_.n());
                while (!stop.load(std::memory_order_relaxed)) {
                    if (walks_used.fetch_add(1) >= opts_.base_aligned_budget) {
                        stop.store(true);
                        break;
                    }
                    Trace trace;
                    WalkResult walk =
                        random_walk_from(g_, wref, path_.prefix_colorings[j], prefix,
                                         opts_.selector, wrng, trace);
                    auto phi = derive_automorphism(g_, path_.leaf, walk);
                    bool grew = false;
                    if (phi) {
                        grew = !schreier_->sift(std::move(*phi));
                        if (grew) {
                            // a new generator can complete this level's orbit
                            schreier_->close_level(j);
                            if (deterministic_reached()) {
                                deterministic_ = true;
                                stop.store(true);
                                break;
                            }
                        }
                    }
                    if (grew) {
                        no_growth.store(0, std::memory_order_relaxed);
                    } else if (no_growth.fetch_add(1) + 1 >= hardness_limit) {
                        stop.store(true);  // base point is hard, advance past it
                        break;
                    }
                }
            };
            run_on_pool(worker);
        }
        stats_.walks += walks_used.load();
        stats_.base_aligned_ms += ms_since(t0);
    }

    // ---- breadth-first traversal + level search ----
    void run_probabilistic() {
        BfsEngine bfs(g_, path_, &*schreier_, opts_);
        bool bfs_exhausted = false;
        double bfs_cost_ms = 0.1;
        double per_refine_ms = 0.01;
        bool force_advance = false;

        while (true) {
            auto bfs_t0 = Clock::now();
            while (!bfs_exhausted && !deterministic_) {
                if (bfs.at_leaf_level()) {
                    bfs_exhausted = true;
                    break;
                }
                int k = bfs.current().k;
                double estimate = static_cast<double>(bfs.current().nodes.size()) *
                                  path_.cell_sizes[k] * per_refine_ms;
                if (!force_advance && estimate > opts_.bfs_cost_factor * bfs_cost_ms)
                    break;
                force_advance = false;
                uint64_t before = bfs.nodes_expanded();
                BfsEngine::Status status = bfs.advance(opts_.threads);
                if (status == BfsEngine::Status::abandoned) {
                    bfs_exhausted = true;  // fall back to the completed level
                    break;
                }
                ++stats_.bfs_levels;
                bfs_cost_ms += bfs.last_level_ms();
                uint64_t refs = bfs.nodes_expanded() - before;
                if (refs > 0 && bfs.last_level_ms() > 0)
                    per_refine_ms = bfs.last_level_ms() / static_cast<double>(refs);
                if (status == BfsEngine::Status::reached_leaves) {
                    bfs_exhausted = true;
                    sift_all_leaves(bfs.current());
                    break;
                }
            }
            stats_.nodes_expanded = bfs.nodes_expanded();
            stats_.bfs_ms += ms_since(bfs_t0);
            if (deterministic_) return;

            LsOutcome outcome = run_level_search(bfs.current(), !bfs_exhausted);
            if (outcome == LsOutcome::terminated) return;
            force_advance = true;  // walks are failing, push BFS one level
        }
    }

    // Exhaustive (not sampled) automorphisms from a fully traversed leaf level.
    void sift_all_leaves(const BfsLevel& level) {
        for (const BfsNode& node : level.nodes) {
            if (deterministic_) return;
            WalkResult leaf{Permutation(node.coloring.as_permutation_image()),
                            node.base};
            auto phi = derive_automorphism(g_, path_.leaf, leaf);
            if (phi && !schreier_->sift(std::move(*phi)) && deterministic_reached())
                deterministic_ = true;
        }
    }

    LsOutcome run_level_search(const BfsLevel& level, bool allow_back) {
        auto t0 = Clock::now();
        size_t width = std::max<size_t>(1, level.nodes.size());

        // weight-proportional start-node sampling
        std::vector<uint64_t> cumulative(level.nodes.size());
        uint64_t acc = 0;
        for (size_t i = 0; i < level.nodes.size(); ++i) {
            acc += level.nodes[i].weight;
            cumulative[i] = acc;
        }

        std::atomic<bool> stop{false};
        std::atomic<uint64_t> attempts{0};
        std::atomic<uint64_t> successes{0};
        LsOutcome outcome = LsOutcome::terminated;
        std::mutex decision_mu;

        auto worker = [&](int tid) {
            Rng wrng(opts_.seed, 0x20000ull + ls_round_ * 4096 + tid);
            Refiner wref(g_.n());
            while (!stop.load(std::memory_order_relaxed)) {
                uint64_t ticket = wrng.below(acc);
                size_t idx = std::lower_bound(cumulative.begin(), cumulative.end(),
                                              ticket + 1) -
                             cumulative.begin();
                const BfsNode& node = level.nodes[idx];
                Trace trace;
                WalkResult walk =
                    random_walk_from(g_, wref, node.coloring, node.base,
                                     opts_.selector, wrng, trace);
                uint64_t att = attempts.fetch_add(1) + 1;

                auto phi = derive_automorphism(g_, path_.leaf, walk);
                if (!phi) phi = try_extra_targets(walk);

                if (phi) {
                    successes.fetch_add(1);
                    bool sift_ok = schreier_->sift(std::move(*phi));
                    if (!sift_ok && deterministic_reached()) {
                        std::lock_guard<std::mutex> g(decision_mu);
                        deterministic_ = true;
                        state_.sealed = true;
                        stop.store(true);
                        break;
                    }
                    std::lock_guard<std::mutex> g(decision_mu);
                    if (state_.sealed) break;  // completed after the seal: discard
                    ++stats_.uniform_samples;
                    if (state_.record(sift_ok, true)) {
                        state_.sealed = true;
                        stop.store(true);
                        break;
                    }
                } else {
                    maybe_store_extra_target(walk);
                }

                if (allow_back && att >= std::max<uint64_t>(64, 4 * width) &&
                    successes.load() * 2 * width < att) {
                    std::lock_guard<std::mutex> g(decision_mu);
                    if (!state_.sealed && !stop.load()) {
                        outcome = LsOutcome::back_to_bfs;
                        stop.store(true);
                    }
                    break;
                }
                if (att >= opts_.max_walks) {
                    stop.store(true);
                    break;
                }
            }
        };
        ++ls_round_;
        run_on_pool(worker);
        stats_.walks += attempts.load();
        stats_.level_search_ms += ms_since(t0);
        return outcome;
    }

    // Deterministic Schreier-Sims completion over the fixed base, bounded by
    // the selected cell sizes. Never touches c/d.
    void complete_transversals() {
        if (schreier_->generator_count() == 0) return;
        schreier_->complete(path_.cell_sizes, opts_.completion_op_budget);
        if (deterministic_reached()) deterministic_ = true;
    }

    std::optional<Permutation> try_extra_targets(const WalkResult& walk) {
        std::vector<TargetLeaf> snapshot;
        {
            std::lock_guard<std::mutex> g(extra_mu_);
            snapshot = extra_targets_;
        }
        for (const TargetLeaf& t : snapshot)
            if (auto phi = derive_automorphism(g_, t, walk)) return phi;
        return std::nullopt;
    }

    void maybe_store_extra_target(const WalkResult& walk) {
        std::lock_guard<std::mutex> g(extra_mu_);
        if (static_cast<int>(extra_targets_.size()) >= opts_.extra_target_cap) return;
        for (const TargetLeaf& t : extra_targets_)
            if (t.perm == walk.perm) return;
        extra_targets_.push_back(
            TargetLeaf{walk.perm, walk.perm.inverse(), walk.base});
    }

    template <typename Fn>
    void run_on_pool(Fn&& worker) {
        if (opts_.threads <= 1) {
            worker(0);
            return;
        }
        std::vector<std::thread> pool;
        for (int t = 0; t < opts_.threads; ++t) pool.emplace_back(worker, t);
        for (auto& t : pool) t.join();
    }

    const ColoredGraph& g_;
    SolveOptions opts_;
    TargetPath path_;
    std::optional<SchreierStructure> schreier_;
    AbortState state_;
    std::vector<TargetLeaf> extra_targets_;
    std::mutex extra_mu_;
    SolveStats stats_;
    std::atomic<bool> deterministic_{false};
    uint64_t ls_round_ = 0;
};

} // namespace

SolverResult solve(const ColoredGraph& g, const SolveOptions& opts) {
    return Solver(g, opts).run();
}

} // namespace autgrp
