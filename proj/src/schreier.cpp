#include "autgrp/schreier.hpp"

#include <stdexcept>
#include <unordered_set>

namespace autgrp {

SchreierStructure::SchreierStructure(int n, std::vector<int> base)
    : n_(n), base_(std::move(base)), identity_(n), level_locks_(base_.size()) {
    if (base_.empty()) throw std::invalid_argument("base must be non-empty");
    std::unordered_set<int> seen;
    for (int b : base_) {
        if (b < 0 || b >= n_ || !seen.insert(b).second)
            throw std::invalid_argument("base points must be distinct and in range");
    }
    trans_.resize(base_.size());
    trans_count_storage_ = std::make_unique<std::atomic<int>[]>(base_.size());
    trans_count_ = trans_count_storage_.get();
    for (size_t i = 0; i < base_.size(); ++i) {
        trans_[i] = std::vector<std::atomic<const Permutation*>>(n_);
        for (auto& slot : trans_[i]) slot.store(nullptr, std::memory_order_relaxed);
        trans_[i][base_[i]].store(&identity_, std::memory_order_relaxed);
        trans_count_[i].store(1, std::memory_order_relaxed);
    }
}

bool SchreierStructure::sift(Permutation phi) {
    int i = 0;
    while (i < levels()) {
        int b = phi(base_[i]);
        const Permutation* t = lookup(i, b);
        if (t != nullptr) {
            if (t != &identity_) phi = t->inverse().compose(phi);
            ++i;
            continue;
        }
        // Empty slot: try to install the residual at this level.
        std::unique_lock<std::mutex> level_guard(level_locks_[i]);
        if (lookup(i, b) != nullptr) {
            // Lost the race: another thread filled the slot. Re-sift from
            // this level instead of overwriting.
            continue;
        }
        const Permutation* installed = nullptr;
        {
            std::lock_guard<std::mutex> gen_guard(gen_lock_);
            owned_.push_back(std::move(phi));
            installed = &owned_.back();
            gens_.push_back(installed);
        }
        trans_[i][b].store(installed, std::memory_order_release);
        trans_count_[i].fetch_add(1, std::memory_order_acq_rel);
        return false;
    }
    if (!phi.is_identity())
        throw std::logic_error("sift: non-identity residual after the full base");
    return true;
}

boost::multiprecision::cpp_int SchreierStructure::group_order() const {
    std::lock_guard<std::mutex> guard(gen_lock_);
    boost::multiprecision::cpp_int order = 1;
    for (int i = 0; i < levels(); ++i)
        order *= trans_count_[i].load(std::memory_order_acquire);
    return order;
}

std::vector<Permutation> SchreierStructure::generators() const {
    std::lock_guard<std::mutex> guard(gen_lock_);
    std::vector<Permutation> out;
    out.reserve(gens_.size());
    for (const Permutation* p : gens_) out.push_back(*p);
    return out;
}

size_t SchreierStructure::generator_count() const {
    std::lock_guard<std::mutex> guard(gen_lock_);
    return gens_.size();
}

bool SchreierStructure::install_transversal(int level, Permutation t) {
    int b = t(base_[level]);
    std::unique_lock<std::mutex> level_guard(level_locks_[level]);
    if (lookup(level, b) != nullptr) return false;
    const Permutation* installed = nullptr;
    {
        std::lock_guard<std::mutex> gen_guard(gen_lock_);
        owned_.push_back(std::move(t));
        installed = &owned_.back();
    }
    trans_[level][b].store(installed, std::memory_order_release);
    trans_count_[level].fetch_add(1, std::memory_order_acq_rel);
    return true;
}

std::vector<const Permutation*> SchreierStructure::prefix_generators(int level) const {
    std::lock_guard<std::mutex> guard(gen_lock_);
    std::vector<const Permutation*> out;
    for (const Permutation* g : gens_)
        if (fixes_prefix(*g, level)) out.push_back(g);
    return out;
}

bool SchreierStructure::close_level(int level) {
    std::vector<const Permutation*> gens = prefix_generators(level);
    if (gens.empty()) return false;
    bool changed = false;
    std::vector<int> frontier;
    for (int b = 0; b < n_; ++b)
        if (lookup(level, b)) frontier.push_back(b);
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int p : frontier) {
            const Permutation* tp = lookup(level, p);
            for (const Permutation* s : gens) {
                int q = (*s)(p);
                if (lookup(level, q)) continue;
                if (install_transversal(level, s->compose(*tp))) {
                    changed = true;
                    next.push_back(q);
                }
            }
        }
        frontier = std::move(next);
    }
    return changed;
}

bool SchreierStructure::complete(const std::vector<int>& max_transversal,
                                 uint64_t op_budget) {
    uint64_t ops = 0;
    bool grew = false;
    bool changed = true;
    while (changed && ops < op_budget) {
        changed = false;
        for (int i = levels() - 1; i >= 0 && ops < op_budget; --i) {
            if (close_level(i)) {
                changed = true;
                grew = true;
            }
            // Schreier generators at level i fix base point i, so they can
            // only extend levels deeper than i. If that whole suffix already
            // sits at its bound, there is nothing left to find.
            if (!max_transversal.empty()) {
                bool suffix_maxed = true;
                for (int j = i + 1; j < levels(); ++j)
                    if (transversal_size(j) < max_transversal[j]) {
                        suffix_maxed = false;
                        break;
                    }
                if (suffix_maxed) continue;
            }
            std::vector<const Permutation*> gens = prefix_generators(i);
            std::vector<std::pair<int, const Permutation*>> points;
            for (int b = 0; b < n_; ++b)
                if (const Permutation* t = lookup(i, b)) points.emplace_back(b, t);
            for (const auto& [p, tp] : points) {
                for (const Permutation* s : gens) {
                    ops += static_cast<uint64_t>(levels() - i + 3) *
                           static_cast<uint64_t>(n_);
                    if (ops >= op_budget) break;
                    const Permutation* tq = lookup(i, (*s)(p));
                    if (!tq) continue;  // raced with a concurrent install
                    Permutation g = tq->inverse().compose(s->compose(*tp));
                    if (g.is_identity()) continue;
                    if (!sift(std::move(g))) {
                        changed = true;
                        grew = true;
                    }
                }
            }
        }
    }
    return grew;
}

bool SchreierStructure::check_invariants() const {
    for (int i = 0; i < levels(); ++i) {
        int found = 0;
        for (int b = 0; b < n_; ++b) {
            const Permutation* t = lookup(i, b);
            if (!t) continue;
            ++found;
            if ((*t)(base_[i]) != b) return false;
            for (int j = 0; j < i; ++j)
                if ((*t)(base_[j]) != base_[j]) return false;
        }
        if (lookup(i, base_[i]) == nullptr) return false;
        if (found != transversal_size(i)) return false;
    }
    return true;
}

} // namespace autgrp
