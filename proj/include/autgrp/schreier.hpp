#pragma once

#include <atomic>
#include <cstdint>
#include <deque>
#include <memory>
#include <mutex>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "autgrp/perm.hpp"

namespace autgrp {

// Permutation-group membership by sifting against a fixed base. Thread-safe:
// lookups are lock-free on published transversal slots; installations take
// the level lock, then the generator lock (always in that order, one level
// at a time). The base is fixed at construction and never extended.
class SchreierStructure {
public:
    // Throws std::invalid_argument on an empty base or duplicate base points.
    SchreierStructure(int n, std::vector<int> base);

    // Sifts phi through the stabilizer chain. Returns true iff S and T were
    // left unchanged (phi reduced to the identity). The caller guarantees phi
    // is a certified automorphism; the structure never certifies.
    bool sift(Permutation phi);

    // Product of transversal sizes: the order of <S> once S is strong
    // relative to the base, a lower bound otherwise.
    boost::multiprecision::cpp_int group_order() const;

    std::vector<Permutation> generators() const;
    size_t generator_count() const;

    int n() const { return n_; }
    const std::vector<int>& base() const { return base_; }
    int levels() const { return static_cast<int>(base_.size()); }
    int transversal_size(int level) const {
        return trans_count_[level].load(std::memory_order_acquire);
    }

    // Orbit closure of one level: extends the transversal with s * t for
    // every stored entry t and generator s fixing the base prefix. Returns
    // true if the level grew. Entries added here are not new generators.
    bool close_level(int level);

    // Deterministic fixed-base Schreier-Sims completion: closes every level
    // and sifts Schreier generators until a fixpoint, raising prod |T_i| to
    // |<S>|. `max_transversal[i]` (the selected cell size at level i) bounds
    // |T_i|; suffixes already at their bound are skipped. Work is capped by
    // `op_budget` elementary point operations. Returns true if anything grew.
    bool complete(const std::vector<int>& max_transversal, uint64_t op_budget);

    // Consistency check used by tests: every transversal element at level i
    // fixes base points 0..i-1 and maps base point i to its slot key.
    bool check_invariants() const;

private:
    const Permutation* lookup(int level, int image) const {
        return trans_[level][image].load(std::memory_order_acquire);
    }

    // Installs t as a transversal entry (not a generator) if its slot is
    // free. t must map base_[level] to the slot key and fix earlier points.
    bool install_transversal(int level, Permutation t);

    bool fixes_prefix(const Permutation& p, int level) const {
        for (int j = 0; j < level; ++j)
            if (p(base_[j]) != base_[j]) return false;
        return true;
    }

    // Generators fixing base points 0..level-1, as stable pointers.
    std::vector<const Permutation*> prefix_generators(int level) const;

    int n_;
    std::vector<int> base_;
    Permutation identity_;
    std::vector<std::vector<std::atomic<const Permutation*>>> trans_;
    std::unique_ptr<std::atomic<int>[]> trans_count_storage_;
    std::atomic<int>* trans_count_;
    mutable std::vector<std::mutex> level_locks_;
    mutable std::mutex gen_lock_;
    std::deque<Permutation> owned_;           // stable addresses; guarded by gen_lock_
    std::vector<const Permutation*> gens_;    // guarded by gen_lock_
};

} // namespace autgrp
