#include "autgrp/refinement.hpp"

#include <algorithm>

namespace autgrp {

Refiner::Refiner(int n)
    : n_(n), count_(n, 0), in_worklist_(n, 0) {
    touched_.reserve(n);
    worklist_.reserve(n);
    affected_.reserve(n);
}

RefineOutcome Refiner::refine(const ColoredGraph& g, Coloring& pi, Trace& trace,
                              std::optional<int> seed_vertex) {
    worklist_.clear();
    size_t head = 0;
    auto enqueue = [&](int s) {
        if (!in_worklist_[s]) {
            in_worklist_[s] = 1;
            worklist_.push_back(s);
        }
    };
    if (seed_vertex) {
        enqueue(pi.cell_of(*seed_vertex));
    } else {
        for (int s = 0; s < pi.n(); s += pi.cell_size(s)) enqueue(s);
    }

    std::vector<int> w_verts;
    bool early_out = false;
    while (head < worklist_.size() && !early_out) {
        int s = worklist_[head++];
        in_worklist_[s] = 0;
        int wsize = pi.cell_size(s);
        w_verts.assign(wsize, 0);
        for (int q = 0; q < wsize; ++q) w_verts[q] = pi.vertex_at(s + q);

        touched_.clear();
        for (int v : w_verts)
            for (int u : g.neighbors(v)) {
                if (count_[u] == 0) touched_.push_back(u);
                ++count_[u];
            }

        affected_.clear();
        for (int u : touched_) {
            int t = pi.cell_of(u);
            if (pi.cell_size(t) > 1) affected_.push_back(t);
        }
        std::sort(affected_.begin(), affected_.end());
        affected_.erase(std::unique(affected_.begin(), affected_.end()), affected_.end());

        for (int t : affected_) {
            int sz = pi.cell_size(t);
            scratch_members_.clear();
            bool uniform = true;
            int c0 = count_[pi.vertex_at(t)];
            for (int q = 0; q < sz; ++q) {
                int v = pi.vertex_at(t + q);
                scratch_members_.emplace_back(count_[v], v);
                if (count_[v] != c0) uniform = false;
            }
            if (uniform) continue;
            std::sort(scratch_members_.begin(), scratch_members_.end());

            frag_vertices_.clear();
            frag_sizes_.clear();
            uint64_t h = 0x51ed270b0a1c6715ULL;
            int largest_idx = 0, largest_sz = 0, frag_start_local = 0;
            for (int q = 0; q < sz; ++q) {
                frag_vertices_.push_back(scratch_members_[q].second);
                if (q + 1 == sz ||
                    scratch_members_[q + 1].first != scratch_members_[q].first) {
                    int fsz = q + 1 - frag_start_local;
                    frag_sizes_.push_back(fsz);
                    h = hash_mix(hash_mix(h, static_cast<uint64_t>(fsz)),
                                 static_cast<uint64_t>(scratch_members_[q].first));
                    if (fsz > largest_sz) {
                        largest_sz = fsz;
                        largest_idx = static_cast<int>(frag_sizes_.size()) - 1;
                    }
                    frag_start_local = q + 1;
                }
            }
            h = hash_mix(h, frag_sizes_.size());

            bool was_pending = in_worklist_[t];
            pi.split_cell(t, frag_vertices_, frag_sizes_);

            int fs = t;
            for (size_t fi = 0; fi < frag_sizes_.size(); ++fi) {
                if (was_pending) {
                    enqueue(fs);  // first fragment keeps the queued start t
                } else if (static_cast<int>(fi) != largest_idx) {
                    enqueue(fs);
                }
                fs += frag_sizes_[fi];
            }

            trace.append(static_cast<uint64_t>(t));
            trace.append(h);
            trace.end_split_event();
            if (!trace.keep_refining()) { early_out = true; break; }
        }
        for (int u : touched_) count_[u] = 0;
    }

    if (early_out) {
        for (int u : touched_) count_[u] = 0;
        for (size_t q = head; q < worklist_.size(); ++q) in_worklist_[worklist_[q]] = 0;
        return RefineOutcome::early_out;
    }
    trace.append(hash_mix(0x94d049bb133111ebULL, static_cast<uint64_t>(pi.cell_count())));
    return RefineOutcome::completed;
}

Coloring refined(const ColoredGraph& g, const Coloring& pi, Trace& trace) {
    Coloring out = pi;
    Refiner r(g.n());
    r.refine(g, out, trace);
    return out;
}

} // namespace autgrp
