#pragma once

#include <vector>

namespace autgrp {

// An ordered partition of {0..n-1}. Vertices live in `lab`, grouped into
// contiguous cells; a cell is identified by the start index of its range.
class Coloring {
public:
    Coloring() = default;

    // One cell per distinct value in `colors`, cells ordered by ascending value.
    static Coloring from_colors(const std::vector<int>& colors);
    static Coloring unit(int n);

    int n() const { return static_cast<int>(lab_.size()); }
    int cell_count() const { return cell_count_; }
    bool is_discrete() const { return cell_count_ == n(); }

    int vertex_at(int position) const { return lab_[position]; }
    int position_of(int v) const { return pos_[v]; }
    // Start index of the cell containing v; doubles as the cell id.
    int cell_of(int v) const { return cell_[pos_[v]]; }
    int cell_start_at(int position) const { return cell_[position]; }
    int cell_size(int cell_start) const { return size_[cell_start]; }

    // Splits {v} out of its (non-singleton) cell, placing the singleton
    // immediately before the remainder. Throws std::logic_error if v is
    // already a singleton.
    void individualize(int v);

    // Reorders the range [start, start+len) of lab to `vertices` and installs
    // cell boundaries at the given fragment sizes. Used by refinement.
    void split_cell(int start, const std::vector<int>& vertices,
                    const std::vector<int>& fragment_sizes);

    // Cells as vertex lists, in partition order.
    std::vector<std::vector<int>> cells() const;
    // The discrete coloring read as a permutation: v -> position_of(v).
    std::vector<int> as_permutation_image() const;

    bool operator==(const Coloring& o) const {
        return lab_ == o.lab_ && cell_ == o.cell_;
    }

private:
    std::vector<int> lab_;   // vertices in partition order
    std::vector<int> pos_;   // pos_[v] = index of v in lab_
    std::vector<int> cell_;  // cell_[p] = start of the cell containing position p
    std::vector<int> size_;  // valid at cell start positions only
    int cell_count_ = 0;
};

} // namespace autgrp
