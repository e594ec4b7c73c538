#include "autgrp/coloring.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace autgrp {

Coloring Coloring::from_colors(const std::vector<int>& colors) {
    Coloring c;
    int n = static_cast<int>(colors.size());
    c.lab_.resize(n);
    c.pos_.resize(n);
    c.cell_.resize(n);
    c.size_.assign(n, 0);
    std::iota(c.lab_.begin(), c.lab_.end(), 0);
    std::stable_sort(c.lab_.begin(), c.lab_.end(),
                     [&](int a, int b) { return colors[a] < colors[b]; });
    c.cell_count_ = 0;
    int start = 0;
    for (int p = 0; p < n; ++p) {
        if (p > 0 && colors[c.lab_[p]] != colors[c.lab_[p - 1]]) start = p;
        c.cell_[p] = start;
        c.pos_[c.lab_[p]] = p;
    }
    for (int p = 0; p < n; ++p) {
        ++c.size_[c.cell_[p]];
        if (c.cell_[p] == p) ++c.cell_count_;
    }
    return c;
}

Coloring Coloring::unit(int n) {
    return from_colors(std::vector<int>(n, 0));
}

void Coloring::individualize(int v) {
    int s = cell_of(v);
    int len = size_[s];
    if (len <= 1) throw std::logic_error("individualize: vertex already in a singleton cell");
    int p = pos_[v];
    // move v to the front of its cell
    int u = lab_[s];
    lab_[s] = v;
    lab_[p] = u;
    pos_[v] = s;
    pos_[u] = p;
    // new singleton {v} at s, remainder at s+1
    size_[s] = 1;
    size_[s + 1] = len - 1;
    for (int q = s + 1; q < s + len; ++q) cell_[q] = s + 1;
    ++cell_count_;
}

void Coloring::split_cell(int start, const std::vector<int>& vertices,
                          const std::vector<int>& fragment_sizes) {
    for (size_t i = 0; i < vertices.size(); ++i) {
        int p = start + static_cast<int>(i);
        lab_[p] = vertices[i];
        pos_[vertices[i]] = p;
    }
    int s = start;
    for (int fs : fragment_sizes) {
        size_[s] = fs;
        for (int q = s; q < s + fs; ++q) cell_[q] = s;
        s += fs;
    }
    cell_count_ += static_cast<int>(fragment_sizes.size()) - 1;
}

std::vector<std::vector<int>> Coloring::cells() const {
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n(); s += size_[s]) {
        out.emplace_back(lab_.begin() + s, lab_.begin() + s + size_[s]);
    }
    return out;
}

std::vector<int> Coloring::as_permutation_image() const {
    return pos_;
}

} // namespace autgrp
