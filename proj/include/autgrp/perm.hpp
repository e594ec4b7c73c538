#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace autgrp {

// A permutation of {0,...,n-1} stored as its image array.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(int n);                      // identity on n points
    explicit Permutation(std::vector<int> image);

    static Permutation identity(int n) { return Permutation(n); }

    int degree() const { return static_cast<int>(img_.size()); }
    int operator()(int v) const { return img_[v]; }
    int& operator[](int v) { return img_[v]; }
    const std::vector<int>& image() const { return img_; }

    bool is_identity() const;
    bool is_valid() const;                            // bijective on {0..n-1}

    Permutation inverse() const;
    // Function composition: (a.compose(b))(v) == a(b(v)).
    Permutation compose(const Permutation& other) const;

    bool operator==(const Permutation& other) const { return img_ == other.img_; }
    bool operator!=(const Permutation& other) const { return !(*this == other); }

    // Cycle notation with 1-based points, fixed points omitted, identity is "()".
    std::string to_cycles() const;
    // Parses e.g. "(1 2 3)(4 5)". Throws std::invalid_argument on malformed
    // input or out-of-range points.
    static Permutation from_cycles(const std::string& text, int n);

private:
    std::vector<int> img_;
};

} // namespace autgrp
