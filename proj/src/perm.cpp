#include "autgrp/perm.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace autgrp {

Permutation::Permutation(int n) : img_(n) {
    std::iota(img_.begin(), img_.end(), 0);
}

Permutation::Permutation(std::vector<int> image) : img_(std::move(image)) {}

bool Permutation::is_identity() const {
    for (int v = 0; v < degree(); ++v)
        if (img_[v] != v) return false;
    return true;
}

bool Permutation::is_valid() const {
    std::vector<char> seen(img_.size(), 0);
    for (int x : img_) {
        if (x < 0 || x >= degree() || seen[x]) return false;
        seen[x] = 1;
    }
    return true;
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(img_.size());
    for (int v = 0; v < degree(); ++v) inv[img_[v]] = v;
    return Permutation(std::move(inv));
}

Permutation Permutation::compose(const Permutation& other) const {
    std::vector<int> out(img_.size());
    for (int v = 0; v < degree(); ++v) out[v] = img_[other.img_[v]];
    return Permutation(std::move(out));
}

std::string Permutation::to_cycles() const {
    std::ostringstream os;
    std::vector<char> done(img_.size(), 0);
    bool any = false;
    for (int v = 0; v < degree(); ++v) {
        if (done[v] || img_[v] == v) continue;
        any = true;
        os << '(' << v + 1;
        done[v] = 1;
        for (int u = img_[v]; u != v; u = img_[u]) {
            os << ' ' << u + 1;
            done[u] = 1;
        }
        os << ')';
    }
    if (!any) return "()";
    return os.str();
}

Permutation Permutation::from_cycles(const std::string& text, int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip_ws();
    if (i == text.size())
        throw std::invalid_argument("empty permutation");
    std::vector<char> used(n, 0);
    while (i < text.size()) {
        skip_ws();
        if (i == text.size()) break;
        if (text[i] != '(')
            throw std::invalid_argument("expected '(' in cycle notation");
        ++i;
        std::vector<int> cycle;
        while (true) {
            skip_ws();
            if (i == text.size())
                throw std::invalid_argument("unterminated cycle");
            if (text[i] == ')') { ++i; break; }
            if (text[i] == ',') { ++i; continue; }
            if (!std::isdigit(static_cast<unsigned char>(text[i])))
                throw std::invalid_argument("expected point in cycle");
            int val = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                val = val * 10 + (text[i] - '0');
                ++i;
            }
            if (val < 1 || val > n)
                throw std::invalid_argument("cycle point out of range");
            if (used[val - 1])
                throw std::invalid_argument("point repeated across cycles");
            used[val - 1] = 1;
            cycle.push_back(val - 1);
        }
        for (size_t k = 0; k < cycle.size(); ++k)
            img[cycle[k]] = cycle[(k + 1) % cycle.size()];
    }
    return Permutation(std::move(img));
}

} // namespace autgrp
