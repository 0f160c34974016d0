#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bfoqap/rng.hpp"

namespace bfoqap {

/// Bijection of {0, ..., n-1}: position i (facility) holds value
/// mapping()[i] (location). Everything in-process is 0-based; 1-based
/// conventions live only in file formats and are converted at the
/// parse/write boundary.
///
/// Mutating operations preserve the bijection by construction; building
/// one from a raw vector validates it.
class Permutation {
public:
    /// Identity permutation of size n (n >= 1).
    explicit Permutation(int n) : map_(static_cast<std::size_t>(checked_size(n))) {
        for (int i = 0; i < n; ++i) map_[static_cast<std::size_t>(i)] = i;
    }

    /// Adopts an explicit mapping; throws std::invalid_argument unless it
    /// is a bijection of {0, ..., n-1}.
    explicit Permutation(std::vector<int> mapping) : map_(std::move(mapping)) {
        validate();
    }

    static Permutation identity(int n) { return Permutation(n); }

    static Permutation random(int n, RandomSource& rng) {
        Permutation p(n);
        rng.shuffle(p.map_);
        return p;
    }

    int size() const { return static_cast<int>(map_.size()); }
    int operator[](int i) const { return map_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& mapping() const { return map_; }

    void swap_positions(int r, int s) {
        std::swap(map_[checked_index(r)], map_[checked_index(s)]);
    }

    /// Reverses the closed segment [a, b].
    void reverse_segment(int a, int b) {
        checked_index(a);
        checked_index(b);
        if (a > b) throw std::invalid_argument("reverse_segment: a > b");
        std::reverse(map_.begin() + a, map_.begin() + b + 1);
    }

    Permutation inverse() const {
        std::vector<int> inv(map_.size());
        for (int i = 0; i < size(); ++i) inv[static_cast<std::size_t>(map_[i])] = i;
        return Permutation(std::move(inv));
    }

    bool operator==(const Permutation&) const = default;

private:
    static int checked_size(int n) {
        if (n < 1) throw std::invalid_argument("Permutation: size must be positive");
        return n;
    }

    std::size_t checked_index(int i) const {
        if (i < 0 || i >= size()) throw std::invalid_argument("Permutation: index out of range");
        return static_cast<std::size_t>(i);
    }

    void validate() const {
        if (map_.empty()) throw std::invalid_argument("Permutation: empty mapping");
        std::vector<char> seen(map_.size(), 0);
        for (int v : map_) {
            if (v < 0 || v >= size() || seen[static_cast<std::size_t>(v)]) {
                throw std::invalid_argument("Permutation: mapping is not a bijection");
            }
            seen[static_cast<std::size_t>(v)] = 1;
        }
    }

    std::vector<int> map_;
};

}  // namespace bfoqap
