#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace bfoqap {

/// Objective/cost value. Instance entries are small non-negative integers,
/// so sums of n^2 pairwise products stay far from the 64-bit limit at
/// every size handled here.
using Cost = std::int64_t;

/// Dense row-major n x n integer matrix.
class SquareMatrix {
public:
    explicit SquareMatrix(int n, Cost fill = 0)
        : n_(checked_size(n)), cells_(static_cast<std::size_t>(n) * n, fill) {}

    static SquareMatrix from_rows(const std::vector<std::vector<Cost>>& rows) {
        SquareMatrix m(static_cast<int>(rows.size()));
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != rows.size()) {
                throw std::invalid_argument("SquareMatrix: ragged rows");
            }
            for (std::size_t j = 0; j < rows.size(); ++j) {
                m(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
            }
        }
        return m;
    }

    int size() const { return n_; }

    Cost operator()(int i, int j) const { return cells_[index(i, j)]; }
    Cost& operator()(int i, int j) { return cells_[index(i, j)]; }

    bool operator==(const SquareMatrix&) const = default;

private:
    static int checked_size(int n) {
        if (n < 0) throw std::invalid_argument("SquareMatrix: negative size");
        return n;
    }

    std::size_t index(int i, int j) const {
        return static_cast<std::size_t>(i) * n_ + static_cast<std::size_t>(j);
    }

    int n_;
    std::vector<Cost> cells_;
};

}  // namespace bfoqap
