#include "bfoqap/delta_table.hpp"

#include <stdexcept>
#include <utility>

namespace bfoqap {

DeltaTable::DeltaTable(const QapInstance& instance, Permutation start)
    : instance_(&instance),
      perm_(std::move(start)),
      cost_(evaluate(instance, perm_)),
      n_(instance.size()),
      deltas_(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), 0) {
    for (int r = 0; r < n_; ++r) {
        for (int s = r + 1; s < n_; ++s) {
            const Cost d = delta_swap(*instance_, perm_, r, s);
            deltas_[cell(r, s)] = d;
            deltas_[cell(s, r)] = d;
        }
    }
}

void DeltaTable::apply_swap(int r, int s) {
    if (r == s || r < 0 || s < 0 || r >= n_ || s >= n_) {
        throw std::invalid_argument("DeltaTable::apply_swap: bad positions");
    }
    const SquareMatrix& f = instance_->flow;
    const SquareMatrix& d = instance_->distance;
    const int pr = perm_[r];  // locations before the move
    const int ps = perm_[s];

    // Pairs disjoint from {r, s}: exact O(1) adjustment. Only the k = r and
    // k = s terms of the delta sum change, and the change factors into the
    // two products below (valid for asymmetric matrices).
    for (int u = 0; u < n_; ++u) {
        if (u == r || u == s) continue;
        const int pu = perm_[u];
        for (int v = u + 1; v < n_; ++v) {
            if (v == r || v == s) continue;
            const int pv = perm_[v];
            const Cost row_flow = (f(r, u) - f(r, v)) - (f(s, u) - f(s, v));
            const Cost row_dist = (d(ps, pv) - d(ps, pu)) - (d(pr, pv) - d(pr, pu));
            const Cost col_flow = (f(u, r) - f(v, r)) - (f(u, s) - f(v, s));
            const Cost col_dist = (d(pv, ps) - d(pu, ps)) - (d(pv, pr) - d(pu, pr));
            const Cost adjusted = deltas_[cell(u, v)] + row_flow * row_dist + col_flow * col_dist;
            deltas_[cell(u, v)] = adjusted;
            deltas_[cell(v, u)] = adjusted;
        }
    }

    cost_ += deltas_[cell(r, s)];
    perm_.swap_positions(r, s);

    // Pairs touching the moved positions: recompute at O(n) each.
    for (int k = 0; k < n_; ++k) {
        if (k != r) {
            const Cost dr = delta_swap(*instance_, perm_, std::min(k, r), std::max(k, r));
            deltas_[cell(k, r)] = dr;
            deltas_[cell(r, k)] = dr;
        }
        if (k != s) {
            const Cost ds = delta_swap(*instance_, perm_, std::min(k, s), std::max(k, s));
            deltas_[cell(k, s)] = ds;
            deltas_[cell(s, k)] = ds;
        }
    }
}

}  // namespace bfoqap
