#pragma once

#include <vector>

#include "bfoqap/evaluate.hpp"

namespace bfoqap {

/// All pairwise swap deltas of one permutation, kept current across moves.
///
/// Construction costs O(n^3); apply_swap costs O(n^2): deltas of pairs
/// disjoint from the moved positions are adjusted in O(1) each (the
/// adjustment only involves matrix entries indexed by the four positions,
/// exact for asymmetric matrices), pairs touching the moved positions are
/// recomputed in O(n). This is what makes a full-neighborhood scan per
/// tabu iteration affordable.
class DeltaTable {
public:
    DeltaTable(const QapInstance& instance, Permutation start);

    const Permutation& permutation() const { return perm_; }
    Cost current_cost() const { return cost_; }

    /// delta of swapping positions r and s; r != s.
    Cost delta(int r, int s) const { return deltas_[cell(r, s)]; }

    /// Applies the swap, updating the permutation, its cost, and the table.
    void apply_swap(int r, int s);

private:
    std::size_t cell(int r, int s) const {
        // symmetric in (r, s); both triangles stored for O(1) access
        return static_cast<std::size_t>(r) * static_cast<std::size_t>(n_) +
               static_cast<std::size_t>(s);
    }

    const QapInstance* instance_;
    Permutation perm_;
    Cost cost_;
    int n_;
    std::vector<Cost> deltas_;
};

}  // namespace bfoqap
