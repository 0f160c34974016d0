#pragma once

#include "bfoqap/evaluate.hpp"
#include "bfoqap/pareto.hpp"
#include "bfoqap/rng.hpp"

namespace bfoqap {

/// Knobs for tabu_improve. Negative fields select size-derived defaults:
/// tenure uniform in [round(0.9 n), round(1.1 n)] per applied move,
/// max_iters = 10 n^2. Zero is meaningful (no tenure / no iterations).
struct TabuParams {
    int tenure_low = -1;
    int tenure_high = -1;
    long long max_iters = -1;
    bool aspiration = true;
};

struct TabuResult {
    Permutation best;
    Cost best_cost = 0;
    long long iterations = 0;
    /// Scanned candidate moves (one per delta looked at).
    long long neighbor_evaluations = 0;
};

/// Best-improvement 2-exchange tabu search.
///
/// Each iteration scans the full swap neighborhood through a DeltaTable,
/// takes the best admissible move (not tabu, or tabu but beating the best
/// cost seen when aspiration is on; if every move is inadmissible the scan
/// best is taken), applies it even when worsening, and makes the reversed
/// move tabu for a tenure drawn uniformly from [tenure_low, tenure_high].
///
/// Never returns a solution worse than the start; deterministic given the
/// RandomSource state.
TabuResult tabu_improve(const QapInstance&, const Permutation& start,
                        const TabuParams&, RandomSource&);

struct PlsResult {
    long long neighbor_evaluations = 0;
    /// True when every archive member was explored before the budget ran out.
    bool closed = false;
};

/// Pareto local search: repeatedly picks a random unexplored archive
/// member, offers all its 2-exchange neighbors to the archive, and marks
/// it explored; newly inserted members are unexplored. Stops when no
/// member is unexplored or after `budget` neighbor evaluations.
///
/// The archive only improves: members leave only by being dominated.
/// An empty archive is a no-op (returns closed).
PlsResult pareto_local_search(const MqapInstance&, ParetoArchive&,
                              long long budget, RandomSource&);

}  // namespace bfoqap
