#pragma once

#include "bfoqap/instance.hpp"
#include "bfoqap/permutation.hpp"

namespace bfoqap {

/// Full objective value: the double sum over all ordered pairs. No
/// symmetry or zero-diagonal assumption.
Cost evaluate(const QapInstance&, const Permutation&);

/// One cost per flow matrix under the same assignment.
ObjectiveVector evaluate_multi(const MqapInstance&, const Permutation&);

/// Cost change from swapping positions r and s (r != s) of phi, computed
/// in O(n): equals evaluate(swapped) - evaluate(phi) exactly, including
/// for asymmetric matrices.
Cost delta_swap(const QapInstance&, const Permutation&, int r, int s);

/// Same, for one explicit (flow, distance) pair; shared building block of
/// the single- and multiobjective paths.
Cost delta_swap(const SquareMatrix& flow, const SquareMatrix& distance,
                const Permutation&, int r, int s);

/// Per-objective swap deltas.
ObjectiveVector delta_swap_multi(const MqapInstance&, const Permutation&, int r, int s);

}  // namespace bfoqap
