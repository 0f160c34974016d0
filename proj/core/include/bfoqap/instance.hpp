#pragma once

#include <vector>

#include "bfoqap/matrix.hpp"

namespace bfoqap {

/// One multiobjective evaluation result, one entry per flow matrix.
using ObjectiveVector = std::vector<Cost>;

/// Facility-location instance. The cost of an assignment phi is
/// sum over all ordered pairs (i, j) of flow(i, j) * distance(phi(i), phi(j)).
/// Construction enforces n >= 2, matching sizes, and non-negative entries.
struct QapInstance {
    QapInstance(SquareMatrix flow_in, SquareMatrix distance_in);

    int size() const { return flow.size(); }

    SquareMatrix flow;
    SquareMatrix distance;
};

/// Several flow matrices over one shared distance matrix; an assignment is
/// scored once per flow matrix, yielding an ObjectiveVector.
/// Construction enforces m >= 2 in addition to the QapInstance rules.
struct MqapInstance {
    MqapInstance(std::vector<SquareMatrix> flows_in, SquareMatrix distance_in);

    int size() const { return distance.size(); }
    int objective_count() const { return static_cast<int>(flows.size()); }

    std::vector<SquareMatrix> flows;
    SquareMatrix distance;
};

}  // namespace bfoqap
