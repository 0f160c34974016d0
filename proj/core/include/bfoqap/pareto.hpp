#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "bfoqap/instance.hpp"
#include "bfoqap/permutation.hpp"

namespace bfoqap {

/// True iff a is no worse than b in every objective and strictly better in
/// at least one (minimization). Equal vectors do not dominate each other.
bool dominates(const ObjectiveVector& a, const ObjectiveVector& b);

/// Nondominated ranking of a population: returns one rank per input
/// vector, aligned with the input order; rank 0 is the nondominated front,
/// rank 1 the front after removing rank 0, and so on. Throws
/// std::invalid_argument on empty input or mixed objective counts.
std::vector<int> fast_nondominated_sort(const std::vector<ObjectiveVector>&);

/// Crowding distance of each member within one set (callers group by rank
/// first). Boundary members per objective get +infinity; degenerate
/// objectives (all values equal) contribute nothing.
std::vector<double> crowding_distances(const std::vector<ObjectiveVector>&);

/// One nondominated point: objective values plus a witness assignment.
struct FrontPoint {
    ObjectiveVector objectives;
    Permutation assignment;
};

/// Mutually nondominated set. Duplicate objective vectors collapse to the
/// first witness seen. With a capacity, overflow evicts the member with
/// the smallest crowding distance (boundary members, being infinite, are
/// never the ones dropped while an interior member exists).
class ParetoArchive {
public:
    explicit ParetoArchive(int objective_count,
                           std::optional<std::size_t> capacity = std::nullopt);

    /// True iff the candidate entered (it was neither dominated by nor an
    /// objective-duplicate of a member). Members it dominates are evicted.
    bool insert(ObjectiveVector objectives, Permutation assignment);

    const std::vector<FrontPoint>& members() const { return members_; }

    /// Members ordered lexicographically by objective vector (assignment
    /// mapping as tiebreak); the on-disk front order.
    std::vector<FrontPoint> sorted_members() const;

    std::vector<ObjectiveVector> objective_vectors() const;

    int objective_count() const { return m_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }

private:
    void prune_one();

    int m_;
    std::optional<std::size_t> capacity_;
    std::vector<FrontPoint> members_;
};

/// Free-function form of ParetoArchive::insert.
bool archive_insert(ParetoArchive&, ObjectiveVector, Permutation);

/// Average nearest-neighbor gap from front to reference:
/// sqrt(sum of squared nearest Euclidean distances) / |front|.
/// Exactly 0 iff every front point appears in the reference. Throws on
/// empty inputs or mismatched objective counts.
double generational_distance(const std::vector<ObjectiveVector>& front,
                             const std::vector<ObjectiveVector>& reference);

/// True iff every point of `covered` is dominated by or equal to some
/// point of `covering`.
bool front_weakly_covers(const std::vector<ObjectiveVector>& covering,
                         const std::vector<ObjectiveVector>& covered);

/// Exact Pareto front by exhaustive enumeration. Refuses n > 11 (factorial
/// blowup) with std::invalid_argument. Deterministic: per distinct
/// objective vector the witness is the first assignment in lexicographic
/// enumeration order; the result is sorted like sorted_members().
std::vector<FrontPoint> brute_force_front(const MqapInstance&);

}  // namespace bfoqap
