#include "bfoqap/pareto.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "bfoqap/evaluate.hpp"

namespace bfoqap {

bool dominates(const ObjectiveVector& a, const ObjectiveVector& b) {
    if (a.size() != b.size() || a.empty()) {
        throw std::invalid_argument("dominates: objective counts differ or are zero");
    }
    bool strictly_better = false;
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k] > b[k]) return false;
        if (a[k] < b[k]) strictly_better = true;
    }
    return strictly_better;
}

std::vector<int> fast_nondominated_sort(const std::vector<ObjectiveVector>& points) {
    if (points.empty()) {
        throw std::invalid_argument("fast_nondominated_sort: empty input");
    }
    const std::size_t n = points.size();
    for (const ObjectiveVector& p : points) {
        if (p.size() != points.front().size()) {
            throw std::invalid_argument("fast_nondominated_sort: mixed objective counts");
        }
    }
    std::vector<std::vector<int>> dominated_by(n);
    std::vector<int> dominator_count(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (dominates(points[i], points[j])) {
                dominated_by[i].push_back(static_cast<int>(j));
                ++dominator_count[j];
            } else if (dominates(points[j], points[i])) {
                dominated_by[j].push_back(static_cast<int>(i));
                ++dominator_count[i];
            }
        }
    }
    std::vector<int> ranks(n, -1);
    std::vector<int> current;
    for (std::size_t i = 0; i < n; ++i) {
        if (dominator_count[i] == 0) current.push_back(static_cast<int>(i));
    }
    int rank = 0;
    while (!current.empty()) {
        std::vector<int> next;
        for (int i : current) {
            ranks[static_cast<std::size_t>(i)] = rank;
            for (int j : dominated_by[static_cast<std::size_t>(i)]) {
                if (--dominator_count[static_cast<std::size_t>(j)] == 0) {
                    next.push_back(j);
                }
            }
        }
        current = std::move(next);
        ++rank;
    }
    return ranks;
}

std::vector<double> crowding_distances(const std::vector<ObjectiveVector>& set) {
    const std::size_t n = set.size();
    std::vector<double> crowd(n, 0.0);
    if (n == 0) return crowd;
    const std::size_t m = set.front().size();
    for (const ObjectiveVector& p : set) {
        if (p.size() != m) {
            throw std::invalid_argument("crowding_distances: mixed objective counts");
        }
    }
    constexpr double inf = std::numeric_limits<double>::infinity();
    std::vector<std::size_t> order(n);
    for (std::size_t k = 0; k < m; ++k) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return set[a][k] < set[b][k];
        });
        const double span = static_cast<double>(set[order.back()][k] - set[order.front()][k]);
        crowd[order.front()] = inf;
        crowd[order.back()] = inf;
        if (span <= 0.0) continue;  // degenerate objective: no interior signal
        for (std::size_t t = 1; t + 1 < n; ++t) {
            if (crowd[order[t]] == inf) continue;
            crowd[order[t]] +=
                static_cast<double>(set[order[t + 1]][k] - set[order[t - 1]][k]) / span;
        }
    }
    return crowd;
}

ParetoArchive::ParetoArchive(int objective_count, std::optional<std::size_t> capacity)
    : m_(objective_count), capacity_(capacity) {
    if (objective_count < 1) {
        throw std::invalid_argument("ParetoArchive: objective_count must be positive");
    }
    if (capacity_ && *capacity_ == 0) {
        throw std::invalid_argument("ParetoArchive: capacity must be positive");
    }
}

bool ParetoArchive::insert(ObjectiveVector objectives, Permutation assignment) {
    if (static_cast<int>(objectives.size()) != m_) {
        throw std::invalid_argument("ParetoArchive::insert: wrong objective count");
    }
    for (const FrontPoint& member : members_) {
        if (member.objectives == objectives || dominates(member.objectives, objectives)) {
            return false;
        }
    }
    std::erase_if(members_, [&](const FrontPoint& member) {
        return dominates(objectives, member.objectives);
    });
    members_.push_back(FrontPoint{std::move(objectives), std::move(assignment)});
    if (capacity_ && members_.size() > *capacity_) prune_one();
    return true;
}

void ParetoArchive::prune_one() {
    std::vector<ObjectiveVector> vectors = objective_vectors();
    const std::vector<double> crowd = crowding_distances(vectors);
    std::size_t victim = 0;
    for (std::size_t i = 1; i < crowd.size(); ++i) {
        // ties keep the earlier member: the later duplicate-density point goes
        if (crowd[i] <= crowd[victim]) victim = i;
    }
    members_.erase(members_.begin() + static_cast<std::ptrdiff_t>(victim));
}

std::vector<FrontPoint> ParetoArchive::sorted_members() const {
    std::vector<FrontPoint> sorted = members_;
    std::sort(sorted.begin(), sorted.end(), [](const FrontPoint& a, const FrontPoint& b) {
        if (a.objectives != b.objectives) return a.objectives < b.objectives;
        return a.assignment.mapping() < b.assignment.mapping();
    });
    return sorted;
}

std::vector<ObjectiveVector> ParetoArchive::objective_vectors() const {
    std::vector<ObjectiveVector> vectors;
    vectors.reserve(members_.size());
    for (const FrontPoint& member : members_) vectors.push_back(member.objectives);
    return vectors;
}

bool archive_insert(ParetoArchive& archive, ObjectiveVector objectives,
                    Permutation assignment) {
    return archive.insert(std::move(objectives), std::move(assignment));
}

double generational_distance(const std::vector<ObjectiveVector>& front,
                             const std::vector<ObjectiveVector>& reference) {
    if (front.empty() || reference.empty()) {
        throw std::invalid_argument("generational_distance: empty front or reference");
    }
    const std::size_t m = front.front().size();
    for (const ObjectiveVector& p : front) {
        if (p.size() != m) throw std::invalid_argument("generational_distance: mixed objective counts");
    }
    for (const ObjectiveVector& p : reference) {
        if (p.size() != m) throw std::invalid_argument("generational_distance: mixed objective counts");
    }
    double sum_squared = 0.0;
    for (const ObjectiveVector& p : front) {
        double best = std::numeric_limits<double>::infinity();
        for (const ObjectiveVector& q : reference) {
            double dist2 = 0.0;
            for (std::size_t k = 0; k < m; ++k) {
                const double diff = static_cast<double>(p[k] - q[k]);
                dist2 += diff * diff;
            }
            best = std::min(best, dist2);
        }
        sum_squared += best;
    }
    return std::sqrt(sum_squared) / static_cast<double>(front.size());
}

bool front_weakly_covers(const std::vector<ObjectiveVector>& covering,
                         const std::vector<ObjectiveVector>& covered) {
    for (const ObjectiveVector& p : covered) {
        bool hit = false;
        for (const ObjectiveVector& q : covering) {
            if (q == p || dominates(q, p)) {
                hit = true;
                break;
            }
        }
        if (!hit) return false;
    }
    return true;
}

std::vector<FrontPoint> brute_force_front(const MqapInstance& instance) {
    const int n = instance.size();
    if (n > 11) {
        throw std::invalid_argument("brute_force_front: refusing n > 11 (factorial search)");
    }
    ParetoArchive archive(instance.objective_count());
    std::vector<int> mapping(static_cast<std::size_t>(n));
    std::iota(mapping.begin(), mapping.end(), 0);
    do {
        Permutation phi{mapping};
        ObjectiveVector values = evaluate_multi(instance, phi);
        archive.insert(std::move(values), std::move(phi));
    } while (std::next_permutation(mapping.begin(), mapping.end()));
    return archive.sorted_members();
}

}  // namespace bfoqap
