#include "bfoqap/tabu.hpp"

#include <cmath>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bfoqap/delta_table.hpp"

namespace bfoqap {

namespace {

struct ResolvedTabuParams {
    int tenure_low;
    int tenure_high;
    long long max_iters;
    bool aspiration;
};

ResolvedTabuParams resolve(const TabuParams& params, int n) {
    ResolvedTabuParams r{};
    r.tenure_low = params.tenure_low >= 0
                       ? params.tenure_low
                       : static_cast<int>(std::llround(0.9 * n));
    r.tenure_high = params.tenure_high >= 0
                        ? params.tenure_high
                        : static_cast<int>(std::llround(1.1 * n));
    r.max_iters = params.max_iters >= 0 ? params.max_iters
                                        : 10LL * static_cast<long long>(n) * n;
    r.aspiration = params.aspiration;
    if (r.tenure_low > r.tenure_high) {
        throw std::invalid_argument("tabu_improve: tenure_low > tenure_high");
    }
    return r;
}

}  // namespace

TabuResult tabu_improve(const QapInstance& instance, const Permutation& start,
                        const TabuParams& params, RandomSource& rng) {
    const int n = instance.size();
    if (start.size() != n) {
        throw std::invalid_argument("tabu_improve: start size does not match instance");
    }
    const ResolvedTabuParams cfg = resolve(params, n);

    DeltaTable table(instance, start);
    TabuResult result{start, table.current_cost(), 0, 0};

    // expires_at[r * n + s] (r < s): first iteration the reversed move is
    // allowed again.
    std::vector<long long> expires_at(static_cast<std::size_t>(n) * n, 0);
    auto tabu_cell = [n](int r, int s) {
        return static_cast<std::size_t>(r) * static_cast<std::size_t>(n) +
               static_cast<std::size_t>(s);
    };

    for (long long iter = 1; iter <= cfg.max_iters; ++iter) {
        int best_r = -1, best_s = -1;
        Cost best_delta = 0;
        bool have_admissible = false;
        int scan_r = -1, scan_s = -1;
        Cost scan_delta = 0;
        bool have_scan = false;

        for (int r = 0; r < n; ++r) {
            for (int s = r + 1; s < n; ++s) {
                const Cost d = table.delta(r, s);
                ++result.neighbor_evaluations;
                if (!have_scan || d < scan_delta) {
                    have_scan = true;
                    scan_delta = d;
                    scan_r = r;
                    scan_s = s;
                }
                const bool tabu = expires_at[tabu_cell(r, s)] > iter;
                const bool aspired =
                    cfg.aspiration && table.current_cost() + d < result.best_cost;
                if (tabu && !aspired) continue;
                if (!have_admissible || d < best_delta) {
                    have_admissible = true;
                    best_delta = d;
                    best_r = r;
                    best_s = s;
                }
            }
        }
        if (!have_admissible) {  // fully tabu neighborhood: fall back to scan best
            best_r = scan_r;
            best_s = scan_s;
        }

        table.apply_swap(best_r, best_s);
        expires_at[tabu_cell(best_r, best_s)] =
            iter + 1 + rng.uniform_int(cfg.tenure_low, cfg.tenure_high);
        ++result.iterations;

        if (table.current_cost() < result.best_cost) {
            result.best_cost = table.current_cost();
            result.best = table.permutation();
        }
    }
    return result;
}

PlsResult pareto_local_search(const MqapInstance& instance, ParetoArchive& archive,
                              long long budget, RandomSource& rng) {
    if (archive.objective_count() != instance.objective_count()) {
        throw std::invalid_argument("pareto_local_search: archive objective count mismatch");
    }
    const int n = instance.size();
    PlsResult result{};
    std::set<std::vector<int>> explored;

    while (true) {
        std::vector<const FrontPoint*> open;
        for (const FrontPoint& member : archive.members()) {
            if (!explored.contains(member.assignment.mapping())) {
                open.push_back(&member);
            }
        }
        if (open.empty()) {
            result.closed = true;
            return result;
        }
        const FrontPoint picked =
            *open[static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(open.size()) - 1))];
        explored.insert(picked.assignment.mapping());

        for (int r = 0; r < n; ++r) {
            for (int s = r + 1; s < n; ++s) {
                if (result.neighbor_evaluations >= budget) return result;
                ObjectiveVector neighbor_values =
                    delta_swap_multi(instance, picked.assignment, r, s);
                for (std::size_t k = 0; k < neighbor_values.size(); ++k) {
                    neighbor_values[k] += picked.objectives[k];
                }
                ++result.neighbor_evaluations;
                Permutation neighbor = picked.assignment;
                neighbor.swap_positions(r, s);
                archive.insert(std::move(neighbor_values), std::move(neighbor));
            }
        }
    }
}

}  // namespace bfoqap
