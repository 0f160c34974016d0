#pragma once

#include <optional>
#include <utility>

#include "bfoqap/bfo.hpp"
#include "bfoqap/pareto.hpp"

namespace bfoqap {

struct MobfoConfig {
    BfoConfig core;  // population, rounds, dispersal, mutation, seed, eras
    /// Pareto-local-search budget (neighbor evaluations) per dispersal
    /// round; <= 0 selects 50 n^2.
    long long pls_budget = 0;
    /// Archive bound; unset = unbounded.
    std::optional<std::size_t> archive_capacity;
};

struct MobfoReport {
    long long evaluations = 0;  // grand total of the counters below
    long long initial_evaluations = 0;
    long long chemotactic_evaluations = 0;
    long long dispersal_evaluations = 0;
    long long pls_neighbor_evaluations = 0;
    double wall_ms = 0.0;  // excluded from the determinism guarantee
};

/// Multiobjective run. Every chemotactic step pairs the population
/// randomly, produces one crossover child per pair, mutates every
/// bacterium and every child, and truncates the pooled old and new
/// candidates back to S survivors by nondominated rank, then crowding
/// distance, then pool order. Reproduction keeps the better half by the
/// same ordering and duplicates it. Dispersal re-randomizes bacteria with
/// the configured probability.
///
/// Every evaluated assignment is offered to the Pareto archive, which is
/// never cleared; each dispersal round (including the last) ends with a
/// Pareto local search pass over the archive.
///
/// With config.core.seed fixed the archive and report are identical run to
/// run except wall_ms.
std::pair<ParetoArchive, MobfoReport> mobfo_solve(const MqapInstance&, const MobfoConfig&);

/// Ablated variant: no crossover, no Pareto local search, and chemotaxis
/// is an unconditional random walk of position swaps (config mutation is
/// ignored). The archive still collects every evaluation, and
/// reproduction/dispersal work as in mobfo_solve.
std::pair<ParetoArchive, MobfoReport> mobfo_baseline_solve(const MqapInstance&, const MobfoConfig&);

namespace detail {

/// Pool truncation used by survival and reproduction: survivor indices
/// into `pool`, chosen by (nondominated rank, crowding distance within the
/// rank, pool order), in selection order.
std::vector<int> select_survivors(const std::vector<ObjectiveVector>& pool,
                                  int survivor_count);

}  // namespace detail

}  // namespace bfoqap
