#pragma once

#include <cstdint>
#include <vector>

#include "bfoqap/evaluate.hpp"
#include "bfoqap/tabu.hpp"
#include "bfoqap/variation.hpp"

namespace bfoqap {

/// Population-level knobs. Comments give the conventional short symbols
/// the CLI flags use. Defaults are the benchmark settings.
struct BfoConfig {
    int population = 50;                   // S; must be even and >= 2
    int chemotactic_steps = 10;            // Nc
    int reproduction_rounds = 4;           // Nre
    int dispersal_rounds = 10;             // Ned
    double dispersal_probability = 0.25;   // Ped, in [0, 1]
    MutationKind mutation = MutationKind::swap;
    int eras = 10;        // replicate count; consumed by batch runners, one run per solve call
    std::uint64_t seed = 0;
    TabuParams tabu;      // intensification applied to the best-so-far each dispersal round
};

struct TracePoint {
    long long evaluations;  // grand-total evaluation count when the record improved
    Cost best_cost;
};

struct RunReport {
    Cost best_cost = 0;
    Permutation best{1};
    long long evaluations = 0;  // grand total: all counters below
    long long initial_evaluations = 0;
    long long chemotactic_evaluations = 0;
    long long dispersal_evaluations = 0;
    long long tabu_neighbor_evaluations = 0;
    double wall_ms = 0.0;  // excluded from the determinism guarantee
    std::vector<TracePoint> trace;  // record improvements; best_cost non-increasing
};

/// One run. Random population of S assignments, then dispersal_rounds
/// iterations of: reproduction_rounds x (chemotactic_steps of greedy
/// mutation over the population, then health-based reproduction), followed
/// by random dispersal and a tabu pass on the best-so-far (every round,
/// including the last).
///
/// Greedy chemotaxis: the mutant replaces its bacterium only when not
/// worse. Health accumulates the retained cost after each step; the
/// lowest-health half survives reproduction and is duplicated. Dispersal
/// re-randomizes each bacterium with probability dispersal_probability and
/// never degrades the best-so-far record.
///
/// With config.seed fixed the report is identical run to run except
/// wall_ms.
RunReport bfo_solve(const QapInstance&, const BfoConfig&);

/// Ablated variant: the same loop skeleton with a plain random walk.
/// Mutants are accepted unconditionally, there is no tabu pass, and the
/// tumble is always a position swap (config.mutation is ignored).
RunReport bfo_baseline_solve(const QapInstance&, const BfoConfig&);

namespace detail {

struct Bacterium {
    Permutation perm;
    Cost cost;
    Cost health;
};

/// Stable-sorts by accumulated health ascending, overwrites the worse half
/// with copies of the better half, and zeroes every health.
/// Population size must be even.
void reproduce_by_health(std::vector<Bacterium>&);

}  // namespace detail

}  // namespace bfoqap
