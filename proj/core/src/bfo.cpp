#include "bfoqap/bfo.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <vector>

namespace bfoqap {

namespace detail {

void reproduce_by_health(std::vector<Bacterium>& population) {
    if (population.size() % 2 != 0) {
        throw std::invalid_argument("reproduce_by_health: population size must be even");
    }
    std::stable_sort(population.begin(), population.end(),
                     [](const Bacterium& a, const Bacterium& b) { return a.health < b.health; });
    const std::size_t half = population.size() / 2;
    for (std::size_t i = 0; i < half; ++i) {
        population[half + i] = population[i];
    }
    for (Bacterium& b : population) b.health = 0;
}

}  // namespace detail

namespace {

void validate(const BfoConfig& config) {
    if (config.population < 2 || config.population % 2 != 0) {
        throw std::invalid_argument("BfoConfig: population must be even and >= 2");
    }
    if (config.chemotactic_steps < 1 || config.reproduction_rounds < 1 ||
        config.dispersal_rounds < 1) {
        throw std::invalid_argument("BfoConfig: loop counts must be >= 1");
    }
    if (config.dispersal_probability < 0.0 || config.dispersal_probability > 1.0) {
        throw std::invalid_argument("BfoConfig: dispersal_probability must be in [0, 1]");
    }
    if (config.eras < 1) {
        throw std::invalid_argument("BfoConfig: eras must be >= 1");
    }
}

RunReport run(const QapInstance& instance, const BfoConfig& config, bool with_tabu,
              bool greedy_acceptance, MutationKind mutation) {
    validate(config);
    const auto started = std::chrono::steady_clock::now();
    const int n = instance.size();
    const int s = config.population;
    RandomSource rng(config.seed);

    RunReport report;
    std::vector<detail::Bacterium> population;
    population.reserve(static_cast<std::size_t>(s));
    for (int i = 0; i < s; ++i) {
        Permutation perm = Permutation::random(n, rng);
        const Cost cost = evaluate(instance, perm);
        ++report.initial_evaluations;
        population.push_back(detail::Bacterium{std::move(perm), cost, 0});
    }

    auto total_evaluations = [&report] {
        return report.initial_evaluations + report.chemotactic_evaluations +
               report.dispersal_evaluations + report.tabu_neighbor_evaluations;
    };

    report.best_cost = population.front().cost;
    report.best = population.front().perm;
    for (const detail::Bacterium& b : population) {
        if (b.cost < report.best_cost) {
            report.best_cost = b.cost;
            report.best = b.perm;
        }
    }
    report.trace.push_back({total_evaluations(), report.best_cost});

    auto record = [&](Cost cost, const Permutation& perm) {
        if (cost < report.best_cost) {
            report.best_cost = cost;
            report.best = perm;
            report.trace.push_back({total_evaluations(), cost});
        }
    };

    for (int ell = 0; ell < config.dispersal_rounds; ++ell) {
        for (int k = 0; k < config.reproduction_rounds; ++k) {
            for (int j = 0; j < config.chemotactic_steps; ++j) {
                for (detail::Bacterium& b : population) {
                    Permutation mutant = mutate(b.perm, mutation, rng);
                    const Cost mutant_cost = evaluate(instance, mutant);
                    ++report.chemotactic_evaluations;
                    if (!greedy_acceptance || mutant_cost <= b.cost) {
                        b.perm = std::move(mutant);
                        b.cost = mutant_cost;
                    }
                    b.health += b.cost;  // accumulates the retained cost
                    record(b.cost, b.perm);
                }
            }
            detail::reproduce_by_health(population);
        }
        for (detail::Bacterium& b : population) {
            if (!rng.bernoulli(config.dispersal_probability)) continue;
            b.perm = Permutation::random(n, rng);
            b.cost = evaluate(instance, b.perm);
            ++report.dispersal_evaluations;
            b.health = 0;
            record(b.cost, b.perm);  // the record never degrades
        }
        if (with_tabu) {
            const TabuResult improved = tabu_improve(instance, report.best, config.tabu, rng);
            report.tabu_neighbor_evaluations += improved.neighbor_evaluations;
            record(improved.best_cost, improved.best);
        }
    }

    report.evaluations = total_evaluations();
    report.wall_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - started)
                         .count();
    return report;
}

}  // namespace

RunReport bfo_solve(const QapInstance& instance, const BfoConfig& config) {
    return run(instance, config, /*with_tabu=*/true, /*greedy_acceptance=*/true,
               config.mutation);
}

RunReport bfo_baseline_solve(const QapInstance& instance, const BfoConfig& config) {
    return run(instance, config, /*with_tabu=*/false, /*greedy_acceptance=*/false,
               MutationKind::swap);
}

}  // namespace bfoqap
