#include "bfoqap/mobfo.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace bfoqap {

namespace detail {

std::vector<int> select_survivors(const std::vector<ObjectiveVector>& pool,
                                  int survivor_count) {
    if (survivor_count < 0 || static_cast<std::size_t>(survivor_count) > pool.size()) {
        throw std::invalid_argument("select_survivors: bad survivor_count");
    }
    if (survivor_count == 0) return {};
    const std::vector<int> ranks = fast_nondominated_sort(pool);
    const int max_rank = *std::max_element(ranks.begin(), ranks.end());

    std::vector<int> survivors;
    survivors.reserve(static_cast<std::size_t>(survivor_count));
    for (int rank = 0; rank <= max_rank; ++rank) {
        std::vector<int> members;  // pool order within the rank
        for (std::size_t i = 0; i < pool.size(); ++i) {
            if (ranks[i] == rank) members.push_back(static_cast<int>(i));
        }
        const int remaining = survivor_count - static_cast<int>(survivors.size());
        if (static_cast<int>(members.size()) <= remaining) {
            survivors.insert(survivors.end(), members.begin(), members.end());
            if (static_cast<int>(survivors.size()) == survivor_count) break;
            continue;
        }
        std::vector<ObjectiveVector> member_values;
        member_values.reserve(members.size());
        for (int i : members) member_values.push_back(pool[static_cast<std::size_t>(i)]);
        const std::vector<double> crowd = crowding_distances(member_values);
        std::vector<std::size_t> order(members.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return crowd[a] > crowd[b];  // stable: pool order breaks ties
        });
        for (int t = 0; t < remaining; ++t) {
            survivors.push_back(members[order[static_cast<std::size_t>(t)]]);
        }
        break;
    }
    return survivors;
}

}  // namespace detail

namespace {

struct Individual {
    Permutation perm;
    ObjectiveVector values;
};

void validate(const MobfoConfig& config) {
    if (config.core.population < 2 || config.core.population % 2 != 0) {
        throw std::invalid_argument("MobfoConfig: population must be even and >= 2");
    }
    if (config.core.chemotactic_steps < 1 || config.core.reproduction_rounds < 1 ||
        config.core.dispersal_rounds < 1) {
        throw std::invalid_argument("MobfoConfig: loop counts must be >= 1");
    }
    if (config.core.dispersal_probability < 0.0 || config.core.dispersal_probability > 1.0) {
        throw std::invalid_argument("MobfoConfig: dispersal_probability must be in [0, 1]");
    }
    if (config.core.eras < 1) {
        throw std::invalid_argument("MobfoConfig: eras must be >= 1");
    }
}

std::pair<ParetoArchive, MobfoReport> run(const MqapInstance& instance,
                                          const MobfoConfig& config, bool with_crossover,
                                          bool with_pls, bool greedy_pool_survival,
                                          MutationKind mutation) {
    validate(config);
    const auto started = std::chrono::steady_clock::now();
    const int n = instance.size();
    const int s = config.core.population;
    const long long pls_budget = config.pls_budget > 0
                                     ? config.pls_budget
                                     : 50LL * static_cast<long long>(n) * n;
    RandomSource rng(config.core.seed);
    ParetoArchive archive(instance.objective_count(), config.archive_capacity);
    MobfoReport report;

    std::vector<Individual> population;
    population.reserve(static_cast<std::size_t>(s));
    for (int i = 0; i < s; ++i) {
        Permutation perm = Permutation::random(n, rng);
        ObjectiveVector values = evaluate_multi(instance, perm);
        ++report.initial_evaluations;
        archive.insert(values, perm);
        population.push_back(Individual{std::move(perm), std::move(values)});
    }

    auto evaluate_into = [&](Permutation perm, long long& counter) {
        ObjectiveVector values = evaluate_multi(instance, perm);
        ++counter;
        archive.insert(values, perm);
        return Individual{std::move(perm), std::move(values)};
    };

    for (int ell = 0; ell < config.core.dispersal_rounds; ++ell) {
        for (int k = 0; k < config.core.reproduction_rounds; ++k) {
            for (int j = 0; j < config.core.chemotactic_steps; ++j) {
                if (greedy_pool_survival) {
                    // Pool the incumbents with everything new this step, then
                    // truncate back to S by rank/crowding.
                    std::vector<Individual> pool = population;
                    if (with_crossover) {
                        std::vector<int> order(static_cast<std::size_t>(s));
                        std::iota(order.begin(), order.end(), 0);
                        rng.shuffle(order);
                        for (int pair = 0; pair < s / 2; ++pair) {
                            const Permutation& a =
                                population[static_cast<std::size_t>(order[2 * pair])].perm;
                            const Permutation& b =
                                population[static_cast<std::size_t>(order[2 * pair + 1])].perm;
                            Permutation child = crossover_ulx(a, b, rng);
                            Permutation mutated_child = mutate(child, mutation, rng);
                            pool.push_back(evaluate_into(std::move(mutated_child),
                                                         report.chemotactic_evaluations));
                        }
                    }
                    for (int i = 0; i < s; ++i) {
                        Permutation mutant =
                            mutate(population[static_cast<std::size_t>(i)].perm, mutation, rng);
                        pool.push_back(
                            evaluate_into(std::move(mutant), report.chemotactic_evaluations));
                    }
                    std::vector<ObjectiveVector> pool_values;
                    pool_values.reserve(pool.size());
                    for (const Individual& ind : pool) pool_values.push_back(ind.values);
                    const std::vector<int> survivors =
                        detail::select_survivors(pool_values, s);
                    std::vector<Individual> next;
                    next.reserve(static_cast<std::size_t>(s));
                    for (int idx : survivors) {
                        next.push_back(pool[static_cast<std::size_t>(idx)]);
                    }
                    population = std::move(next);
                } else {
                    // Baseline random walk: the swap mutant replaces its
                    // bacterium unconditionally.
                    for (Individual& ind : population) {
                        Permutation mutant = mutate(ind.perm, mutation, rng);
                        ind = evaluate_into(std::move(mutant),
                                            report.chemotactic_evaluations);
                    }
                }
            }
            // Reproduction: better half by (rank, crowding, order), duplicated.
            std::vector<ObjectiveVector> values;
            values.reserve(population.size());
            for (const Individual& ind : population) values.push_back(ind.values);
            const std::vector<int> half = detail::select_survivors(values, s / 2);
            std::vector<Individual> next;
            next.reserve(static_cast<std::size_t>(s));
            for (int idx : half) next.push_back(population[static_cast<std::size_t>(idx)]);
            for (int i = 0; i < s / 2; ++i) next.push_back(next[static_cast<std::size_t>(i)]);
            population = std::move(next);
        }
        for (Individual& ind : population) {
            if (!rng.bernoulli(config.core.dispersal_probability)) continue;
            ind = evaluate_into(Permutation::random(n, rng), report.dispersal_evaluations);
        }
        if (with_pls) {
            const PlsResult pls = pareto_local_search(instance, archive, pls_budget, rng);
            report.pls_neighbor_evaluations += pls.neighbor_evaluations;
        }
    }

    report.evaluations = report.initial_evaluations + report.chemotactic_evaluations +
                         report.dispersal_evaluations + report.pls_neighbor_evaluations;
    report.wall_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - started)
                         .count();
    return {std::move(archive), report};
}

}  // namespace

std::pair<ParetoArchive, MobfoReport> mobfo_solve(const MqapInstance& instance,
                                                  const MobfoConfig& config) {
    return run(instance, config, /*with_crossover=*/true, /*with_pls=*/true,
               /*greedy_pool_survival=*/true, config.core.mutation);
}

std::pair<ParetoArchive, MobfoReport> mobfo_baseline_solve(const MqapInstance& instance,
                                                           const MobfoConfig& config) {
    return run(instance, config, /*with_crossover=*/false, /*with_pls=*/false,
               /*greedy_pool_survival=*/false, MutationKind::swap);
}

}  // namespace bfoqap
