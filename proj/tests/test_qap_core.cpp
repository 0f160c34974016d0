#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

#include "bfoqap/delta_table.hpp"
#include "bfoqap/evaluate.hpp"
#include "bfoqap/instance.hpp"
#include "bfoqap/matrix.hpp"
#include "bfoqap/permutation.hpp"
#include "bfoqap/rng.hpp"

using namespace bfoqap;

namespace {

SquareMatrix random_matrix(int n, RandomSource& rng, int lo = 0, int hi = 99) {
    SquareMatrix m(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m(i, j) = rng.uniform_int(lo, hi);
    }
    return m;
}

QapInstance random_instance(int n, RandomSource& rng) {
    // Deliberately asymmetric with nonzero diagonals so the tests cover the
    // general double-sum objective, not just the symmetric special case.
    return QapInstance{random_matrix(n, rng), random_matrix(n, rng)};
}

/// Reference objective computed directly from the definition.
Cost naive_cost(const QapInstance& inst, const Permutation& phi) {
    Cost total = 0;
    const int n = inst.size();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            total += inst.flow(i, j) * inst.distance(phi[i], phi[j]);
        }
    }
    return total;
}

}  // namespace

TEST_CASE("uniform_int stays in bounds and covers the range") {
    RandomSource rng(7);
    std::set<int> seen;
    for (int i = 0; i < 2000; ++i) {
        const int v = rng.uniform_int(-3, 4);
        REQUIRE(v >= -3);
        REQUIRE(v <= 4);
        seen.insert(v);
    }
    CHECK(seen.size() == 8);
    CHECK(rng.uniform_int(5, 5) == 5);
    CHECK_THROWS_AS(rng.uniform_int(2, 1), std::invalid_argument);
}

TEST_CASE("uniform01 lies in [0, 1)") {
    RandomSource rng(11);
    for (int i = 0; i < 1000; ++i) {
        const double u = rng.uniform01();
        REQUIRE(u >= 0.0);
        REQUIRE(u < 1.0);
    }
}

TEST_CASE("equal seeds give identical streams, different seeds diverge") {
    RandomSource a(123), b(123), c(124);
    std::vector<std::uint64_t> xs, ys, zs;
    for (int i = 0; i < 64; ++i) {
        xs.push_back(a.next_u64());
        ys.push_back(b.next_u64());
        zs.push_back(c.next_u64());
    }
    CHECK(xs == ys);
    CHECK(xs != zs);
}

TEST_CASE("derive_seed matches the frozen splitmix64 finalizer values") {
    // Computed independently from the published splitmix64 mix constants.
    CHECK(RandomSource::derive_seed(0, 0) == 16294208416658607535ull);
    CHECK(RandomSource::derive_seed(0, 1) == 7960286522194355700ull);
    CHECK(RandomSource::derive_seed(0, 2) == 487617019471545679ull);
    CHECK(RandomSource::derive_seed(1, 0) == 10451216379200822465ull);
    CHECK(RandomSource::derive_seed(1, 1) == 13757245211066428519ull);
    CHECK(RandomSource::derive_seed(1, 2) == 17911839290282890590ull);
    CHECK(RandomSource::derive_seed(42, 0) == 13679457532755275413ull);
}

TEST_CASE("derive_seed separates nearby bases and indices") {
    std::set<std::uint64_t> seeds;
    for (std::uint64_t base = 0; base < 10; ++base) {
        for (std::uint64_t idx = 0; idx < 10; ++idx) {
            seeds.insert(RandomSource::derive_seed(base, idx));
        }
    }
    CHECK(seeds.size() == 100);
}

TEST_CASE("shuffle permutes the elements deterministically") {
    std::vector<int> xs(20);
    std::iota(xs.begin(), xs.end(), 0);
    std::vector<int> once = xs, twice = xs;
    RandomSource a(9), b(9);
    a.shuffle(once);
    b.shuffle(twice);
    CHECK(once == twice);
    std::vector<int> sorted = once;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == xs);
}

TEST_CASE("SquareMatrix construction and access") {
    SquareMatrix m(3, 2);
    CHECK(m.size() == 3);
    CHECK(m(2, 2) == 2);
    m(0, 1) = -5;
    CHECK(m(0, 1) == -5);

    const SquareMatrix rows = SquareMatrix::from_rows({{1, 2}, {3, 4}});
    CHECK(rows(1, 0) == 3);
    CHECK_THROWS_AS(SquareMatrix::from_rows({{1, 2}, {3}}), std::invalid_argument);
    CHECK(SquareMatrix::from_rows({}).size() == 0);  // empty is allowed; instances reject it
}

TEST_CASE("Permutation validates its mapping") {
    CHECK_THROWS_AS(Permutation(std::vector<int>{0, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation(std::vector<int>{0, 3, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation(std::vector<int>{-1, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation(std::vector<int>{}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation(0), std::invalid_argument);

    const Permutation id = Permutation::identity(4);
    CHECK(id.mapping() == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("Permutation operations") {
    Permutation p(std::vector<int>{2, 0, 3, 1});
    p.swap_positions(0, 3);
    CHECK(p.mapping() == std::vector<int>{1, 0, 3, 2});
    CHECK_THROWS_AS(p.swap_positions(0, 4), std::invalid_argument);

    p.reverse_segment(1, 3);
    CHECK(p.mapping() == std::vector<int>{1, 2, 3, 0});
    CHECK_THROWS_AS(p.reverse_segment(2, 1), std::invalid_argument);
    CHECK_THROWS_AS(p.reverse_segment(-1, 2), std::invalid_argument);

    const Permutation inv = p.inverse();
    for (int i = 0; i < p.size(); ++i) CHECK(inv[p[i]] == i);
}

TEST_CASE("random permutations are bijections and seed-stable") {
    RandomSource a(77), b(77);
    for (int n : {1, 2, 5, 12}) {
        const Permutation p = Permutation::random(n, a);
        const Permutation q = Permutation::random(n, b);
        CHECK(p == q);
        std::vector<int> sorted = p.mapping();
        std::sort(sorted.begin(), sorted.end());
        for (int i = 0; i < n; ++i) CHECK(sorted[static_cast<std::size_t>(i)] == i);
    }
}

TEST_CASE("evaluate matches a hand-computed 2x2 case") {
    const QapInstance inst{SquareMatrix::from_rows({{1, 2}, {3, 4}}),
                           SquareMatrix::from_rows({{5, 6}, {7, 8}})};
    // Identity: 1*5 + 2*6 + 3*7 + 4*8.
    CHECK(evaluate(inst, Permutation::identity(2)) == 70);
    // Swapped: 1*8 + 2*7 + 3*6 + 4*5.
    CHECK(evaluate(inst, Permutation(std::vector<int>{1, 0})) == 60);
}

TEST_CASE("evaluate equals the naive double sum on random instances") {
    RandomSource rng(31);
    for (int n : {3, 5, 8}) {
        const QapInstance inst = random_instance(n, rng);
        for (int t = 0; t < 20; ++t) {
            const Permutation phi = Permutation::random(n, rng);
            CHECK(evaluate(inst, phi) == naive_cost(inst, phi));
        }
    }
}

TEST_CASE("relabeling facilities commutes with composing the assignment") {
    // cost(F, D, phi o sigma) == cost(sigma F, D, phi) where sigma F is F
    // with both axes relabeled by sigma. Catches index-order mistakes that
    // symmetric random instances would mask.
    RandomSource rng(41);
    const int n = 6;
    const QapInstance inst = random_instance(n, rng);
    for (int t = 0; t < 10; ++t) {
        const Permutation phi = Permutation::random(n, rng);
        const Permutation sigma = Permutation::random(n, rng);

        std::vector<int> composed(n);
        for (int i = 0; i < n; ++i) composed[static_cast<std::size_t>(i)] = phi[sigma[i]];

        SquareMatrix relabeled(n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                relabeled(sigma[i], sigma[j]) = inst.flow(i, j);
            }
        }
        const QapInstance conjugated{relabeled, inst.distance};
        CHECK(evaluate(inst, Permutation(composed)) == evaluate(conjugated, phi));
    }
}

TEST_CASE("evaluate rejects a size mismatch") {
    const QapInstance inst{SquareMatrix(3, 1), SquareMatrix(3, 1)};
    CHECK_THROWS_AS(evaluate(inst, Permutation::identity(4)), std::invalid_argument);
}

TEST_CASE("delta_swap equals full re-evaluation, exhaustively for small n") {
    RandomSource rng(53);
    for (int n : {3, 4, 5}) {
        const QapInstance inst = random_instance(n, rng);
        std::vector<int> mapping(static_cast<std::size_t>(n));
        std::iota(mapping.begin(), mapping.end(), 0);
        do {
            const Permutation phi{mapping};
            const Cost base = evaluate(inst, phi);
            for (int r = 0; r < n; ++r) {
                for (int s = r + 1; s < n; ++s) {
                    Permutation swapped = phi;
                    swapped.swap_positions(r, s);
                    REQUIRE(delta_swap(inst, phi, r, s) == evaluate(inst, swapped) - base);
                }
            }
        } while (std::next_permutation(mapping.begin(), mapping.end()));
    }
}

TEST_CASE("delta_swap fuzz on larger asymmetric instances") {
    RandomSource rng(59);
    for (int n : {6, 7, 8}) {
        const QapInstance inst = random_instance(n, rng);
        for (int t = 0; t < 50; ++t) {
            const Permutation phi = Permutation::random(n, rng);
            const int r = rng.uniform_int(0, n - 1);
            int s = rng.uniform_int(0, n - 2);
            if (s >= r) ++s;
            Permutation swapped = phi;
            swapped.swap_positions(r, s);
            REQUIRE(delta_swap(inst, phi, r, s) ==
                    evaluate(inst, swapped) - evaluate(inst, phi));
        }
    }
}

TEST_CASE("delta_swap_multi agrees with per-objective single deltas") {
    RandomSource rng(61);
    const int n = 6;
    const MqapInstance inst{
        {random_matrix(n, rng), random_matrix(n, rng), random_matrix(n, rng)},
        random_matrix(n, rng)};
    for (int t = 0; t < 25; ++t) {
        const Permutation phi = Permutation::random(n, rng);
        const int r = rng.uniform_int(0, n - 1);
        int s = rng.uniform_int(0, n - 2);
        if (s >= r) ++s;
        const ObjectiveVector deltas = delta_swap_multi(inst, phi, r, s);
        REQUIRE(deltas.size() == inst.flows.size());
        for (std::size_t k = 0; k < inst.flows.size(); ++k) {
            CHECK(deltas[k] == delta_swap(inst.flows[k], inst.distance, phi, r, s));
        }
    }
}

TEST_CASE("DeltaTable tracks cost and deltas through a chain of swaps") {
    RandomSource rng(67);
    const int n = 7;
    const QapInstance inst = random_instance(n, rng);
    DeltaTable table(inst, Permutation::random(n, rng));
    for (int step = 0; step < 30; ++step) {
        const Permutation& phi = table.permutation();
        REQUIRE(table.current_cost() == evaluate(inst, phi));
        for (int r = 0; r < n; ++r) {
            for (int s = r + 1; s < n; ++s) {
                REQUIRE(table.delta(r, s) == delta_swap(inst, phi, r, s));
            }
        }
        const int r = rng.uniform_int(0, n - 1);
        int s = rng.uniform_int(0, n - 2);
        if (s >= r) ++s;
        table.apply_swap(r, s);
    }
}

TEST_CASE("DeltaTable rejects invalid construction and swaps") {
    const QapInstance inst{SquareMatrix(4, 1), SquareMatrix(4, 1)};
    CHECK_THROWS_AS(DeltaTable(inst, Permutation::identity(5)), std::invalid_argument);
    DeltaTable table(inst, Permutation::identity(4));
    CHECK_THROWS_AS(table.apply_swap(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(table.apply_swap(0, 4), std::invalid_argument);
}
