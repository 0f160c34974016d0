#include "bfoqap/variation.hpp"

#include <array>
#include <stdexcept>
#include <vector>

namespace bfoqap {

MutationKind parse_mutation_kind(std::string_view token) {
    if (token == "swap") return MutationKind::swap;
    if (token == "p3") return MutationKind::p_over_3;
    if (token == "inversion") return MutationKind::inversion;
    throw std::invalid_argument("unknown mutation kind: " + std::string(token));
}

std::string to_string(MutationKind kind) {
    switch (kind) {
        case MutationKind::swap: return "swap";
        case MutationKind::p_over_3: return "p3";
        case MutationKind::inversion: return "inversion";
    }
    throw std::invalid_argument("unknown MutationKind value");
}

namespace {

// Two distinct indices in [0, n); uniform over unordered pairs.
std::pair<int, int> distinct_pair(int n, RandomSource& rng) {
    const int a = rng.uniform_int(0, n - 1);
    int b = rng.uniform_int(0, n - 2);
    if (b >= a) ++b;
    return {a, b};
}

}  // namespace

Permutation mutate_swap(const Permutation& p, RandomSource& rng) {
    if (p.size() < 2) throw std::invalid_argument("mutate_swap: size must be >= 2");
    auto [a, b] = distinct_pair(p.size(), rng);
    Permutation out = p;
    out.swap_positions(a, b);
    return out;
}

Permutation mutate_p_over_3(const Permutation& p, RandomSource& rng) {
    const int n = p.size();
    if (n < 3) throw std::invalid_argument("mutate_p_over_3: size must be >= 3");
    const int base = n / 3;
    const int rem = n % 3;
    const std::array<int, 3> len = {base + (rem > 0 ? 1 : 0), base + (rem > 1 ? 1 : 0), base};
    const std::array<int, 3> start = {0, len[0], len[0] + len[1]};
    auto [bi, bj] = distinct_pair(3, rng);
    const int shorter = std::min(len[bi], len[bj]);
    Permutation out = p;
    for (int t = 0; t < shorter; ++t) {
        out.swap_positions(start[bi] + t, start[bj] + t);
    }
    return out;
}

Permutation mutate_inversion(const Permutation& p, RandomSource& rng) {
    if (p.size() < 2) throw std::invalid_argument("mutate_inversion: size must be >= 2");
    auto [a, b] = distinct_pair(p.size(), rng);
    if (a > b) std::swap(a, b);
    Permutation out = p;
    out.reverse_segment(a, b);
    return out;
}

Permutation mutate(const Permutation& p, MutationKind kind, RandomSource& rng) {
    switch (kind) {
        case MutationKind::swap: return mutate_swap(p, rng);
        case MutationKind::p_over_3: return mutate_p_over_3(p, rng);
        case MutationKind::inversion: return mutate_inversion(p, rng);
    }
    throw std::invalid_argument("unknown MutationKind value");
}

Permutation crossover_ulx(const Permutation& parent_a, const Permutation& parent_b,
                          RandomSource& rng) {
    const int n = parent_a.size();
    if (parent_b.size() != n) {
        throw std::invalid_argument("crossover_ulx: parent sizes differ");
    }
    std::vector<int> child(static_cast<std::size_t>(n), -1);
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        if (parent_a[i] == parent_b[i]) {
            child[i] = parent_a[i];
            used[static_cast<std::size_t>(parent_a[i])] = 1;
        }
    }
    bool donor_is_a = rng.bernoulli(0.5);
    for (int i = 0; i < n; ++i) {
        if (child[i] >= 0) continue;
        const int first = donor_is_a ? parent_a[i] : parent_b[i];
        const int second = donor_is_a ? parent_b[i] : parent_a[i];
        int value;
        if (!used[static_cast<std::size_t>(first)]) {
            value = first;
        } else if (!used[static_cast<std::size_t>(second)]) {
            value = second;
        } else {
            std::vector<int> unused;
            for (int v = 0; v < n; ++v) {
                if (!used[static_cast<std::size_t>(v)]) unused.push_back(v);
            }
            value = unused[static_cast<std::size_t>(
                rng.uniform_int(0, static_cast<int>(unused.size()) - 1))];
        }
        child[i] = value;
        used[static_cast<std::size_t>(value)] = 1;
        donor_is_a = !donor_is_a;
    }
    return Permutation(std::move(child));
}

}  // namespace bfoqap
