#pragma once

#include <string>
#include <string_view>

#include "bfoqap/permutation.hpp"
#include "bfoqap/rng.hpp"

namespace bfoqap {

/// Unary move applied during chemotaxis.
enum class MutationKind { swap, p_over_3, inversion };

/// CLI tokens: "swap", "p3", "inversion". Throws std::invalid_argument on
/// anything else.
MutationKind parse_mutation_kind(std::string_view token);
std::string to_string(MutationKind);

/// Exchanges two distinct random positions. Requires n >= 2.
Permutation mutate_swap(const Permutation&, RandomSource&);

/// Splits the positions into three balanced contiguous blocks (any
/// remainder widens the leading blocks), picks two distinct blocks
/// uniformly, and exchanges them elementwise over the shorter of the two
/// block lengths (prefix alignment). Requires n >= 3.
Permutation mutate_p_over_3(const Permutation&, RandomSource&);

/// Reverses a random closed segment [a, b], a < b. Requires n >= 2.
Permutation mutate_inversion(const Permutation&, RandomSource&);

/// Dispatcher over MutationKind.
Permutation mutate(const Permutation&, MutationKind, RandomSource&);

/// Uniform-like crossover for assignments: positions where the parents
/// agree are inherited; the rest are filled left to right with donors
/// alternating between the parents, starting from a random one. A used-up
/// donor value falls back to the other parent's value at that position,
/// and if both are taken, to a uniformly random unused location.
/// Parents must have equal size.
Permutation crossover_ulx(const Permutation& parent_a, const Permutation& parent_b,
                          RandomSource&);

}  // namespace bfoqap
