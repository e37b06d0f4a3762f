#pragma once

#include <cstddef>
#include <cstdint>

#include "bnreorder/dag.hpp"

namespace bnreorder {

/// Reproducible random DAG over nodes v0..v{n-1}.
///
/// The generator is std::mt19937_64 seeded with `seed`, which the standard
/// pins bit for bit. A Fisher-Yates shuffle (index = draw % (i + 1), i from
/// n - 1 down to 1) fixes a permutation p; then for every i < j in
/// lexicographic order one draw u = (draw >> 11) * 2^-53 decides whether
/// p[i] -> p[j] is present (u < density). No std:: distributions are used,
/// so instances match across platforms and standard libraries.
///
/// Errors: EmptySet when n == 0, BadDensity outside [0, 1].
Dag random_dag(std::size_t n, double density, std::uint64_t seed);

/// Uniformly shuffled ordering of `dag`'s nodes under the same generator
/// conventions.
Ordering random_ordering(const Dag& dag, std::uint64_t seed);

}  // namespace bnreorder
