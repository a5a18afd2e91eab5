#pragma once

#include <cstdint>
#include <vector>

#include "pwe/combinatorics.hpp"

namespace pwe {

// Every pair of index sets drawn from [lo, hi] with |psi| + |phi| <= max_total,
// ordered by total size, then lexicographically.
std::vector<UniversalCharacter> enumerate_ucs(int max_total, int lo, int hi);

// `count` pairs with each family of size 0..max_family drawn uniformly from
// [lo, hi]; deterministic for a given seed.
std::vector<UniversalCharacter> random_ucs(int count, int max_family, int lo, int hi, std::uint64_t seed);

}  // namespace pwe
