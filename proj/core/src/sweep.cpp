#include "pwe/sweep.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "pwe/errors.hpp"

namespace pwe {

namespace {

// All subsets of pool of the given size, in lexicographic order of positions.
void subsets(const std::vector<int>& pool, int size, std::vector<std::vector<int>>& out) {
  const int n = static_cast<int>(pool.size());
  if (size > n) return;
  std::vector<int> pick(static_cast<std::size_t>(size));
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    std::vector<int> s;
    for (int i : pick) s.push_back(pool[i]);
    out.push_back(std::move(s));
    int i = size - 1;
    while (i >= 0 && pick[i] == n - size + i) --i;
    if (i < 0) return;
    ++pick[i];
    for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
  }
}

std::vector<int> range(int lo, int hi) {
  if (lo > hi) throw ParseError("empty index range");
  std::vector<int> v(static_cast<std::size_t>(hi - lo + 1));
  std::iota(v.begin(), v.end(), lo);
  return v;
}

}  // namespace

std::vector<UniversalCharacter> enumerate_ucs(int max_total, int lo, int hi) {
  const auto pool = range(lo, hi);
  std::vector<std::vector<std::vector<int>>> by_size(static_cast<std::size_t>(max_total) + 1);
  for (int s = 0; s <= max_total; ++s) subsets(pool, s, by_size[s]);
  std::vector<UniversalCharacter> out;
  for (int total = 0; total <= max_total; ++total) {
    for (int m = total; m >= 0; --m) {
      for (const auto& psi : by_size[m]) {
        for (const auto& phi : by_size[total - m]) out.push_back({maya_from_entries(psi), maya_from_entries(phi)});
      }
    }
  }
  return out;
}

std::vector<UniversalCharacter> random_ucs(int count, int max_family, int lo, int hi, std::uint64_t seed) {
  auto pool = range(lo, hi);
  max_family = std::min<int>(max_family, static_cast<int>(pool.size()));
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> size_dist(0, max_family);
  auto draw = [&] {
    const int size = size_dist(rng);
    // Partial Fisher-Yates; std::shuffle's draw pattern is implementation-defined.
    for (int i = 0; i < size; ++i) {
      std::uniform_int_distribution<int> pick(i, static_cast<int>(pool.size()) - 1);
      std::swap(pool[i], pool[pick(rng)]);
    }
    return maya_from_entries(std::vector<int>(pool.begin(), pool.begin() + size));
  };
  std::vector<UniversalCharacter> out;
  for (int i = 0; i < count; ++i) {
    MayaDiagram psi = draw();
    MayaDiagram phi = draw();
    out.push_back({std::move(psi), std::move(phi)});
  }
  return out;
}

}  // namespace pwe
