#include <algorithm>
#include <sstream>

#include "pwe/combinatorics.hpp"

namespace pwe {

std::string render_maya(const MayaDiagram& m) {
  int lo = -3;
  int hi = 2;
  for (int x : m.entries()) {
    lo = std::min(lo, x - 2);
    hi = std::max(hi, x + 2);
  }
  auto filled = [&](int x) {
    if (x >= 0) return std::find(m.pos.begin(), m.pos.end(), x) != m.pos.end();
    return std::find(m.neg.begin(), m.neg.end(), x) == m.neg.end();
  };
  std::ostringstream os;
  os << "... ";
  for (int x = lo; x <= hi; ++x) {
    if (x == 0) os << "| ";
    os << (filled(x) ? "●" : "○") << ' ';
  }
  os << "...\n";
  os << "window " << lo << ".." << hi << ", origin between -1 and 0\n";
  return os.str();
}

std::string render_young(const MayaDiagram& m) {
  const auto flat = canonical_flat(m).diagram;
  const auto rows = conjugate(partition_of(flat)).parts;
  const int k = m.k();
  const int kbar = m.kbar();
  std::ostringstream os;
  auto origin_line = [&] {
    os << std::string(2 * static_cast<std::size_t>(k), ' ') << "+ origin (k=" << k
       << ", kbar=" << kbar << ")\n";
  };
  if (kbar == 0) origin_line();
  for (std::size_t j = 0; j < rows.size(); ++j) {
    for (int c = 0; c < rows[j]; ++c) os << "[]";
    os << '\n';
    if (static_cast<int>(j) + 1 == kbar) origin_line();
  }
  if (rows.empty() && kbar > 0) origin_line();
  return os.str();
}

}  // namespace pwe
