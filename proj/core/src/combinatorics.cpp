#include "pwe/combinatorics.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "pwe/errors.hpp"

namespace pwe {

namespace {

void check_descending(const std::vector<int>& v, const char* what) {
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    if (v[i] < v[i + 1]) throw InvalidDurfee(std::string(what) + " is not weakly decreasing");
  }
  for (int x : v) {
    if (x < 0) throw InvalidDurfee(std::string(what) + " has a negative entry");
  }
}

}  // namespace

std::vector<int> MayaDiagram::entries() const {
  std::vector<int> out = pos;
  out.insert(out.end(), neg.begin(), neg.end());
  return out;
}

int Partition::weight() const {
  int w = 0;
  for (int p : parts) w += p;
  return w;
}

int Partition::length() const {
  return static_cast<int>(std::count_if(parts.begin(), parts.end(), [](int p) { return p > 0; }));
}

Partition Partition::reduced() const {
  Partition out = *this;
  while (!out.parts.empty() && out.parts.back() == 0) out.parts.pop_back();
  return out;
}

MayaDiagram maya_from_entries(const std::vector<int>& entries) {
  std::vector<int> sorted = entries;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw DuplicateIndex("repeated entry in Maya diagram");
  }
  MayaDiagram m;
  for (int x : sorted) (x >= 0 ? m.pos : m.neg).push_back(x);
  return m;
}

DurfeeSymbol durfee_from_maya(const MayaDiagram& m) {
  DurfeeSymbol ds;
  const int k = m.k();
  const int kbar = m.kbar();
  for (int i = 1; i <= k; ++i) ds.d.push_back(m.pos[i - 1] - k + i);
  // nbar_j counts from the most negative entry, which is stored last.
  for (int j = 1; j <= kbar; ++j) {
    const int nbar = m.neg[kbar - j];
    ds.dbar.push_back(-(nbar + 1) - kbar + j);
  }
  return ds;
}

MayaDiagram maya_from_durfee(const DurfeeSymbol& ds) {
  check_descending(ds.d, "d");
  check_descending(ds.dbar, "dbar");
  MayaDiagram m;
  const int k = ds.k();
  const int kbar = ds.kbar();
  for (int i = 1; i <= k; ++i) m.pos.push_back(ds.d[i - 1] + k - i);
  for (int j = kbar; j >= 1; --j) m.neg.push_back(-(ds.dbar[j - 1] + kbar - j) - 1);
  return m;
}

Partition partition_of(const MayaDiagram& m) {
  if (!m.flat()) throw NotPositive("partition_of needs a diagram without negative entries");
  Partition p;
  const int len = m.k();
  for (int i = 1; i <= len; ++i) p.parts.push_back(m.pos[i - 1] - len + i);
  return p;
}

Partition conjugate(const Partition& p) {
  const Partition r = p.reduced();
  Partition out;
  if (r.parts.empty()) return out;
  for (int j = 1; j <= r.parts.front(); ++j) {
    int count = 0;
    for (int part : r.parts) count += part >= j ? 1 : 0;
    out.parts.push_back(count);
  }
  return out;
}

MayaDiagram shift_left(const MayaDiagram& m) {
  MayaDiagram out = m;
  if (!out.pos.empty() && out.pos.back() == 0) {
    out.pos.pop_back();
  } else {
    out.neg.insert(out.neg.begin(), 0);  // becomes -1 below
  }
  for (int& x : out.pos) --x;
  for (int& x : out.neg) --x;
  // A former n = 1 lands on 0 and stays in pos; nothing crosses the origin otherwise.
  return out;
}

MayaDiagram shift_right(const MayaDiagram& m) {
  MayaDiagram out = m;
  if (!out.neg.empty() && out.neg.front() == -1) {
    out.neg.erase(out.neg.begin());
  } else {
    out.pos.push_back(-1);  // becomes 0 below
  }
  for (int& x : out.pos) ++x;
  for (int& x : out.neg) ++x;
  return out;
}

int flat_shift(const MayaDiagram& m) { return m.neg.empty() ? 0 : -m.neg.back(); }

FlatResult canonical_flat(const MayaDiagram& m) {
  FlatResult res{m, 0};
  while (!res.diagram.flat()) {
    res.diagram = shift_right(res.diagram);
    ++res.shift_count;
  }
  return res;
}

std::vector<MayaDiagram> orbit_diagrams(const MayaDiagram& m) {
  MayaDiagram cur = canonical_flat(m).diagram;
  // Trailing zeros of the partition are reducible; strip them first.
  while (!cur.pos.empty() && cur.pos.back() == 0) cur = shift_left(cur);
  std::vector<MayaDiagram> chain{cur};
  while (!cur.pos.empty()) {
    cur = shift_left(cur);
    chain.push_back(cur);
  }
  return chain;
}

std::vector<DurfeeSymbol> orbit(const MayaDiagram& m) {
  std::vector<DurfeeSymbol> out;
  for (const auto& d : orbit_diagrams(m)) out.push_back(durfee_from_maya(d));
  return out;
}

std::string exponent_notation(const std::vector<int>& parts) {
  if (parts.empty()) return "∅";
  std::ostringstream os;
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    if (i > 0) os << ',';
    os << parts[i];
    if (j - i > 1) os << '^' << (j - i);
    i = j;
  }
  return os.str();
}

std::string to_string(const MayaDiagram& m) {
  std::ostringstream os;
  os << '(';
  const auto e = m.entries();
  for (std::size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
  os << ')';
  return os.str();
}

std::string to_string(const DurfeeSymbol& ds) {
  return "[" + exponent_notation(ds.d) + "|" + exponent_notation(ds.dbar) + "]";
}

std::string to_string(const Partition& p) { return "(" + exponent_notation(p.parts) + ")"; }

std::string to_string(const UniversalCharacter& uc) {
  return to_string(durfee_from_maya(uc.psi)) + "⊗" + to_string(durfee_from_maya(uc.phi));
}

}  // namespace pwe
