#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace pwe {

// A finite set of integers split at the origin.
// pos holds n_1 > ... > n_k >= 0, neg holds nbar_kbar > ... > nbar_1 (most negative last).
struct MayaDiagram {
  std::vector<int> pos;
  std::vector<int> neg;

  int k() const { return static_cast<int>(pos.size()); }
  int kbar() const { return static_cast<int>(neg.size()); }
  int size() const { return k() + kbar(); }
  bool empty() const { return pos.empty() && neg.empty(); }
  bool flat() const { return neg.empty(); }

  // All entries, pos first then neg, i.e. globally descending.
  std::vector<int> entries() const;

  auto operator<=>(const MayaDiagram&) const = default;
};

struct Partition {
  std::vector<int> parts;

  int weight() const;
  int length() const;                 // number of nonzero parts
  Partition reduced() const;          // trailing zeros removed
  auto operator<=>(const Partition&) const = default;
};

struct DurfeeSymbol {
  std::vector<int> d;
  std::vector<int> dbar;

  int k() const { return static_cast<int>(d.size()); }
  int kbar() const { return static_cast<int>(dbar.size()); }
  auto operator<=>(const DurfeeSymbol&) const = default;
};

struct UniversalCharacter {
  MayaDiagram psi;
  MayaDiagram phi;

  int m() const { return psi.size(); }
  int r() const { return phi.size(); }
  auto operator<=>(const UniversalCharacter&) const = default;
};

MayaDiagram maya_from_entries(const std::vector<int>& entries);
DurfeeSymbol durfee_from_maya(const MayaDiagram& m);
MayaDiagram maya_from_durfee(const DurfeeSymbol& ds);

Partition partition_of(const MayaDiagram& m);
Partition conjugate(const Partition& p);

MayaDiagram shift_left(const MayaDiagram& m);
MayaDiagram shift_right(const MayaDiagram& m);

struct FlatResult {
  MayaDiagram diagram;
  int shift_count = 0;
};
FlatResult canonical_flat(const MayaDiagram& m);

std::vector<DurfeeSymbol> orbit(const MayaDiagram& m);
// Same walk as orbit, returning the Maya diagrams instead of symbols.
std::vector<MayaDiagram> orbit_diagrams(const MayaDiagram& m);

// dbar_1 + kbar, the number of right shifts that flatten m.
int flat_shift(const MayaDiagram& m);

// Compact textual forms: "(6,5,2,1,-2,-3)", "[3^2,1^2|1^2]", "(5^2,3^2,2)".
std::string to_string(const MayaDiagram& m);
std::string to_string(const DurfeeSymbol& ds);
std::string to_string(const Partition& p);
std::string to_string(const UniversalCharacter& uc);

// Multiplicity-exponent notation used for partitions: 5,5,3 -> "5^2,3"; empty -> "∅".
std::string exponent_notation(const std::vector<int>& parts);

// ASCII pictures. The layout is described in README.md.
std::string render_maya(const MayaDiagram& m);
std::string render_young(const MayaDiagram& m);

}  // namespace pwe
