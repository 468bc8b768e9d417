// Symbolic collection: runs the collection loop with polynomial exponents to
// re-derive the multiplication system from the swap table, then reduces the
// fifth polynomial modulo the consistency relation.
#pragma once

#include "hall5/hallpolys.hpp"
#include "hall5/polynomial.hpp"

namespace hall5 {

// Replays the collection loop over the table: v = (a1,...,a4,a5+b5), pending
// items b4..b1 popped b1 first; each pop substitutes x -> v_j, y -> popped
// exponent into the (i,j) tail entries, routes k=5 straight into v5 and
// pushes the rest.  Returns the unreduced system.  Throws MalformedTable if
// an (i,j) entry with i < j <= 4 is missing.
HallSystem collect_symbolic(const RTable& table);

// Single-pass lexicographic reduction by t123*t345, mirroring the original
// derivation; with both_relations also by t124*t345 + t145*t234 - t134*t245
// (for ideal-membership diagnosis).
HallSystem reduce_by_consistency(const HallSystem& sys,
                                 bool both_relations = false);

struct ComparisonEntry {
  bool identical = false;
  Polynomial difference;          // derived - stated
  bool vanishes_on_variety = false;  // at sampled consistent points
};

struct ComparisonReport {
  std::array<ComparisonEntry, 5> entries;
  const ComparisonEntry& operator[](int i) const { return entries.at(i - 1); }
  bool all_equivalent() const;
};

// Compares coordinate-wise; any nonzero difference polynomial is evaluated at
// `points` random (t, a, b) with t drawn from the consistent sampler.
ComparisonReport compare_with_theorem(const HallSystem& derived,
                                      const HallSystem& stated,
                                      unsigned long seed = 1,
                                      int points = 200);

}  // namespace hall5
