// Collection from the left over the defining relations of G(t).  This is the
// ground-truth evaluator: it never touches the closed-form Hall polynomials.
#pragma once

#include "hall5/numbers.hpp"
#include "hall5/presentation.hpp"

namespace hall5 {

class Collector {
 public:
  // The collector itself runs on any presentation, consistent or not;
  // consistency_direct depends on that.  The default step ceiling guards
  // against runaway collection (exceeding it throws CollectionOverflow).
  explicit Collector(const GroupPresentation& G,
                     long step_ceiling = 1'000'000);

  const GroupPresentation& presentation() const { return G_; }

  ExponentVector multiply(const ExponentVector& a,
                          const ExponentVector& b) const;
  ExponentVector invert(const ExponentVector& a) const;
  ExponentVector power(const ExponentVector& a, const Int& x) const;

  // Collects an arbitrary word given as (generator, exponent) letters.
  ExponentVector collect_word(
      const std::vector<std::pair<int, Int>>& word) const;

  // The tail (c_{j+1},...,c_n) with g_j^x g_i^y = g_i^y g_j^x g_{j+1}^c ...;
  // requires i < j.  Returned vector has length n - j.
  ExponentVector conjugate_power(int j, int i, const Int& x,
                                 const Int& y) const;

 private:
  GroupPresentation G_;
  long ceiling_;
};

// Free-function forms.  These enforce the consistency precondition; the
// member functions above do not.
ExponentVector collect_multiply(const GroupPresentation& G,
                                const ExponentVector& a,
                                const ExponentVector& b);
ExponentVector collect_invert(const GroupPresentation& G,
                              const ExponentVector& a);
ExponentVector collect_power(const GroupPresentation& G,
                             const ExponentVector& a, const Int& x);
ExponentVector conjugate_power(const GroupPresentation& G, int j, int i,
                               const Int& x, const Int& y);

}  // namespace hall5
