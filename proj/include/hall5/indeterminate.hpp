// The fixed indeterminate universe: a1..a5, b1..b5, x, y and t_ijk for
// 1 <= i < j < k <= 5.  No other symbols exist.
#pragma once

#include <compare>
#include <string_view>

#include "hall5/errors.hpp"

namespace hall5 {

// Indeterminates carry a fixed total order (highest precedence first):
//   t123 > t124 > t125 > t134 > t135 > t145 > t234 > t235 > t245 > t345
//   > a1 > .. > a5 > b1 > .. > b5 > x > y
// index() is the position in this list, so index 0 is the lex-largest
// variable.  The order is what makes reduction runs reproducible.
class Indeterminate {
 public:
  static constexpr int kCount = 22;

  // Construction by name; anything outside the universe is rejected.
  explicit Indeterminate(std::string_view name);

  static Indeterminate a(int i);                 // a1..a5
  static Indeterminate b(int i);                 // b1..b5
  static Indeterminate t(int i, int j, int k);   // t_ijk, 1<=i<j<k<=5
  static Indeterminate x();
  static Indeterminate y();
  static Indeterminate from_index(int idx);

  int index() const { return idx_; }
  std::string_view name() const;

  // Ordered by index, i.e. map iteration visits the lex-largest symbol first.
  auto operator<=>(const Indeterminate&) const = default;

 private:
  explicit Indeterminate(int idx) : idx_(idx) {}
  int idx_;
};

}  // namespace hall5
