#include "hall5/indeterminate.hpp"

#include <array>
#include <string>

namespace hall5 {

namespace {

// Position in this array is the precedence index.
constexpr std::array<std::string_view, Indeterminate::kCount> kNames = {
    "t123", "t124", "t125", "t134", "t135", "t145", "t234", "t235", "t245",
    "t345", "a1",   "a2",   "a3",   "a4",   "a5",   "b1",   "b2",   "b3",
    "b4",   "b5",   "x",    "y"};

int index_of(std::string_view name) {
  for (int i = 0; i < Indeterminate::kCount; ++i)
    if (kNames[i] == name) return i;
  return -1;
}

}  // namespace

Indeterminate::Indeterminate(std::string_view name) : idx_(index_of(name)) {
  if (idx_ < 0)
    throw ParseError("unknown indeterminate '" + std::string(name) + "'");
}

Indeterminate Indeterminate::from_index(int idx) {
  if (idx < 0 || idx >= kCount)
    throw Error("indeterminate index out of range");
  return Indeterminate(idx);
}

Indeterminate Indeterminate::a(int i) {
  if (i < 1 || i > 5) throw Error("a_i needs 1 <= i <= 5");
  return Indeterminate(9 + i);
}

Indeterminate Indeterminate::b(int i) {
  if (i < 1 || i > 5) throw Error("b_i needs 1 <= i <= 5");
  return Indeterminate(14 + i);
}

Indeterminate Indeterminate::t(int i, int j, int k) {
  if (!(1 <= i && i < j && j < k && k <= 5))
    throw Error("t_ijk needs 1 <= i < j < k <= 5");
  char buf[5] = {'t', char('0' + i), char('0' + j), char('0' + k), 0};
  return Indeterminate(std::string_view(buf, 4));
}

Indeterminate Indeterminate::x() { return Indeterminate(20); }
Indeterminate Indeterminate::y() { return Indeterminate(21); }

std::string_view Indeterminate::name() const { return kNames[idx_]; }

}  // namespace hall5
