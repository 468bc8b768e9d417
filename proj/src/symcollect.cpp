#include "hall5/symcollect.hpp"

#include <vector>

#include "hall5/errors.hpp"
#include "hall5/presentation.hpp"

namespace hall5 {

HallSystem collect_symbolic(const RTable& table) {
  for (int i = 1; i <= 3; ++i)
    for (int j = i + 1; j <= 4; ++j)
      if (!table.contains({i, j}))
        throw MalformedTable("swap table lacks entry (" + std::to_string(i) +
                             "," + std::to_string(j) + ")");

  const Indeterminate x = Indeterminate::x(), y = Indeterminate::y();
  std::array<Polynomial, 5> v;
  for (int i = 1; i <= 4; ++i) v[i - 1] = Polynomial(Indeterminate::a(i));
  v[4] = Polynomial(Indeterminate::a(5)) + Polynomial(Indeterminate::b(5));

  std::vector<std::pair<int, Polynomial>> stack;
  for (int i = 4; i >= 1; --i)
    stack.push_back({i, Polynomial(Indeterminate::b(i))});

  long pops = 0;
  while (!stack.empty()) {
    auto [i, c] = std::move(stack.back());
    stack.pop_back();
    if (c.is_zero()) continue;
    if (++pops > 10'000)
      throw CollectionOverflow("symbolic collection exceeded 10000 pops");
    v[i - 1] += c;
    for (int j = 4; j > i; --j) {
      // g_j^{v_j} g_i^c -> g_i^c g_j^{v_j} * tails evaluated at (v_j, c).
      PolyAssignment at{{x, v[j - 1]}, {y, c}};
      const auto& entries = table.at({i, j});
      for (auto it = entries.rbegin(); it != entries.rend(); ++it) {
        Polynomial tail = it->second.substitute(at);
        if (it->first == 5)
          v[4] += tail;
        else if (!tail.is_zero())
          stack.push_back({it->first, tail});
      }
      if (!v[j - 1].is_zero()) stack.push_back({j, v[j - 1]});
      v[j - 1] = Polynomial();
    }
  }

  HallSystem sys;
  for (int i = 1; i <= 5; ++i) sys[i] = v[i - 1];
  return sys;
}

HallSystem reduce_by_consistency(const HallSystem& sys, bool both_relations) {
  auto t = [](int i, int j, int k) {
    return Polynomial(Indeterminate::t(i, j, k));
  };
  std::vector<Polynomial> relations{t(1, 2, 3) * t(3, 4, 5)};
  if (both_relations)
    relations.push_back(t(1, 2, 4) * t(3, 4, 5) + t(1, 4, 5) * t(2, 3, 4) -
                        t(1, 3, 4) * t(2, 4, 5));
  HallSystem out;
  for (int i = 1; i <= 5; ++i) out[i] = sys[i].reduce_lex(relations);
  return out;
}

bool ComparisonReport::all_equivalent() const {
  for (const auto& e : entries)
    if (!e.identical && !e.vanishes_on_variety) return false;
  return true;
}

ComparisonReport compare_with_theorem(const HallSystem& derived,
                                      const HallSystem& stated,
                                      unsigned long seed, int points) {
  ComparisonReport report;
  Rng rng(seed);
  std::uniform_int_distribution<long> coord(-10, 10);
  for (int i = 1; i <= 5; ++i) {
    ComparisonEntry& e = report.entries[i - 1];
    e.difference = derived[i] - stated[i];
    e.identical = e.difference.is_zero();
    if (e.identical) {
      e.vanishes_on_variety = true;
      continue;
    }
    e.vanishes_on_variety = true;
    for (int p = 0; p < points && e.vanishes_on_variety; ++p) {
      StructureConstants t = sample_consistent_t(rng, 3);
      Assignment values = bind_t(t);
      for (int q = 1; q <= 5; ++q) {
        values[Indeterminate::a(q)] = rat(coord(rng));
        values[Indeterminate::b(q)] = rat(coord(rng));
      }
      if (e.difference.evaluate(values) != 0) e.vanishes_on_variety = false;
    }
  }
  return report;
}

}  // namespace hall5
