#include "hall5/collector.hpp"

#include <map>
#include <tuple>
#include <vector>

#include "hall5/errors.hpp"

namespace hall5 {

namespace {

// One collection run: owns the stack, a conjugation cache and the step
// counter shared by all nested collections it spawns.
struct Engine {
  const StructureConstants& t;
  int n;
  long ceiling;
  long steps = 0;

  // Normal form of g_j conjugated by g_i^y, keyed by (j, i, y).
  std::map<std::tuple<int, int, Int>, ExponentVector> conj_cache;

  explicit Engine(const GroupPresentation& G, long ceiling)
      : t(G.constants()), n(G.n()), ceiling(ceiling) {}

  void tick() {
    if (++steps > ceiling)
      throw CollectionOverflow("collection exceeded " +
                               std::to_string(ceiling) + " steps");
  }

  ExponentVector zero() const { return ExponentVector(n, Int(0)); }

  ExponentVector unit(int i) const {
    ExponentVector v = zero();
    v[i - 1] = 1;
    return v;
  }

  void check_length(const ExponentVector& v) const {
    if ((int)v.size() != n)
      throw BadShape("exponent vector has length " +
                     std::to_string(v.size()) + ", presentation needs " +
                     std::to_string(n));
  }

  // Core loop: the partial normal form v, plus pending items popped
  // last-in-first-out.  Items are pushed in reverse word order, so the pop
  // order is the word order.
  ExponentVector collect(ExponentVector v,
                         std::vector<std::pair<int, Int>> stack) {
    while (!stack.empty()) {
      auto [i, c] = stack.back();
      stack.pop_back();
      if (c == 0) continue;
      tick();
      v[i - 1] += c;
      // Move g_i^c leftward past every g_j chunk it jumped over.  The g_n
      // chunk is central and never moves.
      for (int j = n - 1; j > i; --j) {
        if (v[j - 1] == 0) continue;
        ExponentVector conj = conj_power(j, i, v[j - 1], c);
        v[n - 1] += conj[n - 1];
        for (int k = n - 1; k > j; --k)
          if (conj[k - 1] != 0) stack.push_back({k, conj[k - 1]});
        stack.push_back({j, v[j - 1]});
        v[j - 1] = 0;
      }
    }
    return v;
  }

  ExponentVector multiply(const ExponentVector& a, const ExponentVector& b) {
    ExponentVector v = a;
    v[n - 1] += b[n - 1];
    std::vector<std::pair<int, Int>> stack;
    for (int i = n - 1; i >= 1; --i) stack.push_back({i, b[i - 1]});
    return collect(std::move(v), std::move(stack));
  }

  // g^-1 = g_n^-a_n ... g_1^-a_1 collected back to normal form.
  ExponentVector invert(const ExponentVector& a) {
    std::vector<std::pair<int, Int>> stack;
    for (int i = 1; i <= n; ++i) stack.push_back({i, -a[i - 1]});
    return collect(zero(), std::move(stack));
  }

  ExponentVector power(const ExponentVector& a, const Int& x) {
    if (x < 0) return power(invert(a), -x);
    ExponentVector acc = zero(), sq = a;
    Int e = x;
    while (e > 0) {
      if (mpz_odd_p(e.get_mpz_t())) acc = multiply(acc, sq);
      e >>= 1;
      if (e > 0) sq = multiply(sq, sq);
    }
    return acc;
  }

  // Normal form of (g_j^x)^(g_i^y) = (g_j^(g_i^y))^x.  Its coordinates below
  // j vanish and the j-th equals x.
  ExponentVector conj_power(int j, int i, const Int& x, const Int& y) {
    if (x == 0 || y == 0) {
      ExponentVector v = zero();
      v[j - 1] = x;
      return v;
    }
    return power(conj_gen(j, i, y), x);
  }

  // Normal form of g_j^(g_i^y), via square-and-multiply on y.  Base cases:
  // y = 1 reads the defining relation, y = -1 solves it backwards.
  ExponentVector conj_gen(int j, int i, const Int& y) {
    if (j == n || y == 0) return unit(j);
    auto key = std::make_tuple(j, i, y);
    if (auto it = conj_cache.find(key); it != conj_cache.end())
      return it->second;
    tick();
    ExponentVector v;
    if (y == 1) {
      v = unit(j);
      for (int k = j + 1; k <= n; ++k) v[k - 1] = t.get(i, j, k);
    } else if (y == -1) {
      v = solve_inverse_conjugate(j, i);
    } else {
      // y = 2q + r with r in {-1, 0, 1} matching the sign of y.
      Int q = y / 2, r = y - 2 * q;
      v = conj_word(conj_gen(j, i, q), i, q);
      if (r != 0) v = conj_word(v, i, r);
    }
    conj_cache.emplace(key, v);
    return v;
  }

  // Applies w -> w^(g_i^y) to a normal form supported on indices > i.
  ExponentVector conj_word(const ExponentVector& w, int i, const Int& y) {
    ExponentVector acc = zero();
    for (int k = 1; k <= n; ++k) {
      if (w[k - 1] == 0) continue;
      if (k <= i) throw Error("conjugating a word not inside the subgroup");
      acc = multiply(acc, conj_power(k, i, w[k - 1], y));
    }
    return acc;
  }

  // Finds d with (g_j g_{j+1}^d_{j+1} ... g_n^d_n)^(g_i) = g_j.  Adjusting
  // d_k shifts exactly the k-th coordinate of the conjugated normal form, so
  // one top-down sweep settles every coordinate.
  ExponentVector solve_inverse_conjugate(int j, int i) {
    ExponentVector d = unit(j);
    for (int k = j + 1; k <= n; ++k) {
      ExponentVector image = conj_word(d, i, 1);
      d[k - 1] -= image[k - 1];
    }
    return d;
  }
};

}  // namespace

Collector::Collector(const GroupPresentation& G, long step_ceiling)
    : G_(G), ceiling_(step_ceiling) {}

ExponentVector Collector::multiply(const ExponentVector& a,
                                   const ExponentVector& b) const {
  Engine e(G_, ceiling_);
  e.check_length(a);
  e.check_length(b);
  return e.multiply(a, b);
}

ExponentVector Collector::invert(const ExponentVector& a) const {
  Engine e(G_, ceiling_);
  e.check_length(a);
  return e.invert(a);
}

ExponentVector Collector::power(const ExponentVector& a, const Int& x) const {
  Engine e(G_, ceiling_);
  e.check_length(a);
  return e.power(a, x);
}

ExponentVector Collector::collect_word(
    const std::vector<std::pair<int, Int>>& word) const {
  Engine e(G_, ceiling_);
  std::vector<std::pair<int, Int>> stack;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (it->first < 1 || it->first > G_.n())
      throw BadShape("word letter index out of range");
    stack.push_back(*it);
  }
  return e.collect(e.zero(), std::move(stack));
}

ExponentVector Collector::conjugate_power(int j, int i, const Int& x,
                                          const Int& y) const {
  if (!(1 <= i && i < j && j <= G_.n()))
    throw BadShape("conjugate_power needs 1 <= i < j <= n");
  Engine e(G_, ceiling_);
  ExponentVector full = e.conj_power(j, i, x, y);
  return ExponentVector(full.begin() + j, full.end());
}

namespace {

const GroupPresentation& require_consistent(const GroupPresentation& G) {
  if (!G.consistent())
    throw InconsistentPresentation(
        "operation requires a consistent presentation");
  return G;
}

}  // namespace

ExponentVector collect_multiply(const GroupPresentation& G,
                                const ExponentVector& a,
                                const ExponentVector& b) {
  return Collector(require_consistent(G)).multiply(a, b);
}

ExponentVector collect_invert(const GroupPresentation& G,
                              const ExponentVector& a) {
  return Collector(require_consistent(G)).invert(a);
}

ExponentVector collect_power(const GroupPresentation& G,
                             const ExponentVector& a, const Int& x) {
  return Collector(require_consistent(G)).power(a, x);
}

ExponentVector conjugate_power(const GroupPresentation& G, int j, int i,
                               const Int& x, const Int& y) {
  return Collector(require_consistent(G)).conjugate_power(j, i, x, y);
}

}  // namespace hall5
