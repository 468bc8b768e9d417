#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hall5/collector.hpp"
#include "hall5/errors.hpp"
#include "hall5/presentation.hpp"
#include "support/wordrw.hpp"

using namespace hall5;

namespace {

GroupPresentation heisenberg5() {
  StructureConstants t(5);
  t.set(1, 2, 3, 1);
  return GroupPresentation(t);
}

ExponentVector vec(std::initializer_list<long> xs) {
  ExponentVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

Int rnd(std::mt19937_64& rng, long bound) {
  return Int(std::uniform_int_distribution<long>(-bound, bound)(rng));
}

ExponentVector rnd_vec(std::mt19937_64& rng, int n, long bound) {
  ExponentVector v;
  for (int i = 0; i < n; ++i) v.push_back(rnd(rng, bound));
  return v;
}

}  // namespace

TEST_CASE("zero constants collect to componentwise addition") {
  GroupPresentation g(StructureConstants(5));
  Collector c(g);
  CHECK(c.multiply(vec({1, 2, 3, 4, 5}), vec({5, 4, 3, 2, 1})) ==
        vec({6, 6, 6, 6, 6}));
  CHECK(c.invert(vec({1, -2, 3, -4, 5})) == vec({-1, 2, -3, 4, -5}));
  CHECK(c.power(vec({1, 2, 3, 4, 5}), 7) == vec({7, 14, 21, 28, 35}));
}

TEST_CASE("heisenberg commutator appears in the third coordinate") {
  Collector c(heisenberg5());
  CHECK(c.multiply(vec({0, 1, 0, 0, 0}), vec({1, 0, 0, 0, 0})) ==
        vec({1, 1, 1, 0, 0}));
  // The other order is already collected.
  CHECK(c.multiply(vec({1, 0, 0, 0, 0}), vec({0, 1, 0, 0, 0})) ==
        vec({1, 1, 0, 0, 0}));
  CHECK(c.invert(vec({1, 1, 0, 0, 0})) == vec({-1, -1, 1, 0, 0}));
  CHECK(c.multiply(vec({1, 1, 0, 0, 0}), vec({-1, -1, 1, 0, 0})) ==
        vec({0, 0, 0, 0, 0}));
}

TEST_CASE("a chained swap feeds the next commutator") {
  StructureConstants t(5);
  t.set(1, 2, 3, 1);
  t.set(2, 3, 4, 1);
  GroupPresentation g(t);
  Collector c(g);
  CHECK(c.multiply(vec({0, 2, 0, 0, 0}), vec({1, 0, 0, 0, 0})) ==
        vec({1, 2, 2, 1, 0}));
}

TEST_CASE("identity and shape rules") {
  Collector c(heisenberg5());
  ExponentVector e(5, Int(0));
  ExponentVector a = vec({3, -1, 4, 1, -5});
  CHECK(c.multiply(a, e) == a);
  CHECK(c.multiply(e, a) == a);
  CHECK(c.power(a, 0) == e);
  CHECK(c.power(a, 1) == a);
  CHECK(c.invert(e) == e);
  CHECK_THROWS_AS(c.multiply(a, vec({1, 2, 3})), BadShape);
  CHECK_THROWS_AS(c.collect_word({{6, Int(1)}}), BadShape);
  CHECK_THROWS_AS(c.collect_word({{0, Int(1)}}), BadShape);
}

TEST_CASE("generator n is central") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    GroupPresentation g(sample_consistent_t(rng, 3));
    Collector c(g);
    ExponentVector a = rnd_vec(rng, 5, 4);
    ExponentVector e5 = vec({0, 0, 0, 0, 1});
    CHECK(c.multiply(a, e5) == c.multiply(e5, a));
    CHECK(c.conjugate_power(5, 2, 3, 4) == ExponentVector{});
  }
}

TEST_CASE("powering matches iterated multiplication") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    GroupPresentation g(sample_consistent_t(rng, 3));
    Collector c(g);
    ExponentVector a = rnd_vec(rng, 5, 3);
    ExponentVector acc(5, Int(0));
    for (int k = 0; k <= 5; ++k) {
      CHECK(c.power(a, k) == acc);
      acc = c.multiply(acc, a);
    }
    CHECK(c.power(a, -4) == c.invert(c.power(a, 4)));
  }
}

TEST_CASE("large powers stay exact") {
  StructureConstants t(5);
  t.set(2, 3, 4, 2);
  GroupPresentation g(t);
  Collector c(g);
  Int x("1000000");
  ExponentVector r = c.power(vec({0, 1, 1, 0, 0}), x);
  // Fourth coordinate is 2*binom(x,2) = x(x-1); everything above g4 is quiet.
  CHECK(r == ExponentVector{0, x, x, x * (x - 1), 0});
  ExponentVector back = c.power(r, -1);
  CHECK(c.multiply(r, back) == vec({0, 0, 0, 0, 0}));
}

TEST_CASE("conjugate_power reproduces the small closed forms") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 15; ++trial) {
    StructureConstants t = sample_consistent_t(rng, 4);
    GroupPresentation g(t);
    Collector c(g);
    Int x = rnd(rng, 6), y = rnd(rng, 6);
    // g4^x g1^y = g1^y g4^x g5^(x y t145)
    CHECK(c.conjugate_power(4, 1, x, y) ==
          ExponentVector{x * y * t.get(1, 4, 5)});
    CHECK(c.conjugate_power(4, 3, x, y) ==
          ExponentVector{x * y * t.get(3, 4, 5)});
    // tails vanish when either exponent is zero
    CHECK(c.conjugate_power(3, 1, 0, y) == ExponentVector{0, 0});
    CHECK(c.conjugate_power(2, 1, x, 0) == ExponentVector{0, 0, 0});
  }
  // g3 g1^y = g1^y g3 g4^(y t134) g5^(y t135 + binom(y,2) t134 t145)
  StructureConstants t(5);
  t.set(1, 3, 4, 2);
  t.set(1, 3, 5, 3);
  t.set(1, 4, 5, 5);
  GroupPresentation gp(t);
  Collector c(gp);
  Int y(4);
  CHECK(c.conjugate_power(3, 1, 1, y) ==
        ExponentVector{y * 2, y * 3 + y * (y - 1) / 2 * 2 * 5});
  CHECK_THROWS_AS(c.conjugate_power(3, 3, 1, 1), BadShape);
  CHECK_THROWS_AS(c.conjugate_power(1, 3, 1, 1), BadShape);
}

TEST_CASE("collector agrees with brute-force word rewriting") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 40; ++trial) {
    StructureConstants t = sample_consistent_t(rng, 2);
    GroupPresentation g(t);
    Collector c(g);
    wordrw::Rewriter rw(t);
    ExponentVector a = rnd_vec(rng, 5, 2);
    ExponentVector b = rnd_vec(rng, 5, 2);
    CHECK(c.multiply(a, b) ==
          rw.normal_form(wordrw::Rewriter::concat(rw.word_of(a), rw.word_of(b))));
    CHECK(c.invert(a) ==
          rw.normal_form(wordrw::Rewriter::inverse(rw.word_of(a))));
    CHECK(c.power(a, 3) ==
          rw.normal_form(wordrw::Rewriter::concat(
              wordrw::Rewriter::concat(rw.word_of(a), rw.word_of(a)),
              rw.word_of(a))));
  }
}

TEST_CASE("scrambled words collect like their sorted spelling") {
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 25; ++trial) {
    StructureConstants t = sample_consistent_t(rng, 2);
    GroupPresentation g(t);
    Collector c(g);
    wordrw::Rewriter rw(t);
    // A random word in letters g_i^{\pm1}; both engines must agree on it.
    std::vector<std::pair<int, Int>> word;
    wordrw::Word letters;
    int len = std::uniform_int_distribution<int>(1, 7)(rng);
    for (int k = 0; k < len; ++k) {
      int gen = std::uniform_int_distribution<int>(1, 5)(rng);
      int sign = std::uniform_int_distribution<int>(0, 1)(rng) ? 1 : -1;
      word.emplace_back(gen, sign);
      letters.push_back({gen, sign});
    }
    CHECK(c.collect_word(word) == rw.normal_form(letters));
  }
}

TEST_CASE("chunked and unit spellings of an element agree") {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 20; ++trial) {
    GroupPresentation g(sample_consistent_t(rng, 3));
    Collector c(g);
    ExponentVector a = rnd_vec(rng, 5, 5);
    std::vector<std::pair<int, Int>> chunked, units;
    for (int i = 1; i <= 5; ++i) {
      chunked.emplace_back(i, a[size_t(i - 1)]);
      long e = a[size_t(i - 1)].get_si();
      for (long k = 0; k < labs(e); ++k) units.emplace_back(i, e > 0 ? 1 : -1);
    }
    CHECK(c.collect_word(chunked) == a);
    CHECK(c.collect_word(units) == a);
  }
}

TEST_CASE("exceeding the step ceiling raises an overflow") {
  StructureConstants t(5);
  t.set(1, 2, 3, 1);
  t.set(2, 3, 4, 1);
  t.set(3, 4, 5, 1);
  GroupPresentation g(t);
  Collector tight(g, 3);
  CHECK_THROWS_AS(tight.multiply(vec({0, 5, 5, 0, 0}), vec({5, 0, 0, 0, 0})),
                  CollectionOverflow);
  Collector roomy(g);
  CHECK_NOTHROW(roomy.multiply(vec({0, 5, 5, 0, 0}), vec({5, 0, 0, 0, 0})));
}

TEST_CASE("free functions demand consistency") {
  StructureConstants bad(5);
  bad.set(1, 2, 3, 1);
  bad.set(3, 4, 5, 1);
  GroupPresentation g(bad);
  ExponentVector a = vec({1, 0, 0, 0, 0}), b = vec({0, 1, 0, 0, 0});
  CHECK_THROWS_AS(collect_multiply(g, a, b), InconsistentPresentation);
  CHECK_THROWS_AS(collect_invert(g, a), InconsistentPresentation);
  CHECK_THROWS_AS(collect_power(g, a, 2), InconsistentPresentation);
  CHECK_THROWS_AS(conjugate_power(g, 2, 1, 1, 1), InconsistentPresentation);
  // The member functions still run; this is how the direct checker works.
  Collector c(g);
  CHECK_NOTHROW(c.multiply(a, b));
}

TEST_CASE("smaller hirsch lengths collect in their own dimension") {
  StructureConstants t(3);
  t.set(1, 2, 3, 1);
  GroupPresentation g(t);
  CHECK(collect_multiply(g, vec({0, 1, 0}), vec({1, 0, 0})) == vec({1, 1, 1}));
  StructureConstants t1(1);
  GroupPresentation line(t1);
  CHECK(collect_multiply(line, vec({2}), vec({40})) == vec({42}));
  CHECK(collect_power(line, vec({3}), -5) == vec({-15}));
}
