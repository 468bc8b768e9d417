#include "hall5/selftest.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "hall5/collector.hpp"
#include "hall5/errors.hpp"
#include "hall5/hallpolys.hpp"
#include "hall5/presentation.hpp"
#include "hall5/symcollect.hpp"

namespace hall5 {

namespace {

ExponentVector random_vector(Rng& rng, int n, long bound) {
  std::uniform_int_distribution<long> dist(-bound, bound);
  ExponentVector v;
  for (int i = 0; i < n; ++i) v.push_back(Int(dist(rng)));
  return v;
}

std::string describe(const StructureConstants& t) {
  std::ostringstream out;
  out << "t=";
  for (const auto& [i, j, k] : t.triples())
    out << t.get(i, j, k).get_str() << ",";
  return out.str();
}

// Shared harness: marks the suite failed on the first counterexample and
// keeps NonIntegerValue separate, so integer-valuedness is reportable on its
// own.
SuiteResult run_suite(const std::string& name,
                      const std::function<void(SuiteResult&)>& body) {
  SuiteResult result;
  result.name = name;
  result.passed = true;
  try {
    body(result);
  } catch (const NonIntegerValue& e) {
    result.passed = false;
    result.integer_violation = true;
    result.detail = std::string("non-integer value: ") + e.what();
  } catch (const std::exception& e) {
    result.passed = false;
    result.detail = std::string("exception: ") + e.what();
  }
  return result;
}

void fail(SuiteResult& r, const std::string& detail) {
  r.passed = false;
  if (r.detail.empty()) r.detail = detail;
}

}  // namespace

SuiteResult suite_oracle_equivalence(long trials, unsigned long seed,
                                     long bound, long t_bound) {
  return run_suite("oracle-equivalence", [&](SuiteResult& r) {
    Rng rng(seed);
    for (long trial = 0; trial < trials && r.passed; ++trial) {
      StructureConstants t = sample_consistent_t(rng, t_bound);
      GroupPresentation G(t);
      ExponentVector a = random_vector(rng, 5, bound);
      ExponentVector b = random_vector(rng, 5, bound);
      if (hall_multiply(t, a, b) != collect_multiply(G, a, b))
        fail(r, "trial " + std::to_string(trial) + ": product mismatch, " +
                    describe(t) + " a=" + to_string(a) + " b=" + to_string(b));
    }
    if (r.passed) r.detail = std::to_string(trials) + " products matched";
  });
}

SuiteResult suite_symbolic_derivation(unsigned long seed, int points) {
  return run_suite("symbolic-derivation", [&](SuiteResult& r) {
    HallSystem derived = reduce_by_consistency(collect_symbolic(r_table()));
    HallSystem stated = theorem_polynomials();
    ComparisonReport report =
        compare_with_theorem(derived, stated, seed, points);
    for (int i = 1; i <= 4; ++i)
      if (!report[i].identical)
        fail(r, "p" + std::to_string(i) + " differs syntactically: " +
                    report[i].difference.to_string());
    if (report[5].identical) {
      if (r.passed) r.detail = "all five identical";
    } else if (report[5].vanishes_on_variety) {
      if (r.passed)
        r.detail = "p1..p4 identical; p5 differs by " +
                   report[5].difference.to_string() + " vanishing at " +
                   std::to_string(points) + " consistent points";
    } else {
      fail(r, "p5 differs by " + report[5].difference.to_string() +
                  " and does not vanish on the consistency variety");
    }
  });
}

SuiteResult suite_consistency_equivalence(long trials_each, unsigned long seed,
                                          long t_bound) {
  return run_suite("consistency-equivalence", [&](SuiteResult& r) {
    Rng rng(seed);
    for (long trial = 0; trial < trials_each && r.passed; ++trial) {
      StructureConstants t = sample_consistent_t(rng, t_bound);
      GroupPresentation G(t);
      if (!consistency_algebraic(G))
        fail(r, "sampler produced an inconsistent t: " + describe(t));
      ConsistencyReport report = consistency_direct(G);
      if (!report.verdict || !report.failures.empty())
        fail(r, "consistent t fails relations: " + describe(t));
    }
    for (long trial = 0; trial < trials_each && r.passed; ++trial) {
      StructureConstants t = sample_violating_t(rng, t_bound);
      GroupPresentation G(t);
      if (consistency_algebraic(G))
        fail(r, "violating sampler produced a consistent t");
      ConsistencyReport report = consistency_direct(G);
      if (report.verdict)
        fail(r, "violating t passes relations: " + describe(t));
      bool witness = false;
      for (const auto& f : report.failures)
        witness |= f.relation_id == "R1" || f.relation_id == "R2" ||
                   f.relation_id == "R3" || f.relation_id == "R4";
      if (!witness)
        fail(r, "violating t lacks an R1..R4 witness: " + describe(t));
    }
    for (long trial = 0; trial < trials_each && r.passed; ++trial) {
      int n = 1 + (int)(trial % 4);
      StructureConstants t = sample_any_t(rng, n, t_bound);
      GroupPresentation G(t);
      if (!consistency_algebraic(G) || !consistency_direct(G).verdict)
        fail(r, "n=" + std::to_string(n) +
                    " presentation reported inconsistent: " + describe(t));
    }
    if (r.passed)
      r.detail = std::to_string(trials_each) + " samples per class agreed";
  });
}

SuiteResult suite_g2_systems(long trials, unsigned long seed, long t_bound) {
  return run_suite("g2-systems", [&](SuiteResult& r) {
    const HallSystem p = theorem_polynomials();
    const G2System g2 = g2_polynomials();
    PolyAssignment restrict_a1b1{{Indeterminate::a(1), Polynomial()},
                                 {Indeterminate::b(1), Polynomial()}};
    for (int i = 2; i <= 5; ++i)
      if (!(p[i].substitute(restrict_a1b1) == g2.f_at(i)))
        fail(r, "f" + std::to_string(i) + " is not p" + std::to_string(i) +
                    " at a1=b1=0");
    Rng rng(seed);
    const Indeterminate x = Indeterminate::x();
    for (long trial = 0; trial < trials && r.passed; ++trial) {
      StructureConstants t = sample_consistent_t(rng, t_bound);
      GroupPresentation G(t);
      ExponentVector a = random_vector(rng, 5, 10);
      a[0] = 0;
      Assignment values = bind_t(t);
      for (int i = 2; i <= 5; ++i)
        values[Indeterminate::a(i)] = rat(a[i - 1], 1);
      for (long xv = -6; xv <= 6 && r.passed; ++xv) {
        values[x] = rat(xv);
        ExponentVector expect = collect_power(G, a, Int(xv));
        if (expect[0] != 0) fail(r, "powering left the G2 subgroup");
        for (int i = 2; i <= 5; ++i)
          if (g2.k_at(i).evaluate_integer(values) != expect[i - 1])
            fail(r, "k" + std::to_string(i) + " mismatch at x=" +
                        std::to_string(xv) + ", a=" + to_string(a) + ", " +
                        describe(t));
      }
    }
    if (r.passed)
      r.detail = "f restriction identical; k matched powering on " +
                 std::to_string(trials) + " elements, x in [-6,6]";
  });
}

SuiteResult suite_conjugation_systems(long trials, unsigned long seed,
                                      long t_bound) {
  return run_suite("conjugation-systems", [&](SuiteResult& r) {
    const ConjugationSystem c = conjugation_polynomials();
    const RTable table = r_table();
    Rng rng(seed);
    const Indeterminate x = Indeterminate::x(), y = Indeterminate::y();
    for (long trial = 0; trial < trials && r.passed; ++trial) {
      StructureConstants t = sample_consistent_t(rng, t_bound);
      GroupPresentation G(t);
      Assignment values = bind_t(t);
      for (long yv = -6; yv <= 6 && r.passed; ++yv) {
        values[y] = rat(yv);
        // r, s, t describe the conjugate g2^(g1^y), i.e. the x = 1 column.
        ExponentVector tail = conjugate_power(G, 2, 1, 1, Int(yv));
        if (c.r.evaluate_integer(values) != tail[0] ||
            c.s.evaluate_integer(values) != tail[1] ||
            c.t.evaluate_integer(values) != tail[2])
          fail(r, "r/s/t mismatch at y=" + std::to_string(yv) + ", " +
                      describe(t));
        for (long xv = -6; xv <= 6 && r.passed; ++xv) {
          values[x] = rat(xv);
          for (const auto& [pair, entries] : table) {
            auto [i, j] = pair;
            ExponentVector got = conjugate_power(G, j, i, Int(xv), Int(yv));
            for (const auto& [k, poly] : entries)
              if (poly.evaluate_integer(values) != got[k - j - 1])
                fail(r, "swap-table (" + std::to_string(i) + "," +
                            std::to_string(j) + ") entry g" +
                            std::to_string(k) + " mismatch at x=" +
                            std::to_string(xv) + " y=" + std::to_string(yv) +
                            ", " + describe(t));
          }
        }
      }
    }
    if (r.passed)
      r.detail = std::to_string(trials) +
                 " groups matched on the [-6,6]x[-6,6] grid";
  });
}

SuiteResult suite_group_axioms(long trials, unsigned long seed, long bound,
                               long t_bound) {
  return run_suite("group-axioms", [&](SuiteResult& r) {
    Rng rng(seed);
    for (long trial = 0; trial < trials && r.passed; ++trial) {
      StructureConstants t = sample_consistent_t(rng, t_bound);
      ExponentVector a = random_vector(rng, 5, bound);
      ExponentVector b = random_vector(rng, 5, bound);
      ExponentVector cc = random_vector(rng, 5, bound);
      if (hall_multiply(t, hall_multiply(t, a, b), cc) !=
          hall_multiply(t, a, hall_multiply(t, b, cc)))
        fail(r, "associativity fails: " + describe(t) + " a=" + to_string(a) +
                    " b=" + to_string(b) + " c=" + to_string(cc));
      ExponentVector e(5, Int(0));
      if (hall_multiply(t, a, e) != a || hall_multiply(t, e, a) != a)
        fail(r, "identity fails: " + describe(t) + " a=" + to_string(a));
      ExponentVector inv = hall_inverse(t, a);
      if (hall_multiply(t, a, inv) != e || hall_multiply(t, inv, a) != e)
        fail(r, "inverse fails: " + describe(t) + " a=" + to_string(a));
    }
    if (r.passed)
      r.detail = std::to_string(trials) + " triples associated exactly";
  });
}

SuiteResult suite_inverse_conjugates(long trials, unsigned long seed,
                                     long t_bound) {
  return run_suite("inverse-conjugates", [&](SuiteResult& r) {
    Rng rng(seed);
    for (long trial = 0; trial < trials && r.passed; ++trial) {
      StructureConstants t = sample_consistent_t(rng, t_bound);
      GroupPresentation G(t);
      Collector col(G);
      auto table = inverse_conjugate_table(G);
      for (const auto& [pair, tail] : table) {
        auto [j, i] = pair;
        // g_i^-1 g_j (tail) g_i must collect back to g_j.
        std::vector<std::pair<int, Int>> word{{i, Int(-1)}, {j, Int(1)}};
        for (int k = j + 1; k <= 5; ++k)
          word.push_back({k, tail[k - j - 1]});
        word.push_back({i, Int(1)});
        ExponentVector back = col.collect_word(word);
        ExponentVector gj(5, Int(0));
        gj[j - 1] = 1;
        if (back != gj)
          fail(r, "tail (" + std::to_string(j) + "," + std::to_string(i) +
                      ") does not multiply back, " + describe(t));
      }
      // The six closed forms.
      auto tv = [&](int i, int j, int k) { return t.get(i, j, k); };
      std::map<std::pair<int, int>, ExponentVector> closed;
      closed[{4, 1}] = {-tv(1, 4, 5)};
      closed[{3, 1}] = {-tv(1, 3, 4), tv(1, 3, 4) * tv(1, 4, 5) - tv(1, 3, 5)};
      closed[{2, 1}] = {-tv(1, 2, 3), tv(1, 2, 3) * tv(1, 3, 4) - tv(1, 2, 4),
                        -tv(1, 2, 3) * tv(1, 3, 4) * tv(1, 4, 5) +
                            tv(1, 2, 3) * tv(1, 3, 5) +
                            tv(1, 2, 4) * tv(1, 4, 5) - tv(1, 2, 5)};
      closed[{4, 2}] = {-tv(2, 4, 5)};
      closed[{3, 2}] = {-tv(2, 3, 4), tv(2, 3, 4) * tv(2, 4, 5) - tv(2, 3, 5)};
      closed[{4, 3}] = {-tv(3, 4, 5)};
      for (const auto& [pair, want] : closed)
        if (table.at(pair) != want)
          fail(r, "closed form (" + std::to_string(pair.first) + "," +
                      std::to_string(pair.second) + ") mismatch, " +
                      describe(t));
    }
    if (r.passed)
      r.detail = std::to_string(trials) + " tables verified";
  });
}

SuiteResult suite_degeneration(long trials, unsigned long seed, long bound) {
  return run_suite("free-abelian-degeneration", [&](SuiteResult& r) {
    Rng rng(seed);
    std::uniform_int_distribution<long> xdist(-100, 100);
    for (long trial = 0; trial < trials && r.passed; ++trial) {
      int n = 1 + (int)(trial % 5);
      StructureConstants t = StructureConstants::zero(n);
      GroupPresentation G(t);
      ExponentVector a = random_vector(rng, n, bound);
      ExponentVector b = random_vector(rng, n, bound);
      Int xv(xdist(rng));
      ExponentVector sum(n), scaled(n);
      for (int i = 0; i < n; ++i) {
        sum[i] = a[i] + b[i];
        scaled[i] = xv * a[i];
      }
      if (hall_multiply(t, a, b) != sum || collect_multiply(G, a, b) != sum)
        fail(r, "t=0 product is not vector addition, n=" + std::to_string(n));
      if (collect_power(G, a, xv) != scaled ||
          hall_power(t, a, xv) != scaled)
        fail(r, "t=0 power is not scalar multiplication, n=" +
                    std::to_string(n));
    }
    if (r.passed)
      r.detail = std::to_string(trials) + " abelian cases degenerated";
  });
}

std::vector<SuiteResult> run_selftest(const SelftestOptions& o) {
  long grid = std::max(1L, o.trials / 5);
  return {
      suite_oracle_equivalence(o.trials, o.seed, o.bound, o.t_bound),
      suite_symbolic_derivation(o.seed + 1, 200),
      suite_consistency_equivalence(std::min(o.trials, 200L), o.seed + 2,
                                    o.t_bound),
      suite_g2_systems(grid, o.seed + 3, o.t_bound),
      suite_conjugation_systems(grid, o.seed + 4, o.t_bound),
      suite_group_axioms(o.trials, o.seed + 5, o.bound, o.t_bound),
      suite_inverse_conjugates(grid, o.seed + 6, o.t_bound),
      suite_degeneration(std::min(o.trials, 100L), o.seed + 7, o.bound),
  };
}

}  // namespace hall5
