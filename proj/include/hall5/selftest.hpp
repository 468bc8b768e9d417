// Randomized property suites: closed forms against the collection oracle,
// checker equivalence, group axioms.  Shared by the CLI selftest command and
// the acceptance harness.
#pragma once

#include <string>
#include <vector>

#include "hall5/numbers.hpp"

namespace hall5 {

struct SuiteResult {
  std::string name;
  bool passed = false;
  bool integer_violation = false;  // a non-integer polynomial value appeared
  std::string detail;
};

// Hall-polynomial product equals the collected product on random consistent
// groups; exponents in [-bound, bound], constants in [-t_bound, t_bound].
SuiteResult suite_oracle_equivalence(long trials, unsigned long seed,
                                     long bound, long t_bound);

// Re-derives the system symbolically and compares with the stated one;
// passes when p1..p4 are identical and p5 is identical or differs by a
// polynomial vanishing at `points` consistent samples.
SuiteResult suite_symbolic_derivation(unsigned long seed, int points);

// Algebraic criterion vs direct relation evaluation: consistent samples pass
// both, violating samples fail both (with an R1..R4 witness), n <= 4 always
// passes.  Runs trials_each samples per class.
SuiteResult suite_consistency_equivalence(long trials_each, unsigned long seed,
                                          long t_bound);

// f_i = p_i at a1=b1=0 syntactically; k_i matches collect_power on random
// G2 elements for every x in [-6, 6].
SuiteResult suite_g2_systems(long trials, unsigned long seed, long t_bound);

// r(y), s(y), t(y), R, S, T and every swap-table entry match the collector's
// conjugate_power on the grid x, y in [-6, 6].
SuiteResult suite_conjugation_systems(long trials, unsigned long seed,
                                      long t_bound);

// Associativity, identity and inverse laws through the Hall polynomials
// alone (no oracle involved).
SuiteResult suite_group_axioms(long trials, unsigned long seed, long bound,
                               long t_bound);

// Inverse-conjugate tails multiply back to g_j, and match the closed forms.
SuiteResult suite_inverse_conjugates(long trials, unsigned long seed,
                                     long t_bound);

// With t = 0 all operations degenerate to componentwise integer arithmetic.
SuiteResult suite_degeneration(long trials, unsigned long seed, long bound);

struct SelftestOptions {
  long trials = 500;
  unsigned long seed = 1;
  long bound = 10;
  long t_bound = 3;
};

// Runs every suite; the expensive grid suites run trials/5 rounds, the
// consistency suite caps at 200 per class.
std::vector<SuiteResult> run_selftest(const SelftestOptions& options);

}  // namespace hall5
