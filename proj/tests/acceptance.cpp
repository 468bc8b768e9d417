// Acceptance gate: one line per criterion, parameters pinned below.
// Exits 0 only when every criterion holds.
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "hall5/selftest.hpp"

namespace {

using hall5::SuiteResult;

constexpr unsigned long kSeed = 1;
constexpr long kOracleTrials = 500;
constexpr long kOracleBound = 10;       // exponents in [-10, 10]
constexpr long kTBound = 3;             // structure constants in [-3, 3]
constexpr double kMaxOracleSeconds = 60.0;
constexpr int kDerivePoints = 200;
constexpr double kMaxDeriveSeconds = 10.0;
constexpr long kConsistencyTrials = 200;  // per class
constexpr long kG2Trials = 100;
constexpr long kConjTrials = 100;
constexpr long kAxiomTrials = 300;
constexpr long kDegenerationTrials = 100;

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

struct Line {
  bool passed;
  std::string text;
};

Line timed(int number, const char* label, SuiteResult r, double elapsed,
           double limit) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), " (%.2fs, limit %.0fs)", elapsed, limit);
  bool ok = r.passed && elapsed < limit;
  std::string text = std::string(ok ? "ok   " : "FAIL ") + "criterion " +
                     std::to_string(number) + " " + label + ": " + r.detail +
                     buf;
  if (r.passed && elapsed >= limit) text += " [too slow]";
  return {ok, text};
}

Line plain(int number, const char* label, const SuiteResult& r) {
  return {r.passed, std::string(r.passed ? "ok   " : "FAIL ") + "criterion " +
                        std::to_string(number) + " " + label + ": " +
                        r.detail};
}

}  // namespace

int main() {
  using clock = std::chrono::steady_clock;
  std::vector<SuiteResult> all;
  std::vector<Line> lines;

  auto start = clock::now();
  SuiteResult oracle = hall5::suite_oracle_equivalence(kOracleTrials, kSeed,
                                                       kOracleBound, kTBound);
  all.push_back(oracle);
  lines.push_back(timed(1, "oracle-equivalence", oracle,
                        seconds_since(start), kMaxOracleSeconds));

  start = clock::now();
  SuiteResult derive = hall5::suite_symbolic_derivation(kSeed, kDerivePoints);
  all.push_back(derive);
  lines.push_back(timed(2, "symbolic-derivation", derive,
                        seconds_since(start), kMaxDeriveSeconds));

  SuiteResult consistency =
      hall5::suite_consistency_equivalence(kConsistencyTrials, kSeed, kTBound);
  all.push_back(consistency);
  lines.push_back(plain(3, "consistency-equivalence", consistency));

  SuiteResult g2 = hall5::suite_g2_systems(kG2Trials, kSeed, kTBound);
  all.push_back(g2);
  lines.push_back(plain(4, "g2-systems", g2));

  SuiteResult conj =
      hall5::suite_conjugation_systems(kConjTrials, kSeed, kTBound);
  all.push_back(conj);
  lines.push_back(plain(5, "conjugation-systems", conj));

  SuiteResult axioms =
      hall5::suite_group_axioms(kAxiomTrials, kSeed, kOracleBound, kTBound);
  all.push_back(axioms);
  lines.push_back(plain(6, "group-axioms", axioms));

  SuiteResult degeneration = hall5::suite_degeneration(
      kDegenerationTrials, kSeed, kOracleBound);
  all.push_back(degeneration);

  // Every evaluation in the suites above must have produced an integer.
  SuiteResult integrality;
  integrality.name = "integrality";
  integrality.passed = true;
  for (const SuiteResult& r : all)
    if (r.integer_violation) {
      integrality.passed = false;
      integrality.detail = "non-integer value in " + r.name;
    }
  if (integrality.passed)
    integrality.detail = "every polynomial evaluation landed in Z";
  lines.push_back(plain(7, "integrality", integrality));

  lines.push_back(plain(8, "free-abelian-degeneration", degeneration));

  int passed = 0;
  for (const Line& l : lines) {
    std::puts(l.text.c_str());
    passed += l.passed ? 1 : 0;
  }
  std::printf("ACCEPTANCE: %d/8 %s\n", passed,
              passed == 8 ? "PASS" : "FAIL");
  return passed == 8 ? 0 : 1;
}
