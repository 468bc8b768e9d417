// The presented groups G(t) = <g1..gn | [gj,gi] = g_{j+1}^t(i,j,j+1) ... >
// with 1 <= n <= 5, their structure constants, and consistency checking.
#pragma once

#include <array>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hall5/numbers.hpp"

namespace hall5 {

// The exponents t_ijk for 1 <= i < j < k <= n.  All (n choose 3) entries are
// stored explicitly; triples outside that range do not exist.
class StructureConstants {
 public:
  explicit StructureConstants(int n);

  static StructureConstants zero(int n) { return StructureConstants(n); }

  int n() const { return n_; }
  const Int& get(int i, int j, int k) const;
  void set(int i, int j, int k, const Int& value);

  // All triples (i,j,k) in lexicographic order.
  const std::vector<std::array<int, 3>>& triples() const { return triples_; }

  bool operator==(const StructureConstants& o) const = default;

 private:
  void check_triple(int i, int j, int k) const;
  int n_;
  std::vector<std::array<int, 3>> triples_;
  std::map<std::array<int, 3>, Int> t_;
};

// Parses the group spec format: {"n": 5, "t": {"123": 1, "345": 0}}.
// Absent triples default to 0, unknown keys (top level or inside "t") and
// out-of-range triples are errors.
StructureConstants constants_from_json_text(const std::string& text);
StructureConstants constants_from_file(const std::string& path);
std::string constants_to_json_text(const StructureConstants& t);

enum class Consistency { unknown, consistent, inconsistent };

class GroupPresentation {
 public:
  explicit GroupPresentation(StructureConstants t);

  const StructureConstants& constants() const { return t_; }
  int n() const { return t_.n(); }

  // The algebraic criterion, cached after the first call: for n <= 4 always
  // true; for n = 5 both t123*t345 = 0 and t124*t345 + t145*t234 = t134*t245.
  bool consistent() const;

 private:
  StructureConstants t_;
  mutable Consistency cache_ = Consistency::unknown;
};

GroupPresentation new_presentation(int n, const StructureConstants& t);
GroupPresentation load_group_file(const std::string& path);

bool consistency_algebraic(const GroupPresentation& G);

// One failed defining relation: both sides collected to normal form.
struct RelationFailure {
  std::string relation_id;
  ExponentVector lhs;
  ExponentVector rhs;
};

struct ConsistencyReport {
  bool verdict = true;
  std::vector<RelationFailure> failures;
};

// Evaluates every overlap relation (g_k g_j) g_i = g_k (g_j g_i) and every
// inverse relation g_k = (g_k g_i^-1) g_i through the collector.  The k = n
// relations hold automatically (g_n is central) but are executed anyway as a
// collector self-test.
ConsistencyReport consistency_direct(const GroupPresentation& G);

// Normal-form tails of g_j g_i^-1 = g_i^-1 g_j g_{j+1}^c_{j+1} ... g_n^c_n,
// keyed by (j, i) for 1 <= i < j <= n.  Requires a consistent presentation.
std::map<std::pair<int, int>, ExponentVector> inverse_conjugate_table(
    const GroupPresentation& G);

// Random structure constants.  The consistent sampler hits both branches of
// t123*t345 = 0 and solves the bilinear condition exactly; the violating
// sampler rejects until at least one condition fails (n = 5 only).
using Rng = std::mt19937_64;
StructureConstants sample_consistent_t(Rng& rng, long bound);
StructureConstants sample_violating_t(Rng& rng, long bound);
StructureConstants sample_any_t(Rng& rng, int n, long bound);

}  // namespace hall5
