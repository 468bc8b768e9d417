#include "hall5/presentation.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hall5/collector.hpp"
#include "hall5/errors.hpp"

namespace hall5 {

StructureConstants::StructureConstants(int n) : n_(n) {
  if (n < 1 || n > 5) throw BadShape("n must be between 1 and 5");
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) {
        triples_.push_back({i, j, k});
        t_[{i, j, k}] = 0;
      }
}

void StructureConstants::check_triple(int i, int j, int k) const {
  if (!(1 <= i && i < j && j < k && k <= n_)) {
    std::ostringstream msg;
    msg << "triple (" << i << "," << j << "," << k << ") is not strictly "
        << "increasing within 1.." << n_;
    throw BadShape(msg.str());
  }
}

const Int& StructureConstants::get(int i, int j, int k) const {
  check_triple(i, j, k);
  return t_.at({i, j, k});
}

void StructureConstants::set(int i, int j, int k, const Int& value) {
  check_triple(i, j, k);
  t_[{i, j, k}] = value;
}

StructureConstants constants_from_json_text(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("group spec must be a JSON object");
  for (const auto& [key, value] : doc.items())
    if (key != "n" && key != "t")
      throw ParseError("unknown key '" + key + "' in group spec");
  if (!doc.contains("n") || !doc["n"].is_number_integer())
    throw ParseError("group spec needs an integer \"n\"");
  long n = doc["n"].get<long>();
  if (n < 1 || n > 5) throw BadShape("n must be between 1 and 5");
  StructureConstants t(static_cast<int>(n));
  if (doc.contains("t")) {
    if (!doc["t"].is_object())
      throw ParseError("\"t\" must be an object of triple -> integer");
    for (const auto& [key, value] : doc["t"].items()) {
      if (key.size() != 3 || !std::isdigit((unsigned char)key[0]) ||
          !std::isdigit((unsigned char)key[1]) ||
          !std::isdigit((unsigned char)key[2]))
        throw ParseError("bad triple key '" + key + "' (want e.g. \"123\")");
      int i = key[0] - '0', j = key[1] - '0', k = key[2] - '0';
      if (!(1 <= i && i < j && j < k && k <= n))
        throw BadShape("triple key '" + key + "' out of range for n=" +
                       std::to_string(n));
      if (!value.is_number_integer())
        throw ParseError("value for t_" + key + " must be an integer");
      t.set(i, j, k, Int(value.get<long>()));
    }
  }
  return t;
}

StructureConstants constants_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open group spec file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return constants_from_json_text(buf.str());
}

std::string constants_to_json_text(const StructureConstants& t) {
  nlohmann::json doc;
  doc["n"] = t.n();
  doc["t"] = nlohmann::json::object();
  for (const auto& [i, j, k] : t.triples()) {
    std::string key = {char('0' + i), char('0' + j), char('0' + k)};
    if (!t.get(i, j, k).fits_slong_p())
      throw Error("t_" + key + " too large for the JSON spec format");
    doc["t"][key] = (long long)t.get(i, j, k).get_si();
  }
  return doc.dump();
}

GroupPresentation::GroupPresentation(StructureConstants t) : t_(std::move(t)) {}

bool GroupPresentation::consistent() const {
  if (cache_ == Consistency::unknown) {
    bool ok = true;
    if (t_.n() == 5) {
      ok = t_.get(1, 2, 3) * t_.get(3, 4, 5) == 0 &&
           t_.get(1, 2, 4) * t_.get(3, 4, 5) +
                   t_.get(1, 4, 5) * t_.get(2, 3, 4) ==
               t_.get(1, 3, 4) * t_.get(2, 4, 5);
    }
    cache_ = ok ? Consistency::consistent : Consistency::inconsistent;
  }
  return cache_ == Consistency::consistent;
}

GroupPresentation new_presentation(int n, const StructureConstants& t) {
  if (t.n() != n) throw BadShape("constants are shaped for a different n");
  return GroupPresentation(t);
}

GroupPresentation load_group_file(const std::string& path) {
  return GroupPresentation(constants_from_file(path));
}

bool consistency_algebraic(const GroupPresentation& G) {
  return G.consistent();
}

namespace {

ExponentVector unit(int n, int i, long e = 1) {
  ExponentVector v(n, Int(0));
  v[i - 1] = e;
  return v;
}

struct Relation {
  std::string id;
  bool overlap;  // overlap (g_k g_j) g_i, otherwise inverse g_k = (g_k g_i^-1) g_i
  int k, j, i;   // j unused for inverse relations
};

// Fixed ids for n = 5; C5a..C5j are the trivially-true relations involving
// g_5.  Smaller n gets the same scheme restricted and renumbered.
std::vector<Relation> relations_for(int n) {
  if (n == 5)
    return {
        {"R1", true, 4, 3, 1},   {"R2", true, 4, 2, 1},
        {"R3", true, 3, 2, 1},   {"R4", true, 4, 3, 2},
        {"R5", false, 2, 0, 1},  {"R6", false, 3, 0, 1},
        {"R7", false, 4, 0, 1},  {"R8", false, 3, 0, 2},
        {"R9", false, 4, 0, 2},  {"R10", false, 4, 0, 3},
        {"C5a", true, 5, 2, 1},  {"C5b", true, 5, 3, 1},
        {"C5c", true, 5, 3, 2},  {"C5d", true, 5, 4, 1},
        {"C5e", true, 5, 4, 2},  {"C5f", true, 5, 4, 3},
        {"C5g", false, 5, 0, 1}, {"C5h", false, 5, 0, 2},
        {"C5i", false, 5, 0, 3}, {"C5j", false, 5, 0, 4},
    };
  std::vector<Relation> rels;
  int m = 0;
  for (int k = 3; k <= n; ++k)
    for (int j = 2; j < k; ++j)
      for (int i = 1; i < j; ++i)
        rels.push_back({"R" + std::to_string(++m), true, k, j, i});
  for (int k = 2; k <= n; ++k)
    for (int i = 1; i < k; ++i)
      rels.push_back({"R" + std::to_string(++m), false, k, 0, i});
  return rels;
}

}  // namespace

ConsistencyReport consistency_direct(const GroupPresentation& G) {
  int n = G.n();
  Collector col(G);
  ConsistencyReport report;
  for (const auto& rel : relations_for(n)) {
    ExponentVector lhs, rhs;
    if (rel.overlap) {
      ExponentVector gk = unit(n, rel.k), gj = unit(n, rel.j),
                     gi = unit(n, rel.i);
      lhs = col.multiply(col.multiply(gk, gj), gi);
      rhs = col.multiply(gk, col.multiply(gj, gi));
    } else {
      ExponentVector gk = unit(n, rel.k), gi = unit(n, rel.i),
                     gi_inv = unit(n, rel.i, -1);
      lhs = col.multiply(col.multiply(gk, gi_inv), gi);
      rhs = gk;
    }
    if (lhs != rhs) report.failures.push_back({rel.id, lhs, rhs});
  }
  report.verdict = report.failures.empty();
  return report;
}

std::map<std::pair<int, int>, ExponentVector> inverse_conjugate_table(
    const GroupPresentation& G) {
  if (!G.consistent())
    throw InconsistentPresentation(
        "inverse conjugates are tabulated for consistent presentations only");
  int n = G.n();
  Collector col(G);
  std::map<std::pair<int, int>, ExponentVector> table;
  for (int j = 2; j <= n; ++j)
    for (int i = 1; i < j; ++i) {
      // g_j g_i^-1 = g_i^-1 (g_j conjugated by g_i^-1); keep the tail.
      ExponentVector conj = col.conjugate_power(j, i, 1, -1);
      table[{j, i}] = conj;
    }
  return table;
}

namespace {

Int pick(Rng& rng, long bound) {
  std::uniform_int_distribution<long> dist(-bound, bound);
  return Int(dist(rng));
}

bool coin(Rng& rng) {
  return std::uniform_int_distribution<int>(0, 1)(rng) == 1;
}

}  // namespace

StructureConstants sample_any_t(Rng& rng, int n, long bound) {
  StructureConstants t(n);
  for (const auto& [i, j, k] : t.triples()) t.set(i, j, k, pick(rng, bound));
  return t;
}

StructureConstants sample_consistent_t(Rng& rng, long bound) {
  StructureConstants t(5);
  for (const auto& [i, j, k] : t.triples()) t.set(i, j, k, pick(rng, bound));
  if (coin(rng)) {
    // Branch t345 = 0: the second condition becomes t145*t234 = t134*t245.
    t.set(3, 4, 5, 0);
    if (t.get(1, 3, 4) == 0) {
      // Need t145*t234 = 0; zero one factor, t245 stays free.
      if (coin(rng))
        t.set(1, 4, 5, 0);
      else
        t.set(2, 3, 4, 0);
    } else {
      for (int attempt = 0;; ++attempt) {
        Int prod = t.get(1, 4, 5) * t.get(2, 3, 4);
        if (prod % t.get(1, 3, 4) == 0) {
          Int q = prod / t.get(1, 3, 4);
          if (abs(q) <= bound) {
            t.set(2, 4, 5, q);
            break;
          }
        }
        if (attempt > 64) {
          t.set(1, 4, 5, 0);
          t.set(2, 4, 5, 0);
          break;
        }
        t.set(1, 4, 5, pick(rng, bound));
        t.set(2, 3, 4, pick(rng, bound));
      }
    }
  } else {
    // Branch t123 = 0 with t345 free (nonzero when possible); solve for t124.
    t.set(1, 2, 3, 0);
    Int t345 = pick(rng, bound);
    if (t345 == 0) t345 = bound > 0 ? 1 : 0;
    t.set(3, 4, 5, t345);
    for (int attempt = 0;; ++attempt) {
      Int rhs = t.get(1, 3, 4) * t.get(2, 4, 5) -
                t.get(1, 4, 5) * t.get(2, 3, 4);
      if (t345 != 0 && rhs % t345 == 0 && abs(rhs / t345) <= bound) {
        t.set(1, 2, 4, rhs / t345);
        break;
      }
      if (attempt > 64 || t345 == 0) {
        t.set(2, 3, 4, 0);
        t.set(2, 4, 5, 0);
        t.set(1, 2, 4, 0);
        break;
      }
      t.set(2, 4, 5, pick(rng, bound));
      t.set(2, 3, 4, pick(rng, bound));
    }
  }
  return t;
}

StructureConstants sample_violating_t(Rng& rng, long bound) {
  if (bound < 1) throw Error("violating sampler needs bound >= 1");
  while (true) {
    StructureConstants t = sample_any_t(rng, 5, bound);
    GroupPresentation G(t);
    if (!G.consistent()) return t;
  }
}

}  // namespace hall5
