// Command-line front end: group arithmetic, consistency checking, polynomial
// printing, symbolic re-derivation and the randomized self-verification.
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hall5/collector.hpp"
#include "hall5/errors.hpp"
#include "hall5/hallpolys.hpp"
#include "hall5/presentation.hpp"
#include "hall5/selftest.hpp"
#include "hall5/symcollect.hpp"

namespace {

using namespace hall5;

Int parse_int(const std::string& text) {
  Int v;
  if (mpz_set_str(v.get_mpz_t(), text.c_str(), 10) != 0)
    throw hall5::ParseError("bad integer '" + text + "'");
  return v;
}

ExponentVector parse_vector(const std::string& text, int n) {
  ExponentVector v = parse_exponent_vector(text);
  if ((int)v.size() != n)
    throw BadShape("vector '" + text + "' has " + std::to_string(v.size()) +
                   " entries, the group needs " + std::to_string(n));
  return v;
}

int run_check(const std::string& path) {
  GroupPresentation G = load_group_file(path);
  bool ok = G.consistent();
  std::cout << (ok ? "consistent" : "inconsistent") << "\n";
  if (G.n() == 5) {
    const StructureConstants& t = G.constants();
    Int c1 = t.get(1, 2, 3) * t.get(3, 4, 5);
    Int c2 = t.get(1, 2, 4) * t.get(3, 4, 5) +
             t.get(1, 4, 5) * t.get(2, 3, 4) -
             t.get(1, 3, 4) * t.get(2, 4, 5);
    std::cout << "t123*t345 = " << c1.get_str() << "\n";
    std::cout << "t124*t345 + t145*t234 - t134*t245 = " << c2.get_str()
              << "\n";
  }
  if (!ok) {
    ConsistencyReport report = consistency_direct(G);
    std::cout << "failing relations:";
    for (const auto& f : report.failures) std::cout << " " << f.relation_id;
    std::cout << "\n";
  }
  return ok ? 0 : 1;
}

// Shared tail for mul/pow/inv/comm: print the Hall-polynomial result, then
// optionally the collected result and the verdict.
int emit(const ExponentVector& fast, bool oracle, const ExponentVector& slow) {
  std::cout << to_string(fast) << "\n";
  if (!oracle) return 0;
  std::cout << "oracle " << to_string(slow) << "\n";
  bool match = fast == slow;
  std::cout << (match ? "match" : "mismatch") << "\n";
  return match ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact arithmetic in torsion free finitely generated nilpotent groups "
      "of Hirsch length at most 5"};
  app.require_subcommand(1);

  std::string path, a_text, b_text, x_text;
  bool oracle = false, print_flag = false, both = false;
  SelftestOptions opts;
  unsigned long derive_seed = 1;
  int derive_points = 200;

  auto add_group = [&](CLI::App* cmd) {
    cmd->add_option("-g,--group", path, "group spec JSON file")->required();
  };

  auto* check = app.add_subcommand("check", "decide consistency of G(t)");
  add_group(check);

  auto* mul = app.add_subcommand("mul", "normal-form product A*B");
  add_group(mul);
  mul->add_option("A", a_text, "left operand, comma-separated")->required();
  mul->add_option("B", b_text, "right operand")->required();
  mul->add_flag("--oracle", oracle, "cross-check against collection");

  auto* pow = app.add_subcommand("pow", "normal-form power A^X");
  add_group(pow);
  pow->add_option("A", a_text, "base, comma-separated")->required();
  pow->add_option("X", x_text, "integer exponent")->required();
  pow->add_flag("--oracle", oracle, "cross-check against collection");

  auto* inv = app.add_subcommand("inv", "normal-form inverse of A");
  add_group(inv);
  inv->add_option("A", a_text, "operand, comma-separated")->required();
  inv->add_flag("--oracle", oracle, "cross-check against collection");

  auto* comm = app.add_subcommand("comm", "commutator A^-1 B^-1 A B");
  add_group(comm);
  comm->add_option("A", a_text, "left operand")->required();
  comm->add_option("B", b_text, "right operand")->required();
  comm->add_flag("--oracle", oracle, "cross-check against collection");

  auto* hall = app.add_subcommand(
      "hall", "print the multiplication polynomials p1..pn");
  hall->add_option("-g,--group", path,
                   "group spec JSON; its n truncates the list");
  hall->add_flag("--print", print_flag, "print the polynomials (default)");

  auto* derive = app.add_subcommand(
      "derive", "re-derive the polynomials by symbolic collection");
  derive->add_flag("--both", both,
                   "reduce by both consistency relations, not just one");
  derive->add_option("--seed", derive_seed, "sampler seed for the comparison");
  derive->add_option("--points", derive_points,
                     "consistent sample points for difference testing");

  auto* selftest =
      app.add_subcommand("selftest", "run the randomized property suites");
  selftest->add_option("--trials", opts.trials, "base trial count")
      ->capture_default_str();
  selftest->add_option("--seed", opts.seed, "random seed")
      ->capture_default_str();
  selftest->add_option("--bound", opts.bound, "exponent range [-bound,bound]")
      ->capture_default_str();
  selftest->add_option("--tbound", opts.t_bound,
                       "structure constant range [-tbound,tbound]")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (check->parsed()) return run_check(path);

    if (mul->parsed()) {
      GroupPresentation G = load_group_file(path);
      ExponentVector a = parse_vector(a_text, G.n());
      ExponentVector b = parse_vector(b_text, G.n());
      ExponentVector fast = hall_multiply(G.constants(), a, b);
      return emit(fast, oracle, oracle ? collect_multiply(G, a, b) : fast);
    }

    if (pow->parsed()) {
      GroupPresentation G = load_group_file(path);
      ExponentVector a = parse_vector(a_text, G.n());
      Int x = parse_int(x_text);
      ExponentVector fast = hall_power(G.constants(), a, x);
      return emit(fast, oracle, oracle ? collect_power(G, a, x) : fast);
    }

    if (inv->parsed()) {
      GroupPresentation G = load_group_file(path);
      ExponentVector a = parse_vector(a_text, G.n());
      ExponentVector fast = hall_inverse(G.constants(), a);
      return emit(fast, oracle, oracle ? collect_invert(G, a) : fast);
    }

    if (comm->parsed()) {
      GroupPresentation G = load_group_file(path);
      const StructureConstants& t = G.constants();
      ExponentVector a = parse_vector(a_text, G.n());
      ExponentVector b = parse_vector(b_text, G.n());
      ExponentVector fast = hall_multiply(
          t,
          hall_multiply(t, hall_multiply(t, hall_inverse(t, a),
                                         hall_inverse(t, b)), a),
          b);
      ExponentVector slow = fast;
      if (oracle) {
        Collector col(G);
        slow = col.multiply(
            col.multiply(col.multiply(col.invert(a), col.invert(b)), a), b);
      }
      return emit(fast, oracle, slow);
    }

    if (hall->parsed()) {
      int n = 5;
      if (!path.empty()) n = load_group_file(path).n();
      const HallSystem h = theorem_polynomials();
      for (int i = 1; i <= n; ++i) std::cout << h[i].to_string() << "\n";
      return 0;
    }

    if (derive->parsed()) {
      HallSystem raw = collect_symbolic(r_table());
      HallSystem derived = reduce_by_consistency(raw, both);
      HallSystem stated = theorem_polynomials();
      ComparisonReport report =
          compare_with_theorem(derived, stated, derive_seed, derive_points);
      for (int i = 1; i <= 5; ++i)
        std::cout << "derived p" << i << " = " << derived[i].to_string()
                  << "\n";
      for (int i = 1; i <= 5; ++i)
        std::cout << "stated p" << i << " = " << stated[i].to_string() << "\n";
      for (int i = 1; i <= 5; ++i) {
        if (report[i].identical) {
          std::cout << "p" << i << ": identical\n";
        } else {
          std::cout << "p" << i << ": differs by "
                    << report[i].difference.to_string() << "; vanishes at "
                    << derive_points << " consistent points: "
                    << (report[i].vanishes_on_variety ? "yes" : "no") << "\n";
        }
      }
      return report.all_equivalent() ? 0 : 1;
    }

    if (selftest->parsed()) {
      std::cout << "selftest seed=" << opts.seed << " trials=" << opts.trials
                << " bound=" << opts.bound << " tbound=" << opts.t_bound
                << "\n";
      bool all = true;
      for (const SuiteResult& r : run_selftest(opts)) {
        all &= r.passed;
        std::cout << (r.passed ? "ok   " : "FAIL ") << r.name << ": "
                  << r.detail << "\n";
      }
      std::cout << (all ? "all suites passed" : "SELFTEST FAILED") << "\n";
      return all ? 0 : 1;
    }
  } catch (const InconsistentPresentation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const CollectionOverflow& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const NonIntegerValue& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    // Malformed files, vectors, polynomials, shapes: usage errors.
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
