// The closed-form multiplication, powering and conjugation polynomials for
// G(t), plus their fast exact evaluation.
#pragma once

#include <array>
#include <map>
#include <utility>
#include <vector>

#include "hall5/polynomial.hpp"
#include "hall5/presentation.hpp"

namespace hall5 {

// The five multiplication polynomials: g^a * g^b = g^(p1,...,p5).
struct HallSystem {
  std::array<Polynomial, 5> p;

  const Polynomial& operator[](int i) const { return p.at(i - 1); }
  Polynomial& operator[](int i) { return p.at(i - 1); }
  bool operator==(const HallSystem& o) const = default;
};

// Multiplication (f) and powering (k) inside G2 = <g2,...,g5>.
struct G2System {
  std::array<Polynomial, 4> f;  // f2..f5 in a2..a5, b2..b5
  std::array<Polynomial, 4> k;  // k2..k5 in a2..a5, x

  const Polynomial& f_at(int i) const { return f.at(i - 2); }
  const Polynomial& k_at(int i) const { return k.at(i - 2); }
};

// g2^(g1^y) = g2 g3^r g4^s g5^t and g2^x g1^y = g1^y g2^x g3^R g4^S g5^T.
struct ConjugationSystem {
  Polynomial r, s, t;  // in y
  Polynomial R, S, T;  // in x, y
};

HallSystem theorem_polynomials();
G2System g2_polynomials();
ConjugationSystem conjugation_polynomials();

// The complete swap table: key (i, j) with i < j <= 4 maps to the tail
// [(k, r_ijk)] with g_j^x g_i^y = g_i^y g_j^x * prod_k g_k^r_ijk(x,y).
using RTable = std::map<std::pair<int, int>,
                        std::vector<std::pair<int, Polynomial>>>;
RTable r_table();

// Exact group arithmetic by polynomial evaluation.  For n < 5 the missing
// constants are zero and the result is truncated to n coordinates.  All
// evaluations must land in the integers; a non-integer value is a bug.
ExponentVector hall_multiply(const StructureConstants& t,
                             const ExponentVector& a, const ExponentVector& b);
ExponentVector hall_inverse(const StructureConstants& t,
                            const ExponentVector& a);
ExponentVector hall_power(const StructureConstants& t, const ExponentVector& a,
                          const Int& x);

// Assignment helpers shared with the test suites.
Assignment bind_t(const StructureConstants& t);

}  // namespace hall5
