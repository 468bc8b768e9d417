// Sparse multivariate polynomials over the rationals in the fixed
// indeterminate universe.  Coefficients are exact (gmp) rationals.
#pragma once

#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "hall5/indeterminate.hpp"
#include "hall5/numbers.hpp"

namespace hall5 {

// A monomial is a finite product of positive powers; exponent 0 entries are
// never stored.  Total degree fits comfortably in long for everything here.
class Monomial {
 public:
  Monomial() = default;
  Monomial(std::initializer_list<std::pair<Indeterminate, long>> factors);

  // Exponent of v (0 when absent).
  long exponent(const Indeterminate& v) const;
  void set_exponent(const Indeterminate& v, long e);

  long total_degree() const;
  bool is_constant() const { return exps_.empty(); }

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  // Requires divides(o).
  Monomial quotient_into(const Monomial& o) const;

  bool operator==(const Monomial& o) const { return exps_ == o.exps_; }

  // Pure lex with respect to the fixed variable order.
  static int lex_cmp(const Monomial& a, const Monomial& b);
  // Graded lex: total degree first, lex to break ties.  Used for printing.
  static int grlex_cmp(const Monomial& a, const Monomial& b);

  const std::map<Indeterminate, long>& factors() const { return exps_; }

 private:
  std::map<Indeterminate, long> exps_;
};

struct MonomialLexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return Monomial::lex_cmp(a, b) > 0;
  }
};

// Values for substitution/evaluation, keyed by variable.
using Assignment = std::map<Indeterminate, Rat>;
using PolyAssignment = std::map<Indeterminate, class Polynomial>;

class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Rat& c);  // NOLINT: constants convert implicitly
  Polynomial(long c) : Polynomial(rat(c)) {}
  explicit Polynomial(const Indeterminate& v);
  Polynomial(const Monomial& m, const Rat& c);

  static Polynomial variable(const Indeterminate& v) { return Polynomial(v); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // The constant term (0 when absent).
  Rat constant_term() const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

  // Leading term in pure lex order.  Requires !is_zero().
  const Monomial& leading_monomial() const;
  const Rat& leading_coefficient() const;
  // Coefficient of an exact monomial (0 when absent).
  Rat coefficient(const Monomial& m) const;
  long total_degree() const;  // -1 for the zero polynomial
  size_t term_count() const { return terms_.size(); }

  // Every variable must be assigned; missing ones raise UnboundIndeterminate.
  Rat evaluate(const Assignment& values) const;
  // Same, but the result must be an integer (raises NonIntegerValue).
  Int evaluate_integer(const Assignment& values) const;

  // Replaces the listed variables by polynomials; unlisted ones stay.
  Polynomial substitute(const PolyAssignment& images) const;

  // Multivariate division remainder by the given relation set (lex order,
  // first divisible divisor wins).  With single-monomial divisors this just
  // deletes every term the divisor's monomial divides.
  Polynomial reduce_lex(const std::vector<Polynomial>& divisors) const;

  std::vector<Indeterminate> variables() const;

  // Canonical text form, graded-lex descending; parseable back.
  std::string to_string() const;

  const std::map<Monomial, Rat, MonomialLexGreater>& terms() const {
    return terms_;
  }

 private:
  void add_term(const Monomial& m, const Rat& c);
  std::map<Monomial, Rat, MonomialLexGreater> terms_;
};

Polynomial operator*(const Rat& c, const Polynomial& p);

// Binomial-coefficient polynomials binom(p,2) and binom(p,3): the integer
// staples p(p-1)/2 and p(p-1)(p-2)/6 of an arbitrary polynomial argument.
Polynomial s2_of(const Polynomial& p);
Polynomial s3_of(const Polynomial& p);

// Text format: terms like "3*t123*a2^2*b1 - 1/2*x + 4".  Whitespace is free,
// "**" is accepted for "^" on input.
Polynomial parse_polynomial(const std::string& text);

std::string to_string(const Polynomial& p);

}  // namespace hall5
