#include "hall5/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "hall5/errors.hpp"

namespace hall5 {

Monomial::Monomial(
    std::initializer_list<std::pair<Indeterminate, long>> factors) {
  for (const auto& [v, e] : factors) set_exponent(v, e);
}

long Monomial::exponent(const Indeterminate& v) const {
  auto it = exps_.find(v);
  return it == exps_.end() ? 0 : it->second;
}

void Monomial::set_exponent(const Indeterminate& v, long e) {
  if (e < 0) throw Error("negative monomial exponent");
  if (e == 0)
    exps_.erase(v);
  else
    exps_[v] = e;
}

long Monomial::total_degree() const {
  long d = 0;
  for (const auto& [v, e] : exps_) d += e;
  return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r = *this;
  for (const auto& [v, e] : o.exps_) r.set_exponent(v, r.exponent(v) + e);
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  for (const auto& [v, e] : exps_)
    if (o.exponent(v) < e) return false;
  return true;
}

Monomial Monomial::quotient_into(const Monomial& o) const {
  Monomial r;
  for (const auto& [v, e] : o.exps_) r.set_exponent(v, e - exponent(v));
  return r;
}

int Monomial::lex_cmp(const Monomial& a, const Monomial& b) {
  // Maps are keyed by precedence, so walking both in parallel compares the
  // exponent vectors position by position.
  auto ia = a.exps_.begin(), ib = b.exps_.begin();
  while (ia != a.exps_.end() && ib != b.exps_.end()) {
    if (ia->first != ib->first)
      // Whichever monomial mentions the higher-precedence variable has a
      // positive exponent where the other has zero.
      return ia->first < ib->first ? 1 : -1;
    if (ia->second != ib->second) return ia->second > ib->second ? 1 : -1;
    ++ia, ++ib;
  }
  if (ia != a.exps_.end()) return 1;
  if (ib != b.exps_.end()) return -1;
  return 0;
}

int Monomial::grlex_cmp(const Monomial& a, const Monomial& b) {
  long da = a.total_degree(), db = b.total_degree();
  if (da != db) return da > db ? 1 : -1;
  return lex_cmp(a, b);
}

Polynomial::Polynomial(const Rat& c) {
  if (c != 0) terms_[Monomial()] = c;
}

Polynomial::Polynomial(const Indeterminate& v) {
  terms_[Monomial({{v, 1}})] = rat(1);
}

Polynomial::Polynomial(const Monomial& m, const Rat& c) {
  if (c != 0) terms_[m] = c;
}

bool Polynomial::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.begin()->first.is_constant());
}

Rat Polynomial::constant_term() const {
  auto it = terms_.find(Monomial());
  return it == terms_.end() ? rat(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rat& c) {
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  } else if (c == 0) {
    terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  *this = *this * o;
  return *this;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r = *this;
  r += o;
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial r = *this;
  r -= o;
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial r;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

Polynomial operator*(const Rat& c, const Polynomial& p) {
  return Polynomial(c) * p;
}

const Monomial& Polynomial::leading_monomial() const {
  if (terms_.empty()) throw Error("zero polynomial has no leading monomial");
  return terms_.begin()->first;
}

const Rat& Polynomial::leading_coefficient() const {
  if (terms_.empty()) throw Error("zero polynomial has no leading term");
  return terms_.begin()->second;
}

Rat Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? rat(0) : it->second;
}

long Polynomial::total_degree() const {
  long d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
  return d;
}

namespace {

Rat rat_pow(const Rat& base, long e) {
  Rat r = rat(1);
  for (long i = 0; i < e; ++i) r *= base;
  return r;
}

Polynomial poly_pow(const Polynomial& base, long e) {
  Polynomial r(1L);
  for (long i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace

Rat Polynomial::evaluate(const Assignment& values) const {
  Rat total = rat(0);
  for (const auto& [m, c] : terms_) {
    Rat term = c;
    for (const auto& [v, e] : m.factors()) {
      auto it = values.find(v);
      if (it == values.end())
        throw UnboundIndeterminate("no value for '" + std::string(v.name()) +
                                   "'");
      term *= rat_pow(it->second, e);
    }
    total += term;
  }
  return total;
}

Int Polynomial::evaluate_integer(const Assignment& values) const {
  Rat v = evaluate(values);
  if (!is_integral(v))
    throw NonIntegerValue("polynomial value " + v.get_str() +
                          " is not an integer");
  return v.get_num();
}

Polynomial Polynomial::substitute(const PolyAssignment& images) const {
  Polynomial total;
  for (const auto& [m, c] : terms_) {
    Polynomial term(c);
    for (const auto& [v, e] : m.factors()) {
      auto it = images.find(v);
      if (it == images.end())
        term *= Polynomial(Monomial({{v, e}}), rat(1));
      else
        term *= poly_pow(it->second, e);
    }
    total += term;
  }
  return total;
}

Polynomial Polynomial::reduce_lex(
    const std::vector<Polynomial>& divisors) const {
  for (const auto& d : divisors)
    if (d.is_zero()) throw Error("zero divisor in reduction set");
  Polynomial p = *this, remainder;
  while (!p.is_zero()) {
    bool reduced = false;
    for (const auto& d : divisors) {
      if (!d.leading_monomial().divides(p.leading_monomial())) continue;
      Monomial q = d.leading_monomial().quotient_into(p.leading_monomial());
      Rat c = p.leading_coefficient() / d.leading_coefficient();
      p -= Polynomial(q, c) * d;
      reduced = true;
      break;
    }
    if (!reduced) {
      remainder.add_term(p.leading_monomial(), p.leading_coefficient());
      p.terms_.erase(p.terms_.begin());
    }
  }
  return remainder;
}

std::vector<Indeterminate> Polynomial::variables() const {
  std::map<Indeterminate, bool> seen;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m.factors()) seen[v] = true;
  std::vector<Indeterminate> out;
  for (const auto& [v, b] : seen) out.push_back(v);
  return out;
}

Polynomial s2_of(const Polynomial& p) {
  return rat(1, 2) * (p * p - p);
}

Polynomial s3_of(const Polynomial& p) {
  return rat(1, 6) * (p * (p - Polynomial(1L)) * (p - Polynomial(2L)));
}

namespace {

std::string rat_str(const Rat& q) { return q.get_str(); }

void print_monomial(std::ostringstream& out, const Monomial& m, bool lead_mul) {
  bool first = !lead_mul;
  for (const auto& [v, e] : m.factors()) {
    if (!first) out << "*";
    first = false;
    out << v.name();
    if (e != 1) out << "^" << e;
  }
}

}  // namespace

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  // Printing uses graded lex; the storage order is pure lex.
  std::vector<const std::pair<const Monomial, Rat>*> order;
  for (const auto& t : terms_) order.push_back(&t);
  std::sort(order.begin(), order.end(), [](auto* a, auto* b) {
    return Monomial::grlex_cmp(a->first, b->first) > 0;
  });
  std::ostringstream out;
  bool first = true;
  for (const auto* t : order) {
    const auto& [m, c] = *t;
    Rat a = abs(c);
    if (first)
      out << (c < 0 ? "-" : "");
    else
      out << (c < 0 ? " - " : " + ");
    first = false;
    if (m.is_constant()) {
      out << rat_str(a);
    } else if (a == 1) {
      print_monomial(out, m, false);
    } else {
      out << rat_str(a);
      print_monomial(out, m, true);
    }
  }
  return out.str();
}

std::string to_string(const Polynomial& p) { return p.to_string(); }

namespace {

// Recursive-descent parser for the canonical text form.
struct PolyParser {
  std::string_view s;
  size_t pos = 0;

  void skip_space() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }

  bool eof() {
    skip_space();
    return pos == s.size();
  }

  char peek() {
    skip_space();
    return pos < s.size() ? s[pos] : '\0';
  }

  bool eat(char c) {
    if (peek() != c) return false;
    ++pos;
    return true;
  }

  [[noreturn]] void fail(const std::string& what) {
    throw ParseError(what + " at position " + std::to_string(pos) + " in '" +
                     std::string(s) + "'");
  }

  Int parse_natural() {
    skip_space();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (pos == start) fail("expected a number");
    return Int(std::string(s.substr(start, pos - start)));
  }

  Rat parse_rational() {
    Int num = parse_natural();
    if (!eat('/')) return rat(num, 1);
    Int den = parse_natural();
    if (den == 0) fail("zero denominator");
    return rat(num, den);
  }

  Indeterminate parse_name() {
    skip_space();
    size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos]))))
      ++pos;
    std::string name(s.substr(start, pos - start));
    try {
      return Indeterminate(name);
    } catch (const ParseError&) {
      pos = start;
      fail("unknown variable '" + name + "'");
    }
  }

  long parse_exponent() {
    skip_space();
    if (peek() == '-') fail("negative exponents are not monomials");
    Int e = parse_natural();
    if (!e.fits_slong_p()) fail("exponent too large");
    return e.get_si();
  }

  bool at_power() {
    if (peek() == '^') {
      ++pos;
      return true;
    }
    if (pos + 1 < s.size() && s[pos] == '*' && s[pos + 1] == '*') {
      pos += 2;
      return true;
    }
    return false;
  }

  // factor := rational | name [('^'|'**') natural]
  void parse_factor(Rat& coeff, Monomial& mono) {
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      coeff *= parse_rational();
      return;
    }
    if (!std::isalpha(static_cast<unsigned char>(c))) fail("expected a factor");
    Indeterminate v = parse_name();
    long e = 1;
    skip_space();
    if (at_power()) e = parse_exponent();
    mono.set_exponent(v, mono.exponent(v) + e);
  }

  // term := factor ('*' factor)*
  Polynomial parse_term() {
    Rat coeff = rat(1);
    Monomial mono;
    parse_factor(coeff, mono);
    while (true) {
      skip_space();
      // A '*' that is really '**' belongs to the preceding name and was
      // consumed there, so a lone '*' always separates factors.
      if (!eat('*')) break;
      parse_factor(coeff, mono);
    }
    return Polynomial(mono, coeff);
  }

  Polynomial parse() {
    Polynomial total;
    bool negative = false;
    if (eat('-'))
      negative = true;
    else
      eat('+');
    while (true) {
      Polynomial t = parse_term();
      total += negative ? -t : t;
      if (eof()) break;
      if (eat('+'))
        negative = false;
      else if (eat('-'))
        negative = true;
      else
        fail("expected '+' or '-'");
    }
    return total;
  }
};

}  // namespace

Polynomial parse_polynomial(const std::string& text) {
  PolyParser p{text};
  if (p.eof()) throw ParseError("empty polynomial text");
  return p.parse();
}

}  // namespace hall5
