#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hall5/errors.hpp"
#include "hall5/polynomial.hpp"

using namespace hall5;

namespace {

Polynomial var(const char* name) { return Polynomial(Indeterminate(name)); }

}  // namespace

TEST_CASE("rational construction canonicalizes") {
  CHECK(rat(2, 4) == rat(1, 2));
  CHECK(rat(2, 4).get_str() == "1/2");
  CHECK(rat(-3, -6) == rat(1, 2));
  CHECK(rat(3, -6).get_str() == "-1/2");
  CHECK(is_integral(rat(8, 4)));
  CHECK(!is_integral(rat(8, 3)));
}

TEST_CASE("indeterminate universe and order") {
  CHECK(Indeterminate("t123").index() == 0);
  CHECK(Indeterminate("t345").index() == 9);
  CHECK(Indeterminate("a1").index() == 10);
  CHECK(Indeterminate("b5").index() == 19);
  CHECK(Indeterminate("y").index() == 21);
  CHECK(Indeterminate::t(2, 3, 5).name() == "t235");
  CHECK(Indeterminate::a(4) == Indeterminate("a4"));
  CHECK_THROWS_AS(Indeterminate("z"), ParseError);
  CHECK_THROWS_AS(Indeterminate("a6"), ParseError);
  CHECK_THROWS_AS(Indeterminate("t132"), ParseError);
  CHECK_THROWS_AS(Indeterminate::t(3, 2, 1), Error);
  // t123 outranks everything, y ranks last.
  CHECK(Indeterminate("t123") < Indeterminate("a1"));
  CHECK(Indeterminate("a5") < Indeterminate("b1"));
  CHECK(Indeterminate("x") < Indeterminate("y"));
}

TEST_CASE("monomial arithmetic and lex comparison") {
  Indeterminate a2("a2"), b1("b1"), t123("t123");
  Monomial m{{a2, 1}, {b1, 2}};
  Monomial k{{b1, 1}};
  CHECK(m.total_degree() == 3);
  CHECK(m.exponent(b1) == 2);
  CHECK(m.exponent(t123) == 0);
  CHECK(k.divides(m));
  CHECK(!m.divides(k));
  CHECK(k.quotient_into(m) == Monomial{{a2, 1}, {b1, 1}});
  CHECK((m * k) == Monomial{{a2, 1}, {b1, 3}});
  // t123 beats any power of lower variables in lex.
  CHECK(Monomial::lex_cmp(Monomial{{t123, 1}}, Monomial{{a2, 9}, {b1, 9}}) >
        0);
  CHECK(Monomial::lex_cmp(Monomial{{a2, 2}}, Monomial{{a2, 1}, {b1, 5}}) > 0);
  CHECK(Monomial::lex_cmp(m, m) == 0);
  // grlex looks at total degree first.
  CHECK(Monomial::grlex_cmp(Monomial{{a2, 9}, {b1, 9}}, Monomial{{t123, 1}}) >
        0);
}

TEST_CASE("polynomial arithmetic is exact and canonical") {
  Polynomial x = var("x"), y = var("y");
  CHECK((x + y) * (x + y) == x * x + 2 * (x * y) + y * y);
  CHECK((x + y) * (x - y) == x * x - y * y);
  CHECK((x - x).is_zero());
  Polynomial p = rat(1, 2) * x + rat(1, 2) * x;
  CHECK(p == x);
  CHECK(p.term_count() == 1);
  CHECK(Polynomial(0L).is_zero());
  CHECK((x * Polynomial(0L)).is_zero());
  CHECK(Polynomial(3L).constant_term() == 3);
  CHECK((x + 1) * (x + 2) == x * x + 3 * x + Polynomial(2L));
}

TEST_CASE("leading terms follow the fixed lex order") {
  Polynomial p = var("a1") + var("t345") * var("b5") + var("y");
  CHECK(p.leading_monomial() ==
        Monomial{{Indeterminate("t345"), 1}, {Indeterminate("b5"), 1}});
  CHECK(p.leading_coefficient() == 1);
  CHECK(p.total_degree() == 2);
  CHECK(Polynomial().total_degree() == -1);
  CHECK_THROWS_AS(Polynomial().leading_monomial(), Error);
}

TEST_CASE("binomial coefficient polynomials") {
  Polynomial x = var("x");
  // s2(x) = x(x-1)/2 and s3(x) = x(x-1)(x-2)/6.
  CHECK(s2_of(x) == rat(1, 2) * (x * x) - rat(1, 2) * x);
  Assignment at{{Indeterminate("x"), rat(7)}};
  CHECK(s2_of(x).evaluate_integer(at) == 21);
  CHECK(s3_of(x).evaluate_integer(at) == 35);
  at[Indeterminate("x")] = rat(-2);
  CHECK(s2_of(x).evaluate_integer(at) == 3);
  CHECK(s3_of(x).evaluate_integer(at) == -4);
  at[Indeterminate("x")] = rat(1);
  CHECK(s2_of(x).evaluate_integer(at) == 0);
  CHECK(s3_of(x).evaluate_integer(at) == 0);
}

TEST_CASE("substitution composes polynomials") {
  Polynomial x = var("x"), y = var("y");
  PolyAssignment images{{Indeterminate("x"), 2 * y}};
  // s2(2y) = 2y(2y-1)/2 = 2y^2 - y.
  CHECK(s2_of(x).substitute(images) == 2 * (y * y) - y);
  // Unlisted variables stay put.
  Polynomial q = x + var("a1");
  CHECK(q.substitute(images) == 2 * y + var("a1"));
  // Substituting a constant evaluates partially.
  PolyAssignment zero{{Indeterminate("x"), Polynomial()}};
  CHECK(s2_of(x).substitute(zero).is_zero());
}

TEST_CASE("evaluation demands full bindings and integrality") {
  Polynomial p = var("a1") * var("b1");
  Assignment partial{{Indeterminate("a1"), rat(3)}};
  CHECK_THROWS_AS(p.evaluate(partial), UnboundIndeterminate);
  Assignment full = partial;
  full[Indeterminate("b1")] = rat(1, 3);
  CHECK(p.evaluate(full) == 1);
  CHECK(p.evaluate_integer(full) == 1);
  full[Indeterminate("b1")] = rat(1, 2);
  CHECK_THROWS_AS(p.evaluate_integer(full), NonIntegerValue);
}

TEST_CASE("lexicographic reduction by a single monomial deletes its multiples") {
  Polynomial t123 = var("t123"), t345 = var("t345");
  Polynomial a2 = var("a2"), b1 = var("b1");
  Polynomial p =
      t123 * t345 * a2 * b1 + 3 * (t123 * t345) + a2 * b1 + var("t124");
  Polynomial reduced = p.reduce_lex({t123 * t345});
  CHECK(reduced == a2 * b1 + var("t124"));
  // Idempotent, and exact on already-reduced input.
  CHECK(reduced.reduce_lex({t123 * t345}) == reduced);
  CHECK(Polynomial().reduce_lex({t123 * t345}).is_zero());
}

TEST_CASE("reduction by a binomial relation") {
  Polynomial x = var("x"), y = var("y");
  // Remainder of x^2 modulo x - y is y^2.
  CHECK((x * x).reduce_lex({x - y}) == y * y);
  CHECK_THROWS_AS(x.reduce_lex({Polynomial()}), Error);
}

TEST_CASE("printing uses graded lex descending") {
  Polynomial p = var("a1") + var("t123") * var("a2") * var("b1");
  CHECK(p.to_string() == "t123*a2*b1 + a1");
  CHECK(Polynomial().to_string() == "0");
  CHECK(Polynomial(rat(-1, 2)).to_string() == "-1/2");
  Polynomial q = -var("x") + rat(1, 2);
  CHECK(q.to_string() == "-x + 1/2");
  CHECK((var("x") * var("x") - 2 * var("x")).to_string() == "x^2 - 2*x");
}

TEST_CASE("parse round-trips the printed form") {
  std::vector<std::string> cases = {
      "0",
      "a1 + b1",
      "t123*a2*b1 + a3 + b3",
      "-x + 1/2",
      "x^2 - 2*x",
      "1/6*t123*t134*t145*a2*b1^3 - 42",
      "3*t345^2*b5 - 5/7*y + 2",
  };
  for (const auto& text : cases) {
    Polynomial p = parse_polynomial(text);
    CHECK(p.to_string() == text);
    CHECK(parse_polynomial(p.to_string()) == p);
  }
}

TEST_CASE("parser accepts free whitespace and ** powers") {
  CHECK(parse_polynomial("x**2") == parse_polynomial("x^2"));
  CHECK(parse_polynomial("  x +   y ") == var("x") + var("y"));
  CHECK(parse_polynomial("2*x*x") == 2 * var("x") * var("x"));
  CHECK(parse_polynomial("x^0") == Polynomial(1L));
  CHECK(parse_polynomial("+x") == var("x"));
  CHECK(parse_polynomial("-x") == -var("x"));
  CHECK(parse_polynomial("3/6") == Polynomial(rat(1, 2)));
}

TEST_CASE("parser rejects junk") {
  CHECK_THROWS_AS(parse_polynomial(""), ParseError);
  CHECK_THROWS_AS(parse_polynomial("z + 1"), ParseError);
  CHECK_THROWS_AS(parse_polynomial("a1 +"), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x^-2"), ParseError);
  CHECK_THROWS_AS(parse_polynomial("1/0"), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x x"), ParseError);
  CHECK_THROWS_AS(parse_polynomial("4 5"), ParseError);
}

TEST_CASE("exponent vector text form") {
  ExponentVector v = parse_exponent_vector("1,-2,0,4,5");
  CHECK(v.size() == 5);
  CHECK(v[1] == -2);
  CHECK(to_string(v) == "1,-2,0,4,5");
  CHECK(parse_exponent_vector("7") == ExponentVector{Int(7)});
  CHECK(parse_exponent_vector(" 1 , 2 ") == ExponentVector{Int(1), Int(2)});
  CHECK_THROWS_AS(parse_exponent_vector("1,,2"), ParseError);
  CHECK_THROWS_AS(parse_exponent_vector("1,two"), ParseError);
  CHECK_THROWS_AS(parse_exponent_vector(""), ParseError);
}
