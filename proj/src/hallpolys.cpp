#include "hall5/hallpolys.hpp"

#include "hall5/errors.hpp"

namespace hall5 {

namespace {

Polynomial A(int i) { return Polynomial(Indeterminate::a(i)); }
Polynomial B(int i) { return Polynomial(Indeterminate::b(i)); }
Polynomial T(int i, int j, int k) {
  return Polynomial(Indeterminate::t(i, j, k));
}
const Polynomial X(Indeterminate::x());
const Polynomial Y(Indeterminate::y());

HallSystem build_theorem() {
  HallSystem h;
  h[1] = A(1) + B(1);
  h[2] = A(2) + B(2);
  h[3] = A(3) + B(3) + T(1, 2, 3) * A(2) * B(1);
  h[4] = A(4) + B(4) + T(1, 2, 4) * A(2) * B(1) + T(1, 3, 4) * A(3) * B(1) +
         T(2, 3, 4) * A(3) * B(2) + T(1, 2, 3) * T(1, 3, 4) * A(2) * s2_of(B(1)) +
         T(1, 2, 3) * T(2, 3, 4) * s2_of(A(2)) * B(1) +
         T(1, 2, 3) * T(2, 3, 4) * A(2) * B(1) * B(2);
  h[5] = A(5) + B(5)
       + T(3, 4, 5) * A(4) * B(3)
       + T(2, 4, 5) * A(4) * B(2)
       + T(2, 3, 5) * A(3) * B(2)
       + T(1, 4, 5) * A(4) * B(1)
       + T(1, 3, 5) * A(3) * B(1)
       + T(1, 2, 5) * A(2) * B(1)
       + T(2, 3, 4) * T(3, 4, 5) * s2_of(A(3)) * B(2)
       + T(2, 3, 4) * T(2, 4, 5) * A(3) * s2_of(B(2))
       + T(1, 3, 4) * T(3, 4, 5) * s2_of(A(3)) * B(1)
       + T(1, 3, 4) * T(1, 4, 5) * A(3) * s2_of(B(1))
       + T(2, 3, 4) * T(3, 4, 5) * A(3) * B(2) * B(3)
       + T(1, 3, 4) * T(3, 4, 5) * A(3) * B(1) * B(3)
       + T(1, 3, 4) * T(2, 4, 5) * A(3) * B(1) * B(2)
       + T(1, 2, 4) * T(3, 4, 5) * A(2) * B(1) * B(3)
       + T(1, 2, 4) * T(3, 4, 5) * A(2) * A(3) * B(1)
       + (T(1, 2, 3) * T(2, 3, 5) + T(1, 2, 4) * T(2, 4, 5)) * A(2) * B(1) * B(2)
       + (T(1, 2, 3) * T(2, 3, 5) + T(1, 2, 4) * T(2, 4, 5)) * s2_of(A(2)) * B(1)
       + (T(1, 2, 3) * T(1, 3, 5) + T(1, 2, 4) * T(1, 4, 5)) * A(2) * s2_of(B(1))
       + T(1, 2, 3) * T(2, 3, 4) * T(2, 4, 5) * A(2) * B(1) * s2_of(B(2))
       + T(1, 2, 3) * T(1, 3, 4) * T(2, 4, 5) * s2_of(A(2)) * s2_of(B(1))
       + T(1, 2, 3) * T(2, 3, 4) * T(2, 4, 5) * s3_of(A(2)) * B(1)
       + T(1, 2, 3) * T(1, 3, 4) * T(1, 4, 5) * A(2) * s3_of(B(1))
       + T(1, 2, 3) * T(2, 3, 4) * T(2, 4, 5) * s2_of(A(2)) * B(1) * B(2)
       + T(1, 2, 3) * T(1, 3, 4) * T(2, 4, 5) * A(2) * s2_of(B(1)) * B(2);
  return h;
}

G2System build_g2() {
  G2System g;
  g.f[0] = A(2) + B(2);
  g.f[1] = A(3) + B(3);
  g.f[2] = A(4) + B(4) + A(3) * B(2) * T(2, 3, 4);
  g.f[3] = A(5) + B(5) + A(3) * B(2) * T(2, 3, 5) + A(4) * B(2) * T(2, 4, 5) +
           A(4) * B(3) * T(3, 4, 5) +
           A(3) * s2_of(B(2)) * T(2, 3, 4) * T(2, 4, 5) +
           s2_of(A(3)) * B(2) * T(2, 3, 4) * T(3, 4, 5) +
           A(3) * B(2) * B(3) * T(2, 3, 4) * T(3, 4, 5);
  g.k[0] = X * A(2);
  g.k[1] = X * A(3);
  g.k[2] = X * A(4) + s2_of(X) * A(2) * A(3) * T(2, 3, 4);
  g.k[3] = X * A(5) +
           s2_of(X) * (A(2) * A(3) * T(2, 3, 5) + A(2) * A(4) * T(2, 4, 5) +
                       A(3) * A(4) * T(3, 4, 5)) +
           rat(1, 6) * s2_of(X) * A(2) * A(3) * T(2, 3, 4) *
               (T(2, 4, 5) * ((2 * X - Polynomial(1L)) * A(2) - Polynomial(3L)) +
                T(3, 4, 5) * ((4 * X + Polynomial(1L)) * A(3) - Polynomial(3L)));
  return g;
}

ConjugationSystem build_conjugation() {
  ConjugationSystem c;
  c.r = Y * T(1, 2, 3);
  c.s = Y * T(1, 2, 4) + s2_of(Y) * T(1, 2, 3) * T(1, 3, 4);
  c.t = Y * T(1, 2, 5) +
        s2_of(Y) * (T(1, 2, 3) * T(1, 3, 5) + T(1, 2, 4) * T(1, 4, 5)) +
        s3_of(Y) * T(1, 2, 3) * T(1, 3, 4) * T(1, 4, 5);
  c.R = X * c.r;
  c.S = X * c.s + s2_of(X) * c.r * T(2, 3, 4);
  // The tail of T reads k5's closing term at a2 = 1, a3 = r(y), so the
  // factor "(2x-1)-3" stands for (2x-1)*1 - 3.
  c.T = X * c.t +
        s2_of(X) * (c.r * T(2, 3, 5) + c.s * T(2, 4, 5) +
                    c.r * c.s * T(3, 4, 5)) +
        rat(1, 6) * s2_of(X) * c.r * T(2, 3, 4) *
            (T(2, 4, 5) * (2 * X - Polynomial(1L) - Polynomial(3L)) +
             T(3, 4, 5) * ((4 * X + Polynomial(1L)) * c.r - Polynomial(3L)));
  return c;
}

RTable build_r_table() {
  const ConjugationSystem c = conjugation_polynomials();
  RTable table;
  table[{1, 4}] = {{5, X * Y * T(1, 4, 5)}};
  table[{2, 4}] = {{5, X * Y * T(2, 4, 5)}};
  table[{3, 4}] = {{5, X * Y * T(3, 4, 5)}};
  table[{1, 3}] = {{4, X * Y * T(1, 3, 4)},
                   {5, s2_of(X) * Y * T(1, 3, 4) * T(3, 4, 5) +
                           X * Y * T(1, 3, 5) +
                           X * s2_of(Y) * T(1, 3, 4) * T(1, 4, 5)}};
  table[{2, 3}] = {{4, X * Y * T(2, 3, 4)},
                   {5, s2_of(X) * Y * T(2, 3, 4) * T(3, 4, 5) +
                           X * Y * T(2, 3, 5) +
                           X * s2_of(Y) * T(2, 3, 4) * T(2, 4, 5)}};
  table[{1, 2}] = {{3, c.R}, {4, c.S}, {5, c.T}};
  return table;
}

}  // namespace

HallSystem theorem_polynomials() {
  static const HallSystem h = build_theorem();
  return h;
}

G2System g2_polynomials() {
  static const G2System g = build_g2();
  return g;
}

ConjugationSystem conjugation_polynomials() {
  static const ConjugationSystem c = build_conjugation();
  return c;
}

RTable r_table() {
  static const RTable t = build_r_table();
  return t;
}

Assignment bind_t(const StructureConstants& t) {
  Assignment values;
  for (int i = 1; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j)
      for (int k = j + 1; k <= 5; ++k)
        values[Indeterminate::t(i, j, k)] =
            k <= t.n() ? rat(t.get(i, j, k), 1) : rat(0);
  return values;
}

namespace {

void require_consistent(const StructureConstants& t) {
  if (!GroupPresentation(t).consistent())
    throw InconsistentPresentation(
        "Hall polynomial arithmetic requires a consistent presentation");
}

void bind_vector(Assignment& values, char which, const StructureConstants& t,
                 const ExponentVector& v) {
  if ((int)v.size() != t.n())
    throw BadShape("exponent vector has length " + std::to_string(v.size()) +
                   ", presentation needs " + std::to_string(t.n()));
  for (int i = 1; i <= 5; ++i) {
    Indeterminate var =
        which == 'a' ? Indeterminate::a(i) : Indeterminate::b(i);
    values[var] = i <= t.n() ? rat(v[i - 1], 1) : rat(0);
  }
}

}  // namespace

ExponentVector hall_multiply(const StructureConstants& t,
                             const ExponentVector& a,
                             const ExponentVector& b) {
  require_consistent(t);
  const HallSystem h = theorem_polynomials();
  Assignment values = bind_t(t);
  bind_vector(values, 'a', t, a);
  bind_vector(values, 'b', t, b);
  ExponentVector out;
  for (int i = 1; i <= t.n(); ++i)
    out.push_back(h[i].evaluate_integer(values));
  return out;
}

ExponentVector hall_inverse(const StructureConstants& t,
                            const ExponentVector& a) {
  require_consistent(t);
  const HallSystem h = theorem_polynomials();
  Assignment values = bind_t(t);
  bind_vector(values, 'a', t, a);
  ExponentVector b(t.n(), Int(0));
  // p_i = a_i + b_i + terms in earlier coordinates, so each step below only
  // depends on the b_j already fixed.
  for (int i = 1; i <= t.n(); ++i) {
    bind_vector(values, 'b', t, b);
    b[i - 1] = -h[i].evaluate_integer(values);
  }
  return b;
}

ExponentVector hall_power(const StructureConstants& t, const ExponentVector& a,
                          const Int& x) {
  require_consistent(t);
  if (x < 0) return hall_power(t, hall_inverse(t, a), -x);
  ExponentVector acc(t.n(), Int(0)), sq = a;
  Int e = x;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) acc = hall_multiply(t, acc, sq);
    e >>= 1;
    if (e > 0) sq = hall_multiply(t, sq, sq);
  }
  return acc;
}

}  // namespace hall5
