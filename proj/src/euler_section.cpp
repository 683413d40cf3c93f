#include "sqdiff/euler_section.hpp"

#include "sqdiff/errors.hpp"

namespace sqdiff {

Rational section_s(const Rational& a) {
  const Rational den = Rational(4) * a * a - Rational(8) * a + Rational(1);
  if (den.is_zero()) throw Error(ErrorKind::Degeneracy, "4a^2-8a+1", "section denominator vanishes at a = " + a.to_string());
  return (Rational(8) * a - Rational(4)) / den;
}

SectionParams params_from_m(const Rational& m) {
  if (m.is_zero() || abs(m) == Rational(1))
    throw Error(ErrorKind::Parameter, "m not in {0,1,-1}", "excluded parameter m = " + m.to_string());

  SectionParams sp;
  sp.m = m;
  const Rational m2 = square(m);
  sp.a = m2 / (m2 - Rational(1));
  sp.f = Rational(2) * sp.a;
  sp.g = Rational(3) * sp.a - Rational(2) * square(sp.a);
  sp.s = section_s(sp.a);
  sp.w = Rational(1) + sp.f * sp.s + sp.g * square(sp.s);
  sp.p = Rational(1) + sp.s;
  sp.q = m * sp.p;
  if (square(sp.p) == Rational(1)) throw Error(ErrorKind::Degeneracy, "p^2-1", "p^2 - 1 vanishes for m = " + m.to_string());
  if (square(sp.q) == Rational(1)) throw Error(ErrorKind::Degeneracy, "q^2-1", "q^2 - 1 vanishes for m = " + m.to_string());
  return sp;
}

EulerTriple triple_from_m(const Rational& m) {
  const SectionParams sp = params_from_m(m);
  const Rational one(1);
  const Rational x_over_z = (square(sp.p) + one) / (square(sp.p) - one);
  const Rational y_over_z = (square(sp.q) + one) / (square(sp.q) - one);
  const Integer z = lcm(x_over_z.den(), y_over_z.den());
  const Integer x = divexact(x_over_z.num() * z, x_over_z.den());
  const Integer y = divexact(y_over_z.num() * z, y_over_z.den());
  return primitive_euler(x, y, z);
}

}  // namespace sqdiff
