#include "sqdiff/triples.hpp"

#include <algorithm>
#include <string>

namespace sqdiff {

namespace {

std::string triple_str(const Integer& x, const Integer& y, const Integer& z) {
  return "(" + x.to_string() + "," + y.to_string() + "," + z.to_string() + ")";
}

Integer require_square(const Integer& value, const char* name) {
  auto root = exact_sqrt(value);
  if (!root) throw Error(ErrorKind::Validation, name, std::string(name) + " = " + value.to_string() + " is not a square");
  return *root;
}

// 2r/(1+r^2)
Rational sine_of(const Rational& r) { return Rational(2) * r / (Rational(1) + square(r)); }

}  // namespace

EulerTriple verify_euler(const Integer& x0, const Integer& y0, const Integer& z0) {
  std::array<Integer, 3> v{abs(x0), abs(y0), abs(z0)};
  std::sort(v.begin(), v.end(), std::greater<>());
  const auto& [x, y, z] = v;
  if (z.is_zero()) throw Error(ErrorKind::Degeneracy, "nonzero", "zero entry in " + triple_str(x0, y0, z0));
  if (x == y || y == z) throw Error(ErrorKind::Degeneracy, "distinct", "equal entries in " + triple_str(x0, y0, z0));

  const Integer xx = x * x, yy = y * y, zz = z * z;
  Integer t = require_square(xx - yy, "x^2-y^2");
  Integer u = require_square(xx - zz, "x^2-z^2");
  Integer w = require_square(yy - zz, "y^2-z^2");

  const Integer g = gcd(gcd(x, y), z);
  if (g != Integer(1)) {
    std::array<Integer, 3> reduced{divexact(x, g), divexact(y, g), divexact(z, g)};
    throw NonPrimitiveError(reduced, triple_str(x, y, z) + " has gcd " + g.to_string() + "; primitive form " +
                                         triple_str(reduced[0], reduced[1], reduced[2]));
  }
  return EulerTriple(x, y, z, SquareCertificate{std::move(t), std::move(u), std::move(w)});
}

EulerTriple primitive_euler(const Integer& x, const Integer& y, const Integer& z) {
  const Integer g = gcd(gcd(x, y), z);
  if (g.is_zero()) return verify_euler(x, y, z);
  return verify_euler(divexact(x, g), divexact(y, g), divexact(z, g));
}

EulerTriple companion_triple(const EulerTriple& e) { return verify_euler(e.x(), e.u(), e.t()); }

HyperbolicTriple euler_to_hyperbolic(const EulerTriple& e) {
  return {Rational(e.x() + e.t(), e.y()), Rational(e.y() + e.v(), e.z()), Rational(e.x() + e.u(), e.z())};
}

bool satisfies_hyperbolic_relation(const Rational& a, const Rational& b, const Rational& c) {
  // 4ab(1+c^2) = 2c(1+a^2)(1+b^2), free of division
  const Rational one(1);
  return Rational(4) * a * b * (one + square(c)) == Rational(2) * c * (one + square(a)) * (one + square(b));
}

EulerTriple hyperbolic_to_euler(const HyperbolicTriple& h) {
  if (!satisfies_hyperbolic_relation(h.a, h.b, h.c))
    throw Error(ErrorKind::Validation, "pythagorean_relation",
                "(" + h.a.to_string() + ", " + h.b.to_string() + ", " + h.c.to_string() +
                    ") violates 2a/(1+a^2) * 2b/(1+b^2) = 2c/(1+c^2)");
  for (const Rational* r : {&h.a, &h.b, &h.c})
    if (*r <= Rational(1)) throw Error(ErrorKind::Validation, "entries>1", r->to_string() + " is not > 1");

  const Rational y_over_x = sine_of(h.a);
  const Rational z_over_x = sine_of(h.c);
  const Integer x = lcm(y_over_x.den(), z_over_x.den());
  const Integer y = divexact(y_over_x.num() * x, y_over_x.den());
  const Integer z = divexact(z_over_x.num() * x, z_over_x.den());
  if (Rational(z, y) != sine_of(h.b))
    throw Error(ErrorKind::Validation, "z/y=2b/(b^2+1)", "inconsistent leg b");
  return primitive_euler(x, y, z);
}

HyperbolicTriple canonicalize_hyperbolic(const Rational& a, const Rational& b, const Rational& c) {
  for (const Rational* r : {&a, &b, &c})
    if (r->is_zero() || abs(*r) == Rational(1))
      throw Error(ErrorKind::Trivial, "entries not 0 or +-1", "trivial entry " + r->to_string());
  if (!satisfies_hyperbolic_relation(a, b, c))
    throw Error(ErrorKind::Validation, "pythagorean_relation",
                "(" + a.to_string() + ", " + b.to_string() + ", " + c.to_string() + ") violates the relation");
  // Each side of the relation is odd in its variables, so the relation forces
  // an even number of negative entries and taking absolute values preserves it.
  const auto normal = [](const Rational& r) {
    Rational p = abs(r);
    return p < Rational(1) ? p.inverse() : p;
  };
  return {normal(a), normal(b), normal(c)};
}

Cuboid euler_to_cuboid(const EulerTriple& e) {
  return {e.t(), e.v(), e.z(), e.u(), e.y(), e.x()};
}

SumDiffTriple euler_to_sumdiff(const EulerTriple& e) {
  Integer X = e.x(), Y = e.y(), Z = e.z();
  if ((Y * Y + Z * Z - X * X).is_odd()) {
    X *= 2;
    Y *= 2;
    Z *= 2;
  }
  // A + B = Z^2, A + C = Y^2, B + C = X^2
  Integer A = divexact(Y * Y + Z * Z - X * X, Integer(2));
  Integer B = Z * Z - A;
  Integer C = Y * Y - A;
  return {std::move(A), std::move(B), std::move(C)};
}

EulerTriple sumdiff_to_euler(const SumDiffTriple& sd) {
  if (!(sd.A < sd.B && sd.B < sd.C)) throw Error(ErrorKind::Validation, "A<B<C", "entries not strictly increasing");
  const Integer x = require_square(sd.B + sd.C, "B+C");
  const Integer y = require_square(sd.A + sd.C, "A+C");
  const Integer z = require_square(sd.A + sd.B, "A+B");
  require_square(sd.C - sd.B, "C-B");
  require_square(sd.C - sd.A, "C-A");
  require_square(sd.B - sd.A, "B-A");
  return primitive_euler(x, y, z);
}

}  // namespace sqdiff
