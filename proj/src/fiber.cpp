#include "sqdiff/fiber.hpp"

#include "sqdiff/errors.hpp"
#include "sqdiff/euler_section.hpp"

namespace sqdiff {

namespace {

const Rational kOne(1);
const Rational kTwo(2);

Rational checked_a(Rational a) {
  if (a.is_zero() || a == kOne) throw Error(ErrorKind::Degeneracy, "a not in {0,1}", "singular fiber at a = " + a.to_string());
  return a;
}

std::string point_str(const QuarticPoint& p) {
  if (p.at_infinity) return p.branch == InfinityBranch::Plus ? "inf+" : "inf-";
  return "(" + p.s.to_string() + ", " + p.w.to_string() + ")";
}

}  // namespace

QuarticCurve::QuarticCurve(Rational a) : a_(checked_a(std::move(a))) {}

Rational QuarticCurve::value_at(const Rational& s) const {
  // Horner on a s^4 + 4a s^3 + 6a s^2 + 4a s + 1
  return (((a_ * s + Rational(4) * a_) * s + Rational(6) * a_) * s + Rational(4) * a_) * s + kOne;
}

bool contains(const QuarticCurve& C, const QuarticPoint& pt) {
  if (pt.at_infinity) return rat_sqrt(C.a()).has_value();
  return square(pt.w) == C.value_at(pt.s);
}

QuarticPoint euler_point(const QuarticCurve& C) {
  const Rational& a = C.a();
  const Rational s = section_s(a);
  return QuarticPoint::affine(s, kOne + kTwo * a * s + (Rational(3) * a - kTwo * square(a)) * square(s));
}

// The quartic v^2 = a u^4 + b u^3 + c u^2 + d u + 1 with b = d = 4a, c = 6a is
// first sent to the long model
//   y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a2 a4,
//   a1 = d, a2 = c - d^2/4, a3 = 2b, a4 = -4a,
// by x = (2(v+1) + du)/u^2, y = (4(v+1) + 2(du + cu^2) - d^2u^2/2)/u^3, and
// then to the short model by X = 9x + 18a, Y = (27/2)(2y + a1 x + a3).
FiberModel::FiberModel(const QuarticCurve& C)
    : quartic_(C),
      curve_(Rational(324) * C.a() * (C.a() - kOne), Rational(0)),
      a1_(Rational(4) * C.a()),
      a2_(Rational(6) * C.a() - Rational(4) * square(C.a())),
      a3_(Rational(8) * C.a()) {}

WeierstrassPoint FiberModel::forward(const QuarticPoint& pt) const {
  if (!contains(quartic_, pt)) throw Error(ErrorKind::Validation, "on_curve", point_str(pt) + " is not on the fiber");
  const Rational& a = quartic_.a();
  Rational x, y;
  if (pt.at_infinity) {
    const Rational r = *rat_sqrt(a);
    x = Rational(2) * (pt.branch == InfinityBranch::Plus ? r : -r);
    y = Rational(0);
  } else if (pt.s.is_zero()) {
    if (pt.w == kOne) return WeierstrassPoint::identity();
    x = -a2_;
    y = a1_ * a2_ - a3_;
  } else {
    const Rational& u = pt.s;
    const Rational d = a1_, c = Rational(6) * a;
    const Rational u2 = square(u);
    x = (kTwo * (pt.w + kOne) + d * u) / u2;
    y = (Rational(4) * (pt.w + kOne) + kTwo * (d * u + c * u2) - square(d) * u2 / kTwo) / (u2 * u);
  }
  return WeierstrassPoint::affine(Rational(9) * x + Rational(18) * a, Rational(27) / kTwo * (kTwo * y + a1_ * x + a3_));
}

QuarticPoint FiberModel::backward(const WeierstrassPoint& pt) const {
  if (!curve_.contains(pt)) throw Error(ErrorKind::Validation, "on_curve", "point is not on the Weierstrass model");
  if (pt.infinity) return QuarticCurve::origin();
  const Rational& a = quartic_.a();
  const Rational x = (pt.x - Rational(18) * a) / Rational(9);
  const Rational y = (kTwo * pt.y / Rational(27) - a1_ * x - a3_) / kTwo;

  Rational u;
  if (!y.is_zero()) {
    u = kTwo * (x + a2_) / y;
  } else {
    const Rational den = square(x) - Rational(4) * a;
    if (den.is_zero()) {
      // x = 2 * branch * sqrt(a), rational here because x is.
      return QuarticPoint::infinity(x.sign() > 0 ? InfinityBranch::Plus : InfinityBranch::Minus);
    }
    u = kTwo * (a1_ * x + a3_) / den;
  }
  const Rational v = (x * square(u) - a1_ * u) / kTwo - kOne;
  QuarticPoint out = QuarticPoint::affine(u, v);
  if (!contains(quartic_, out)) throw Error(ErrorKind::Internal, "backward", "inverse map left the fiber");
  return out;
}

FiberModel to_weierstrass(const QuarticCurve& C) { return FiberModel(C); }

QuarticPoint negate(const QuarticCurve& C, const QuarticPoint& p) {
  const FiberModel model(C);
  return model.backward(model.curve().negate(model.forward(p)));
}

QuarticPoint add(const QuarticCurve& C, const QuarticPoint& p1, const QuarticPoint& p2) {
  const FiberModel model(C);
  return model.backward(model.curve().add(model.forward(p1), model.forward(p2)));
}

QuarticPoint mul(const QuarticCurve& C, const QuarticPoint& p, const Integer& n) {
  const FiberModel model(C);
  return model.backward(model.curve().mul(model.forward(p), n));
}

FiberLocation fiber_of_triple(const EulerTriple& e) {
  const Rational p(e.x() + e.z(), e.u());
  const Rational q(e.y() + e.z(), e.v());
  const Rational m(e.v() * (e.x() - e.z()), e.u() * (e.y() - e.z()));
  if (m != q / p) throw Error(ErrorKind::Internal, "m=q/p", "fiber parameter mismatch");
  if (square(p) == kOne || square(q) == kOne) throw Error(ErrorKind::Degeneracy, "p^2,q^2 != 1", "degenerate p or q");
  const Rational m2 = square(m);
  QuarticCurve curve(m2 / (m2 - kOne));
  const Rational s = p - kOne;
  const Rational value = curve.value_at(s);
  auto w = rat_sqrt(value);
  if (!w) throw Error(ErrorKind::Irrationality, "quartic(s)", "quartic value " + value.to_string() + " is not a square");
  return {m, curve, QuarticPoint::affine(s, *w)};
}

}  // namespace sqdiff
