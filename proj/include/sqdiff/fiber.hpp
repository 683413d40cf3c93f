#pragma once

// The genus-one fiber  w^2 = 1 + 4as + 6as^2 + 4as^3 + as^4  over a fixed
// rational a, with the group law whose identity is O = (0, 1).
//
// Distinguished points: O = (0,1), P = (0,-1), the 2-torsion point
// T = (-2,-1) and the section point Q = (s_Q, 1 + 2a s_Q + (3a-2a^2) s_Q^2)
// with s_Q = (8a-4)/(4a^2-8a+1). Q = 2P on every fiber.
//
// With sigma = 1 + s the fiber reads w^2 = a sigma^4 + 1 - a, and
// (sigma, w) -> (-sigma, -w) has no fixed points, so it is translation by
// the image of O, which is T. The point (-2,1) is P + T, so 2(-2,1) = Q.
//
// The group law is computed on the Jacobian model y^2 = x^3 + A x with
// A = -27 I, I = 12a - 12a^2 the quartic's I-invariant (its J-invariant is 0,
// so every fiber has j = 1728). The quartic's two points at infinity
// (w/s^2 -> +-sqrt(a)) are rational only when a is a rational square.

#include "sqdiff/arith.hpp"
#include "sqdiff/triples.hpp"
#include "sqdiff/weierstrass.hpp"

namespace sqdiff {

enum class InfinityBranch { Plus, Minus };

struct QuarticPoint {
  bool at_infinity = false;
  Rational s, w;                                // affine only
  InfinityBranch branch = InfinityBranch::Plus;  // at infinity only

  static QuarticPoint affine(Rational s, Rational w) { return {false, std::move(s), std::move(w), InfinityBranch::Plus}; }
  static QuarticPoint infinity(InfinityBranch b) { return {true, Rational(), Rational(), b}; }

  friend bool operator==(const QuarticPoint& p, const QuarticPoint& q) {
    if (p.at_infinity || q.at_infinity) return p.at_infinity == q.at_infinity && p.branch == q.branch;
    return p.s == q.s && p.w == q.w;
  }
};

class QuarticCurve {
 public:
  /// Throws Error(Degeneracy) for a in {0, 1}, where the fiber is singular.
  explicit QuarticCurve(Rational a);

  const Rational& a() const noexcept { return a_; }
  /// 1 + 4as + 6as^2 + 4as^3 + as^4
  Rational value_at(const Rational& s) const;

  static QuarticPoint origin() { return QuarticPoint::affine(Rational(0), Rational(1)); }
  static QuarticPoint point_p() { return QuarticPoint::affine(Rational(0), Rational(-1)); }
  static QuarticPoint point_t() { return QuarticPoint::affine(Rational(-2), Rational(-1)); }

 private:
  Rational a_;
};

bool contains(const QuarticCurve& C, const QuarticPoint& pt);

/// Euler's section point Q. Throws Error(Degeneracy) if 4a^2-8a+1 = 0.
QuarticPoint euler_point(const QuarticCurve& C);

/// Birational map between the fiber and its Weierstrass model; O maps to the
/// point at infinity.
class FiberModel {
 public:
  explicit FiberModel(const QuarticCurve& C);

  const QuarticCurve& quartic() const noexcept { return quartic_; }
  const WeierstrassCurve& curve() const noexcept { return curve_; }

  /// Throws Error(Validation) when pt is not on the fiber.
  WeierstrassPoint forward(const QuarticPoint& pt) const;
  /// Throws Error(Validation) for points off the model. A rational model
  /// point with y-preimage 0 and x^2 = 4a pins sqrt(a) = |x|/2, so the
  /// preimage is always rational.
  QuarticPoint backward(const WeierstrassPoint& pt) const;

 private:
  QuarticCurve quartic_;
  WeierstrassCurve curve_;
  Rational a1_, a2_, a3_;  // long-model coefficients
};

FiberModel to_weierstrass(const QuarticCurve& C);

QuarticPoint negate(const QuarticCurve& C, const QuarticPoint& p);
QuarticPoint add(const QuarticCurve& C, const QuarticPoint& p1, const QuarticPoint& p2);
QuarticPoint mul(const QuarticCurve& C, const QuarticPoint& p, const Integer& n);

struct FiberLocation {
  Rational m;
  QuarticCurve curve;
  QuarticPoint point;
};

/// m = v(x-z)/(u(y-z)), a = m^2/(m^2-1), s = (x+z)/u - 1, w > 0.
FiberLocation fiber_of_triple(const EulerTriple& e);

}  // namespace sqdiff
