#pragma once

// Short Weierstrass curves y^2 = x^3 + Ax + B over Q with the chord-tangent
// group law in affine coordinates.

#include "sqdiff/arith.hpp"

namespace sqdiff {

struct WeierstrassPoint {
  bool infinity = true;
  Rational x, y;

  static WeierstrassPoint identity() { return {}; }
  static WeierstrassPoint affine(Rational x, Rational y) { return {false, std::move(x), std::move(y)}; }

  friend bool operator==(const WeierstrassPoint& p, const WeierstrassPoint& q) {
    if (p.infinity || q.infinity) return p.infinity == q.infinity;
    return p.x == q.x && p.y == q.y;
  }
};

class WeierstrassCurve {
 public:
  /// Throws Error(Degeneracy) when 4A^3 + 27B^2 = 0.
  WeierstrassCurve(Rational A, Rational B);

  const Rational& A() const noexcept { return A_; }
  const Rational& B() const noexcept { return B_; }

  Rational discriminant() const;  // -16(4A^3 + 27B^2)
  Rational j_invariant() const;   // 1728 * 4A^3 / (4A^3 + 27B^2)

  bool contains(const WeierstrassPoint& p) const;
  WeierstrassPoint negate(const WeierstrassPoint& p) const;
  WeierstrassPoint add(const WeierstrassPoint& p, const WeierstrassPoint& q) const;
  WeierstrassPoint dbl(const WeierstrassPoint& p) const;
  /// n-fold sum by double-and-add; n may be negative.
  WeierstrassPoint mul(const WeierstrassPoint& p, const Integer& n) const;

 private:
  Rational A_, B_;
};

}  // namespace sqdiff
