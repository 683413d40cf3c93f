#include "sqdiff/weierstrass.hpp"

#include "sqdiff/errors.hpp"

namespace sqdiff {

WeierstrassCurve::WeierstrassCurve(Rational A, Rational B) : A_(std::move(A)), B_(std::move(B)) {
  if (discriminant().is_zero()) throw Error(ErrorKind::Degeneracy, "discriminant", "singular Weierstrass curve");
}

Rational WeierstrassCurve::discriminant() const {
  return Rational(-16) * (Rational(4) * A_ * A_ * A_ + Rational(27) * B_ * B_);
}

Rational WeierstrassCurve::j_invariant() const {
  const Rational four_a3 = Rational(4) * A_ * A_ * A_;
  return Rational(1728) * four_a3 / (four_a3 + Rational(27) * B_ * B_);
}

bool WeierstrassCurve::contains(const WeierstrassPoint& p) const {
  return p.infinity || p.y * p.y == p.x * p.x * p.x + A_ * p.x + B_;
}

WeierstrassPoint WeierstrassCurve::negate(const WeierstrassPoint& p) const {
  if (p.infinity) return p;
  return WeierstrassPoint::affine(p.x, -p.y);
}

WeierstrassPoint WeierstrassCurve::dbl(const WeierstrassPoint& p) const {
  if (p.infinity || p.y.is_zero()) return WeierstrassPoint::identity();
  const Rational lambda = (Rational(3) * p.x * p.x + A_) / (Rational(2) * p.y);
  const Rational x3 = lambda * lambda - Rational(2) * p.x;
  return WeierstrassPoint::affine(x3, lambda * (p.x - x3) - p.y);
}

WeierstrassPoint WeierstrassCurve::add(const WeierstrassPoint& p, const WeierstrassPoint& q) const {
  if (p.infinity) return q;
  if (q.infinity) return p;
  if (p.x == q.x) {
    if (p.y == q.y) return dbl(p);
    return WeierstrassPoint::identity();
  }
  const Rational lambda = (q.y - p.y) / (q.x - p.x);
  const Rational x3 = lambda * lambda - p.x - q.x;
  return WeierstrassPoint::affine(x3, lambda * (p.x - x3) - p.y);
}

WeierstrassPoint WeierstrassCurve::mul(const WeierstrassPoint& p, const Integer& n) const {
  WeierstrassPoint base = n.sign() < 0 ? negate(p) : p;
  Integer k = abs(n);
  WeierstrassPoint acc = WeierstrassPoint::identity();
  for (std::size_t i = k.bit_length(); i-- > 0;) {
    acc = dbl(acc);
    if (mpz_tstbit(k.raw().get_mpz_t(), i)) acc = add(acc, base);
  }
  return acc;
}

}  // namespace sqdiff
