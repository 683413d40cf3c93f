#pragma once

// The three equivalent problems and the exact bijections among them:
//   - Euler triples: x > y > z > 0, gcd 1, all pairwise x^2-y^2 etc. squares;
//   - non-Euclidean Pythagorean triples (a, b, c), all > 1, with
//       (2a/(1+a^2)) * (2b/(1+b^2)) = 2c/(1+c^2);
//   - integer sum/difference triples A < B < C;
// plus the cuboid view of an Euler triple.

#include <array>
#include <utility>

#include "sqdiff/arith.hpp"
#include "sqdiff/errors.hpp"

namespace sqdiff {

struct SquareCertificate {
  Integer t;  // sqrt(x^2 - y^2)
  Integer u;  // sqrt(x^2 - z^2)
  Integer v;  // sqrt(y^2 - z^2)

  friend bool operator==(const SquareCertificate&, const SquareCertificate&) = default;
};

/// A primitive solution x > y > z > 0 together with its certificate. Only
/// verify_euler (and the operations built on it) can construct one, so every
/// instance is valid.
class EulerTriple {
 public:
  const Integer& x() const noexcept { return x_; }
  const Integer& y() const noexcept { return y_; }
  const Integer& z() const noexcept { return z_; }
  const SquareCertificate& certificate() const noexcept { return cert_; }
  const Integer& t() const noexcept { return cert_.t; }
  const Integer& u() const noexcept { return cert_.u; }
  const Integer& v() const noexcept { return cert_.v; }

  friend bool operator==(const EulerTriple& a, const EulerTriple& b) {
    return a.x_ == b.x_ && a.y_ == b.y_ && a.z_ == b.z_;
  }
  /// Orders by x, then y, then z.
  friend std::strong_ordering operator<=>(const EulerTriple& a, const EulerTriple& b) {
    if (auto c = a.x_ <=> b.x_; c != 0) return c;
    if (auto c = a.y_ <=> b.y_; c != 0) return c;
    return a.z_ <=> b.z_;
  }

 private:
  friend EulerTriple verify_euler(const Integer&, const Integer&, const Integer&);
  EulerTriple(Integer x, Integer y, Integer z, SquareCertificate c)
      : x_(std::move(x)), y_(std::move(y)), z_(std::move(z)), cert_(std::move(c)) {}

  Integer x_, y_, z_;
  SquareCertificate cert_;
};

/// Raised by verify_euler for a triple that is valid up to a common factor.
class NonPrimitiveError : public Error {
 public:
  NonPrimitiveError(std::array<Integer, 3> reduced, const std::string& message)
      : Error(ErrorKind::NonPrimitive, "gcd(x,y,z)=1", message), reduced_(std::move(reduced)) {}
  const std::array<Integer, 3>& reduced() const noexcept { return reduced_; }

 private:
  std::array<Integer, 3> reduced_;
};

struct HyperbolicTriple {
  Rational a, b, c;
  friend bool operator==(const HyperbolicTriple&, const HyperbolicTriple&) = default;
};

struct Cuboid {
  Integer edge_t, edge_v, edge_z;
  Integer face_tv;  // u
  Integer face_vz;  // y
  Integer body;     // x
  friend bool operator==(const Cuboid&, const Cuboid&) = default;
};

/// Euler's integers with all pairwise sums and differences square. A may be
/// negative.
struct SumDiffTriple {
  Integer A, B, C;
  friend bool operator==(const SumDiffTriple&, const SumDiffTriple&) = default;
};

/// Canonicalizes (|x|,|y|,|z|) into descending order and validates it.
/// Throws Error(Degeneracy) on zero or equal entries, Error(Validation) naming
/// the first non-square difference, NonPrimitiveError when gcd > 1.
EulerTriple verify_euler(const Integer& x, const Integer& y, const Integer& z);

/// Divides out gcd(x,y,z), then verify_euler.
EulerTriple primitive_euler(const Integer& x, const Integer& y, const Integer& z);

/// The solution (x, u, t); an involution sharing the same cuboid.
EulerTriple companion_triple(const EulerTriple& e);

/// a = (x+t)/y, b = (y+v)/z, c = (x+u)/z.
HyperbolicTriple euler_to_hyperbolic(const EulerTriple& e);

/// Inverts euler_to_hyperbolic via y/x = 2a/(a^2+1), z/x = 2c/(c^2+1).
EulerTriple hyperbolic_to_euler(const HyperbolicTriple& h);

/// Exact test of the non-Euclidean Pythagorean relation.
bool satisfies_hyperbolic_relation(const Rational& a, const Rational& b, const Rational& c);

/// Sign flips and inversions into the a,b,c > 1 normal form.
HyperbolicTriple canonicalize_hyperbolic(const Rational& a, const Rational& b, const Rational& c);

Cuboid euler_to_cuboid(const EulerTriple& e);

SumDiffTriple euler_to_sumdiff(const EulerTriple& e);
EulerTriple sumdiff_to_euler(const SumDiffTriple& sd);

}  // namespace sqdiff
