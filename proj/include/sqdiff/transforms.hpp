#pragma once

#include <cstddef>
#include <vector>

#include "sqdiff/arith.hpp"
#include "sqdiff/triples.hpp"

namespace sqdiff {

/// Intermediate quantities of one hyperbolic cycle step.
struct EngelStep {
  Rational e;               // (2a/(a^2-1)) * ((b^2-1)/(b^2+1))
  Rational beta_bar_prime;  // e + sqrt(1 + e^2)
};

/// Throws Error(Irrationality) if 1 + e^2 is not a rational square.
EngelStep engel_step(const HyperbolicTriple& h);

/// (a, b, c) -> (b, beta', h') with h' > 1 the hypotenuse completing the
/// relation for legs b and beta'. Order 5.
HyperbolicTriple engel_cycle_hyperbolic(const HyperbolicTriple& h);

/// (x, y, z) -> primitive canonical form of (uy, uz, tz). Order 5.
EulerTriple engel_cycle_euler(const EulerTriple& e);

/// The first `steps` iterates of engel_cycle_euler (excluding e itself).
std::vector<EulerTriple> orbit(const EulerTriple& e, std::size_t steps);

/// Solution of x^2-y^2=t^2, x^2-z^2=u^2, y^2-z^2=v^2, not necessarily primitive.
struct SixTuple {
  Integer x, y, z, t, u, v;

  static SixTuple from(const EulerTriple& e) { return {e.x(), e.y(), e.z(), e.t(), e.u(), e.v()}; }
  bool satisfies_equations() const;
  Integer content() const;  // gcd of all six entries
  friend bool operator==(const SixTuple&, const SixTuple&) = default;
};

/// (x^2+v^2, z^2+t^2, |y^2-u^2|, 2xv, 2yu, 2zt) divided by its gcd d.
/// Throws Error(Precondition) unless the input satisfies the equations with
/// content 1; Error(Internal) if d is not 1 or 2.
SixTuple doubling_step(const SixTuple& st);

}  // namespace sqdiff
