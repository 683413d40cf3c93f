#pragma once

// Euler's parametric family of solutions indexed by a rational m.
//
// With a = m^2/(m^2-1), the quartic 1 + 4as + 6as^2 + 4as^3 + as^4 agrees with
// w^2, w = 1 + fs + gs^2 (f = 2a, g = 3a - 2a^2), to order s^2; it is an exact
// square at s = (8a-4)/(4a^2-8a+1). Then p = 1 + s, q = mp and
//   x/z = (p^2+1)/(p^2-1),  y/z = (q^2+1)/(q^2-1).

#include "sqdiff/arith.hpp"
#include "sqdiff/triples.hpp"

namespace sqdiff {

struct SectionParams {
  Rational m, a, s, p, q, f, g, w;
  friend bool operator==(const SectionParams&, const SectionParams&) = default;
};

/// s-coordinate of the section point on the fiber with parameter a.
/// Throws Error(Degeneracy) when 4a^2 - 8a + 1 = 0.
Rational section_s(const Rational& a);

/// Throws Error(Parameter) for m in {0, 1, -1} and Error(Degeneracy) when
/// p^2 = 1 or q^2 = 1.
SectionParams params_from_m(const Rational& m);

EulerTriple triple_from_m(const Rational& m);

}  // namespace sqdiff
