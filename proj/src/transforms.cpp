#include "sqdiff/transforms.hpp"

#include <string>

#include "sqdiff/errors.hpp"

namespace sqdiff {

namespace {

Rational require_rat_sqrt(const Rational& r, const char* what) {
  auto root = rat_sqrt(r);
  if (!root) throw Error(ErrorKind::Irrationality, what, std::string(what) + " = " + r.to_string() + " is not a rational square");
  return *root;
}

}  // namespace

EngelStep engel_step(const HyperbolicTriple& h) {
  const Rational one(1);
  const Rational e = Rational(2) * h.a / (square(h.a) - one) * ((square(h.b) - one) / (square(h.b) + one));
  return {e, e + require_rat_sqrt(one + square(e), "1+e^2")};
}

HyperbolicTriple engel_cycle_hyperbolic(const HyperbolicTriple& h) {
  const Rational one(1);
  const Rational beta = engel_step(h).beta_bar_prime;
  const Rational S = Rational(2) * h.b / (one + square(h.b)) * (Rational(2) * beta / (one + square(beta)));
  // h'^2 S - 2h' + S = 0; the root > 1
  const Rational hyp = (one + require_rat_sqrt(one - square(S), "1-S^2")) / S;
  return {h.b, beta, hyp};
}

EulerTriple engel_cycle_euler(const EulerTriple& e) {
  return primitive_euler(e.u() * e.y(), e.u() * e.z(), e.t() * e.z());
}

std::vector<EulerTriple> orbit(const EulerTriple& e, std::size_t steps) {
  if (steps == 0) throw Error(ErrorKind::Precondition, "steps>=1", "orbit needs at least one step");
  std::vector<EulerTriple> out;
  out.reserve(steps);
  out.push_back(engel_cycle_euler(e));
  while (out.size() < steps) out.push_back(engel_cycle_euler(out.back()));
  return out;
}

bool SixTuple::satisfies_equations() const {
  return x * x - y * y == t * t && x * x - z * z == u * u && y * y - z * z == v * v;
}

Integer SixTuple::content() const {
  return gcd(gcd(gcd(x, y), gcd(z, t)), gcd(u, v));
}

SixTuple doubling_step(const SixTuple& st) {
  if (!st.satisfies_equations())
    throw Error(ErrorKind::Precondition, "equations", "six-tuple does not satisfy the difference-of-squares equations");
  if (st.content() != Integer(1))
    throw Error(ErrorKind::Precondition, "gcd=1", "six-tuple has content " + st.content().to_string());

  SixTuple next{st.x * st.x + st.v * st.v,
                st.z * st.z + st.t * st.t,
                abs(st.y * st.y - st.u * st.u),
                Integer(2) * st.x * st.v,
                Integer(2) * st.y * st.u,
                Integer(2) * st.z * st.t};
  const Integer d = next.content();
  if (d != Integer(1) && d != Integer(2))
    throw Error(ErrorKind::Internal, "d<=2", "doubling content " + d.to_string() + " exceeds 2");
  if (d == Integer(2)) {
    for (Integer* f : {&next.x, &next.y, &next.z, &next.t, &next.u, &next.v}) *f = divexact(*f, d);
  }
  // The squares in the equations force x >= y >= z >= 0 already.
  if (!(next.x > next.y && next.y > next.z && next.z.sign() > 0))
    throw Error(ErrorKind::Degeneracy, "x>y>z>0", "doubling produced a degenerate tuple");
  if (st.x + st.y + st.z > Integer(6) && !(next.x + next.y + next.z > st.x + st.y + st.z))
    throw Error(ErrorKind::Internal, "monotone", "x+y+z failed to increase");
  return next;
}

}  // namespace sqdiff
