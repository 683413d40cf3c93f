#include <doctest.h>

#include "sqdiff/errors.hpp"
#include "test_support.hpp"

using namespace sqdiff;
using test::Q;
using test::T;

TEST_SUITE("triples") {

TEST_CASE("verify_euler on the smallest solution") {
  const EulerTriple e = T(697, 185, 153);
  CHECK(e.t() == Integer(672));
  CHECK(e.u() == Integer(680));
  CHECK(e.v() == Integer(104));
  // any order and sign
  CHECK(T(-153, 697, 185) == e);
}

TEST_CASE("verify_euler on Euler's example") {
  const EulerTriple e = T(1564901, 840700, 692580);
  CHECK(e.t() == Integer(1319901));
  CHECK(e.u() == Integer(1403299));
  CHECK(e.v() == Integer(476560));
}

TEST_CASE("verify_euler failures") {
  try {
    T(3, 2, 1);
    FAIL("expected a validation error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Validation);
    CHECK(e.constraint() == "x^2-y^2");
  }
  try {
    T(1394, 370, 306);
    FAIL("expected non-primitive");
  } catch (const NonPrimitiveError& e) {
    CHECK(e.reduced() == std::array<Integer, 3>{Integer(697), Integer(185), Integer(153)});
  }
  for (auto [x, y, z] : {std::array{5L, 5L, 3L}, std::array{5L, 0L, 3L}, std::array{0L, 0L, 0L}}) {
    try {
      T(x, y, z);
      FAIL("expected degeneracy");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Degeneracy);
    }
  }
  // (5,4,3) passes x^2-y^2 and x^2-z^2 but 16-9 is not square
  try {
    T(5, 4, 3);
  } catch (const Error& e) {
    CHECK(e.constraint() == "y^2-z^2");
  }
  CHECK(primitive_euler(Integer(1394), Integer(370), Integer(306)) == T(697, 185, 153));
}

TEST_CASE("hyperbolic conversions, both directions") {
  const HyperbolicTriple h1{Q(37, 5), Q(17, 9), Q(9)};
  const HyperbolicTriple h2{Q(1201, 350), Q(97, 51), Q(30, 7)};
  CHECK(euler_to_hyperbolic(T(697, 185, 153)) == h1);
  CHECK(hyperbolic_to_euler(h1) == T(697, 185, 153));
  CHECK(euler_to_hyperbolic(T(1564901, 840700, 692580)) == h2);
  CHECK(hyperbolic_to_euler(h2) == T(1564901, 840700, 692580));
  CHECK(satisfies_hyperbolic_relation(h1.a, h1.b, h1.c));
  CHECK_FALSE(satisfies_hyperbolic_relation(Q(2), Q(2), Q(2)));
  CHECK_THROWS_AS(hyperbolic_to_euler({Q(2), Q(2), Q(2)}), Error);
}

TEST_CASE("canonicalize_hyperbolic") {
  // inversion and sign flips preserve 2x/(1+x^2) up to sign
  CHECK(canonicalize_hyperbolic(Q(5, 37), Q(-17, 9), Q(-1, 9)) == HyperbolicTriple{Q(37, 5), Q(17, 9), Q(9)});
  try {
    canonicalize_hyperbolic(Q(1), Q(2), Q(3));
    FAIL("expected trivial");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Trivial);
  }
  CHECK_THROWS_AS(canonicalize_hyperbolic(Q(2), Q(3), Q(4)), Error);
}

TEST_CASE("no integer hyperbolic triple with entries in (1, 500]") {
  // 2a/(1+a^2) * 2b/(1+b^2) = 2c/(1+c^2)  <=>  2ab(1+c^2) = c(1+a^2)(1+b^2)
  long hits = 0;
  for (long a = 2; a <= 500; ++a)
    for (long b = a; b <= 500; ++b) {
      const __int128 L = 2 * static_cast<__int128>(a) * b;
      const __int128 R = static_cast<__int128>(1 + a * a) * (1 + b * b);
      // L(1+c^2) = cR has integer roots only if discriminant R^2 - 4L^2 is square
      for (long c = 2; c <= 500; ++c)
        if (L * (1 + static_cast<__int128>(c) * c) == c * R) ++hits;
    }
  CHECK(hits == 0);
  // spot the exact rational test against the integer one
  CHECK_FALSE(satisfies_hyperbolic_relation(Q(2), Q(3), Q(4)));
}

TEST_CASE("cuboid view") {
  const Cuboid c = euler_to_cuboid(T(697, 185, 153));
  CHECK(c.edge_t == Integer(672));
  CHECK(c.edge_v == Integer(104));
  CHECK(c.edge_z == Integer(153));
  CHECK(c.face_tv == Integer(680));
  CHECK(c.face_vz == Integer(185));
  CHECK(c.body == Integer(697));
  CHECK(c.edge_t * c.edge_t + c.edge_v * c.edge_v == c.face_tv * c.face_tv);
  CHECK(c.edge_v * c.edge_v + c.edge_z * c.edge_z == c.face_vz * c.face_vz);
}

TEST_CASE("sum/difference triples") {
  const SumDiffTriple sd = euler_to_sumdiff(T(697, 185, 153));
  CHECK(sd == SumDiffTriple{Integer(-856350), Integer(949986), Integer(993250)});
  const std::array<Integer, 6> roots{Integer(1394), Integer(370), Integer(306),
                                     Integer(208), Integer(1360), Integer(1344)};
  const std::array<Integer, 6> vals{sd.B + sd.C, sd.A + sd.C, sd.A + sd.B,
                                    sd.C - sd.B, sd.C - sd.A, sd.B - sd.A};
  for (std::size_t i = 0; i < 6; ++i) CHECK(roots[i] * roots[i] == vals[i]);
  CHECK(sumdiff_to_euler(sd) == T(697, 185, 153));
}

TEST_CASE("properties over every solution below 10^5") {
  const auto& recs = test::records_below_1e5();
  REQUIRE(recs.size() > 50);
  for (const auto& r : recs) {
    const EulerTriple& e = r.triple;
    // bijection round trip
    REQUIRE(hyperbolic_to_euler(euler_to_hyperbolic(e)) == e);
    const HyperbolicTriple h = euler_to_hyperbolic(e);
    REQUIRE(satisfies_hyperbolic_relation(h.a, h.b, h.c));
    // companion is an involution on the same cuboid
    const EulerTriple c = companion_triple(e);
    REQUIRE(companion_triple(c) == e);
    REQUIRE(c.x() == e.x());
    // six pairwise sums and differences are squares
    const SumDiffTriple sd = euler_to_sumdiff(e);
    for (const Integer& v : {sd.A + sd.B, sd.A + sd.C, sd.B + sd.C, sd.C - sd.B, sd.C - sd.A, sd.B - sd.A})
      REQUIRE(is_perfect_square(v));
    REQUIRE(sumdiff_to_euler(sd) == e);
  }
}

}  // TEST_SUITE
