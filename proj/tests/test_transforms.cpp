#include <doctest.h>

#include "sqdiff/errors.hpp"
#include "sqdiff/transforms.hpp"
#include "test_support.hpp"

using namespace sqdiff;
using test::Q;
using test::T;

TEST_SUITE("transforms") {

TEST_CASE("hyperbolic cycle rows") {
  const std::vector<HyperbolicTriple> first{
      {Q(37, 5), Q(17, 9), Q(9)},       {Q(17, 9), Q(7, 6), Q(27, 14)},  {Q(7, 6), Q(5, 4), Q(21, 16)},
      {Q(5, 4), Q(41, 13), Q(13, 4)},   {Q(41, 13), Q(37, 5), Q(13)}};
  const std::vector<HyperbolicTriple> second{
      {Q(1201, 350), Q(97, 51), Q(30, 7)},     {Q(97, 51), Q(47, 33), Q(99, 47)},
      {Q(47, 33), Q(37, 23), Q(1551, 851)},    {Q(37, 23), Q(73, 26), Q(74, 23)},
      {Q(73, 26), Q(1201, 350), Q(40, 7)}};
  for (const auto* table : {&first, &second})
    for (std::size_t i = 0; i < 5; ++i) CHECK(engel_cycle_hyperbolic((*table)[i]) == (*table)[(i + 1) % 5]);
}

TEST_CASE("engel_step intermediates") {
  const EngelStep st = engel_step({Q(37, 5), Q(17, 9), Q(9)});
  CHECK(st.beta_bar_prime == Q(7, 6));
  CHECK(st.beta_bar_prime == st.e + *rat_sqrt(Rational(1) + st.e * st.e));
}

TEST_CASE("Euler cycle rows") {
  const std::vector<EulerTriple> rows{T(697, 185, 153), T(925, 765, 756), T(3485, 3444, 3360),
                                      T(7585, 7400, 4264), T(15725, 9061, 2405)};
  for (std::size_t i = 0; i < 5; ++i) CHECK(engel_cycle_euler(rows[i]) == rows[(i + 1) % 5]);
  const auto o = orbit(rows[0], 5);
  REQUIRE(o.size() == 5);
  for (std::size_t i = 0; i < 4; ++i) CHECK(o[i] == rows[i + 1]);
  CHECK(o[4] == rows[0]);
  CHECK(orbit(rows[0], 1) == std::vector<EulerTriple>{rows[1]});
  CHECK_THROWS_AS(orbit(rows[0], 0), Error);
}

TEST_CASE("order five and commuting square on every solution below 10^5") {
  for (const auto& r : test::records_below_1e5()) {
    const EulerTriple& e = r.triple;
    const auto o = orbit(e, 5);
    REQUIRE(o.back() == e);
    REQUIRE(euler_to_hyperbolic(engel_cycle_euler(e)) == engel_cycle_hyperbolic(euler_to_hyperbolic(e)));
  }
}

TEST_CASE("doubling step from the seed") {
  const SixTuple seed = SixTuple::from(T(697, 185, 153));
  const SixTuple d = doubling_step(seed);
  CHECK(d == SixTuple{Integer(496625), Integer(474993), Integer(428175), Integer(144976), Integer(251600), Integer(205632)});
  CHECK(d.satisfies_equations());
  CHECK(d.content() == Integer(1));
}

TEST_CASE("ten doubling iterations") {
  SixTuple cur = SixTuple::from(T(697, 185, 153));
  for (int i = 0; i < 10; ++i) {
    // identities the step relies on
    CHECK(cur.x * cur.x + cur.v * cur.v == cur.y * cur.y + cur.u * cur.u);
    CHECK(cur.z * cur.z + cur.t * cur.t == cur.x * cur.x - cur.v * cur.v);
    CHECK(cur.y * cur.y - cur.u * cur.u == cur.z * cur.z - cur.t * cur.t);
    const SixTuple next = doubling_step(cur);
    REQUIRE(next.satisfies_equations());
    CHECK(next.x + next.y + next.z > cur.x + cur.y + cur.z);
    CHECK_NOTHROW(primitive_euler(next.x, next.y, abs(next.z)));
    cur = next;
  }
  CHECK(cur.x.bit_length() > 1000);
}

TEST_CASE("doubling preconditions") {
  SixTuple bad = SixTuple::from(T(697, 185, 153));
  for (Integer* f : {&bad.x, &bad.y, &bad.z, &bad.t, &bad.u, &bad.v}) *f *= Integer(2);
  try {
    doubling_step(bad);
    FAIL("expected precondition error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Precondition);
  }
  SixTuple wrong = SixTuple::from(T(697, 185, 153));
  wrong.t += Integer(1);
  CHECK_THROWS_AS(doubling_step(wrong), Error);
}

}  // TEST_SUITE
