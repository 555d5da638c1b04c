#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <string>
#include <vector>

#include "einmetric/univariate.hpp"

using namespace einmetric;

namespace {

UPoly up(const std::string& s) {
  Poly p = parse_poly({"x"}, s);
  return to_univariate(p, 0);
}

Rat tiny(int digits) {
  Rat w(1);
  for (int i = 0; i < digits; ++i) w /= 10;
  return w;
}

}  // namespace

TEST_CASE("euclidean division reconstructs the dividend") {
  UPoly a = up("6 x^5 - 4 x^3 + x^2 - 7 x + 2");
  UPoly b = up("3 x^2 + x - 1");
  auto [q, r] = udivmod(a, b);
  CHECK(udeg(r) < udeg(b));
  CHECK(uadd(umul(q, b), r) == a);
}

TEST_CASE("gcd of products recovers the common factor") {
  UPoly a = umul(up("x - 1"), umul(up("x + 2"), up("3 x - 5")));
  UPoly b = umul(up("x - 1"), umul(up("3 x - 5"), up("x^2 + 1")));
  CHECK(uprimitive_integer(ugcd(a, b)) ==
        uprimitive_integer(up("3 x^2 - 8 x + 5")));
}

TEST_CASE("square-free part drops multiplicity") {
  UPoly p = umul(umul(up("x - 2"), up("x - 2")), up("x + 3"));
  CHECK(uprimitive_integer(usquarefree(p)) ==
        uprimitive_integer(up("x^2 + x - 6")));
}

TEST_CASE("primitive integer image clears denominators and content") {
  UPoly p = {rat(1, 2), rat(3, 4)};
  CHECK(uprimitive_integer(p) == std::vector<Int>{Int(2), Int(3)});
  UPoly n = {Rat(4), Rat(-6)};
  CHECK(uprimitive_integer(n) == std::vector<Int>{Int(-2), Int(3)});
}

TEST_CASE("sturm counting locates the roots of x^2 - 2") {
  auto chain = sturm_chain(up("x^2 - 2"));
  CHECK(sturm_count(chain, Rat(0), Rat(2)) == 1);
  CHECK(sturm_count(chain, Rat(-2), Rat(2)) == 2);
  CHECK(sturm_count(chain, Rat(2), Rat(9)) == 0);
}

TEST_CASE("simplest rational in an interval") {
  CHECK(simplest_rational(Rat("13/10"), Rat("3/2")) == Rat("3/2"));
  CHECK(simplest_rational(Rat("13/10"), Rat("149/100")) == Rat("4/3"));
  CHECK(simplest_rational(Rat("27/20"), Rat("41/30")) == Rat("15/11"));
  CHECK(simplest_rational(Rat("-3/2"), Rat("-13/10")) == Rat("-3/2"));
  CHECK(simplest_rational(Rat("-1/10"), Rat("1/7")) == Rat(0));
  CHECK(simplest_rational(rat(2, 7), rat(2, 7)) == rat(2, 7));
}

TEST_CASE("exact rational roots come back exactly") {
  auto roots = real_roots(umul(up("x - 1"), up("x - 3")), tiny(20));
  REQUIRE(roots.size() == 2);
  CHECK(roots[0] == Rat(1));
  CHECK(roots[1] == Rat(3));
}

TEST_CASE("cubic gate roots refine to the tabulated decimals") {
  auto roots = real_roots(up("884 x^3 - 1816 x^2 + 873 x - 117"), tiny(20));
  REQUIRE(roots.size() == 3);
  const double want[] = {0.23910517, 0.38779156, 1.4274019};
  for (int i = 0; i < 3; ++i)
    CHECK(std::fabs(to_scalar<double>(roots[i]) - want[i]) < 1e-7);
}

TEST_CASE("isolation handles adjacent irrational and rational roots") {
  // (x - 1)(875 x^3 - 1165 x^2 + 250 x - 14) has a rational root amid three
  // irrational ones.
  UPoly p = umul(up("x - 1"), up("875 x^3 - 1165 x^2 + 250 x - 14"));
  auto roots = real_roots(p, tiny(20));
  REQUIRE(roots.size() == 4);
  const double want[] = {0.095267235, 0.15539816, 1.0, 1.0807632};
  for (int i = 0; i < 4; ++i)
    CHECK(std::fabs(to_scalar<double>(roots[i]) - want[i]) < 1e-7);
}

TEST_CASE("quotient ring arithmetic mod a quadratic") {
  ModRing R(up("129 x^2 - 180 x + 35"));
  UPoly g = R.gen();
  // g^2 reduces along the modulus.
  CHECK(R.mul(g, g) == UPoly{rat(-35, 129), rat(180, 129)});
  // g is invertible since the modulus has nonzero constant term.
  CHECK(R.mul(g, R.inverse(g)) == R.one());
  // 129 g^2 - 180 g + 35 is zero in the ring.
  UPoly v = uadd(uscale(R.mul(g, g), Rat(129)),
                 uadd(uscale(g, Rat(-180)), R.constant(Rat(35))));
  CHECK(uis_zero(R.reduce(v)));
}

TEST_CASE("quotient ring flags zero divisors") {
  ModRing R(up("x^2 - 1"));
  CHECK_THROWS(R.inverse(up("x - 1")));
  CHECK(R.mul(up("x - 1"), up("x + 1")) == R.zero());
}

TEST_CASE("multivariate evaluation over a quotient ring") {
  ModRing R(up("x^2 - 3"));
  Poly p = parse_poly({"a", "b"}, "a^2 b - 3 b");
  // a = g, b = arbitrary: a^2 b - 3 b = (g^2 - 3) b = 0.
  UPoly val = eval_in_ring(p, {R.gen(), uadd(R.gen(), R.one())}, R);
  CHECK(uis_zero(val));
}
