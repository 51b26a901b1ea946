#include <doctest.h>

#include "permcf/cfrac.hpp"
#include "permcf/permutation.hpp"

using namespace permcf;

namespace {
MultiPoly P(const char* s) { return parse_poly(s); }
std::vector<MultiPoly> ints(std::initializer_list<long> v) {
  std::vector<MultiPoly> out;
  for (long x : v) out.emplace_back(x);
  return out;
}
}  // namespace

TEST_CASE("brackets") {
  CHECK(bracket(0, P("c"), P("d")).is_zero());
  CHECK(bracket(1, P("c"), P("d")) == MultiPoly(1));
  CHECK(bracket(2, P("c"), P("d")) == P("c + d"));
  CHECK(bracket(3, P("q"), P("1")) == P("q^2 + q + 1"));
}

TEST_CASE("parameter assignments") {
  const auto p = ParamAssignment::parse("u = 0\nell = q  # comment\nlam = 3\ns = lam*x", ParamAssignment::constant(1));
  CHECK(p.get("u").is_zero());
  CHECK(p.get("l") == P("q"));
  CHECK(p.get("s") == P("3*x"));
  CHECK(p.get("a") == MultiPoly(1));
  CHECK_THROWS_AS(ParamAssignment::parse("u 0"), PolyError);
  CHECK_THROWS_AS(ParamAssignment::parse("k = x"), PolyError);
  ParamAssignment c;
  c.set_color_weights(3);
  CHECK(c.effective_u() == P("u1 + u2 + u3"));
  CHECK_FALSE(c.is_numeric());
  CHECK(ParamAssignment::constant(2).is_numeric());
}

TEST_CASE("jacobi coefficients") {
  const JacobiCoefficients j(ParamAssignment::symbolic());
  CHECK(j.alpha(0) == P("u"));
  CHECK(j.alpha(2) == P("u*w^2 + s*(a + b) + t*(f + g)"));
  CHECK(j.beta(1) == P("p*r"));
  CHECK(j.beta(3) == P("p*r*(c^2 + c*d + d^2)*(h^2 + h*l + l^2)"));
}

TEST_CASE("small moments") {
  const auto m = moments(ParamAssignment::symbolic(), 2);
  CHECK(m[0] == MultiPoly(1));
  CHECK(m[1] == P("u"));
  CHECK(m[2] == P("u^2 + p*r"));
}

TEST_CASE("classical specialisations") {
  CHECK(moments(ParamAssignment::constant(1), 6) == ints({1, 1, 2, 6, 24, 120, 720}));
  CHECK(moments(ParamAssignment::parse("u = 0", ParamAssignment::constant(1)), 6) == ints({1, 0, 1, 2, 9, 44, 265}));
  CHECK(moments(ParamAssignment::parse("s = 0\nt = 0\nu = 0", ParamAssignment::constant(1)), 8) ==
        ints({1, 0, 1, 0, 5, 0, 61, 0, 1385}));
}

TEST_CASE("series route equals the transfer recurrence") {
  CHECK(moments(ParamAssignment::symbolic(), 6) == moments_by_series(ParamAssignment::symbolic(), 6));
  const auto p = ParamAssignment::parse("a = q\nb = 2\nu = x + 1\ns = -1/3", ParamAssignment::symbolic());
  CHECK(moments(p, 7) == moments_by_series(p, 7));
}

TEST_CASE("expansion bounds") {
  CHECK_THROWS_AS(moments(ParamAssignment::symbolic(), 9), std::out_of_range);
  CHECK_NOTHROW(moments(ParamAssignment::constant(1), 64));
  CHECK_THROWS_AS(moments(ParamAssignment::constant(1), 65), std::out_of_range);
  ExpansionBounds b;
  b.symbolic = 9;
  CHECK_NOTHROW(moments(ParamAssignment::parse("u = x", ParamAssignment::constant(1)), 9, b));
}

TEST_CASE("z rescaling") {
  const auto m = rescale_z(ints({1, 1, 2}), P("x"));
  CHECK(m[2] == P("2*x^2"));
}

TEST_CASE("fraction against brute force") {
  CHECK(verify_main(0).ok());
  CHECK(verify_main(6).ok());
  // distinct monomials at n = 8
  CHECK(brute_force_gf(8).size() == moments(ParamAssignment::symbolic(), 8)[8].size());
  CHECK(brute_force_gf(2) == P("u^2 + p*r"));
  CHECK_THROWS(brute_force_gf(9));
}
