#include <doctest.h>

#include "permcf/cfrac.hpp"
#include "permcf/matrix.hpp"
#include "permcf/moments.hpp"

using namespace permcf;

namespace {
MultiPoly P(const char* s) { return parse_poly(s); }
ParamAssignment ones_with(const char* text) { return ParamAssignment::parse(text, ParamAssignment::constant(1)); }
BigInt sq_factorial_product(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 1; i <= n; ++i) r *= factorial(i) * factorial(i);
  return r;
}
}  // namespace

TEST_CASE("hankel determinants of n!") {
  const auto m = moments(ParamAssignment::constant(1), 12);
  CHECK(hankel_det(m, 0) == MultiPoly(1));
  CHECK(hankel_det(m, 2) == MultiPoly(4));
  for (unsigned n = 0; n <= 6; ++n) CHECK(hankel_det(m, n) == MultiPoly(Rational(sq_factorial_product(n))));
  CHECK(hankel_closed_form(ParamAssignment::constant(1), 4) == MultiPoly(82944));
}

TEST_CASE("hankel determinants of derangements") {
  const auto m = moments(ones_with("u = 0"), 6);
  CHECK(hankel_det(m, 3) == MultiPoly(144));
}

TEST_CASE("closed form, symbolic") {
  CHECK(hankel_closed_form(ParamAssignment::symbolic(), 0) == MultiPoly(1));
  CHECK(hankel_closed_form(ParamAssignment::symbolic(), 2) == P("(p*r)^3*(c + d)*(h + l)"));
  CHECK(hankel_beta_product(ParamAssignment::symbolic(), 3) == hankel_closed_form(ParamAssignment::symbolic(), 3));
  ExpansionBounds b;
  b.symbolic = 6;
  const auto m = moments(ParamAssignment::symbolic(), 6, b);
  for (unsigned n = 0; n <= 3; ++n) {
    CHECK(hankel_det(m, n) == hankel_closed_form(ParamAssignment::symbolic(), n));
    CHECK(det_cofactor(hankel_matrix(m, n)) == hankel_det(m, n));
  }
}

TEST_CASE("hankel with a numeric but non-trivial specialisation") {
  const auto p = ones_with("c = 2\nd = -1/2\nh = 3\nl = 1/3\np = 5\nr = 2/7\ns = -4");
  const auto m = moments(p, 10);
  for (unsigned n = 0; n <= 5; ++n) CHECK(hankel_det(m, n) == hankel_closed_form(p, n));
}

TEST_CASE("classification") {
  const auto all1 = classify(ParamAssignment::constant(1));
  CHECK(all1.verdict == Verdict::MomentSequence);
  CHECK(all1.uniqueness == Uniqueness::Unique);
  CHECK(all1.support == SupportKind::PossiblyInfinite);

  const auto p0 = classify(ones_with("p = 0"));
  CHECK(p0.verdict == Verdict::MomentSequence);
  CHECK(p0.uniqueness == Uniqueness::Unique);
  CHECK(p0.support == SupportKind::OneAtom);

  const auto two = classify(ones_with("c = 1\nd = -1"));
  CHECK(two.uniqueness == Uniqueness::Unique);
  CHECK(two.support == SupportKind::TwoAtoms);

  const auto big = classify(ones_with("c = 2\nh = 2"));
  CHECK(big.verdict == Verdict::MomentSequence);
  CHECK(big.uniqueness == Uniqueness::Unknown);

  // c + d < 0 but h + l > 0: beta_2 = pr(c+d)(h+l) < 0
  const auto bad = classify(ones_with("c = -3\nd = 1"));
  CHECK(bad.verdict == Verdict::NotMomentSequence);
  CHECK_FALSE(bad.support);
  CHECK(bad.negative_beta == 2u);

  CHECK_THROWS_AS(classify(ParamAssignment::symbolic()), PolyError);
}

TEST_CASE("orthogonal polynomials") {
  const auto polys = orthogonal_polys(ParamAssignment::constant(1), 3);
  CHECK(polys[0] == OrthoPoly{MultiPoly(1)});
  CHECK(ortho_str(polys[1]) == "X - 1");
  CHECK(ortho_str(polys[2]) == "X^2 - 4*X + 2");
  const auto herm = orthogonal_polys(ParamAssignment::parse("h = 0\ns = 0\nt = 0\nu = 0", ParamAssignment::constant(1)), 3);
  CHECK(ortho_str(herm[2]) == "X^2 - 1");
  CHECK(ortho_str(herm[3]) == "X^3 - 3*X");
  CHECK(orthogonal_polys(ParamAssignment::constant(1), 0).size() == 1u);
  CHECK(check_orthogonality(ParamAssignment::constant(1), 5).ok());
  CHECK(check_orthogonality(ParamAssignment::constant(1), 1).ok());
}

TEST_CASE("orthogonality, Al-Salam-Carlitz I at q = 1/2, a = 1") {
  const auto p = ParamAssignment::parse(
      "a = 0\nb = q\nc = 0\nd = q\nf = 0\ng = 0\nh = 0\nl = q\np = A\nr = 1 - q\ns = (A + 1)*q\nt = 0\nu = A + 1\nw = 0\n"
      "q = 1/2\nA = 1");
  CHECK(check_orthogonality(p, 4).ok());
}

TEST_CASE("orthogonality of a symbolic fraction") {
  ExpansionBounds b;
  b.symbolic = 8;
  CHECK(check_orthogonality(ParamAssignment::parse("a = 1\nb = 1\nf = 1\ng = 1\nw = 1", ParamAssignment::symbolic()), 3, b).ok());
}

TEST_CASE("exponential polynomials") {
  CHECK(exp_poly(3) == P("x + 3*x^2 + x^3"));
  const long bell[] = {1, 1, 2, 5, 15, 52};
  for (unsigned n = 0; n < 6; ++n) CHECK(evaluate(exp_poly(n), {{"x", Rational(1)}}) == Rational(bell[n]));
  CHECK(radoux_det(2) == P("2*x^3"));
  for (unsigned n = 0; n <= 4; ++n) CHECK(radoux_det(n) == radoux_closed_form(n));
}
