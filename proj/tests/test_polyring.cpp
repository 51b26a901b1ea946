#include <doctest.h>

#include <random>

#include "permcf/matrix.hpp"
#include "permcf/poly.hpp"
#include "permcf/series.hpp"

using namespace permcf;

namespace {
MultiPoly P(const char* s) { return parse_poly(s); }
}  // namespace

TEST_CASE("rational parsing and arithmetic") {
  CHECK(Rational::parse("6/4") == Rational(3, 2));
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK_THROWS(Rational::parse("1/0"));
  CHECK_THROWS(Rational::parse("x"));
  CHECK(Rational(2, 3).inverse() == Rational(3, 2));
  CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
  Rational r;
  CHECK(exact_root(Rational(1, 16), 4, r));
  CHECK(r == Rational(1, 2));
  CHECK_FALSE(exact_root(Rational(2), 2, r));
  CHECK(exact_root(Rational(-8), 3, r));
  CHECK(r == Rational(-2));
  CHECK(factorial(10) == 3628800);
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(3, 5) == 0);
}

TEST_CASE("variables") {
  CHECK(variable_index("a") == 0u);
  CHECK(variable_index("w") == 13u);
  CHECK(variable_index("lambda") == 17u);
  CHECK(color_weight_index(1) == 18u);
  CHECK_FALSE(variable_index("zz"));
  CHECK_THROWS_AS(require_variable("zz"), PolyError);
}

TEST_CASE("ring identities") {
  CHECK(P("(a + b)*(a - b)") == P("a^2 - b^2"));
  CHECK((P("a + b") * P("a + b")).str() == "a^2 + 2*a*b + b^2");
  CHECK(P("3*a^2*b - 1/2*c").str() == "3*a^2*b - 1/2*c");
  CHECK(P("0").is_zero());
  CHECK(P("x - x").is_zero());
  CHECK(P("2^-2") == MultiPoly(Rational(1, 4)));
  CHECK(P("(1/16)^(1/4)") == MultiPoly(Rational(1, 2)));
  CHECK(P("sqrt(9/4)") == MultiPoly(Rational(3, 2)));
  CHECK(P("0.25") == MultiPoly(Rational(1, 4)));
  CHECK(P("{a + 1}*2") == P("2*a + 2"));
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(P("a^-1"), PolyError);
  CHECK_THROWS_AS(P("1/a"), PolyError);
  CHECK_THROWS_AS(P("sqrt(2)"), PolyError);
  CHECK_THROWS_AS(P("(a"), PolyError);
  CHECK_THROWS_AS(P("zz"), PolyError);
  CHECK_THROWS_AS(P("1/0"), PolyError);
}

TEST_CASE("bindings shadow ring variables") {
  const Bindings b{{"q", Rational(1, 2)}, {"A", Rational(3)}};
  CHECK(parse_poly("q^-1 + A", b) == MultiPoly(5));
}

TEST_CASE("substitution and evaluation") {
  const auto e = substitute(P("u^2"), {{"u", P("u1 + u2")}});
  CHECK(e == P("u1^2 + 2*u1*u2 + u2^2"));
  std::map<std::string, Rational, std::less<>> ones;
  for (const char* v : {"a", "c", "d", "g", "h", "l", "p", "r", "s", "t", "u", "w"}) ones[v] = 1;
  CHECK(evaluate(P("a*c*d^2*g^2*h*l^2*p^3*r^3*s*t*u*w^2"), ones) == Rational(1));
  CHECK_THROWS(evaluate(P("b"), ones));
}

TEST_CASE("exact division") {
  const auto num = P("(a + b)^3*(c - d)");
  CHECK(divide_exact(num, P("a + b")) == P("(a + b)^2*(c - d)"));
  CHECK(divide_exact(num, P("2")) == P("1/2*(a + b)^3*(c - d)"));
  CHECK_THROWS_AS(divide_exact(num, P("a - b")), PolyError);
}

TEST_CASE("multiplication agrees with repeated addition, random small polynomials") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-3, 3), ex(0, 2);
  const char* vars[] = {"a", "b", "c", "x", "q"};
  auto random_poly = [&] {
    MultiPoly p;
    for (int t = 0; t < 4; ++t) {
      Monomial m;
      for (int v = 0; v < 5; ++v) m = m * Monomial::variable(require_variable(vars[v]), static_cast<unsigned>(ex(rng)));
      p += MultiPoly::term(m, Rational(coef(rng), 1 + ex(rng)));
    }
    return p;
  };
  for (int trial = 0; trial < 50; ++trial) {
    const auto f = random_poly(), g = random_poly(), h = random_poly();
    CHECK(f * (g + h) == f * g + f * h);
    CHECK(f * g == g * f);
    if (!g.is_zero()) CHECK(divide_exact(f * g, g) == f);
  }
}

TEST_CASE("truncated series") {
  const TruncatedSeries one_minus_z(std::vector<MultiPoly>{1, -1, 0, 0, 0});
  const auto r = series_reciprocal(one_minus_z);
  for (unsigned i = 0; i <= 4; ++i) CHECK(r[i] == MultiPoly(1));
  const TruncatedSeries fib_den(std::vector<MultiPoly>{1, -1, -1, 0, 0, 0});
  const auto f = series_reciprocal(fib_den);
  const long fib[] = {1, 1, 2, 3, 5, 8};
  for (unsigned i = 0; i <= 5; ++i) CHECK(f[i] == MultiPoly(fib[i]));
  const TruncatedSeries s(std::vector<MultiPoly>{1, P("a"), P("b^2 - 1"), P("3*c")});
  const auto prod = series_mul(s, series_reciprocal(s));
  CHECK(prod[0] == MultiPoly(1));
  for (unsigned i = 1; i <= 3; ++i) CHECK(prod[i].is_zero());
  CHECK_THROWS_AS(series_reciprocal(TruncatedSeries(std::vector<MultiPoly>{P("a"), 1})), PolyError);
  const auto sc = series_rescale(s, P("2"));
  CHECK(sc[3] == P("24*c"));
}

TEST_CASE("determinants three ways") {
  Matrix<MultiPoly> m(3, 3);
  const char* e[3][3] = {{"1", "1", "2"}, {"1", "2", "6"}, {"2", "6", "24"}};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m(i, j) = P(e[i][j]);
  CHECK(determinant(m) == MultiPoly(4));
  CHECK(det_cofactor(m) == MultiPoly(4));
  Matrix<MultiPoly> s(3, 3);
  const char* f[3][3] = {{"a", "b", "c"}, {"b", "c", "d"}, {"c", "d", "a + x"}};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) s(i, j) = P(f[i][j]);
  // Leibniz by hand
  const auto leibniz = P("a*(c*(a + x) - d^2) - b*(b*(a + x) - c*d) + c*(b*d - c^2)");
  CHECK(det_bareiss(s) == leibniz);
  CHECK(det_cofactor(s) == leibniz);
  Matrix<MultiPoly> z(2, 2);
  z(0, 0) = P("0");
  z(0, 1) = P("a");
  z(1, 0) = P("b");
  z(1, 1) = P("0");
  CHECK(determinant(z) == P("-a*b"));
  CHECK(det_cofactor(Matrix<MultiPoly>(0, 0)) == MultiPoly(1));
  CHECK_THROWS(determinant(Matrix<MultiPoly>(2, 3)));
}
