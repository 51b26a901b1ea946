#include <doctest.h>

#include <map>

#include "permcf/colored.hpp"

using namespace permcf;

namespace {
MultiPoly P(const char* s) { return parse_poly(s); }
}  // namespace

TEST_CASE("coloured permutation basics") {
  const auto c = ColoredPermutation::parse("3 1 2 | 0 2 1");
  CHECK(c.size() == 3);
  CHECK(c.colors_count() == 3);
  CHECK(c.color(2) == 2);
  CHECK_THROWS_AS(ColoredPermutation(Permutation::parse("12"), {0, 2}, 2), PermError);
  CHECK_THROWS_AS(ColoredPermutation(Permutation::parse("12"), {0}, 2), PermError);
}

TEST_CASE("statistics with the sentinel") {
  const auto one = colored_stats(ColoredPermutation(Permutation::parse("1"), {1}, 2));
  CHECK(one.exc == 1);
  CHECK(one.fix == 0);
  CHECK(one.inv == 1);
  CHECK(one.des == 1);
  // all colours 0: classical statistics
  for_each_permutation(5, [](const Permutation& s) {
    const auto c = colored_stats(ColoredPermutation(s, std::vector<int>(5, 0), 1));
    const auto st = stats(s);
    const auto w = word_stats(s.word());
    CHECK(c.exc == st.exc);
    CHECK(c.aexc == st.aexc);
    CHECK(c.fix == st.fp);
    CHECK(c.inv == w.inv);
    CHECK(c.des == w.des);
  });
}

TEST_CASE("enumeration sizes") {
  CHECK(enumerate_colored(1, 2).size() == 2u);
  CHECK(enumerate_colored(2, 2).size() == 8u);
  CHECK(enumerate_colored(3, 3).size() == 162u);
  CHECK_THROWS(enumerate_colored(9, 6));
}

TEST_CASE("excedance and fixed-point law, S_2 with two colours") {
  const auto m = moments(exc_fix_params(2), 2);
  CHECK(m[1] == P("x + q"));
  MultiPoly oracle;
  for (const auto& c : enumerate_colored(2, 2)) {
    const auto s = colored_stats(c);
    oracle += MultiPoly::term(Monomial::variable(require_variable("x"), static_cast<unsigned>(s.exc)) *
                              Monomial::variable(require_variable("y"), static_cast<unsigned>(s.aexc)) *
                              Monomial::variable(require_variable("q"), static_cast<unsigned>(s.fix)));
  }
  CHECK(m[2] == oracle);
}

TEST_CASE("inversions give the q-factorial for one colour") {
  ExpansionBounds b;
  b.symbolic = 8;
  const auto m = moments(inversion_params(), 8, b);
  for (int n = 0; n <= 8; ++n) CHECK(m[static_cast<std::size_t>(n)] == q_factorial(n));
  CHECK(q_factorial(3) == P("(1 + q)*(1 + q + q^2)"));
}

TEST_CASE("the three corollaries exhaustively") { CHECK(verify_colored_corollaries(5, 3).ok()); }
