#include <doctest.h>

#include <set>

#include "permcf/motzkin.hpp"

using namespace permcf;

namespace {
const char* kWorkedPath =
    "U[c^0 d^0] U[c^0 d^1] U[c^1 d^1] T[f^0 g^2] D[h^0 l^2] F[w^2] S[a^1 b^0] D[h^1 l^0] D[h^0 l^0]";
MultiPoly label(const LabeledStep& s) { return MultiPoly::term(step_label(s)); }
}  // namespace

TEST_CASE("the worked nine-letter path") {
  const auto path = eta(Permutation::parse("597126843"));
  CHECK(path.str() == kWorkedPath);
  const StepKind kinds[] = {StepKind::Up,   StepKind::Up,     StepKind::Up,   StepKind::LevelT, StepKind::Down,
                            StepKind::LevelU, StepKind::LevelS, StepKind::Down, StepKind::Down};
  const char* labels[] = {"p", "d*p", "c*d*p", "g^2*t", "l^2*r", "u*w^2", "a*s", "h*r", "r"};
  REQUIRE(path.size() == 9);
  for (int i = 0; i < 9; ++i) {
    CHECK(path[i].kind == kinds[i]);
    CHECK(label(path[i]) == parse_poly(labels[i]));
  }
  CHECK(MultiPoly::term(weight(path)) == parse_poly("a*c*d^2*g^2*h*l^2*p^3*r^3*s*t*u*w^2"));
  CHECK(eta_inverse(LabeledMotzkinPath::parse(kWorkedPath)) == Permutation::parse("597126843"));
}

TEST_CASE("small paths") {
  const auto id = eta(Permutation::identity(4));
  for (const auto& s : id.steps()) {
    CHECK(s.kind == StepKind::LevelU);
    CHECK(s.height == 0);
    CHECK(label(s) == parse_poly("u"));
  }
  CHECK(MultiPoly::term(weight(id)) == parse_poly("u^4"));
  CHECK(eta_inverse(id) == Permutation::identity(4));
  const auto p21 = eta(Permutation::parse("21"));
  CHECK(p21.str() == "U[c^0 d^0] D[h^0 l^0]");
  CHECK(MultiPoly::term(weight(p21)) == parse_poly("p*r"));
}

TEST_CASE("round trips on S_7") {
  for_each_permutation(7, [](const Permutation& s) {
    const auto p = eta(s);
    CHECK(eta_inverse(p) == s);
    CHECK(weight(p) == stat_monomial(stats(s)));
    CHECK(LabeledMotzkinPath::parse(p.str()) == p);
  });
}

TEST_CASE("path enumeration") {
  CHECK(enumerate_paths(0).size() == 1u);
  CHECK(enumerate_paths(3).size() == 6u);
  std::set<std::vector<int>> images;
  long count = 0;
  for_each_path(6, [&](const LabeledMotzkinPath& p) {
    ++count;
    const auto s = eta_inverse(p);
    images.insert(s.word());
    CHECK(eta(s) == p);
  });
  CHECK(count == 720);
  CHECK(images.size() == 720u);
  MultiPoly total;
  for (const auto& p : enumerate_paths(3)) total += MultiPoly::term(weight(p));
  std::map<std::string, Rational, std::less<>> ones;
  for (auto v : {"a", "b", "c", "d", "f", "g", "h", "l", "p", "r", "s", "t", "u", "w"}) ones[v] = 1;
  CHECK(evaluate(total, ones) == Rational(6));
  CHECK_THROWS(enumerate_paths(12));
}

TEST_CASE("invalid paths name the offending step") {
  auto step_of = [](const char* text) {
    try {
      (void)LabeledMotzkinPath::parse(text);
    } catch (const PathError& e) {
      return e.step;
    }
    return -1;
  };
  CHECK(step_of("D[h^0 l^0]") == 1);                       // below the axis
  CHECK(step_of("U[c^0 d^0] D[h^1 l^0]") == 2);            // label degree 0 at height 1
  CHECK(step_of("U[c^0 d^0] U[c^1 d^1] D[h^0 l^0]") == 2);  // degree 2 at height 1
  CHECK(step_of("F[w^1]") == 1);                           // fixed point weight must match the height
  CHECK(step_of("U[c^0 d^0]") == 0);                       // does not return to 0
  CHECK(step_of("X[a^0]") == 1);
  CHECK(step_of("S[a^0 b^0]") == 1);                       // level S needs height >= 1
}
