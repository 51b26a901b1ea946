#include <doctest.h>

#include <algorithm>
#include <map>

#include "permcf/patterns.hpp"
#include "permcf/permutation.hpp"

using namespace permcf;

namespace {
const Permutation fig = Permutation::parse("597126843");

// excedance counts by hand from the one-line notation
int count_if_index(const Permutation& s, auto pred) {
  int c = 0;
  for (int i = 1; i <= s.size(); ++i) c += pred(i) ? 1 : 0;
  return c;
}
}  // namespace

TEST_CASE("permutation parsing") {
  CHECK(Permutation::parse("10 2 1 3 4 5 6 7 8 9").size() == 10);
  CHECK(Permutation::parse("3,1,2").str() == "312");
  CHECK_THROWS_AS(Permutation::parse("1134"), PermError);
  CHECK_THROWS_AS(Permutation::parse("0 1"), PermError);
  CHECK_THROWS_AS(Permutation::parse("1 3"), PermError);
  CHECK(Permutation::parse("").size() == 0);
}

TEST_CASE("statistics of small cases") {
  const auto id = stats(Permutation::identity(5));
  CHECK(id.fp == 5);
  CHECK(id.exc == 0);
  CHECK(id.aexc == 0);
  CHECK(id.iefp == 0);
  const auto s21 = stats(Permutation::parse("21"));
  StatVector expect;
  expect.exc = 1;
  expect.aexc = 1;
  CHECK(s21 == expect);
}

TEST_CASE("the worked nine-letter example") {
  const auto s = stats(fig);
  CHECK(s.exc == 4);
  CHECK(s.fp == 1);
  CHECK(s.aexc == 4);
  CHECK(s.le == 1);
  CHECK(s.lae == 1);
  CHECK(s.ie == 2);
  CHECK(s.ile == 1);
  CHECK(s.nie == 2);
  CHECK(s.nile == 0);
  CHECK(s.iae == 1);
  CHECK(s.ilae == 0);
  CHECK(s.niae == 4);
  CHECK(s.nilae == 2);
  CHECK(s.iefp == 2);
  CHECK(MultiPoly::term(stat_monomial(s)) == parse_poly("a*c*d^2*g^2*h*l^2*p^3*r^3*s*t*u*w^2"));
}

TEST_CASE("index profiles") {
  const auto p7 = index_profile(fig, 7);
  CHECK(p7.cls == IndexClass::LinkedExc);
  CHECK(p7.inve == 1);
  CHECK(p7.ninve == 0);
  CHECK(p7.prex == 1);
  const auto p6 = index_profile(fig, 6);
  CHECK(p6.cls == IndexClass::FixedPoint);
  CHECK(p6.iefp == 2);
  CHECK(p6.prex == 2);
  for (const auto& p : index_profiles(Permutation::identity(4))) {
    CHECK(p.cls == IndexClass::FixedPoint);
    CHECK(p.iefp == 0);
    CHECK(p.prex == 0);
  }
  CHECK_THROWS_AS(index_profile(fig, 10), PermError);
}

TEST_CASE("profiles sum to the statistics on S_6") {
  for_each_permutation(6, [](const Permutation& s) {
    const auto st = stats(s);
    int ie = 0, nie = 0, iefp = 0;
    for (const auto& p : index_profiles(s)) {
      if (p.cls == IndexClass::LinkedExc || p.cls == IndexClass::NonLinkedExc) {
        ie += p.inve;
        nie += p.ninve;
      }
      if (p.cls == IndexClass::FixedPoint) iefp += p.iefp;
    }
    CHECK(ie == st.ie);
    CHECK(nie == st.nie);
    CHECK(iefp == st.iefp);
    CHECK(st.exc == count_if_index(s, [&](int i) { return s(i) > i; }));
    CHECK(st.exc + st.aexc + st.fp == s.size());
  });
}

TEST_CASE("maximal chains") {
  const auto none = maximal_chains(Permutation::identity(4));
  CHECK(none.excedance.empty());
  CHECK(none.anti_excedance.empty());
  const auto c21 = maximal_chains(Permutation::parse("21"));
  CHECK(c21.excedance == std::vector<std::vector<int>>{{1}});
  CHECK(c21.anti_excedance == std::vector<std::vector<int>>{{2}});
  const auto c = maximal_chains(fig);
  CHECK(c.excedance == std::vector<std::vector<int>>{{1}, {2}, {3, 7}});
  CHECK(c.anti_excedance == std::vector<std::vector<int>>{{5}, {8, 4}, {9}});
}

TEST_CASE("descent-to-excedance bijection") {
  CHECK(fondamentale(Permutation::parse("264135")) == Permutation::parse("413652"));
  CHECK(stats(fondamentale(Permutation::identity(5))).exc == 0);
  std::map<std::vector<int>, int> seen;
  for_each_permutation(6, [&](const Permutation& s) {
    const auto t = fondamentale(s);
    ++seen[t.word()];
    CHECK(fondamentale_inverse(t) == s);
    CHECK(word_stats(s.word()).des == stats(t).exc);
    CHECK(double_descents(s) == stats(t).le);
  });
  CHECK(seen.size() == 720u);
}

TEST_CASE("patterns") {
  const auto s = Permutation::parse("356214");
  const auto v = PatternSpec::vincular("31-2");
  // the only adjacent descent with a later middle value is 62, giving 624; 5 and 2 are not adjacent
  CHECK(occurrences(s, v) == 1);
  const std::vector<int> w5124{5, 1, 2, 4};
  CHECK(occurrences(std::span<const int>(w5124), v) == 2);
  CHECK(occurrences(Permutation::parse("321"), PatternSpec::consecutive("321")) == 1);
  CHECK(occurrences(Permutation::parse("123"), PatternSpec::consecutive("321")) == 0);
  CHECK(PatternSpec::parse("[321]").kind == PatternKind::Consecutive);
  CHECK(PatternSpec::parse("2-31").kind == PatternKind::Vincular);
  CHECK(PatternSpec::parse("132").kind == PatternKind::Classical);
  const std::vector<int> rep{1, 1, 2};
  CHECK(occurrences(std::span<const int>(rep), PatternSpec::classical("123")) == 0);
  CHECK_THROWS(PatternSpec::parse("1234"));
}

TEST_CASE("des and consecutive 321 on S_3") {
  std::map<std::pair<int, long>, int> dist;
  for_each_permutation(3, [&](const Permutation& s) {
    ++dist[{word_stats(s.word()).des, occurrences(s, PatternSpec::consecutive("321"))}];
  });
  // 1 + 4x + q x^2
  CHECK(dist == std::map<std::pair<int, long>, int>{{{0, 0}, 1}, {{1, 0}, 4}, {{2, 1}, 1}});
}

TEST_CASE("classical avoiders of length 3 are Catalan") {
  const long catalan[] = {1, 1, 2, 5, 14, 42, 132, 429};
  for (const char* p : {"123", "132", "213", "231", "312", "321"})
    for (int n = 0; n <= 7; ++n) {
      long c = 0;
      for_each_permutation(n, [&](const Permutation& s) { c += avoids(s.word(), PatternSpec::classical(p)) ? 1 : 0; });
      CHECK(c == catalan[n]);
    }
}

TEST_CASE("word statistics") {
  const std::vector<int> w21{2, 1};
  CHECK(word_stats(w21) == WordStats{1, 1, 1, 1, 0});
  const std::vector<int> sorted{-2, -1, -1, 1, 3};
  const auto z = word_stats(sorted);
  CHECK(z.exc == 0);
  CHECK(z.des == 0);
  CHECK(z.maj == 0);
  CHECK(z.inv == 0);
  std::map<int, int> des, exc;
  for_each_permutation(4, [&](const Permutation& s) {
    ++des[word_stats(s.word()).des];
    ++exc[word_stats(s.word()).exc];
  });
  CHECK(des == std::map<int, int>{{0, 1}, {1, 11}, {2, 11}, {3, 1}});
  CHECK(exc == des);
  CHECK(parse_word("3 -4 1") == std::vector<int>{3, -4, 1});
  CHECK(word_str(std::vector<int>{3, -4, 1}) == "3 -4 1");
}
