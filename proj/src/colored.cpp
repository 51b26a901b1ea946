#include "permcf/colored.hpp"

#include <algorithm>
#include <unordered_map>

namespace permcf {

namespace {

// (value, colour) pairs ordered colour first
bool greater_pair(int a, int ca, int b, int cb) { return ca != cb ? ca > cb : a > b; }

}  // namespace

ColoredPermutation::ColoredPermutation(Permutation pi, std::vector<int> colors, int k)
    : pi_(std::move(pi)), colors_(std::move(colors)), k_(k) {
  if (k_ < 1) throw PermError("need at least one colour");
  if (static_cast<int>(colors_.size()) != pi_.size()) throw PermError("permutation and colour word differ in length");
  for (int c : colors_)
    if (c < 0 || c >= k_) throw PermError("colour " + std::to_string(c) + " outside 0.." + std::to_string(k_ - 1));
}

ColoredPermutation ColoredPermutation::parse(std::string_view text, int k) {
  const auto bar = text.find('|');
  if (bar == std::string_view::npos) throw PermError("expected 'permutation | colours'");
  Permutation pi = Permutation::parse(text.substr(0, bar));
  std::vector<int> colors = parse_word(text.substr(bar + 1));
  if (k == 0) k = colors.empty() ? 1 : *std::max_element(colors.begin(), colors.end()) + 1;
  return ColoredPermutation(std::move(pi), std::move(colors), std::max(k, 1));
}

std::string ColoredPermutation::str() const { return word_str(pi_.word()) + " | " + word_str(colors_); }

ColoredStats colored_stats(const ColoredPermutation& P) {
  const int n = P.size();
  auto val = [&](int i) { return i == n + 1 ? n + 1 : P.value(i); };
  auto col = [&](int i) { return i == n + 1 ? 0 : P.color(i); };
  ColoredStats s;
  for (int i = 1; i <= n; ++i) {
    if (greater_pair(val(i), col(i), val(i + 1), col(i + 1))) ++s.des;
    if (P.value(i) > i || (P.value(i) == i && P.color(i) > 0)) ++s.exc;
    if (P.value(i) < i) ++s.aexc;
    if (P.value(i) == i && P.color(i) == 0) ++s.fix;
    for (int j = i + 1; j <= n + 1; ++j)
      if (greater_pair(val(i), col(i), val(j), col(j))) ++s.inv;
  }
  return s;
}

int colored_descent_position_sum(const ColoredPermutation& P) {
  const int n = P.size();
  int maj = 0;
  for (int i = 1; i <= n; ++i) {
    const int next_val = i == n ? n + 1 : P.value(i + 1);
    const int next_col = i == n ? 0 : P.color(i + 1);
    if (greater_pair(P.value(i), P.color(i), next_val, next_col)) maj += i;
  }
  return maj;
}

void for_each_colored(int n, int k, const std::function<void(const ColoredPermutation&)>& visit, long bound) {
  if (n < 0 || k < 1) throw std::out_of_range("need n >= 0 and k >= 1");
  long total = 1;
  for (int i = 1; i <= n; ++i) {
    total *= static_cast<long>(k) * i;
    if (total > bound) throw std::out_of_range("k^n n! exceeds the enumeration bound " + std::to_string(bound));
  }
  std::vector<int> colors(static_cast<std::size_t>(n), 0);
  for_each_permutation(n, [&](const Permutation& pi) {
    std::fill(colors.begin(), colors.end(), 0);
    for (;;) {
      visit(ColoredPermutation(pi, colors, k));
      int i = n - 1;
      while (i >= 0 && colors[static_cast<std::size_t>(i)] == k - 1) colors[static_cast<std::size_t>(i--)] = 0;
      if (i < 0) break;
      ++colors[static_cast<std::size_t>(i)];
    }
  });
}

std::vector<ColoredPermutation> enumerate_colored(int n, int k, long bound) {
  std::vector<ColoredPermutation> out;
  for_each_colored(n, k, [&](const ColoredPermutation& P) { out.push_back(P); }, bound);
  return out;
}

ParamAssignment exc_fix_params(int k) {
  ParamAssignment P = ParamAssignment::constant(1);
  const MultiPoly x = MultiPoly::variable("x"), y = MultiPoly::variable("y"), q = MultiPoly::variable("q");
  P.set("s", Rational(k) * x).set("p", Rational(k) * x);
  P.set("t", Rational(k) * y).set("r", Rational(k) * y);
  P.set("u", Rational(k - 1) * x + q);
  return P;
}

ParamAssignment inversion_params() {
  ParamAssignment P = ParamAssignment::constant(1);
  const MultiPoly q = MultiPoly::variable("q");
  for (auto name : {"a", "c", "h", "r"}) P.set(name, q);
  for (auto name : {"b", "f", "d", "l", "t"}) P.set(name, q * q);
  P.set("g", 0).set("w", 0).set("p", 1).set("u", 1).set("s", Rational(2) * q);
  return P;
}

ParamAssignment exc_inv_params() {
  ParamAssignment P = inversion_params();
  const MultiPoly x = MultiPoly::variable("x"), q = MultiPoly::variable("q");
  P.set("p", x).set("s", (MultiPoly(1) + x) * q);
  return P;
}

MultiPoly inversion_z_multiplier(int k) { return Rational(k - 1) * MultiPoly::variable("q") + MultiPoly(1); }

MultiPoly q_factorial(int n) {
  const MultiPoly q = MultiPoly::variable("q");
  MultiPoly out(1);
  for (int i = 1; i <= n; ++i) out *= bracket(static_cast<unsigned>(i), q, MultiPoly(1));
  return out;
}

namespace {

// Generating polynomial of a statistic tuple over S_n^(k).
MultiPoly colored_distribution(int n, int k, const std::function<Monomial(const ColoredStats&)>& weight) {
  std::unordered_map<Monomial, long, MonomialHash> acc;
  for_each_colored(n, k, [&](const ColoredPermutation& P) { ++acc[weight(colored_stats(P))]; });
  std::vector<MultiPoly::Term> terms;
  for (const auto& [m, c] : acc) terms.emplace_back(m, Rational(c));
  return MultiPoly::from_terms(std::move(terms));
}

Monomial pow_var(const char* name, int e) {
  return e > 0 ? Monomial::variable(require_variable(name), static_cast<unsigned>(e)) : Monomial{};
}

void compare_rows(CheckReport& report, const std::string& label, const std::vector<MultiPoly>& cf,
                  int n, const MultiPoly& oracle) {
  const MultiPoly& got = cf[static_cast<std::size_t>(n)];
  report.add(label, got == oracle, got == oracle ? oracle.str() : "fraction gives " + got.str() + ", enumeration gives " + oracle.str());
}

}  // namespace

CheckReport verify_colored_corollaries(int n_max, int k_max) {
  CheckReport report{"colored", {}};
  ExpansionBounds eb;
  eb.symbolic = static_cast<unsigned>(std::max(n_max, 0));
  for (int k = 1; k <= k_max; ++k) {
    const auto exc_fix = moments(exc_fix_params(k), static_cast<unsigned>(n_max), eb);
    const auto inv = rescale_z(moments(inversion_params(), static_cast<unsigned>(n_max), eb), inversion_z_multiplier(k));
    for (int n = 0; n <= n_max; ++n) {
      const std::string where = " n=" + std::to_string(n) + " k=" + std::to_string(k);
      compare_rows(report, "exc/aexc/fix" + where, exc_fix, n, colored_distribution(n, k, [](const ColoredStats& s) {
                     return pow_var("x", s.exc) * pow_var("y", s.aexc) * pow_var("q", s.fix);
                   }));
      compare_rows(report, "inv" + where, inv, n,
                   colored_distribution(n, k, [](const ColoredStats& s) { return pow_var("q", s.inv); }));
    }
  }
  if (k_max >= 1) {
    const auto exc_inv = moments(exc_inv_params(), static_cast<unsigned>(n_max), eb);
    for (int n = 0; n <= n_max; ++n)
      compare_rows(report, "exc/inv n=" + std::to_string(n) + " k=1", exc_inv, n,
                   colored_distribution(n, 1, [](const ColoredStats& s) { return pow_var("x", s.exc) * pow_var("q", s.inv); }));
  }
  return report;
}

}  // namespace permcf
