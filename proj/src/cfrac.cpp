#include "permcf/cfrac.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "permcf/permutation.hpp"

namespace permcf {

namespace {

std::size_t param_slot(std::string_view name) {
  for (std::size_t i = 0; i < kParamNames.size(); ++i)
    if (kParamNames[i] == name) return i;
  throw PolyError("'" + std::string(name) + "' is not one of the fourteen parameters");
}

bool is_param(std::string_view name) {
  return std::find(kParamNames.begin(), kParamNames.end(), name) != kParamNames.end();
}

std::string trim(std::string s) {
  s.erase(0, s.find_first_not_of(" \t\r\n"));
  s.erase(s.find_last_not_of(" \t\r\n") + 1);
  return s;
}

}  // namespace

ParamAssignment::ParamAssignment() {
  for (std::size_t i = 0; i < kParamNames.size(); ++i) values_[i] = MultiPoly::variable(kParamNames[i]);
}

ParamAssignment ParamAssignment::constant(const Rational& value) {
  ParamAssignment p;
  for (auto& v : p.values_) v = MultiPoly(value);
  return p;
}

ParamAssignment ParamAssignment::parse(std::string_view text, const ParamAssignment& base, const Bindings& bindings) {
  std::vector<std::pair<std::string, std::string>> lines;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw PolyError("line " + std::to_string(lineno) + ": expected name = value");
    std::string name = trim(line.substr(0, eq));
    if (name == "ell") name = "l";
    lines.emplace_back(name, trim(line.substr(eq + 1)));
  }
  // Names outside the fourteen are numeric bindings usable by the others.
  Bindings local = bindings;
  for (const auto& [name, value] : lines) {
    if (is_param(name)) continue;
    auto c = parse_poly(value, local).constant_value();
    if (!c) throw PolyError("'" + name + "' must be bound to a number");
    local[name] = *c;
  }
  ParamAssignment out = base;
  for (const auto& [name, value] : lines)
    if (is_param(name)) out.set(name, parse_poly(value, local));
  return out;
}

ParamAssignment& ParamAssignment::set(std::string_view name, const MultiPoly& value) {
  values_[param_slot(name == "ell" ? "l" : name)] = value;
  return *this;
}

const MultiPoly& ParamAssignment::get(std::string_view name) const { return values_[param_slot(name == "ell" ? "l" : name)]; }

ParamAssignment& ParamAssignment::set_color_weights(int k) {
  if (k < 0 || k > kMaxColorWeights) throw PolyError("colour weight count out of range");
  color_weights_ = k;
  return *this;
}

MultiPoly ParamAssignment::effective_u() const {
  if (color_weights_ == 0) return get("u");
  MultiPoly sum;
  for (int i = 1; i <= color_weights_; ++i) sum += MultiPoly::variable(color_weight_index(i));
  return sum;
}

bool ParamAssignment::is_numeric() const {
  if (color_weights_ > 0) return false;
  return std::all_of(values_.begin(), values_.end(), [](const MultiPoly& v) { return v.is_constant(); });
}

std::optional<Rational> ParamAssignment::numeric(std::string_view name) const { return get(name).constant_value(); }

MultiPoly bracket(unsigned n, const MultiPoly& x, const MultiPoly& y) {
  MultiPoly sum;
  if (n == 0) return sum;
  // Horner in x: ((x + y) x + y^2) x + ...
  MultiPoly ypow(1);
  std::vector<MultiPoly> ypows{ypow};
  for (unsigned i = 1; i < n; ++i) ypows.push_back(ypows.back() * y);
  sum = ypows[0];
  for (unsigned i = 1; i < n; ++i) sum = sum * x + ypows[i];
  return sum;
}

JacobiCoefficients::JacobiCoefficients(ParamAssignment params) : params_(std::move(params)), u_(params_.effective_u()) {}

MultiPoly JacobiCoefficients::alpha(unsigned n) const {
  const auto& P = params_;
  return u_ * P.get("w").pow(n) + P.get("s") * bracket(n, P.get("a"), P.get("b")) +
         P.get("t") * bracket(n, P.get("f"), P.get("g"));
}

MultiPoly JacobiCoefficients::beta(unsigned n) const {
  if (n == 0) throw std::invalid_argument("beta is indexed from 1");
  const auto& P = params_;
  return P.get("p") * P.get("r") * bracket(n, P.get("c"), P.get("d")) * bracket(n, P.get("h"), P.get("l"));
}

namespace {

void check_bound(const ParamAssignment& params, unsigned N, const ExpansionBounds& bounds) {
  const bool numeric = params.is_numeric();
  const unsigned cap = numeric ? bounds.numeric : bounds.symbolic;
  if (N > cap)
    throw std::out_of_range("order " + std::to_string(N) + " exceeds the " + (numeric ? "numeric" : "symbolic") +
                            " expansion bound " + std::to_string(cap));
}

}  // namespace

std::vector<MultiPoly> moments(const ParamAssignment& params, unsigned N, const ExpansionBounds& bounds) {
  check_bound(params, N, bounds);
  const JacobiCoefficients J(params);
  const unsigned H = N / 2 + 1;
  std::vector<MultiPoly> alpha, beta(1);
  for (unsigned k = 0; k <= H; ++k) alpha.push_back(J.alpha(k));
  for (unsigned k = 1; k <= H + 1; ++k) beta.push_back(J.beta(k));

  std::vector<MultiPoly> out{MultiPoly(1)};
  std::vector<MultiPoly> T{MultiPoly(1)};  // T[k]: weight of paths of the current length ending at height k
  for (unsigned m = 1; m <= N; ++m) {
    // heights above N - m can never return to 0
    const unsigned top = std::min(m, N - m);
    std::vector<MultiPoly> next(top + 1);
    for (unsigned k = 0; k <= top; ++k) {
      MultiPoly v;
      if (k >= 1 && k - 1 < T.size()) v += T[k - 1];
      if (k < T.size() && !T[k].is_zero()) v += alpha[k] * T[k];
      if (k + 1 < T.size() && !T[k + 1].is_zero()) v += beta[k + 1] * T[k + 1];
      next[k] = std::move(v);
    }
    T = std::move(next);
    out.push_back(T[0]);
  }
  return out;
}

std::vector<MultiPoly> moments_by_series(const ParamAssignment& params, unsigned N, const ExpansionBounds& bounds) {
  check_bound(params, N, bounds);
  const JacobiCoefficients J(params);
  // Depth D contributes from z^{2D} on, so the tail below D = N/2 + 1 is 1.
  const unsigned D = N / 2 + 1;
  TruncatedSeries C(N);
  C[0] = MultiPoly(1);
  for (unsigned k = D; k-- > 0;) {
    TruncatedSeries denom(N);
    denom[0] = MultiPoly(1);
    if (N >= 1) denom[1] = -J.alpha(k);
    const MultiPoly b = J.beta(k + 1);
    for (unsigned n = 2; n <= N; ++n) denom[n] -= b * C[n - 2];
    C = series_reciprocal(denom);
  }
  return C.coefficients();
}

std::vector<MultiPoly> rescale_z(const std::vector<MultiPoly>& coeffs, const MultiPoly& mult) {
  std::vector<MultiPoly> out;
  MultiPoly power(1);
  for (const auto& c : coeffs) {
    out.push_back(c * power);
    power *= mult;
  }
  return out;
}

MultiPoly brute_force_gf(int n, int bound) {
  if (n < 0 || n > bound)
    throw std::out_of_range("brute force size " + std::to_string(n) + " outside 0.." + std::to_string(bound));
  std::unordered_map<Monomial, long, MonomialHash> acc;
  for_each_permutation(n, [&](const Permutation& sigma) { ++acc[stat_monomial(stats(sigma))]; });
  std::vector<MultiPoly::Term> terms;
  terms.reserve(acc.size());
  for (const auto& [m, c] : acc) terms.emplace_back(m, Rational(c));
  return MultiPoly::from_terms(std::move(terms));
}

CheckReport verify_main(int N, int bound) {
  CheckReport report{"main", {}};
  if (N < 0) return report;
  ExpansionBounds eb;
  eb.symbolic = static_cast<unsigned>(std::max(bound, 0));
  const auto m = moments(ParamAssignment::symbolic(), static_cast<unsigned>(N), eb);
  for (int n = 0; n <= N; ++n) {
    const MultiPoly oracle = brute_force_gf(n, bound);
    const MultiPoly& cf = m[static_cast<std::size_t>(n)];
    if (cf == oracle) {
      report.add("n=" + std::to_string(n), true, std::to_string(oracle.size()) + " monomials");
    } else {
      const MultiPoly diff = cf - oracle;
      report.add("n=" + std::to_string(n), false,
                 "fraction has " + std::to_string(cf.size()) + " monomials, permutations give " +
                     std::to_string(oracle.size()) + "; leading difference " +
                     MultiPoly::term(diff.leading_term().first, diff.leading_term().second).str());
    }
  }
  return report;
}

}  // namespace permcf
