#pragma once

// The fourteen-parameter J-fraction
//
//   C(z) = 1 / (1 - alpha_0 z - beta_1 z^2 / (1 - alpha_1 z - beta_2 z^2 / ...))
//
//   alpha_n = u w^n + s [n]_{a,b} + t [n]_{f,g}
//   beta_n  = p r [n]_{c,d} [n]_{h,l}
//
// whose z^n coefficient is the generating polynomial of S_n by the
// fourteen excedance statistics.

#include <array>
#include <optional>
#include <string_view>

#include "permcf/poly.hpp"
#include "permcf/report.hpp"
#include "permcf/series.hpp"

namespace permcf {

inline constexpr std::array<std::string_view, 14> kParamNames = {"a", "b", "c", "d", "f", "g", "h",
                                                                 "l", "p", "r", "s", "t", "u", "w"};

class ParamAssignment {
 public:
  /// Every parameter is its own variable.
  ParamAssignment();
  static ParamAssignment symbolic() { return {}; }
  /// Every parameter set to the same constant.
  static ParamAssignment constant(const Rational& value);
  /// "name = value" lines ('#' starts a comment).  Values use the
  /// polynomial grammar; names not mentioned keep their value in `base`.
  static ParamAssignment parse(std::string_view text, const ParamAssignment& base = {},
                               const Bindings& bindings = {});

  /// Throws PolyError for names outside the fourteen.
  ParamAssignment& set(std::string_view name, const MultiPoly& value);
  const MultiPoly& get(std::string_view name) const;

  /// Replace u by u1 + ... + uk (k >= 1); k = 0 clears.
  ParamAssignment& set_color_weights(int k);
  int color_weights() const { return color_weights_; }
  /// u, or u1 + ... + uk when colour weights are set.
  MultiPoly effective_u() const;

  /// All values constant (and no colour weights).
  bool is_numeric() const;
  std::optional<Rational> numeric(std::string_view name) const;

 private:
  std::array<MultiPoly, 14> values_;
  int color_weights_ = 0;
};

/// [n]_{x,y} = x^{n-1} + x^{n-2} y + ... + y^{n-1}; [0] = 0.
MultiPoly bracket(unsigned n, const MultiPoly& x, const MultiPoly& y);

class JacobiCoefficients {
 public:
  explicit JacobiCoefficients(ParamAssignment params);
  MultiPoly alpha(unsigned n) const;
  /// n >= 1.
  MultiPoly beta(unsigned n) const;
  const ParamAssignment& params() const { return params_; }

 private:
  ParamAssignment params_;
  MultiPoly u_;
};

struct ExpansionBounds {
  unsigned symbolic = 8;  // any parameter non-constant
  unsigned numeric = 64;
};

/// m_0..m_N by the transfer recurrence T_m(k) = T_{m-1}(k-1) + alpha_k
/// T_{m-1}(k) + beta_{k+1} T_{m-1}(k+1).  Throws std::out_of_range when N
/// exceeds the applicable bound.
std::vector<MultiPoly> moments(const ParamAssignment& params, unsigned N, const ExpansionBounds& bounds = {});
/// Same coefficients by evaluating the fraction bottom-up with series reciprocals.
std::vector<MultiPoly> moments_by_series(const ParamAssignment& params, unsigned N,
                                         const ExpansionBounds& bounds = {});
/// z -> z*mult applied to a coefficient list.
std::vector<MultiPoly> rescale_z(const std::vector<MultiPoly>& coeffs, const MultiPoly& mult);

inline constexpr int kDefaultBruteForceBound = 8;

/// Sum over S_n of the fourteen-statistic monomial.
MultiPoly brute_force_gf(int n, int bound = kDefaultBruteForceBound);

/// Symbolic coefficient n against brute_force_gf(n), for n = 0..N.
CheckReport verify_main(int N, int bound = kDefaultBruteForceBound);

}  // namespace permcf
