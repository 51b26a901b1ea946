#pragma once

// Sparse multivariate polynomials with exact rational coefficients over the
// closed variable set used throughout the library:
//
//   a b c d f g h l p r s t u w   (the fourteen continued-fraction parameters)
//   x q y lambda                   (auxiliary variables of the corollaries)
//   u1 .. u14                      (fixed-point colour weights)
//
// Terms are kept in descending graded-lexicographic order with the variable
// order above, which is also the print order.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "permcf/rational.hpp"

namespace permcf {

inline constexpr std::size_t kMaxVars = 32;
inline constexpr int kMaxColorWeights = 14;

struct PolyError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Index of a ring variable, or nullopt if the name is not declared.
std::optional<std::size_t> variable_index(std::string_view name);
std::string_view variable_name(std::size_t index);
/// Throws PolyError for unknown names.
std::size_t require_variable(std::string_view name);
/// Ring index of the colour weight u_i (1-based).
std::size_t color_weight_index(int i);

class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;
  static Monomial variable(std::size_t index, unsigned exponent = 1);

  unsigned exponent(std::size_t index) const { return exps_[index]; }
  unsigned degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  /// (variable index, exponent) pairs for the nonzero exponents only.
  std::vector<std::pair<std::size_t, unsigned>> factors() const;

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Requires divides(); throws PolyError otherwise.
  Monomial operator/(const Monomial& other) const;

  std::string str() const;
  std::size_t hash() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Graded lexicographic: higher total degree first, then lex with a > b > ...
  friend std::strong_ordering operator<=>(const Monomial& x, const Monomial& y);

 private:
  std::array<Exponent, kMaxVars> exps_{};
  unsigned degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

class MultiPoly {
 public:
  using Term = std::pair<Monomial, Rational>;

  MultiPoly() = default;
  MultiPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  MultiPoly(long c) : MultiPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  static MultiPoly variable(std::string_view name);
  static MultiPoly variable(std::size_t index);
  static MultiPoly term(const Monomial& m, const Rational& c = Rational(1));
  /// Sums duplicate monomials and drops zero coefficients.
  static MultiPoly from_terms(std::vector<Term> terms);
  /// Parses the printed grammar, e.g. "3*a^2*b - 1/2*c".
  static MultiPoly parse(std::string_view text);

  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::optional<Rational> constant_value() const;
  Rational coefficient(const Monomial& m) const;
  unsigned total_degree() const;
  unsigned degree_in(std::size_t var) const;
  const Term& leading_term() const { return terms_.front(); }

  MultiPoly pow(unsigned exponent) const;
  std::string str() const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  MultiPoly operator-() const;

  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

 private:
  std::vector<Term> terms_;  // descending graded-lex, nonzero coefficients
};

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

/// Values for free identifiers while parsing (e.g. numeric defaults of
/// catalogue parameters).  Bound names shadow ring variables.
using Bindings = std::map<std::string, Rational, std::less<>>;

/// Expression grammar: + - * / ^, parentheses or braces, integers, ring
/// variables, bound names, and sqrt(...).  Division is only by nonzero
/// constants; negative and fractional exponents only on constants.
MultiPoly parse_poly(std::string_view text, const Bindings& bindings = {});

/// Evaluates exactly. Every variable present in p needs a value.
Rational evaluate(const MultiPoly& p, const std::map<std::string, Rational, std::less<>>& values);

/// Simultaneous substitution of variables by polynomials; other variables stay.
MultiPoly substitute(const MultiPoly& p, const std::map<std::string, MultiPoly, std::less<>>& values);

/// Exact quotient num / den; throws PolyError if den does not divide num.
MultiPoly divide_exact(const MultiPoly& num, const MultiPoly& den);

}  // namespace permcf
