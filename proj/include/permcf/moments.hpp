#pragma once

// Hankel determinants of moment sequences, the product formula for them,
// the moment-problem decision rules for the fraction, orthogonal
// polynomials from the three-term recurrence, and exponential polynomials.

#include <optional>
#include <string>
#include <vector>

#include "permcf/cfrac.hpp"
#include "permcf/matrix.hpp"
#include "permcf/report.hpp"

namespace permcf {

/// (m_{i+j})_{0<=i,j<=n}; needs 2n+1 entries (std::invalid_argument otherwise).
Matrix<MultiPoly> hankel_matrix(const std::vector<MultiPoly>& seq, unsigned n);
MultiPoly hankel_det(const std::vector<MultiPoly>& seq, unsigned n);

/// (pr)^{C(n+1,2)} prod_{i=1}^n [i]_{c,d}! [i]_{h,l}!
MultiPoly hankel_closed_form(const ParamAssignment& params, unsigned n);
/// beta_1^n beta_2^{n-1} ... beta_n
MultiPoly hankel_beta_product(const ParamAssignment& params, unsigned n);

enum class Verdict { NotMomentSequence, MomentSequence, Undetermined };
enum class Uniqueness { Unique, Unknown };
enum class SupportKind { OneAtom, TwoAtoms, FiniteAtoms, PossiblyInfinite };

struct MomentClassification {
  Verdict verdict = Verdict::Undetermined;
  Uniqueness uniqueness = Uniqueness::Unknown;
  std::optional<SupportKind> support;  // absent when not a moment sequence
  unsigned atoms_from = 0;             // FiniteAtoms: first n with beta_n = 0
  std::optional<unsigned> negative_beta;  // NotMomentSequence: first n with beta_n < 0
  std::string reason;
};

std::string to_string(Verdict v);
std::string to_string(Uniqueness u);
std::string to_string(SupportKind s);

inline constexpr unsigned kDefaultBetaScan = 100;

/// Requires all fourteen parameters to be rational (PolyError otherwise).
MomentClassification classify(const ParamAssignment& params, unsigned beta_scan = kDefaultBetaScan);

/// Coefficients of P_0..P_N in the variable X (index = power of X).
using OrthoPoly = std::vector<MultiPoly>;
std::vector<OrthoPoly> orthogonal_polys(const ParamAssignment& params, unsigned N);
std::string ortho_str(const OrthoPoly& p);

/// L(P_i P_j) = 0 for i != j <= N and L(P_n^2) = beta_1 ... beta_n, where
/// L(X^k) = m_k.
CheckReport check_orthogonality(const ParamAssignment& params, unsigned N, const ExpansionBounds& bounds = {});

/// e_n(x) = sum_k S(n,k) x^k.
MultiPoly exp_poly(unsigned n);
/// det(e_{i+j}(x))_{0<=i,j<=n}
MultiPoly radoux_det(unsigned n);
/// x^{C(n+1,2)} prod_{k=1}^n k!
MultiPoly radoux_closed_form(unsigned n);

}  // namespace permcf
