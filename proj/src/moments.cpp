#include "permcf/moments.hpp"

#include <algorithm>

namespace permcf {

Matrix<MultiPoly> hankel_matrix(const std::vector<MultiPoly>& seq, unsigned n) {
  if (seq.size() < 2 * static_cast<std::size_t>(n) + 1)
    throw std::invalid_argument("Hankel order " + std::to_string(n) + " needs " + std::to_string(2 * n + 1) +
                                " terms, got " + std::to_string(seq.size()));
  Matrix<MultiPoly> h(n + 1, n + 1);
  for (unsigned i = 0; i <= n; ++i)
    for (unsigned j = 0; j <= n; ++j) h(i, j) = seq[i + j];
  return h;
}

MultiPoly hankel_det(const std::vector<MultiPoly>& seq, unsigned n) { return determinant(hankel_matrix(seq, n)); }

MultiPoly hankel_closed_form(const ParamAssignment& P, unsigned n) {
  MultiPoly result = (P.get("p") * P.get("r")).pow(n * (n + 1) / 2);
  MultiPoly fact_cd(1), fact_hl(1);
  for (unsigned i = 1; i <= n; ++i) {
    fact_cd *= bracket(i, P.get("c"), P.get("d"));
    fact_hl *= bracket(i, P.get("h"), P.get("l"));
    result *= fact_cd * fact_hl;
  }
  return result;
}

MultiPoly hankel_beta_product(const ParamAssignment& params, unsigned n) {
  const JacobiCoefficients J(params);
  MultiPoly result(1);
  for (unsigned k = 1; k <= n; ++k) result *= J.beta(k).pow(n + 1 - k);
  return result;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::NotMomentSequence: return "NotMomentSequence";
    case Verdict::MomentSequence: return "MomentSequence";
    case Verdict::Undetermined: return "Undetermined";
  }
  return "?";
}

std::string to_string(Uniqueness u) { return u == Uniqueness::Unique ? "Unique" : "Unknown"; }

std::string to_string(SupportKind s) {
  switch (s) {
    case SupportKind::OneAtom: return "OneAtom";
    case SupportKind::TwoAtoms: return "TwoAtoms";
    case SupportKind::FiniteAtoms: return "FiniteAtoms";
    case SupportKind::PossiblyInfinite: return "PossiblyInfinite";
  }
  return "?";
}

MomentClassification classify(const ParamAssignment& params, unsigned beta_scan) {
  if (!params.is_numeric()) throw PolyError("classification needs rational values for all fourteen parameters");
  auto val = [&](const char* name) { return *params.numeric(name); };
  const Rational pr = val("p") * val("r");
  const Rational c = val("c"), d = val("d"), h = val("h"), l = val("l");
  MomentClassification out;
  if (pr.is_zero()) {
    out = {Verdict::MomentSequence, Uniqueness::Unique, SupportKind::OneAtom, 0, std::nullopt,
           "pr = 0, so every beta vanishes"};
    return out;
  }
  const JacobiCoefficients J(params);
  auto beta = [&](unsigned n) { return *J.beta(n).constant_value(); };
  if (pr.sign() > 0 && (c == -d || h == -l)) {
    out = {Verdict::MomentSequence, Uniqueness::Unique, SupportKind::TwoAtoms, 0, std::nullopt,
           "pr > 0 and c = -d or h = -l"};
    return out;
  }
  const bool same_side = (c > -d && h > -l) || (c < -d && h < -l);
  if (pr.sign() > 0 && same_side) {
    out.verdict = Verdict::MomentSequence;
    out.reason = "pr > 0 with c + d and h + l of the same sign";
    out.support = SupportKind::PossiblyInfinite;
    for (unsigned n = 1; n <= beta_scan; ++n)
      if (beta(n).is_zero()) {
        out.support = SupportKind::FiniteAtoms;
        out.atoms_from = n;
        break;
      }
    const Rational cd = std::max(c.abs(), d.abs()), hl = std::max(h.abs(), l.abs());
    out.uniqueness = (cd * hl <= Rational(1) || out.support == SupportKind::FiniteAtoms) ? Uniqueness::Unique
                                                                                         : Uniqueness::Unknown;
    return out;
  }
  for (unsigned n = 1; n <= beta_scan; ++n)
    if (beta(n).sign() < 0) {
      out.verdict = Verdict::NotMomentSequence;
      out.negative_beta = n;
      out.reason = "beta_" + std::to_string(n) + " = " + beta(n).str() + " < 0";
      return out;
    }
  out.verdict = Verdict::Undetermined;
  out.support = SupportKind::PossiblyInfinite;
  out.reason = "outside the sufficient conditions; beta_1..beta_" + std::to_string(beta_scan) + " are nonnegative";
  return out;
}

namespace {

OrthoPoly shift_sub(const OrthoPoly& pn, const MultiPoly& alpha, const MultiPoly& beta, const OrthoPoly& pm) {
  // (X - alpha) pn - beta pm
  OrthoPoly out(pn.size() + 1);
  for (std::size_t k = 0; k < pn.size(); ++k) {
    out[k + 1] += pn[k];
    out[k] -= alpha * pn[k];
  }
  for (std::size_t k = 0; k < pm.size(); ++k) out[k] -= beta * pm[k];
  return out;
}

MultiPoly functional(const OrthoPoly& p, const std::vector<MultiPoly>& m) {
  MultiPoly acc;
  for (std::size_t k = 0; k < p.size(); ++k)
    if (!p[k].is_zero()) acc += p[k] * m.at(k);
  return acc;
}

OrthoPoly poly_mul(const OrthoPoly& a, const OrthoPoly& b) {
  OrthoPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

}  // namespace

std::vector<OrthoPoly> orthogonal_polys(const ParamAssignment& params, unsigned N) {
  const JacobiCoefficients J(params);
  std::vector<OrthoPoly> P{OrthoPoly{MultiPoly(1)}};
  if (N >= 1) P.push_back(shift_sub(P[0], J.alpha(0), MultiPoly(), OrthoPoly{}));
  for (unsigned n = 1; n < N; ++n) P.push_back(shift_sub(P[n], J.alpha(n), J.beta(n), P[n - 1]));
  return P;
}

std::string ortho_str(const OrthoPoly& p) {
  std::string out;
  for (std::size_t k = p.size(); k-- > 0;) {
    if (p[k].is_zero()) continue;
    std::string coeff = p[k].str();
    const bool compound = p[k].size() > 1;
    const bool negative = !compound && coeff[0] == '-';
    if (negative) coeff.erase(0, 1);
    if (compound) coeff = "(" + coeff + ")";
    std::string body;
    const std::string xpow = k == 0 ? "" : (k == 1 ? "X" : "X^" + std::to_string(k));
    if (k == 0) {
      body = coeff;
    } else if (coeff == "1") {
      body = xpow;
    } else {
      body = coeff + "*" + xpow;
    }
    if (out.empty()) {
      out = (negative ? "-" : "") + body;
    } else {
      out += (negative ? " - " : " + ") + body;
    }
  }
  return out.empty() ? "0" : out;
}

CheckReport check_orthogonality(const ParamAssignment& params, unsigned N, const ExpansionBounds& bounds) {
  CheckReport report{"orthogonality", {}};
  const auto P = orthogonal_polys(params, N);
  const auto m = moments(params, 2 * N, bounds);
  const JacobiCoefficients J(params);
  MultiPoly norm(1);
  for (unsigned i = 0; i <= N; ++i) {
    if (i >= 1) norm *= J.beta(i);
    for (unsigned j = 0; j < i; ++j) {
      const MultiPoly v = functional(poly_mul(P[i], P[j]), m);
      report.add("L(P" + std::to_string(i) + "*P" + std::to_string(j) + ") = 0", v.is_zero(),
                 v.is_zero() ? "" : "got " + v.str());
    }
    const MultiPoly sq = functional(poly_mul(P[i], P[i]), m);
    report.add("L(P" + std::to_string(i) + "^2) = beta_1..beta_" + std::to_string(i), sq == norm,
               sq == norm ? sq.str() : "got " + sq.str() + ", expected " + norm.str());
  }
  return report;
}

MultiPoly exp_poly(unsigned n) {
  // Stirling numbers of the second kind, row by row
  std::vector<BigInt> S{1};
  for (unsigned r = 1; r <= n; ++r) {
    std::vector<BigInt> next(r + 1, 0);
    for (unsigned k = 1; k <= r; ++k) {
      next[k] = (k < S.size() ? S[k] * k : BigInt(0)) + S[k - 1];
    }
    S = std::move(next);
  }
  const std::size_t x = require_variable("x");
  std::vector<MultiPoly::Term> terms;
  for (unsigned k = 0; k < S.size(); ++k)
    if (S[k] != 0) terms.emplace_back(Monomial::variable(x, k), Rational(S[k]));
  return MultiPoly::from_terms(std::move(terms));
}

MultiPoly radoux_det(unsigned n) {
  std::vector<MultiPoly> e;
  for (unsigned k = 0; k <= 2 * n; ++k) e.push_back(exp_poly(k));
  return hankel_det(e, n);
}

MultiPoly radoux_closed_form(unsigned n) {
  BigInt prod = 1;
  for (unsigned k = 1; k <= n; ++k) prod *= factorial(k);
  return MultiPoly::term(Monomial::variable(require_variable("x"), n * (n + 1) / 2), Rational(prod));
}

}  // namespace permcf
