#pragma once

// Power series in the formal variable z, truncated after z^N, with
// polynomial coefficients.

#include <vector>

#include "permcf/poly.hpp"

namespace permcf {

class TruncatedSeries {
 public:
  /// The zero series of the given order (N+1 coefficients).
  explicit TruncatedSeries(unsigned order = 0) : coeffs_(order + 1) {}
  TruncatedSeries(std::vector<MultiPoly> coeffs);  // NOLINT(google-explicit-constructor)

  unsigned order() const { return static_cast<unsigned>(coeffs_.size() - 1); }
  const MultiPoly& operator[](unsigned n) const { return coeffs_.at(n); }
  MultiPoly& operator[](unsigned n) { return coeffs_.at(n); }
  const std::vector<MultiPoly>& coefficients() const { return coeffs_; }

  /// Same coefficients cut (or zero-padded) to a new order.
  TruncatedSeries truncated(unsigned order) const;

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<MultiPoly> coeffs_;
};

/// Sum; the result has the smaller of the two orders.
TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);
/// Cauchy product truncated at the smaller of the two orders.
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);
/// 1/s; throws PolyError unless the constant term is a nonzero constant.
TruncatedSeries series_reciprocal(const TruncatedSeries& s);
/// z -> z*m: coefficient n is multiplied by m^n.
TruncatedSeries series_rescale(const TruncatedSeries& s, const MultiPoly& m);

}  // namespace permcf
