#include "permcf/series.hpp"

#include <algorithm>

namespace permcf {

TruncatedSeries::TruncatedSeries(std::vector<MultiPoly> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.emplace_back();
}

TruncatedSeries TruncatedSeries::truncated(unsigned order) const {
  TruncatedSeries out(order);
  for (unsigned n = 0; n <= std::min(order, this->order()); ++n) out[n] = coeffs_[n];
  return out;
}

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
  const unsigned N = std::min(a.order(), b.order());
  TruncatedSeries out(N);
  for (unsigned n = 0; n <= N; ++n) out[n] = a[n] + b[n];
  return out;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  const unsigned N = std::min(a.order(), b.order());
  TruncatedSeries out(N);
  for (unsigned i = 0; i <= N; ++i) {
    if (a[i].is_zero()) continue;
    for (unsigned j = 0; i + j <= N; ++j)
      if (!b[j].is_zero()) out[i + j] += a[i] * b[j];
  }
  return out;
}

TruncatedSeries series_reciprocal(const TruncatedSeries& s) {
  auto c0 = s[0].constant_value();
  if (!c0 || c0->is_zero()) throw PolyError("series reciprocal needs an invertible constant term");
  const Rational inv = c0->inverse();
  const unsigned N = s.order();
  TruncatedSeries r(N);
  r[0] = MultiPoly(inv);
  for (unsigned n = 1; n <= N; ++n) {
    MultiPoly acc;
    for (unsigned k = 1; k <= n; ++k)
      if (!s[k].is_zero()) acc += s[k] * r[n - k];
    r[n] = -(acc * inv);
  }
  return r;
}

TruncatedSeries series_rescale(const TruncatedSeries& s, const MultiPoly& m) {
  TruncatedSeries out(s.order());
  MultiPoly power(1);
  for (unsigned n = 0; n <= s.order(); ++n) {
    out[n] = s[n] * power;
    power *= m;
  }
  return out;
}

}  // namespace permcf
