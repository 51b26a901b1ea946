#include "permcf/matrix.hpp"

#include <bit>
#include <unordered_map>

namespace permcf {

namespace {

template <typename M>
void require_square(const M& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
}

}  // namespace

Rational det_bareiss(Matrix<Rational> m) {
  require_square(m);
  const std::size_t n = m.rows();
  if (n == 0) return Rational(1);
  Rational prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m(r, k).is_zero()) ++r;
      if (r == n) return Rational(0);
      m.swap_rows(k, r);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign > 0 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
}

MultiPoly det_bareiss(Matrix<MultiPoly> m) {
  require_square(m);
  const std::size_t n = m.rows();
  if (n == 0) return MultiPoly(1);
  MultiPoly prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m(r, k).is_zero()) ++r;
      if (r == n) return MultiPoly();
      m.swap_rows(k, r);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = divide_exact(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
    prev = m(k, k);
  }
  return sign > 0 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
}

MultiPoly det_cofactor(const Matrix<MultiPoly>& m) {
  require_square(m);
  const std::size_t n = m.rows();
  if (n == 0) return MultiPoly(1);
  if (n > 20) throw std::invalid_argument("cofactor expansion is limited to small matrices");
  // minor[S] = determinant of the last |S| rows restricted to the columns in S
  std::unordered_map<unsigned, MultiPoly> minor;
  minor[0] = MultiPoly(1);
  for (std::size_t size = 1; size <= n; ++size) {
    const std::size_t row = n - size;
    std::unordered_map<unsigned, MultiPoly> next;
    for (const auto& [cols, sub] : minor) {
      if (sub.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const unsigned bit = 1u << j;
        if (cols & bit || m(row, j).is_zero()) continue;
        // sign from the number of chosen columns left of j
        const int before = std::popcount(cols & (bit - 1));
        MultiPoly term = m(row, j) * sub;
        if (before % 2) {
          next[cols | bit] -= term;
        } else {
          next[cols | bit] += term;
        }
      }
    }
    minor = std::move(next);
  }
  const unsigned all = (n == 32) ? ~0u : ((1u << n) - 1);
  auto it = minor.find(all);
  return it == minor.end() ? MultiPoly() : it->second;
}

MultiPoly determinant(const Matrix<MultiPoly>& m) {
  require_square(m);
  bool numeric = true;
  for (std::size_t i = 0; i < m.rows() && numeric; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_constant()) {
        numeric = false;
        break;
      }
  if (numeric) {
    Matrix<Rational> r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = *m(i, j).constant_value();
    return MultiPoly(det_bareiss(std::move(r)));
  }
  return det_bareiss(m);
}

}  // namespace permcf
