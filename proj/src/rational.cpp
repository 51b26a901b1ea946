#include "permcf/rational.hpp"

#include <cctype>
#include <functional>
#include <stdexcept>

namespace permcf {

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto is_int = [](std::string_view s) {
    std::size_t i = 0;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  auto to_mpz = [](std::string_view s) {
    if (!s.empty() && s[0] == '+') s.remove_prefix(1);
    return BigInt(std::string(s), 10);
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_int(text)) throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
    return Rational(to_mpz(text));
  }
  const auto num = text.substr(0, slash);
  const auto den = text.substr(slash + 1);
  if (!is_int(num) || !is_int(den) || den[0] == '-' || den[0] == '+')
    throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
  const BigInt d = to_mpz(den);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rational(to_mpz(num), d);
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  mpq_class r;
  mpq_inv(r.get_mpq_t(), q_.get_mpq_t());
  return Rational(std::move(r));
}

Rational Rational::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(n, d);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  q_ /= o.q_;
  return *this;
}

std::size_t Rational::hash() const {
  const std::size_t h1 = mpz_get_ui(q_.get_num_mpz_t()) ^ (mpz_size(q_.get_num_mpz_t()) << 1);
  const std::size_t h2 = mpz_get_ui(q_.get_den_mpz_t());
  return std::hash<std::size_t>{}(h1 * 1000003u + h2) ^ static_cast<std::size_t>(sign() + 1);
}

bool exact_root(const Rational& value, unsigned long degree, Rational& root) {
  if (degree == 0) return false;
  if (value.sign() < 0) {
    if (degree % 2 == 0) return false;
    Rational r;
    if (!exact_root(-value, degree, r)) return false;
    root = -r;
    return true;
  }
  BigInt n, d;
  const bool n_ok = mpz_root(n.get_mpz_t(), value.value().get_num_mpz_t(), degree) != 0;
  const bool d_ok = mpz_root(d.get_mpz_t(), value.value().get_den_mpz_t(), degree) != 0;
  if (!n_ok || !d_ok) return false;
  root = Rational(n, d);
  return true;
}

BigInt factorial(unsigned n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace permcf
