#include "permcf/poly.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace permcf {

namespace {

constexpr std::array<std::string_view, 18> kBaseNames = {
    "a", "b", "c", "d", "f", "g", "h", "l", "p", "r", "s", "t", "u", "w", "x", "q", "y", "lambda"};

const std::array<std::string, kMaxVars>& variable_names() {
  static const std::array<std::string, kMaxVars> names = [] {
    std::array<std::string, kMaxVars> out;
    for (std::size_t i = 0; i < kBaseNames.size(); ++i) out[i] = std::string(kBaseNames[i]);
    for (int k = 1; k <= kMaxColorWeights; ++k) out[kBaseNames.size() + k - 1] = "u" + std::to_string(k);
    return out;
  }();
  return names;
}

bool descending(const MultiPoly::Term& x, const MultiPoly::Term& y) { return x.first > y.first; }

// Merges two descending term lists; sign = +1 or -1 applied to the second.
std::vector<MultiPoly::Term> merge_terms(std::span<const MultiPoly::Term> a,
                                         std::span<const MultiPoly::Term> b, int sign) {
  std::vector<MultiPoly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first > b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first > a[i].first) {
      out.emplace_back(b[j].first, sign > 0 ? b[j].second : -b[j].second);
      ++j;
    } else {
      Rational c = sign > 0 ? a[i].second + b[j].second : a[i].second - b[j].second;
      if (!c.is_zero()) out.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

std::optional<std::size_t> variable_index(std::string_view name) {
  const auto& names = variable_names();
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return i;
  return std::nullopt;
}

std::string_view variable_name(std::size_t index) { return variable_names().at(index); }

std::size_t require_variable(std::string_view name) {
  if (auto idx = variable_index(name)) return *idx;
  throw PolyError("unknown variable '" + std::string(name) + "'");
}

std::size_t color_weight_index(int i) {
  if (i < 1 || i > kMaxColorWeights)
    throw PolyError("colour weight u" + std::to_string(i) + " outside u1..u" + std::to_string(kMaxColorWeights));
  return kBaseNames.size() + static_cast<std::size_t>(i) - 1;
}

// ---------------------------------------------------------------- Monomial

Monomial Monomial::variable(std::size_t index, unsigned exponent) {
  if (index >= kMaxVars) throw PolyError("variable index out of range");
  Monomial m;
  m.exps_[index] = static_cast<Exponent>(exponent);
  m.degree_ = exponent;
  return m;
}

std::vector<std::pair<std::size_t, unsigned>> Monomial::factors() const {
  std::vector<std::pair<std::size_t, unsigned>> out;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (exps_[i] != 0) out.emplace_back(i, exps_[i]);
  return out;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    const unsigned e = static_cast<unsigned>(exps_[i]) + other.exps_[i];
    if (e > 0xFFFFu) throw PolyError("exponent overflow");
    m.exps_[i] = static_cast<Exponent>(e);
  }
  m.degree_ = degree_ + other.degree_;
  return m;
}

Monomial Monomial::operator/(const Monomial& other) const {
  if (!other.divides(*this)) throw PolyError("monomial does not divide");
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i) m.exps_[i] = static_cast<Exponent>(exps_[i] - other.exps_[i]);
  m.degree_ = degree_ - other.degree_;
  return m;
}

std::string Monomial::str() const {
  std::string out;
  for (const auto& [idx, e] : factors()) {
    if (!out.empty()) out += '*';
    out += variable_name(idx);
    if (e != 1) out += '^' + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

std::size_t Monomial::hash() const {
  std::uint64_t h = 1469598103934665603ull;
  for (auto e : exps_) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

std::strong_ordering operator<=>(const Monomial& x, const Monomial& y) {
  if (x.degree_ != y.degree_) return x.degree_ <=> y.degree_;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (x.exps_[i] != y.exps_[i]) return x.exps_[i] <=> y.exps_[i];
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------- MultiPoly

MultiPoly::MultiPoly(const Rational& c) {
  if (!c.is_zero()) terms_.emplace_back(Monomial{}, c);
}

MultiPoly MultiPoly::variable(std::string_view name) { return variable(require_variable(name)); }

MultiPoly MultiPoly::variable(std::size_t index) { return term(Monomial::variable(index)); }

MultiPoly MultiPoly::term(const Monomial& m, const Rational& c) {
  MultiPoly p;
  if (!c.is_zero()) p.terms_.emplace_back(m, c);
  return p;
}

MultiPoly MultiPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), descending);
  MultiPoly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
    } else {
      if (!p.terms_.empty() && p.terms_.back().second.is_zero()) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().second.is_zero()) p.terms_.pop_back();
  return p;
}

MultiPoly MultiPoly::parse(std::string_view text) { return parse_poly(text); }

bool MultiPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }

std::optional<Rational> MultiPoly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (is_constant()) return terms_[0].second;
  return std::nullopt;
}

Rational MultiPoly::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return t.first > key; });
  if (it != terms_.end() && it->first == m) return it->second;
  return Rational(0);
}

unsigned MultiPoly::total_degree() const { return terms_.empty() ? 0 : terms_.front().first.degree(); }

unsigned MultiPoly::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.first.exponent(var));
  return d;
}

MultiPoly MultiPoly::pow(unsigned exponent) const {
  MultiPoly result(1);
  MultiPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1u;
    if (exponent > 0) base *= base;
  }
  return result;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const Rational mag = c.abs();
    std::string body;
    if (m.is_one()) {
      body = mag.str();
    } else if (mag.is_one()) {
      body = m.str();
    } else {
      body = mag.str() + "*" + m.str();
    }
    if (first) {
      out += (c.sign() < 0 ? "-" : "") + body;
      first = false;
    } else {
      out += (c.sign() < 0 ? " - " : " + ") + body;
    }
  }
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  terms_ = merge_terms(terms_, o.terms_, +1);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  terms_ = merge_terms(terms_, o.terms_, -1);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
  } else if (!c.is_one()) {
    for (auto& t : terms_) t.second *= c;
  }
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  *this = *this * o;
  return *this;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r;
  r.terms_ = merge_terms(a.terms_, b.terms_, +1);
  return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r;
  r.terms_ = merge_terms(a.terms_, b.terms_, -1);
  return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  // A single term multiplies through without reordering (graded lex is a monomial order).
  if (a.size() == 1 || b.size() == 1) {
    const auto& single = a.size() == 1 ? a.terms_[0] : b.terms_[0];
    const auto& other = a.size() == 1 ? b : a;
    r.terms_.reserve(other.size());
    for (const auto& [m, c] : other.terms_) r.terms_.emplace_back(m * single.first, c * single.second);
    return r;
  }
  auto integral = [](const MultiPoly& p) {
    return std::all_of(p.terms_.begin(), p.terms_.end(), [](const MultiPoly::Term& t) { return t.second.is_integer(); });
  };
  if (integral(a) && integral(b)) {
    // integer coefficients accumulate with mpz_addmul, much cheaper than rationals
    std::unordered_map<Monomial, BigInt, MonomialHash> acc;
    acc.reserve(a.size() * b.size());
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        BigInt& slot = acc[ma * mb];
        mpz_addmul(slot.get_mpz_t(), ca.value().get_num_mpz_t(), cb.value().get_num_mpz_t());
      }
    r.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
      if (c != 0) r.terms_.emplace_back(m, Rational(c));
  } else {
    std::unordered_map<Monomial, Rational, MonomialHash> acc;
    acc.reserve(a.size() * b.size());
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) acc[ma * mb] += ca * cb;
    r.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
      if (!c.is_zero()) r.terms_.emplace_back(m, std::move(c));
  }
  std::sort(r.terms_.begin(), r.terms_.end(), descending);
  return r;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.str(); }

// ---------------------------------------------------------------- free functions

Rational evaluate(const MultiPoly& p, const std::map<std::string, Rational, std::less<>>& values) {
  std::array<const Rational*, kMaxVars> bound{};
  Rational total(0);
  for (const auto& [m, c] : p.terms()) {
    Rational term = c;
    for (const auto& [idx, e] : m.factors()) {
      if (bound[idx] == nullptr) {
        auto it = values.find(variable_name(idx));
        if (it == values.end())
          throw PolyError("no value for variable '" + std::string(variable_name(idx)) + "'");
        bound[idx] = &it->second;
      }
      term *= bound[idx]->pow(static_cast<long>(e));
    }
    total += term;
  }
  return total;
}

MultiPoly substitute(const MultiPoly& p, const std::map<std::string, MultiPoly, std::less<>>& values) {
  std::array<const MultiPoly*, kMaxVars> repl{};
  for (const auto& [name, value] : values) repl[require_variable(name)] = &value;
  std::map<std::pair<std::size_t, unsigned>, MultiPoly> powers;
  auto power = [&](std::size_t idx, unsigned e) -> const MultiPoly& {
    auto key = std::make_pair(idx, e);
    auto it = powers.find(key);
    if (it == powers.end()) it = powers.emplace(key, repl[idx]->pow(e)).first;
    return it->second;
  };
  MultiPoly out;
  std::vector<MultiPoly::Term> direct;
  for (const auto& [m, c] : p.terms()) {
    Monomial kept;
    MultiPoly factor(c);
    bool touched = false;
    for (const auto& [idx, e] : m.factors()) {
      if (repl[idx] != nullptr) {
        factor *= power(idx, e);
        touched = true;
      } else {
        kept = kept * Monomial::variable(idx, e);
      }
    }
    if (!touched) {
      direct.emplace_back(m, c);
    } else {
      out += factor * MultiPoly::term(kept);
    }
  }
  return out + MultiPoly::from_terms(std::move(direct));
}

MultiPoly divide_exact(const MultiPoly& num, const MultiPoly& den) {
  if (den.is_zero()) throw PolyError("division by the zero polynomial");
  if (auto c = den.constant_value()) return num * c->inverse();
  std::map<Monomial, Rational, std::greater<>> rem;
  for (const auto& [m, c] : num.terms()) rem.emplace(m, c);
  const auto& [lead_m, lead_c] = den.leading_term();
  const Rational lead_inv = lead_c.inverse();
  std::vector<MultiPoly::Term> quotient;
  while (!rem.empty()) {
    auto top = rem.begin();
    if (!lead_m.divides(top->first)) throw PolyError("polynomial division is not exact");
    const Monomial qm = top->first / lead_m;
    const Rational qc = top->second * lead_inv;
    for (const auto& [m, c] : den.terms()) {
      auto [it, inserted] = rem.try_emplace(m * qm, Rational(0));
      it->second -= c * qc;
      if (it->second.is_zero()) rem.erase(it);
    }
    quotient.emplace_back(qm, qc);
  }
  return MultiPoly::from_terms(std::move(quotient));
}

}  // namespace permcf
