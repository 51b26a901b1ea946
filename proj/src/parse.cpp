#include <cctype>
#include <string>

#include "permcf/poly.hpp"

namespace permcf {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Bindings& bindings) : text_(text), bindings_(bindings) {}

  MultiPoly run() {
    MultiPoly p = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw PolyError("cannot parse '" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MultiPoly expr() {
    MultiPoly acc = term();
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  MultiPoly term() {
    MultiPoly acc = unary();
    for (;;) {
      if (accept('*')) {
        acc *= unary();
      } else if (accept('/')) {
        const MultiPoly d = unary();
        auto c = d.constant_value();
        if (!c) fail("division by a non-constant");
        if (c->is_zero()) fail("division by zero");
        acc *= c->inverse();
      } else {
        return acc;
      }
    }
  }

  MultiPoly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  MultiPoly power() {
    MultiPoly base = atom();
    if (!accept('^')) return base;
    const MultiPoly e = unary();
    auto ev = e.constant_value();
    if (!ev) fail("exponent must be a constant");
    if (ev->is_integer() && ev->sign() >= 0) {
      if (ev->numerator() > 4096) fail("exponent too large");
      return base.pow(static_cast<unsigned>(ev->numerator().get_ui()));
    }
    auto bv = base.constant_value();
    if (!bv) fail("negative or fractional exponent on a non-constant");
    return MultiPoly(constant_power(*bv, *ev));
  }

  Rational constant_power(const Rational& base, const Rational& e) {
    if (base.is_zero() && e.sign() < 0) fail("zero to a negative power");
    const BigInt num = e.numerator();
    const BigInt den = e.denominator();
    if (!num.fits_slong_p() || !den.fits_ulong_p() || abs(num) > 4096 || den > 64) fail("exponent too large");
    Rational raised = base.pow(num.get_si());
    if (den == 1) return raised;
    Rational root;
    if (!exact_root(raised, den.get_ui(), root)) fail("irrational power " + base.str() + "^(" + e.str() + ")");
    return root;
  }

  MultiPoly atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(' || c == '{') {
      ++pos_;
      MultiPoly inner = expr();
      if (!accept(c == '(' ? ')' : '}')) fail("unbalanced bracket");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      const std::string_view name = text_.substr(start, pos_ - start);
      if (name == "sqrt") {
        if (!accept('(')) fail("sqrt needs parentheses");
        MultiPoly inner = expr();
        if (!accept(')')) fail("unbalanced bracket");
        auto v = inner.constant_value();
        if (!v) fail("sqrt of a non-constant");
        return MultiPoly(constant_power(*v, Rational(1, 2)));
      }
      if (auto it = bindings_.find(name); it != bindings_.end()) return MultiPoly(it->second);
      if (auto idx = variable_index(name)) return MultiPoly::variable(*idx);
      pos_ = start;
      fail("unknown identifier '" + std::string(name) + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  MultiPoly number() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string digits(text_.substr(start, pos_ - start));
    BigInt den = 1;
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      const std::size_t frac = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      digits += std::string(text_.substr(frac, pos_ - frac));
      for (std::size_t i = frac; i < pos_; ++i) den *= 10;
    }
    if (digits.empty()) fail("malformed number");
    return MultiPoly(Rational(BigInt(digits, 10), den));
  }

  std::string_view text_;
  const Bindings& bindings_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(std::string_view text, const Bindings& bindings) { return Parser(text, bindings).run(); }

}  // namespace permcf
