#include "ztau/ring.hpp"

#include <cctype>
#include <cmath>
#include <optional>
#include <ostream>

#include "ztau/errors.hpp"

namespace ztau {

RingElement& RingElement::operator+=(const RingElement& rhs) {
  m_ += rhs.m_;
  n_ += rhs.n_;
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& rhs) {
  m_ -= rhs.m_;
  n_ -= rhs.n_;
  return *this;
}

// (a + b t)(c + d t) = (ac + bd) + (ad + bc + bd) t
RingElement& RingElement::operator*=(const RingElement& rhs) {
  Integer bd = n_ * rhs.n_;
  Integer m = m_ * rhs.m_ + bd;
  Integer n = m_ * rhs.n_ + n_ * rhs.m_ + bd;
  m_ = std::move(m);
  n_ = std::move(n);
  return *this;
}

RingElement operator-(const RingElement& a) { return {Integer(-a.m_), Integer(-a.n_)}; }

RingElement pow(const RingElement& base, unsigned long exponent) {
  RingElement result = RingElement::one();
  RingElement b = base;
  while (exponent != 0) {
    if (exponent & 1UL) result *= b;
    exponent >>= 1;
    if (exponent != 0) b *= b;
  }
  return result;
}

RingElement conj(const RingElement& x) { return {Integer(x.m() + x.n()), Integer(-x.n())}; }

Integer norm(const RingElement& x) { return x.m() * x.m() + x.m() * x.n() - x.n() * x.n(); }

int surd_sign(const HalfSurd& s) {
  const int su = sgn(s.u);
  const int sv = sgn(s.v);
  if (sv == 0) return su;
  if (su == 0 || su == sv) return sv;
  // Opposite signs: the term with the larger square wins; u^2 = 5 v^2 has
  // no nonzero solutions.
  return cmp(Integer(s.u * s.u), Integer(5 * s.v * s.v)) > 0 ? su : sv;
}

HalfSurd embed(const RingElement& x) { return {Integer(2 * x.m() + x.n()), x.n()}; }

HalfSurd embed_conj(const RingElement& x) { return {Integer(2 * x.m() + x.n()), Integer(-x.n())}; }

int compare_real(const RingElement& a, const RingElement& b) { return surd_sign(embed(a - b)); }

namespace {

const double kSqrt5 = std::sqrt(5.0);

// log|z| for z != 0 without overflowing double.
double log_abs_integer(const Integer& z) {
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, z.get_mpz_t());
  return std::log(std::fabs(mant)) + static_cast<double>(exp) * std::log(2.0);
}

// log(|u| + |v| sqrt5) for (u, v) != (0, 0).
double log_abs_sum(const Integer& u, const Integer& v) {
  if (sgn(v) == 0) return log_abs_integer(u);
  const double lv = log_abs_integer(v) + 0.5 * std::log(5.0);
  if (sgn(u) == 0) return lv;
  const double lu = log_abs_integer(u);
  const double hi = std::max(lu, lv);
  const double lo = std::min(lu, lv);
  return hi + std::log1p(std::exp(lo - hi));
}

}  // namespace

double to_double(const HalfSurd& s) { return (s.u.get_d() + s.v.get_d() * kSqrt5) / 2.0; }

double log_abs(const HalfSurd& s) {
  if (surd_sign(s) == 0) throw DomainError("log_abs of zero");
  const int su = sgn(s.u);
  const int sv = sgn(s.v);
  if (su == 0 || sv == 0 || su == sv) return log_abs_sum(s.u, s.v) - std::log(2.0);
  // u + v sqrt5 = (u^2 - 5 v^2) / (u - v sqrt5), and u - v sqrt5 does not cancel.
  const Integer num = s.u * s.u - 5 * s.v * s.v;
  return log_abs_integer(num) - log_abs_sum(s.u, s.v) - std::log(2.0);
}

RingElement tau_power(long k) {
  if (k >= 0) return pow(RingElement::tau(), static_cast<unsigned long>(k));
  // t^-1 = t - 1
  return pow(RingElement(-1, 1), static_cast<unsigned long>(-(k + 1)) + 1UL);
}

RingElement Unit::value() const {
  RingElement v = tau_power(exponent);
  return sign < 0 ? -v : v;
}

bool is_unit(const RingElement& x) {
  const Integer n = norm(x);
  return n == 1 || n == -1;
}

namespace {

class ElementParser {
 public:
  explicit ElementParser(std::string_view text) : text_(text) {}

  RingElement parse() {
    skip_spaces();
    if (at_end()) fail("empty element");

    int sign = 1;
    if (peek() == '+' || peek() == '-') {
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
      skip_spaces();
    }
    add_term(sign);

    skip_spaces();
    if (!at_end()) {
      if (peek() != '+' && peek() != '-') fail("expected '+' or '-'");
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
      skip_spaces();
      add_term(sign);
      skip_spaces();
      if (!at_end()) fail("unexpected trailing input");
    }
    return {constant_.value_or(0), tau_coeff_.value_or(0)};
  }

 private:
  void add_term(int sign) {
    const std::size_t start = pos_;
    std::optional<Integer> coeff;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) coeff = digits();
    skip_spaces();

    bool star = false;
    if (!at_end() && peek() == '*') {
      if (!coeff) fail("'*' without coefficient");
      star = true;
      ++pos_;
      skip_spaces();
    }

    if (symbol()) {
      Integer c = coeff.value_or(1);
      if (sign < 0) c = -c;
      if (tau_coeff_) fail("duplicate t term", start);
      tau_coeff_ = std::move(c);
      return;
    }
    if (star) fail("expected 't' or 'tau' after '*'");
    if (!coeff) fail("expected integer or 't'");
    if (constant_) fail("duplicate constant term", start);
    constant_ = sign < 0 ? Integer(-*coeff) : *coeff;
  }

  Integer digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  bool symbol() {
    if (text_.substr(pos_, 3) == "tau") {
      pos_ += 3;
      return true;
    }
    if (!at_end() && peek() == 't') {
      ++pos_;
      return true;
    }
    return false;
  }

  void skip_spaces() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string& what) const { fail(what, pos_); }
  [[noreturn]] void fail(const std::string& what, std::size_t at) const {
    throw ParseError("cannot parse element '" + std::string(text_) + "': " + what, at);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::optional<Integer> constant_;
  std::optional<Integer> tau_coeff_;
};

}  // namespace

RingElement parse_element(std::string_view text) { return ElementParser(text).parse(); }

std::string format_element(const RingElement& x) {
  const bool has_m = sgn(x.m()) != 0;
  const bool has_n = sgn(x.n()) != 0;
  if (!has_m && !has_n) return "0";
  std::string out;
  if (has_m) out = x.m().get_str();
  if (has_n) {
    if (has_m && sgn(x.n()) > 0) out += '+';
    out += x.n().get_str();
    out += "*t";
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const RingElement& x) { return os << format_element(x); }

}  // namespace ztau
