#include "negbeta/rational.hpp"

#include <algorithm>
#include <cctype>

namespace negbeta {

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw std::invalid_argument("parse_rational: empty string");

  auto slash = s.find('/');
  if (slash != std::string::npos) {
    Rational q(s);  // gmp handles "p/q"
    q.canonicalize();
    return q;
  }
  auto dot = s.find('.');
  if (dot == std::string::npos) {
    Rational q(s);
    q.canonicalize();
    return q;
  }
  std::string digits = s.substr(0, dot) + s.substr(dot + 1);
  size_t frac_len = s.size() - dot - 1;
  if (digits.empty() || digits == "-" || digits == "+")
    throw std::invalid_argument("parse_rational: malformed decimal '" + text + "'");
  Integer num(digits);
  Integer den = 1;
  for (size_t i = 0; i < frac_len; ++i) den *= 10;
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Integer floor_rational(const Rational& q) {
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return f;
}

std::string to_decimal_string(const Rational& q, int digits) {
  Integer scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  Rational scaled = q * Rational(scale);
  // round half away from zero
  Integer n = scaled.get_num(), d = scaled.get_den();
  Integer twice = 2 * n + (n >= 0 ? d : -d);
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), twice.get_mpz_t(), Integer(2 * d).get_mpz_t());
  bool neg = r < 0;
  Integer a = neg ? Integer(-r) : r;
  std::string body = a.get_str();
  if (static_cast<int>(body.size()) <= digits)
    body.insert(0, std::string(digits + 1 - body.size(), '0'));
  body.insert(body.size() - digits, ".");
  return (neg ? "-" : "") + body;
}

Interval Interval::operator*(const Interval& o) const {
  Rational a = lo_ * o.lo_, b = lo_ * o.hi_, c = hi_ * o.lo_, d = hi_ * o.hi_;
  return {std::min(std::min(a, b), std::min(c, d)),
          std::max(std::max(a, b), std::max(c, d))};
}

Interval Interval::operator*(const Rational& v) const {
  if (v >= 0) return {lo_ * v, hi_ * v};
  return {hi_ * v, lo_ * v};
}

Interval Interval::inverse() const {
  if (lo_ <= 0 && hi_ >= 0)
    throw std::domain_error("Interval::inverse: interval contains zero");
  return {Rational(1) / hi_, Rational(1) / lo_};
}

std::optional<int> Interval::sign() const {
  if (lo_ > 0) return 1;
  if (hi_ < 0) return -1;
  if (lo_ == 0 && hi_ == 0) return 0;
  return std::nullopt;
}

std::string Interval::str(int digits) const {
  return "[" + to_decimal_string(lo_, digits) + ", " + to_decimal_string(hi_, digits) + "]";
}

}  // namespace negbeta
