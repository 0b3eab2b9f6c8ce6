#ifndef NEGBETA_RATIONAL_HPP
#define NEGBETA_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace negbeta {

using Integer = mpz_class;
using Rational = mpq_class;

// Parses a plain or decimal literal ("-1.3", "2", "-13/10") into an exact
// rational. Decimal strings are exact: "-1.3" becomes -13/10.
Rational parse_rational(const std::string& text);

// Fixed-precision decimal rendering, round-to-nearest. Used for reports;
// exact values travel as numerator/denominator strings.
std::string to_decimal_string(const Rational& q, int digits);

Integer floor_rational(const Rational& q);

// Closed interval with exact rational endpoints. The empty state is not
// representable; constructors require lo <= hi.
class Interval {
 public:
  Interval() : lo_(0), hi_(0) {}
  Interval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (lo_ > hi_) throw std::invalid_argument("Interval: lo > hi");
  }
  static Interval point(const Rational& v) { return Interval(v, v); }

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  Rational width() const { return hi_ - lo_; }
  Rational mid() const { return (lo_ + hi_) / 2; }
  bool contains(const Rational& v) const { return lo_ <= v && v <= hi_; }
  bool is_point() const { return lo_ == hi_; }

  Interval operator+(const Interval& o) const { return {lo_ + o.lo_, hi_ + o.hi_}; }
  Interval operator-(const Interval& o) const { return {lo_ - o.hi_, hi_ - o.lo_}; }
  Interval operator*(const Interval& o) const;
  Interval operator+(const Rational& v) const { return {lo_ + v, hi_ + v}; }
  Interval operator*(const Rational& v) const;

  // Reciprocal; throws if the interval straddles zero.
  Interval inverse() const;

  // Sign if determined (-1, 0 only for the exact point 0, +1), nullopt if
  // the interval straddles zero.
  std::optional<int> sign() const;

  std::string str(int digits = 12) const;

 private:
  Rational lo_, hi_;
};

}  // namespace negbeta

#endif
