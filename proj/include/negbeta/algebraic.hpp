#ifndef NEGBETA_ALGEBRAIC_HPP
#define NEGBETA_ALGEBRAIC_HPP

#include <memory>
#include <optional>
#include <vector>

#include "negbeta/polynomial.hpp"
#include "negbeta/rational.hpp"

namespace negbeta {

struct NoRootInInterval : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A real algebraic number: an integer polynomial together with an isolating
// interval containing exactly one of its real roots. Rational numbers carry a
// degenerate point interval. Refinement is by sign bisection on the
// squarefree part and halves the width each step.
class AlgebraicReal {
 public:
  // Exact rational value.
  static AlgebraicReal rational(const Rational& v);

  const Polynomial& defining() const { return defining_; }
  bool is_rational() const { return interval_.is_point(); }
  const Rational& rational_value() const { return interval_.lo(); }
  bool multiple_roots_in_hint() const { return multiplicity_warning_; }

  // Current enclosure (never widens).
  Interval interval() const { return interval_; }
  // Shrink the enclosure to at most `width` and return it.
  Interval refine(const Rational& width) const;
  void refine_steps(int steps) const;

  int sign() const;
  // Sign of (value - q); 0 means exact equality.
  int compare(const Rational& q) const;
  double to_double() const;

  friend AlgebraicReal isolate_root(const Polynomial& p, const Rational& hint_lo,
                                    const Rational& hint_hi);

 private:
  AlgebraicReal() = default;
  void bisect_once() const;

  Polynomial defining_;    // as given (not necessarily minimal)
  Polynomial squarefree_;  // used for sign tests
  mutable Interval interval_;
  mutable int sign_lo_ = 0;  // sign of squarefree_ at interval lo
  bool multiplicity_warning_ = false;
};

// Isolates one real root of p inside the open hint interval. If several roots
// lie in the hint, the smallest is chosen and a warning flag is set on the
// result. Throws NoRootInInterval when there is none.
AlgebraicReal isolate_root(const Polynomial& p, const Rational& hint_lo,
                           const Rational& hint_hi);

class FieldElement;

// The ring Q[X]/(defining) together with the chosen real embedding. The
// defining polynomial need not be minimal nor squarefree; a non-squarefree
// defining polynomial is flagged, and inversion reports zero divisors.
class NumberField : public std::enable_shared_from_this<NumberField> {
 public:
  static std::shared_ptr<const NumberField> make(const AlgebraicReal& generator);

  int degree() const { return degree_; }
  const AlgebraicReal& generator() const { return generator_; }
  bool squarefree_warning() const { return squarefree_warning_; }

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_rational(const Rational& q) const;
  FieldElement generator_element() const;  // the class of X

 private:
  friend class FieldElement;
  NumberField() = default;

  AlgebraicReal generator_;
  int degree_ = 1;
  std::vector<Rational> monic_;  // monic defining: X^d + monic_[d-1] X^{d-1} + ... + monic_[0]
  // coordinates of X^k for k = d .. 2d-2
  std::vector<std::vector<Rational>> xpow_;
  bool squarefree_warning_ = false;
};

// Element of a number field, as exact rational coordinates in the power basis
// 1, X, ..., X^{d-1}. Immutable value type.
class FieldElement {
 public:
  FieldElement() = default;

  const std::vector<Rational>& coords() const { return coords_; }
  const std::shared_ptr<const NumberField>& field() const { return field_; }

  bool is_zero() const;
  bool is_rational() const;
  Rational rational_value() const;  // requires is_rational()

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator+(const Rational& q) const;
  FieldElement operator-(const Rational& q) const;
  FieldElement operator*(const Rational& q) const;
  bool operator==(const FieldElement& o) const { return coords_ == o.coords_; }

  // Multiplicative inverse. Throws std::domain_error on zero or on a zero
  // divisor (possible when the defining polynomial is reducible).
  FieldElement inverse() const;
  FieldElement pow(long e) const;  // e may be negative

  // Enclosure of the real value; refines the generator as needed.
  Interval value_interval(const Rational& width) const;
  int sign() const;  // exact
  Integer floor() const;  // exact, always decidable
  double to_double() const;
  std::string str() const;

 private:
  friend class NumberField;
  FieldElement(std::shared_ptr<const NumberField> f, std::vector<Rational> c)
      : field_(std::move(f)), coords_(std::move(c)) {}

  std::shared_ptr<const NumberField> field_;
  std::vector<Rational> coords_;
};

}  // namespace negbeta

#endif
