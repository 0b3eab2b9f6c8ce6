#ifndef NEGBETA_BETA_HPP
#define NEGBETA_BETA_HPP

#include <memory>
#include <optional>

#include "negbeta/algebraic.hpp"
#include "negbeta/words.hpp"

namespace negbeta {

struct BetaOutOfRange : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct OutOfDomain : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The four boundary sequences of a base. `lower_raw` is the expansion of the
// left endpoint; `lower_corrected` applies the odd-period substitution;
// `upper_formal` is the digit-algorithm value at the right endpoint (always
// 0 followed by lower_raw); `upper_limit` applies the parity correction and is
// the true one-sided limit at the right endpoint.
struct BoundarySequences {
  DigitSeq lower_raw;        // d
  DigitSeq lower_corrected;  // d*
  DigitSeq upper_formal;     // r*
  DigitSeq upper_limit;      // r
  bool odd_period = false;
  bool period_found = true;  // false: sequences truncated at the iteration cap
  size_t preperiod_len = 0;
  size_t period_len = 0;
};

struct TStepResult {
  long digit;
  FieldElement next;
};

struct Expansion {
  Word digits;
  size_t integer_digits = 0;  // leading digits before the radix point
};

// A base beta < -1 with exact arithmetic in Q(beta). All operations are pure;
// the object is immutable after construction.
class NegBeta {
 public:
  // Throws BetaOutOfRange unless the value is < -1.
  static NegBeta from_algebraic(const AlgebraicReal& value);
  static NegBeta from_rational(const Rational& value);

  const FieldElement& beta() const { return beta_; }
  const FieldElement& left_endpoint() const { return left_; }
  const FieldElement& right_endpoint() const { return right_; }
  int max_digit() const { return d1_; }
  const std::shared_ptr<const NumberField>& field() const { return field_; }
  Interval beta_interval(const Rational& width) const { return beta_.value_interval(width); }

  bool in_domain(const FieldElement& x) const;

  // One application of the base map; requires x in [l, r).
  TStepResult t_step(const FieldElement& x) const;

  // First `count` digits of the expansion of x, pre-scaling when x lies
  // outside the fundamental domain. x equal to the right endpoint is expanded
  // by its one-sided limit sequence.
  Expansion expand(const FieldElement& x, size_t count, size_t iteration_cap = 4096) const;

  // Exact orbit repetition detection for the left endpoint.
  // Returns (preperiod length, period length) in digit positions.
  std::optional<std::pair<size_t, size_t>> detect_period(size_t cap, Word* digits_out = nullptr) const;

  BoundarySequences boundary_sequences(size_t iteration_cap = 4096) const;

  // Value of a digit word or sequence under sum of digit * beta^{-k}.
  FieldElement eval_digits(const Word& w) const;
  FieldElement eval_digits(const DigitSeq& s) const;  // requires eventually periodic

 private:
  NegBeta() = default;

  std::shared_ptr<const NumberField> field_;
  FieldElement beta_, beta_inv_, left_, right_;
  int d1_ = 0;
};

}  // namespace negbeta

#endif
