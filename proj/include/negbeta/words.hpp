#ifndef NEGBETA_WORDS_HPP
#define NEGBETA_WORDS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace negbeta {

// A finite digit word. Digits are small non-negative integers bounded by the
// first digit of the left-endpoint expansion.
using Word = std::vector<int>;

std::string render_word(const Word& w, int max_digit);
Word concat(const Word& a, const Word& b);
bool is_prefix(const Word& p, const Word& w);
bool is_suffix(const Word& s, const Word& w);
bool contains_factor(const Word& w, const Word& f);

// A digit sequence known either exactly (eventually periodic) or as a finite
// truncation. 1-based digit access. Canonical form: the period is primitive
// and the preperiod is as short as possible.
class DigitSeq {
 public:
  DigitSeq() = default;
  static DigitSeq eventually_periodic(Word preperiod, Word period);
  static DigitSeq truncated(Word digits);

  bool is_periodic() const { return !period_.empty(); }
  bool is_purely_periodic() const { return is_periodic() && pre_.empty(); }
  // Minimal period length; 0 for truncated sequences.
  size_t period_length() const { return period_.size(); }
  size_t preperiod_length() const { return pre_.size(); }
  const Word& preperiod() const { return pre_; }
  const Word& period() const { return period_; }

  // Digits known up to (and including) this 1-based index; SIZE_MAX when
  // eventually periodic.
  size_t known() const;
  int digit(size_t k) const;  // 1-based
  Word prefix(size_t n) const;

  // Drops the first `k` digits.
  DigitSeq shifted(size_t k) const;
  // Prepends one digit.
  DigitSeq prepended(int digit) const;

  bool operator==(const DigitSeq& o) const {
    return pre_ == o.pre_ && period_ == o.period_;
  }

  std::string render(int max_digit) const;

 private:
  Word pre_;
  Word period_;  // empty means truncated
};

}  // namespace negbeta

#endif
