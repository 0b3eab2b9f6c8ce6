#include "negbeta/words.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace negbeta {

std::string render_word(const Word& w, int max_digit) {
  std::string s;
  bool spaced = max_digit > 9;
  for (size_t i = 0; i < w.size(); ++i) {
    if (spaced && i) s += ' ';
    s += std::to_string(w[i]);
  }
  return s;
}

Word concat(const Word& a, const Word& b) {
  Word r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

bool is_prefix(const Word& p, const Word& w) {
  return p.size() <= w.size() && std::equal(p.begin(), p.end(), w.begin());
}

bool is_suffix(const Word& s, const Word& w) {
  return s.size() <= w.size() && std::equal(s.rbegin(), s.rend(), w.rbegin());
}

bool contains_factor(const Word& w, const Word& f) {
  if (f.empty()) return true;
  if (f.size() > w.size()) return false;
  return std::search(w.begin(), w.end(), f.begin(), f.end()) != w.end();
}

namespace {

// Smallest t such that `p` is a power of its length-t prefix.
size_t primitive_root(const Word& p) {
  for (size_t t = 1; t <= p.size(); ++t) {
    if (p.size() % t) continue;
    bool ok = true;
    for (size_t i = t; i < p.size() && ok; ++i) ok = p[i] == p[i - t];
    if (ok) return t;
  }
  return p.size();
}

}  // namespace

DigitSeq DigitSeq::eventually_periodic(Word preperiod, Word period) {
  if (period.empty()) throw std::invalid_argument("DigitSeq: empty period");
  size_t t = primitive_root(period);
  period.resize(t);
  // Absorb matching tail of the preperiod into the cycle.
  while (!preperiod.empty() && preperiod.back() == period.back()) {
    preperiod.pop_back();
    std::rotate(period.begin(), period.end() - 1, period.end());
  }
  DigitSeq s;
  s.pre_ = std::move(preperiod);
  s.period_ = std::move(period);
  return s;
}

DigitSeq DigitSeq::truncated(Word digits) {
  DigitSeq s;
  s.pre_ = std::move(digits);
  return s;
}

size_t DigitSeq::known() const {
  return is_periodic() ? std::numeric_limits<size_t>::max() : pre_.size();
}

int DigitSeq::digit(size_t k) const {
  if (k == 0) throw std::out_of_range("DigitSeq::digit: 1-based index");
  if (k <= pre_.size()) return pre_[k - 1];
  if (!is_periodic()) throw std::out_of_range("DigitSeq::digit: beyond truncation");
  return period_[(k - pre_.size() - 1) % period_.size()];
}

Word DigitSeq::prefix(size_t n) const {
  Word w;
  w.reserve(n);
  for (size_t k = 1; k <= n; ++k) w.push_back(digit(k));
  return w;
}

DigitSeq DigitSeq::shifted(size_t k) const {
  if (!is_periodic()) {
    if (k > pre_.size()) throw std::out_of_range("DigitSeq::shifted");
    return truncated(Word(pre_.begin() + k, pre_.end()));
  }
  if (k <= pre_.size())
    return eventually_periodic(Word(pre_.begin() + k, pre_.end()), period_);
  size_t r = (k - pre_.size()) % period_.size();
  Word rotated = period_;
  std::rotate(rotated.begin(), rotated.begin() + r, rotated.end());
  return eventually_periodic({}, rotated);
}

DigitSeq DigitSeq::prepended(int digit) const {
  Word p;
  p.push_back(digit);
  p.insert(p.end(), pre_.begin(), pre_.end());
  if (is_periodic()) return eventually_periodic(std::move(p), period_);
  return truncated(std::move(p));
}

std::string DigitSeq::render(int max_digit) const {
  std::string s = render_word(pre_, max_digit);
  if (is_periodic()) {
    s += "(";
    s += render_word(period_, max_digit);
    s += ")";
  } else {
    s += "...";
  }
  return s;
}

}  // namespace negbeta
