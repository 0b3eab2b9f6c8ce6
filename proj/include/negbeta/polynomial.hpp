#ifndef NEGBETA_POLYNOMIAL_HPP
#define NEGBETA_POLYNOMIAL_HPP

#include <string>
#include <vector>

#include "negbeta/rational.hpp"

namespace negbeta {

// Univariate polynomial with exact integer coefficients, constant term first.
// Normalized so the leading coefficient is nonzero (the zero polynomial has
// an empty coefficient vector).
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Integer> coeffs);
  static Polynomial from_ints(const std::vector<long>& coeffs);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Integer>& coeffs() const { return c_; }
  const Integer& leading() const { return c_.back(); }
  const Integer& operator[](size_t i) const { return c_[i]; }

  Rational eval(const Rational& x) const;
  Interval eval(const Interval& x) const;
  int sign_at(const Rational& x) const;

  Polynomial derivative() const;
  // Content-normalized (primitive, positive leading coefficient).
  Polynomial primitive() const;
  // p / gcd(p, p'), the radical: same roots, all simple.
  Polynomial squarefree_part() const;
  bool is_squarefree() const;

  std::string str() const;

  bool operator==(const Polynomial& o) const { return c_ == o.c_; }

 private:
  std::vector<Integer> c_;
};

// Number of distinct real roots in the open interval (lo, hi), by Sturm's
// method on the squarefree part. Endpoints must not be roots.
int count_real_roots(const Polynomial& p, const Rational& lo, const Rational& hi);

// Sturm chain of a squarefree polynomial, reusable across queries.
class SturmChain {
 public:
  explicit SturmChain(const Polynomial& squarefree);
  // Roots in (lo, hi]; standard Sturm convention.
  int count_roots(const Rational& lo, const Rational& hi) const;

 private:
  int variations(const Rational& x) const;
  std::vector<Polynomial> chain_;
};

}  // namespace negbeta

#endif
