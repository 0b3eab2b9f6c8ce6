#include "negbeta/algebraic.hpp"

#include <sstream>

namespace negbeta {

namespace {

// A rational point close to `target` inside (lo, hi) where p does not vanish.
Rational nonroot_near(const Polynomial& p, const Rational& target, const Rational& lo,
                      const Rational& hi) {
  if (p.sign_at(target) != 0) return target;
  Rational step = (hi - lo) / 4;
  while (true) {
    step /= 3;
    Rational cand = target + step;
    if (cand < hi && p.sign_at(cand) != 0) return cand;
    cand = target - step;
    if (cand > lo && p.sign_at(cand) != 0) return cand;
  }
}

}  // namespace

AlgebraicReal AlgebraicReal::rational(const Rational& v) {
  AlgebraicReal r;
  // X - v, cleared of denominators.
  Integer den = v.get_den(), num = v.get_num();
  r.defining_ = Polynomial({-num, den});
  r.squarefree_ = r.defining_;
  r.interval_ = Interval::point(v);
  return r;
}

void AlgebraicReal::bisect_once() const {
  if (interval_.is_point()) return;
  Rational mid = nonroot_near(squarefree_, interval_.mid(), interval_.lo(), interval_.hi());
  int s = squarefree_.sign_at(mid);
  if (s == sign_lo_)
    interval_ = Interval(mid, interval_.hi());
  else
    interval_ = Interval(interval_.lo(), mid);
}

Interval AlgebraicReal::refine(const Rational& width) const {
  while (interval_.width() > width) bisect_once();
  return interval_;
}

void AlgebraicReal::refine_steps(int steps) const {
  for (int i = 0; i < steps && !interval_.is_point(); ++i) bisect_once();
}

int AlgebraicReal::sign() const {
  if (interval_.is_point()) return sgn(interval_.lo());
  // The isolating interval contains exactly one root; it is zero iff zero is
  // that root.
  if (squarefree_.sign_at(0) == 0 && interval_.lo() < 0 && interval_.hi() > 0) return 0;
  while (true) {
    auto s = interval_.sign();
    if (s) return *s;
    bisect_once();
  }
}

int AlgebraicReal::compare(const Rational& q) const {
  if (interval_.is_point()) return sgn(Rational(interval_.lo() - q));
  if (squarefree_.sign_at(q) == 0 && interval_.lo() < q && interval_.hi() > q) return 0;
  while (interval_.lo() <= q && q <= interval_.hi()) bisect_once();
  return interval_.lo() > q ? 1 : -1;
}

double AlgebraicReal::to_double() const {
  refine(Rational(1, Integer(1) << 80));
  return interval_.mid().get_d();
}

AlgebraicReal isolate_root(const Polynomial& p, const Rational& hint_lo,
                           const Rational& hint_hi) {
  if (p.degree() < 1) throw std::invalid_argument("isolate_root: constant polynomial");
  if (hint_lo >= hint_hi) throw std::invalid_argument("isolate_root: empty hint");
  Polynomial sf = p.squarefree_part();

  if (sf.degree() == 1) {
    Rational root(-sf[0], sf[1]);
    root.canonicalize();
    if (root <= hint_lo || root >= hint_hi)
      throw NoRootInInterval("isolate_root: no root in hint interval");
    AlgebraicReal r = AlgebraicReal::rational(root);
    r.defining_ = p;
    return r;
  }

  // Move endpoints off roots. The nudge must not skip interior roots; the
  // Sturm recount below guards that.
  SturmChain chain(sf);
  Rational lo = hint_lo, hi = hint_hi;
  if (sf.sign_at(lo) == 0 || sf.sign_at(hi) == 0) {
    Rational d = (hi - lo);
    for (int k = 8;; ++k) {
      Rational eps = d / (Integer(1) << k);
      Rational lo2 = (sf.sign_at(lo) == 0) ? lo + eps : lo;
      Rational hi2 = (sf.sign_at(hi) == 0) ? hi - eps : hi;
      if (lo2 >= hi2 || sf.sign_at(lo2) == 0 || sf.sign_at(hi2) == 0) continue;
      // Endpoint roots excluded exactly when the strip contains only them.
      bool ok = true;
      if (sf.sign_at(lo) == 0 && chain.count_roots(lo, lo2) != 1) ok = false;
      if (sf.sign_at(hi) == 0 && chain.count_roots(hi2, hi) != 1) ok = false;
      if (ok) {
        lo = lo2;
        hi = hi2;
        break;
      }
    }
  }

  int n = chain.count_roots(lo, hi);
  if (n == 0) throw NoRootInInterval("isolate_root: no root in hint interval");
  bool warn = n > 1;
  while (n > 1) {
    Rational mid = nonroot_near(sf, (lo + hi) / 2, lo, hi);
    int left = chain.count_roots(lo, mid);
    if (left >= 1) {
      hi = mid;
      n = left;
    } else {
      lo = mid;
      n = chain.count_roots(lo, hi);
    }
  }

  AlgebraicReal r;
  r.defining_ = p;
  r.squarefree_ = sf;
  r.interval_ = Interval(lo, hi);
  r.sign_lo_ = sf.sign_at(lo);
  r.multiplicity_warning_ = warn;
  return r;
}

std::shared_ptr<const NumberField> NumberField::make(const AlgebraicReal& generator) {
  auto f = std::shared_ptr<NumberField>(new NumberField());
  f->generator_ = generator;
  const Polynomial& p = generator.defining();
  f->degree_ = p.degree();
  f->squarefree_warning_ = !p.is_squarefree();
  int d = f->degree_;
  f->monic_.assign(d, Rational(0));
  Rational lead(p.coeffs().back());
  for (int i = 0; i < d; ++i) f->monic_[i] = Rational(p.coeffs()[i]) / lead;
  // X^d = -(monic_[d-1] X^{d-1} + ... + monic_[0]); build X^k for k < 2d-1.
  f->xpow_.clear();
  std::vector<Rational> cur(d, Rational(0));  // coordinates of X^{d-1+...}
  // start with X^d
  for (int i = 0; i < d; ++i) cur[i] = -f->monic_[i];
  f->xpow_.push_back(cur);
  for (int k = d + 1; k <= 2 * d - 2; ++k) {
    std::vector<Rational> nxt(d, Rational(0));
    // multiply cur by X: shift, reduce.
    Rational top = cur[d - 1];
    for (int i = d - 1; i >= 1; --i) nxt[i] = cur[i - 1];
    nxt[0] = Rational(0);
    if (top != 0)
      for (int i = 0; i < d; ++i) nxt[i] += top * -f->monic_[i];
    f->xpow_.push_back(nxt);
    cur = nxt;
  }
  return f;
}

FieldElement NumberField::zero() const {
  return FieldElement(shared_from_this(), std::vector<Rational>(degree_, Rational(0)));
}

FieldElement NumberField::one() const { return from_rational(Rational(1)); }

FieldElement NumberField::from_rational(const Rational& q) const {
  std::vector<Rational> c(degree_, Rational(0));
  c[0] = q;
  return FieldElement(shared_from_this(), std::move(c));
}

FieldElement NumberField::generator_element() const {
  std::vector<Rational> c(degree_, Rational(0));
  if (degree_ == 1) {
    // X reduces to the rational root itself.
    c[0] = -monic_[0];
  } else {
    c[1] = Rational(1);
  }
  return FieldElement(shared_from_this(), std::move(c));
}

bool FieldElement::is_zero() const {
  for (const auto& c : coords_)
    if (c != 0) return false;
  return true;
}

bool FieldElement::is_rational() const {
  for (size_t i = 1; i < coords_.size(); ++i)
    if (coords_[i] != 0) return false;
  return true;
}

Rational FieldElement::rational_value() const {
  if (!is_rational()) throw std::domain_error("FieldElement: not rational");
  return coords_[0];
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  std::vector<Rational> c(coords_);
  for (size_t i = 0; i < c.size(); ++i) c[i] += o.coords_[i];
  return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  std::vector<Rational> c(coords_);
  for (size_t i = 0; i < c.size(); ++i) c[i] -= o.coords_[i];
  return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator-() const {
  std::vector<Rational> c(coords_);
  for (auto& x : c) x = -x;
  return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator+(const Rational& q) const {
  std::vector<Rational> c(coords_);
  c[0] += q;
  return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator-(const Rational& q) const { return *this + Rational(-q); }

FieldElement FieldElement::operator*(const Rational& q) const {
  std::vector<Rational> c(coords_);
  for (auto& x : c) x *= q;
  return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  int d = field_->degree_;
  std::vector<Rational> prod(2 * d - 1, Rational(0));
  for (int i = 0; i < d; ++i) {
    if (coords_[i] == 0) continue;
    for (int j = 0; j < d; ++j) {
      if (o.coords_[j] == 0) continue;
      prod[i + j] += coords_[i] * o.coords_[j];
    }
  }
  std::vector<Rational> c(prod.begin(), prod.begin() + d);
  for (int k = d; k <= 2 * d - 2; ++k) {
    if (prod[k] == 0) continue;
    const auto& row = field_->xpow_[k - d];
    for (int i = 0; i < d; ++i) c[i] += prod[k] * row[i];
  }
  return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw std::domain_error("FieldElement::inverse: zero");
  int d = field_->degree_;
  if (d == 1) {
    return FieldElement(field_, {Rational(1) / coords_[0]});
  }
  // Extended Euclid in Q[X] modulo the monic defining polynomial.
  using Q = std::vector<Rational>;
  auto trim = [](Q& p) { while (!p.empty() && p.back() == 0) p.pop_back(); };
  Q f(d + 1);
  for (int i = 0; i < d; ++i) f[i] = field_->monic_[i];
  f[d] = 1;
  Q a = f;
  Q b(coords_);
  trim(b);
  Q s0 = {}, s1 = {Rational(1)};  // coefficients tracking b-side only
  // invariant: s_k * this == r_k (mod f)
  Q r0 = a, r1 = b;
  while (true) {
    trim(r1);
    if (r1.empty()) throw std::domain_error("FieldElement::inverse: zero divisor (reducible modulus)");
    if (r1.size() == 1) break;
    // divide r0 by r1
    Q q;
    Q rem = r0;
    trim(rem);
    q.assign(rem.size() >= r1.size() ? rem.size() - r1.size() + 1 : 1, Rational(0));
    while (rem.size() >= r1.size() && !rem.empty()) {
      Rational fac = rem.back() / r1.back();
      size_t shift = rem.size() - r1.size();
      q[shift] = fac;
      for (size_t i = 0; i < r1.size(); ++i) rem[i + shift] -= fac * r1[i];
      trim(rem);
    }
    // s2 = s0 - q*s1
    Q qs(q.size() + s1.size(), Rational(0));
    for (size_t i = 0; i < q.size(); ++i) {
      if (q[i] == 0) continue;
      for (size_t j = 0; j < s1.size(); ++j) qs[i + j] += q[i] * s1[j];
    }
    Q s2(std::max(s0.size(), qs.size()), Rational(0));
    for (size_t i = 0; i < s0.size(); ++i) s2[i] += s0[i];
    for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
    trim(s2);
    r0 = r1;
    r1 = rem;
    s0 = s1;
    s1 = s2;
  }
  Rational unit = r1[0];
  std::vector<Rational> c(d, Rational(0));
  // reduce s1 mod f (degree < d already, since deg(s1) < deg(f) - deg(r1) <= d-1)
  for (size_t i = 0; i < s1.size() && i < static_cast<size_t>(d); ++i) c[i] = s1[i] / unit;
  return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::pow(long e) const {
  FieldElement base = e < 0 ? inverse() : *this;
  unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  FieldElement acc = field_->one();
  while (n) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

Interval FieldElement::value_interval(const Rational& width) const {
  int d = field_->degree_;
  if (d == 1 || is_rational()) return Interval::point(coords_[0]);
  Rational gen_width = width;
  while (true) {
    Interval g = field_->generator_.refine(gen_width);
    Interval acc = Interval::point(0);
    for (int i = d - 1; i >= 0; --i) acc = acc * g + coords_[i];
    if (acc.width() <= width) return acc;
    gen_width /= 16;
  }
}

int FieldElement::sign() const {
  if (is_zero()) return 0;
  if (is_rational()) return sgn(coords_[0]);
  Rational w(1, 4);
  while (true) {
    Interval v = value_interval(w);
    auto s = v.sign();
    if (s && *s != 0) return *s;
    if (v.is_point()) return sgn(v.lo());
    w /= 256;
  }
}

Integer FieldElement::floor() const {
  if (is_rational()) return floor_rational(coords_[0]);
  Rational w(1, 4);
  while (true) {
    Interval v = value_interval(w);
    Integer flo = floor_rational(v.lo()), fhi = floor_rational(v.hi());
    if (flo == fhi) return flo;
    // Enclosure straddles an integer k: either the value is exactly k (decide
    // exactly in the field) or refinement will separate it.
    if (v.width() < 1) {
      Integer k = fhi;
      FieldElement diff = *this - Rational(k);
      if (diff.is_zero()) return k;
      int s = diff.sign();
      return s > 0 ? k : k - 1;
    }
    w /= 256;
  }
}

double FieldElement::to_double() const {
  return value_interval(Rational(1, Integer(1) << 80)).mid().get_d();
}

std::string FieldElement::str() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < coords_.size(); ++i) {
    if (i) os << ", ";
    os << coords_[i].get_str();
  }
  os << "]";
  return os.str();
}

}  // namespace negbeta
