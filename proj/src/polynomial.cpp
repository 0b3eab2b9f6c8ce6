#include "negbeta/polynomial.hpp"

#include <sstream>

namespace negbeta {

namespace {

// Rational-coefficient helpers used only inside gcd/Sturm computations.
using QPoly = std::vector<Rational>;

QPoly to_q(const Polynomial& p) {
  QPoly q;
  q.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) q.emplace_back(c);
  return q;
}

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly rem(QPoly a, const QPoly& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    Rational f = a.back() / b.back();
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

Polynomial from_q(QPoly q) {
  trim(q);
  // clear denominators, divide by content
  Integer den = 1;
  for (const auto& c : q) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
  std::vector<Integer> z;
  z.reserve(q.size());
  for (const auto& c : q) z.push_back(Integer(c * Rational(den)));
  Integer content = 0;
  for (const auto& c : z) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
  if (content != 0)
    for (auto& c : z) c /= content;
  return Polynomial(std::move(z));
}

}  // namespace

Polynomial::Polynomial(std::vector<Integer> coeffs) : c_(std::move(coeffs)) {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Polynomial Polynomial::from_ints(const std::vector<long>& coeffs) {
  std::vector<Integer> z(coeffs.begin(), coeffs.end());
  return Polynomial(std::move(z));
}

Rational Polynomial::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Rational(*it);
  return acc;
}

Interval Polynomial::eval(const Interval& x) const {
  Interval acc = Interval::point(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    acc = acc * x + Rational(*it);
  return acc;
}

int Polynomial::sign_at(const Rational& x) const {
  Rational v = eval(x);
  return sgn(v);
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return Polynomial();
  std::vector<Integer> d(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
  return Polynomial(std::move(d));
}

Polynomial Polynomial::primitive() const {
  if (is_zero()) return *this;
  Integer content = 0;
  for (const auto& c : c_) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
  std::vector<Integer> z = c_;
  for (auto& c : z) c /= content;
  if (z.back() < 0)
    for (auto& c : z) c = -c;
  return Polynomial(std::move(z));
}

Polynomial Polynomial::squarefree_part() const {
  if (degree() <= 1) return primitive();
  // gcd(p, p') by rational Euclid
  QPoly a = to_q(*this), b = to_q(derivative());
  trim(a);
  trim(b);
  while (!b.empty()) {
    QPoly r = rem(a, b);
    a = b;
    b = r;
  }
  Polynomial g = from_q(a);
  if (g.degree() == 0) return primitive();
  // divide exactly (in Q[x]) by g
  QPoly num = to_q(*this), den = to_q(g);
  QPoly quot(num.size() - den.size() + 1, Rational(0));
  while (num.size() >= den.size() && !num.empty()) {
    Rational f = num.back() / den.back();
    size_t shift = num.size() - den.size();
    quot[shift] = f;
    for (size_t i = 0; i < den.size(); ++i) num[i + shift] -= f * den[i];
    trim(num);
  }
  return from_q(quot);
}

bool Polynomial::is_squarefree() const {
  return squarefree_part().degree() == degree();
}

std::string Polynomial::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Integer& c = c_[i];
    if (c == 0) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    Integer a = abs(c);
    if (a != 1 || i == 0) os << a.get_str();
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
    first = false;
  }
  return os.str();
}

SturmChain::SturmChain(const Polynomial& squarefree) {
  chain_.push_back(squarefree);
  Polynomial d = squarefree.derivative();
  if (!d.is_zero()) chain_.push_back(d);
  while (chain_.size() >= 2 && chain_.back().degree() >= 0) {
    QPoly r = rem(to_q(chain_[chain_.size() - 2]), to_q(chain_.back()));
    trim(r);
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    chain_.push_back(from_q(r));
    if (chain_.back().degree() == 0) break;
  }
}

int SturmChain::variations(const Rational& x) const {
  int var = 0, prev = 0;
  for (const auto& p : chain_) {
    int s = p.sign_at(x);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++var;
    prev = s;
  }
  return var;
}

int SturmChain::count_roots(const Rational& lo, const Rational& hi) const {
  return variations(lo) - variations(hi);
}

int count_real_roots(const Polynomial& p, const Rational& lo, const Rational& hi) {
  Polynomial sf = p.squarefree_part();
  if (sf.sign_at(lo) == 0 || sf.sign_at(hi) == 0)
    throw std::invalid_argument("count_real_roots: endpoint is a root");
  SturmChain chain(sf);
  return chain.count_roots(lo, hi);
}

}  // namespace negbeta
