#ifndef RATALG_UNIPOLY_HPP
#define RATALG_UNIPOLY_HPP

#include <algorithm>
#include <initializer_list>
#include <vector>

#include "ratalg/scalar.hpp"

namespace ratalg {

// Dense univariate polynomial over Scalar.  Coefficients are stored
// ascending; the vector never ends with a zero.  degree() of the zero
// polynomial is -1 and stands for "minus infinity" in all degree laws.
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(const Scalar& c) {
    if (!c.is_zero()) c_.push_back(c);
  }
  UniPoly(int c) : UniPoly(Scalar(c)) {}
  UniPoly(std::initializer_list<Scalar> asc) : c_(asc) { trim(); }
  explicit UniPoly(std::vector<Scalar> asc) : c_(std::move(asc)) { trim(); }

  static UniPoly x() { return monomial(1, Scalar(1)); }
  static UniPoly monomial(int k, const Scalar& c) {
    UniPoly p;
    if (!c.is_zero()) {
      p.c_.assign(k + 1, Scalar(0));
      p.c_[k] = c;
    }
    return p;
  }

  int degree() const { return (int)c_.size() - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }

  const Scalar& lc() const {
    static const Scalar zero(0);
    return c_.empty() ? zero : c_.back();
  }
  Scalar coeff(int k) const {
    if (k < 0 || k >= (int)c_.size()) return Scalar(0);
    return c_[k];
  }
  const std::vector<Scalar>& coeffs() const { return c_; }

  friend bool operator==(const UniPoly& p, const UniPoly& q) { return p.c_ == q.c_; }
  friend bool operator!=(const UniPoly& p, const UniPoly& q) { return !(p == q); }

  friend UniPoly operator-(const UniPoly& p) {
    UniPoly r = p;
    for (auto& c : r.c_) c = -c;
    return r;
  }

  friend UniPoly operator+(const UniPoly& p, const UniPoly& q) {
    UniPoly r;
    r.c_.resize(std::max(p.c_.size(), q.c_.size()), Scalar(0));
    for (size_t i = 0; i < p.c_.size(); ++i) r.c_[i] += p.c_[i];
    for (size_t i = 0; i < q.c_.size(); ++i) r.c_[i] += q.c_[i];
    r.trim();
    return r;
  }
  friend UniPoly operator-(const UniPoly& p, const UniPoly& q) { return p + (-q); }

  friend UniPoly operator*(const UniPoly& p, const UniPoly& q) {
    if (p.is_zero() || q.is_zero()) return UniPoly();
    UniPoly r;
    r.c_.assign(p.c_.size() + q.c_.size() - 1, Scalar(0));
    for (size_t i = 0; i < p.c_.size(); ++i) {
      if (p.c_[i].is_zero()) continue;
      for (size_t j = 0; j < q.c_.size(); ++j) r.c_[i + j] += p.c_[i] * q.c_[j];
    }
    r.trim();
    return r;
  }
  friend UniPoly operator*(const Scalar& s, const UniPoly& p) {
    if (s.is_zero()) return UniPoly();
    UniPoly r = p;
    for (auto& c : r.c_) c = s * c;
    return r;
  }

  UniPoly& operator+=(const UniPoly& q) { return *this = *this + q; }
  UniPoly& operator-=(const UniPoly& q) { return *this = *this - q; }
  UniPoly& operator*=(const UniPoly& q) { return *this = *this * q; }

  UniPoly pow(int e) const {
    if (e < 0) throw calc_error("negative power of a polynomial");
    UniPoly r(Scalar(1)), b = *this;
    while (e > 0) {
      if (e & 1) r *= b;
      b *= b;
      e >>= 1;
    }
    return r;
  }

  Scalar eval(const Scalar& x) const {
    Scalar v(0);
    for (size_t i = c_.size(); i-- > 0;) v = v * x + c_[i];
    return v;
  }

  UniPoly derivative() const {
    UniPoly r;
    for (size_t i = 1; i < c_.size(); ++i) r.c_.push_back(Scalar((long)i) * c_[i]);
    r.trim();
    return r;
  }

  // polynomial composition p(q(x))
  UniPoly compose_poly(const UniPoly& q) const {
    UniPoly v;
    for (size_t i = c_.size(); i-- > 0;) v = v * q + UniPoly(c_[i]);
    return v;
  }

  // quotient/remainder over the coefficient field
  static void divmod(const UniPoly& p, const UniPoly& d, UniPoly& quo, UniPoly& rem) {
    if (d.is_zero()) throw calc_error("division by zero polynomial");
    quo = UniPoly();
    rem = p;
    Scalar inv = d.lc().inverse();
    while (!rem.is_zero() && rem.degree() >= d.degree()) {
      int k = rem.degree() - d.degree();
      Scalar c = rem.lc() * inv;
      quo += monomial(k, c);
      rem -= monomial(k, c) * d;
    }
  }

  UniPoly divexact(const UniPoly& d) const {
    UniPoly q, r;
    divmod(*this, d, q, r);
    if (!r.is_zero()) throw calc_error("inexact polynomial division");
    return q;
  }

  UniPoly monic() const {
    if (is_zero()) return *this;
    return lc().inverse() * *this;
  }

  // monic gcd (Euclid over the coefficient field); gcd(0,0) = 0
  static UniPoly gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
      UniPoly q, r;
      divmod(a, b, q, r);
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  bool is_rational() const {
    return std::all_of(c_.begin(), c_.end(), [](const Scalar& c) { return c.is_rational(); });
  }

  // deterministic total order (degree, then coefficients from the top)
  friend bool operator<(const UniPoly& p, const UniPoly& q) {
    if (p.degree() != q.degree()) return p.degree() < q.degree();
    for (int i = p.degree(); i >= 0; --i) {
      if (p.c_[i] != q.c_[i]) return p.c_[i] < q.c_[i];
    }
    return false;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<Scalar> c_;
};

// scale a rational-coefficient polynomial to integer coefficients with
// content 1 and positive leading coefficient
inline std::vector<Int> integer_normal_coeffs(const UniPoly& p) {
  std::vector<Int> out;
  if (p.is_zero()) return out;
  Int l = 1;
  for (int i = 0; i <= p.degree(); ++i)
    l = boost::multiprecision::lcm(l, rat_den(p.coeff(i).as_rat()));
  std::vector<Int> v(p.degree() + 1);
  Int g = 0;
  for (int i = 0; i <= p.degree(); ++i) {
    Rat c = p.coeff(i).as_rat() * Rat(l);
    v[i] = rat_num(c);
    g = boost::multiprecision::gcd(g, boost::multiprecision::abs(v[i]));
  }
  for (auto& c : v) c /= g;
  if (v.back() < 0)
    for (auto& c : v) c = -c;
  return v;
}

}  // namespace ratalg

#endif
