#ifndef RATALG_UNIRAT_HPP
#define RATALG_UNIRAT_HPP

#include <optional>
#include <utility>

#include "ratalg/unipoly.hpp"

namespace ratalg {

// Univariate rational function, canonical form: coprime, monic denominator.
class UniRat {
 public:
  UniRat() : num_(), den_(UniPoly(Scalar(1))) {}
  UniRat(const Scalar& c) : num_(UniPoly(c)), den_(UniPoly(Scalar(1))) {}
  UniRat(int c) : UniRat(Scalar(c)) {}
  UniRat(const UniPoly& p) : num_(p), den_(UniPoly(Scalar(1))) {}
  UniRat(UniPoly n, UniPoly d) {
    if (d.is_zero()) throw input_error("zero denominator");
    if (n.is_zero()) {
      num_ = UniPoly();
      den_ = UniPoly(Scalar(1));
      return;
    }
    UniPoly g = UniPoly::gcd(n, d);
    if (g.degree() > 0) {
      n = n.divexact(g);
      d = d.divexact(g);
    }
    Scalar lead = d.coeff(d.degree());
    num_ = lead.inverse() * n;
    den_ = lead.inverse() * d;
  }

  static UniRat x() { return UniRat(UniPoly::x()); }

  const UniPoly& num() const { return num_; }
  const UniPoly& den() const { return den_; }

  int degree() const { return std::max(num_.degree(), den_.degree()); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return degree() <= 0; }
  bool is_polynomial() const { return den_.degree() == 0; }
  bool is_rational() const { return num_.is_rational() && den_.is_rational(); }

  friend bool operator==(const UniRat& f, const UniRat& g) { return f.num_ == g.num_ && f.den_ == g.den_; }
  friend bool operator!=(const UniRat& f, const UniRat& g) { return !(f == g); }
  friend bool operator<(const UniRat& f, const UniRat& g) {
    if (f.num_ != g.num_) return f.num_ < g.num_;
    return f.den_ < g.den_;
  }

  friend UniRat operator-(const UniRat& f) {
    UniRat r = f;
    r.num_ = -r.num_;
    return r;
  }
  friend UniRat operator+(const UniRat& f, const UniRat& g) {
    return UniRat(f.num_ * g.den_ + g.num_ * f.den_, f.den_ * g.den_);
  }
  friend UniRat operator-(const UniRat& f, const UniRat& g) { return f + (-g); }
  friend UniRat operator*(const UniRat& f, const UniRat& g) { return UniRat(f.num_ * g.num_, f.den_ * g.den_); }
  friend UniRat operator/(const UniRat& f, const UniRat& g) {
    if (g.is_zero()) throw calc_error("division by zero function");
    return UniRat(f.num_ * g.den_, f.den_ * g.num_);
  }
  friend UniRat operator*(const Scalar& s, const UniRat& f) { return UniRat(s * f.num_, f.den_); }
  UniRat& operator+=(const UniRat& g) { return *this = *this + g; }
  UniRat& operator-=(const UniRat& g) { return *this = *this - g; }
  UniRat& operator*=(const UniRat& g) { return *this = *this * g; }

  UniRat reciprocal() const {
    if (is_zero()) throw calc_error("reciprocal of zero");
    return UniRat(den_, num_);
  }

  UniRat pow(int e) const {
    if (e < 0) return reciprocal().pow(-e);
    return UniRat(num_.pow(e), den_.pow(e));
  }

  std::optional<Scalar> eval_opt(const Scalar& v) const {
    Scalar d = den_.eval(v);
    if (d.is_zero()) return std::nullopt;
    return num_.eval(v) * d.inverse();
  }
  Scalar eval(const Scalar& v) const {
    auto r = eval_opt(v);
    if (!r) throw calc_error("evaluation at a pole");
    return *r;
  }

  UniRat derivative() const {
    return UniRat(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
  }

 private:
  UniPoly num_, den_;
};

namespace detail {
// Sigma c_i p^i q^(m-i); the homogenized substitution of p/q into a coefficient list
inline UniPoly homog_subst(const std::vector<Scalar>& cs, const UniPoly& p, const UniPoly& q, int m) {
  UniPoly acc;
  for (int i = 0; i <= m; ++i) {
    Scalar c = i < (int)cs.size() ? cs[i] : Scalar(0);
    if (c.is_zero()) continue;
    acc += c * (p.pow(i) * q.pow(m - i));
  }
  return acc;
}
}  // namespace detail

// g composed with h; for nonconstant g, h the degree multiplies
inline UniRat compose_uni(const UniRat& g, const UniRat& h) {
  int m = g.degree();
  if (m <= 0) return g;
  std::vector<Scalar> nc, dc;
  for (int i = 0; i <= g.num().degree(); ++i) nc.push_back(g.num().coeff(i));
  for (int i = 0; i <= g.den().degree(); ++i) dc.push_back(g.den().coeff(i));
  UniPoly N = detail::homog_subst(nc, h.num(), h.den(), m);
  UniPoly D = detail::homog_subst(dc, h.num(), h.den(), m);
  if (D.is_zero()) throw calc_error("composition lands on a pole");
  return UniRat(N, D);
}

}  // namespace ratalg

#endif
