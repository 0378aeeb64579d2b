#ifndef RATALG_BIRAT_HPP
#define RATALG_BIRAT_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "ratalg/bipoly.hpp"
#include "ratalg/roots.hpp"
#include "ratalg/unirat.hpp"

namespace ratalg {

// Bivariate rational function, canonical form: coprime parts, denominator
// with graded-lex leading coefficient 1.
class BiRat {
 public:
  BiRat() : num_(), den_(BiPoly(1)) {}
  BiRat(const Scalar& c) : num_(BiPoly(c)), den_(BiPoly(1)) {}
  BiRat(int c) : BiRat(Scalar(c)) {}
  BiRat(const BiPoly& p) : num_(p), den_(BiPoly(1)) {}
  BiRat(BiPoly n, BiPoly d) {
    if (d.is_zero()) throw input_error("zero denominator");
    if (n.is_zero()) {
      num_ = BiPoly();
      den_ = BiPoly(1);
      return;
    }
    BiPoly g = poly_gcd_bivariate(n, d);
    if (!g.is_constant()) {
      n = n.divexact(g);
      d = d.divexact(g);
    }
    Scalar inv = d.lc_grlex().inverse();
    num_ = inv * n;
    den_ = inv * d;
  }

  static BiRat x1() { return BiRat(BiPoly::x1()); }
  static BiRat x2() { return BiRat(BiPoly::x2()); }

  const BiPoly& num() const { return num_; }
  const BiPoly& den() const { return den_; }

  int deg1() const { return std::max(num_.deg1(), den_.deg1()); }
  int deg2() const { return std::max(num_.deg2(), den_.deg2()); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool is_rational() const { return num_.is_rational() && den_.is_rational(); }

  friend bool operator==(const BiRat& f, const BiRat& g) { return f.num_ == g.num_ && f.den_ == g.den_; }
  friend bool operator!=(const BiRat& f, const BiRat& g) { return !(f == g); }

  friend BiRat operator-(const BiRat& f) {
    BiRat r = f;
    r.num_ = -r.num_;
    return r;
  }
  friend BiRat operator+(const BiRat& f, const BiRat& g) {
    return BiRat(f.num_ * g.den_ + g.num_ * f.den_, f.den_ * g.den_);
  }
  friend BiRat operator-(const BiRat& f, const BiRat& g) { return f + (-g); }
  friend BiRat operator*(const BiRat& f, const BiRat& g) { return BiRat(f.num_ * g.num_, f.den_ * g.den_); }
  friend BiRat operator/(const BiRat& f, const BiRat& g) {
    if (g.is_zero()) throw calc_error("division by zero function");
    return BiRat(f.num_ * g.den_, f.den_ * g.num_);
  }
  BiRat& operator+=(const BiRat& g) { return *this = *this + g; }
  BiRat& operator-=(const BiRat& g) { return *this = *this - g; }
  BiRat& operator*=(const BiRat& g) { return *this = *this * g; }

  BiRat pow(int e) const {
    if (e < 0) {
      if (is_zero()) throw calc_error("reciprocal of zero");
      return BiRat(den_.pow(-e), num_.pow(-e));
    }
    return BiRat(num_.pow(e), den_.pow(e));
  }

  std::optional<Scalar> eval_opt(const Scalar& v1, const Scalar& v2) const {
    Scalar d = den_.eval(v1, v2);
    if (d.is_zero()) return std::nullopt;
    return num_.eval(v1, v2) * d.inverse();
  }
  Scalar eval(const Scalar& v1, const Scalar& v2) const {
    auto r = eval_opt(v1, v2);
    if (!r) throw calc_error("evaluation at a pole");
    return *r;
  }

 private:
  BiPoly num_, den_;
};

inline UniRat specialize(const BiRat& f, int axis, const Scalar& a) {
  UniPoly n = f.num().substitute(axis, a);
  UniPoly d = f.den().substitute(axis, a);
  if (d.is_zero()) throw input_error("specialization pole line");
  return UniRat(n, d);
}

// graph-matching polynomial: p1(x1) q2(x2) - p2(x2) q1(x1)
inline BiPoly cross_poly(const UniRat& f1, const UniRat& f2) {
  BiPoly p1 = BiPoly::from_uni(f1.num(), 1), q1 = BiPoly::from_uni(f1.den(), 1);
  BiPoly p2 = BiPoly::from_uni(f2.num(), 2), q2 = BiPoly::from_uni(f2.den(), 2);
  return p1 * q2 - p2 * q1;
}

// p = a x1 x2 + b x1 + c x2 + d, bidegree at most (1,1): irreducible over the
// algebraic closure iff ad - bc != 0, modulo the degenerate cases below
inline bool is_irreducible_bilinear(const BiPoly& p) {
  if (p.deg1() > 1 || p.deg2() > 1) throw input_error("bidegree exceeds (1,1)");
  if (p.is_constant()) return false;
  Scalar a = p.coeff(1, 1), b = p.coeff(1, 0), c = p.coeff(0, 1), d = p.coeff(0, 0);
  if (a.is_zero() && (b.is_zero() || c.is_zero())) return true;  // degree-1 in a single variable
  return !(a * d - b * c).is_zero();
}

struct BadSpecializations {
  std::vector<Scalar> values;
  // factor of the candidate polynomial whose roots lie outside the working field
  UniPoly residual;
};

namespace detail {
inline Int working_delta(const BiRat& f) {
  for (auto& [e, c] : f.num().terms())
    if (c.delta() != 0) return c.delta();
  for (auto& [e, c] : f.den().terms())
    if (c.delta() != 0) return c.delta();
  return 0;
}

// gcd of the coefficient polynomials in the other variable, grouped by main
// power; its roots are the axis values where p vanishes identically
inline UniPoly axis_content(const BiPoly& p, int main) {
  std::map<int, std::vector<Scalar>> rows;
  for (auto& [e, c] : p.terms()) {
    int k = main == 1 ? e.first : e.second;
    int a = main == 1 ? e.second : e.first;
    auto& row = rows[k];
    if ((int)row.size() <= a) row.resize(a + 1, Scalar(0));
    row[a] = c;
  }
  UniPoly g;
  for (auto& [k, row] : rows) {
    UniPoly u{std::vector<Scalar>(row)};
    g = g.is_zero() ? u : UniPoly::gcd(g, u);
    if (g.degree() == 0) break;
  }
  return g;
}
}  // namespace detail

// values a of the given axis where the specialized numerator and denominator
// stop being coprime (or the degree-zero side vanishes identically)
inline BadSpecializations bad_specializations(const BiRat& f, int axis) {
  int main = axis == 1 ? 2 : 1;
  auto mdeg = [&](const BiPoly& p) { return main == 1 ? p.deg1() : p.deg2(); };
  int dn = mdeg(f.num()), dd = mdeg(f.den());
  if (dn < 1 && dd < 1) throw input_error("constant in the main variable");

  Int delta = detail::working_delta(f);
  BadSpecializations out;
  out.residual = UniPoly(Scalar(1));
  if (dn < 1 || dd < 1) {
    // one side constant in the main variable: it degenerates where it vanishes,
    // the other side where its axis content does; coprimality keeps the two
    // root sets disjoint
    const BiPoly& flat = dn < 1 ? f.num() : f.den();
    const BiPoly& tall = dn < 1 ? f.den() : f.num();
    UniPoly u = flat.substitute(main, Scalar(0));  // flat does not involve main
    for (const UniPoly& part : {u, detail::axis_content(tall, main)}) {
      if (part.degree() < 1) continue;
      auto ext = roots_in_field(part, delta);
      out.values.insert(out.values.end(), ext.roots.begin(), ext.roots.end());
      out.residual = out.residual * ext.residual;
    }
    std::sort(out.values.begin(), out.values.end());
    return out;
  }

  UniPoly res = resultant(f.num(), f.den(), main);
  if (res.is_zero()) throw calc_error("shared factor survived normalization");
  if (res.degree() < 1) return out;
  auto ext = roots_in_field(res, delta);
  out.residual = ext.residual;
  for (const Scalar& a : ext.roots) {
    UniPoly n = main == 1 ? f.num().substitute(2, a) : f.num().substitute(1, a);
    UniPoly d = main == 1 ? f.den().substitute(2, a) : f.den().substitute(1, a);
    // vanishing denominator counts: the line is outside the domain
    if (d.is_zero() || n.is_zero() || UniPoly::gcd(n, d).degree() > 0) out.values.push_back(a);
  }

  // d = max total degree of the two parts; the value count stays under d^(2d)
  int degf = std::max(f.num().total_degree(), f.den().total_degree());
  Int bound = 1;
  for (int i = 0; i < 2 * degf; ++i) bound *= degf;
  if ((Int)out.values.size() > bound) throw calc_error("specialization bound exceeded");
  return out;
}

// substitute univariate rational arguments into each slot of a bivariate one
inline BiRat compose_bi(const BiRat& F, const UniRat& a1, const UniRat& a2) {
  BiPoly p1 = BiPoly::from_uni(a1.num(), 1), q1 = BiPoly::from_uni(a1.den(), 1);
  BiPoly p2 = BiPoly::from_uni(a2.num(), 2), q2 = BiPoly::from_uni(a2.den(), 2);
  int m1 = std::max(F.num().deg1(), F.den().deg1());
  int m2 = std::max(F.num().deg2(), F.den().deg2());
  auto subst = [&](const BiPoly& P) {
    BiPoly acc;
    for (auto& [e, c] : P.terms()) {
      BiPoly term(c);
      term *= p1.pow(e.first) * q1.pow(m1 - e.first);
      term *= p2.pow(e.second) * q2.pow(m2 - e.second);
      acc += term;
    }
    return acc;
  };
  BiPoly N = subst(F.num()), D = subst(F.den());
  if (D.is_zero()) throw calc_error("composition lands on a pole");
  return BiRat(N, D);
}

// g(B(x1,x2)) for univariate outer g
inline BiRat compose_uni_bi(const UniRat& g, const BiRat& B) {
  int m = g.degree();
  if (m <= 0) return BiRat(g.num().coeff(0));
  auto lift = [&](const UniPoly& P) {
    BiPoly acc;
    for (int i = 0; i <= m; ++i) {
      Scalar c = P.coeff(i);
      if (c.is_zero()) continue;
      acc += c * (B.num().pow(i) * B.den().pow(m - i));
    }
    return acc;
  };
  BiPoly N = lift(g.num()), D = lift(g.den());
  if (D.is_zero()) throw calc_error("composition lands on a pole");
  return BiRat(N, D);
}

}  // namespace ratalg

#endif
