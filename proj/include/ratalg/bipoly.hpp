#ifndef RATALG_BIPOLY_HPP
#define RATALG_BIPOLY_HPP

#include <map>
#include <utility>
#include <vector>

#include "ratalg/unipoly.hpp"

namespace ratalg {

// graded-lex on (e1, e2) with x1 > x2, descending so that begin() is leading
struct GrlexDesc {
  bool operator()(const std::pair<int, int>& a, const std::pair<int, int>& b) const {
    int ta = a.first + a.second, tb = b.first + b.second;
    if (ta != tb) return ta > tb;
    return a.first > b.first;
  }
};

// Sparse bivariate polynomial over Scalar in variables x1, x2.
class BiPoly {
 public:
  using TermMap = std::map<std::pair<int, int>, Scalar, GrlexDesc>;

  BiPoly() = default;
  BiPoly(const Scalar& c) {
    if (!c.is_zero()) t_[{0, 0}] = c;
  }
  BiPoly(int c) : BiPoly(Scalar(c)) {}

  static BiPoly x1() { return monomial(1, 0, Scalar(1)); }
  static BiPoly x2() { return monomial(0, 1, Scalar(1)); }
  static BiPoly monomial(int e1, int e2, const Scalar& c) {
    BiPoly p;
    if (!c.is_zero()) p.t_[{e1, e2}] = c;
    return p;
  }
  // embed a univariate polynomial along one axis
  static BiPoly from_uni(const UniPoly& p, int axis) {
    BiPoly r;
    for (int i = 0; i <= p.degree(); ++i) {
      if (!p.coeff(i).is_zero()) r.t_[axis == 1 ? std::pair{i, 0} : std::pair{0, i}] = p.coeff(i);
    }
    return r;
  }

  const TermMap& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first == std::pair{0, 0}); }

  Scalar coeff(int e1, int e2) const {
    auto it = t_.find({e1, e2});
    return it == t_.end() ? Scalar(0) : it->second;
  }

  int deg1() const {
    int d = -1;
    for (auto& [e, c] : t_) d = std::max(d, e.first);
    return d;
  }
  int deg2() const {
    int d = -1;
    for (auto& [e, c] : t_) d = std::max(d, e.second);
    return d;
  }
  int total_degree() const { return t_.empty() ? -1 : t_.begin()->first.first + t_.begin()->first.second; }

  // leading coefficient in the graded-lex order
  const Scalar& lc_grlex() const {
    static const Scalar zero(0);
    return t_.empty() ? zero : t_.begin()->second;
  }

  friend bool operator==(const BiPoly& p, const BiPoly& q) { return p.t_ == q.t_; }
  friend bool operator!=(const BiPoly& p, const BiPoly& q) { return !(p == q); }

  friend BiPoly operator-(const BiPoly& p) {
    BiPoly r = p;
    for (auto& [e, c] : r.t_) c = -c;
    return r;
  }
  friend BiPoly operator+(const BiPoly& p, const BiPoly& q) {
    BiPoly r = p;
    for (auto& [e, c] : q.t_) r.add_term(e, c);
    return r;
  }
  friend BiPoly operator-(const BiPoly& p, const BiPoly& q) { return p + (-q); }
  friend BiPoly operator*(const BiPoly& p, const BiPoly& q) {
    BiPoly r;
    for (auto& [e, c] : p.t_) {
      for (auto& [f, d] : q.t_) r.add_term({e.first + f.first, e.second + f.second}, c * d);
    }
    return r;
  }
  friend BiPoly operator*(const Scalar& s, const BiPoly& p) {
    if (s.is_zero()) return BiPoly();
    BiPoly r = p;
    for (auto& [e, c] : r.t_) c = s * c;
    return r;
  }
  BiPoly& operator+=(const BiPoly& q) { return *this = *this + q; }
  BiPoly& operator-=(const BiPoly& q) { return *this = *this - q; }
  BiPoly& operator*=(const BiPoly& q) { return *this = *this * q; }

  BiPoly pow(int e) const {
    if (e < 0) throw calc_error("negative power of a polynomial");
    BiPoly r(1), b = *this;
    while (e > 0) {
      if (e & 1) r *= b;
      b *= b;
      e >>= 1;
    }
    return r;
  }

  Scalar eval(const Scalar& v1, const Scalar& v2) const {
    Scalar acc(0);
    for (auto& [e, c] : t_) {
      Scalar m = c;
      for (int i = 0; i < e.first; ++i) m *= v1;
      for (int i = 0; i < e.second; ++i) m *= v2;
      acc += m;
    }
    return acc;
  }

  // substitute a scalar for one variable; result univariate in the other
  UniPoly substitute(int axis, const Scalar& a) const {
    std::vector<Scalar> acc;
    for (auto& [e, c] : t_) {
      int keep = axis == 1 ? e.second : e.first;
      int gone = axis == 1 ? e.first : e.second;
      Scalar m = c;
      for (int i = 0; i < gone; ++i) m *= a;
      if ((int)acc.size() <= keep) acc.resize(keep + 1, Scalar(0));
      acc[keep] += m;
    }
    return UniPoly(std::move(acc));
  }

  BiPoly swap_vars() const {
    BiPoly r;
    for (auto& [e, c] : t_) r.t_[{e.second, e.first}] = c;
    return r;
  }

  // x2-shift: p(x1, x2 + a)
  BiPoly shift_x2(const Scalar& a) const {
    BiPoly r;
    BiPoly xs = x2() + BiPoly(a);
    for (auto& [e, c] : t_) r += BiPoly::monomial(e.first, 0, c) * xs.pow(e.second);
    return r;
  }

  // view as polynomial in x1 with UniPoly coefficients in x2, ascending
  std::vector<UniPoly> coeffs_in_x1() const {
    std::vector<std::vector<Scalar>> acc(deg1() + 1 > 0 ? deg1() + 1 : 0);
    for (auto& [e, c] : t_) {
      auto& row = acc[e.first];
      if ((int)row.size() <= e.second) row.resize(e.second + 1, Scalar(0));
      row[e.second] += c;
    }
    std::vector<UniPoly> out;
    out.reserve(acc.size());
    for (auto& row : acc) out.emplace_back(std::move(row));
    return out;
  }
  static BiPoly from_coeffs_in_x1(const std::vector<UniPoly>& cs) {
    BiPoly r;
    for (int i = 0; i < (int)cs.size(); ++i) {
      for (int j = 0; j <= cs[i].degree(); ++j) r.add_term({i, j}, cs[i].coeff(j));
    }
    return r;
  }

  // exact division in the graded-lex term order; throws when not a divisor
  BiPoly divexact(const BiPoly& d) const {
    if (d.is_zero()) throw calc_error("division by zero polynomial");
    BiPoly rem = *this, quo;
    const auto& [de, dc] = *d.t_.begin();
    Scalar dinv = dc.inverse();
    while (!rem.is_zero()) {
      auto [re, rc] = *rem.t_.begin();
      int e1 = re.first - de.first, e2 = re.second - de.second;
      if (e1 < 0 || e2 < 0) throw calc_error("inexact bivariate division");
      BiPoly m = monomial(e1, e2, rc * dinv);
      quo += m;
      rem -= m * d;
    }
    return quo;
  }

  BiPoly monic_grlex() const {
    if (is_zero()) return *this;
    return lc_grlex().inverse() * *this;
  }

  bool is_rational() const {
    for (auto& [e, c] : t_)
      if (!c.is_rational()) return false;
    return true;
  }

  // deterministic total order: term-by-term in grlex
  friend bool operator<(const BiPoly& p, const BiPoly& q) {
    auto a = p.t_.begin(), b = q.t_.begin();
    GrlexDesc lt;
    for (; a != p.t_.end() && b != q.t_.end(); ++a, ++b) {
      if (a->first != b->first) return lt(b->first, a->first);
      if (a->second != b->second) return a->second < b->second;
    }
    return a == p.t_.end() && b != q.t_.end();
  }

 private:
  void add_term(const std::pair<int, int>& e, const Scalar& c) {
    auto it = t_.find(e);
    if (it == t_.end()) {
      if (!c.is_zero()) t_[e] = c;
    } else {
      it->second += c;
      if (it->second.is_zero()) t_.erase(it);
    }
  }

  TermMap t_;
};

namespace detail {

// pseudo-remainder of a by b in (K[x2])[x1]; each pass scales by lc(b) so no
// coefficient division is needed, then the top term cancels exactly
inline std::vector<UniPoly> prem_x1(std::vector<UniPoly> a, const std::vector<UniPoly>& b) {
  int db = (int)b.size() - 1;
  const UniPoly& lb = b.back();
  while (!a.empty() && (int)a.size() - 1 >= db) {
    int cur = (int)a.size() - 1;
    UniPoly la = a.back();
    for (auto& c : a) c = lb * c;
    for (int i = 0; i <= db; ++i) a[cur - db + i] -= la * b[i];
    while (!a.empty() && a.back().is_zero()) a.pop_back();
  }
  return a;
}

inline UniPoly content_of(const std::vector<UniPoly>& a) {
  UniPoly c;
  for (const auto& q : a) c = UniPoly::gcd(c, q);
  return c;
}

inline void make_primitive(std::vector<UniPoly>& a) {
  UniPoly c = content_of(a);
  if (c.is_zero() || c == UniPoly(Scalar(1))) return;
  for (auto& q : a) q = q.divexact(c);
}

}  // namespace detail

// content/primitive split with respect to x1: p = content(x2) * primitive
inline void content_primitive_x1(const BiPoly& p, UniPoly& content, BiPoly& primitive) {
  if (p.is_zero()) {
    content = UniPoly();
    primitive = BiPoly();
    return;
  }
  auto cs = p.coeffs_in_x1();
  content = detail::content_of(cs);
  detail::make_primitive(cs);
  primitive = BiPoly::from_coeffs_in_x1(cs);
}

// gcd of bivariate polynomials via content/primitive-part recursion with a
// primitive pseudo-remainder sequence in (Q[x2])[x1]; result has graded-lex
// leading coefficient 1.  gcd(0,0) is an error.
inline BiPoly poly_gcd_bivariate(const BiPoly& p, const BiPoly& q) {
  if (p.is_zero() && q.is_zero()) throw calc_error("gcd(0,0) undefined");
  if (p.is_zero()) return q.monic_grlex();
  if (q.is_zero()) return p.monic_grlex();

  UniPoly cp, cq;
  BiPoly pp, qq;
  content_primitive_x1(p, cp, pp);
  content_primitive_x1(q, cq, qq);
  UniPoly cg = UniPoly::gcd(cp, cq);

  std::vector<UniPoly> a = pp.coeffs_in_x1(), b = qq.coeffs_in_x1();
  if (a.size() < b.size()) std::swap(a, b);
  // primitive PRS; terminates because deg_1 strictly drops
  while (true) {
    if ((int)b.size() - 1 == 0) {
      // primitive parts coprime in x1
      a.assign(1, UniPoly(Scalar(1)));
      break;
    }
    auto r = detail::prem_x1(a, b);
    if (r.empty()) {
      a = b;
      detail::make_primitive(a);
      break;
    }
    detail::make_primitive(r);
    a = std::move(b);
    b = std::move(r);
  }
  BiPoly g = BiPoly::from_coeffs_in_x1(a) * BiPoly::from_uni(cg, 2);
  return g.monic_grlex();
}

// Sylvester resultant eliminating `var`; the survivor variable indexes the
// returned univariate polynomial.  Block layout: deg_q columns of p
// coefficients (leading first), then deg_p columns of q coefficients.
inline UniPoly resultant(const BiPoly& p_in, const BiPoly& q_in, int var) {
  BiPoly p = var == 1 ? p_in : p_in.swap_vars();
  BiPoly q = var == 1 ? q_in : q_in.swap_vars();
  int np = p.deg1(), nq = q.deg1();
  if (np < 1 || nq < 1) throw input_error("resultant requires positive degree in the eliminated variable");
  auto pc = p.coeffs_in_x1(), qc = q.coeffs_in_x1();
  int N = np + nq;
  std::vector<std::vector<UniPoly>> M(N, std::vector<UniPoly>(N));
  for (int j = 0; j < nq; ++j)
    for (int k = 0; k <= np; ++k) M[j + k][j] = pc[np - k];
  for (int j = 0; j < np; ++j)
    for (int k = 0; k <= nq; ++k) M[j + k][nq + j] = qc[nq - k];

  // Bareiss fraction-free elimination over Q[x2]
  int sign = 1;
  UniPoly prev(Scalar(1));
  for (int k = 0; k + 1 < N; ++k) {
    if (M[k][k].is_zero()) {
      int r = -1;
      for (int i = k + 1; i < N; ++i)
        if (!M[i][k].is_zero()) {
          r = i;
          break;
        }
      if (r < 0) return UniPoly();
      std::swap(M[k], M[r]);
      sign = -sign;
    }
    for (int i = k + 1; i < N; ++i) {
      for (int j = k + 1; j < N; ++j)
        M[i][j] = (M[k][k] * M[i][j] - M[i][k] * M[k][j]).divexact(prev);
      M[i][k] = UniPoly();
    }
    prev = M[k][k];
  }
  UniPoly det = M[N - 1][N - 1];
  return sign < 0 ? -det : det;
}

}  // namespace ratalg

#endif
