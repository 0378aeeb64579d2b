#ifndef RATALG_LIFT_HPP
#define RATALG_LIFT_HPP

#include <utility>
#include <vector>

#include "ratalg/multipoly.hpp"
#include "ratalg/unirat.hpp"

namespace ratalg {

namespace detail {

// polynomial in x whose coefficients live in a multivariate coefficient ring
using MPolyX = std::vector<MultiPoly>;

inline MPolyX mpx_zero(int arity) { return {MultiPoly(arity)}; }

inline void mpx_trim(MPolyX& a) {
  while (a.size() > 1 && a.back().is_zero()) a.pop_back();
}

inline MPolyX mpx_add(const MPolyX& a, const MPolyX& b) {
  MPolyX r = a.size() >= b.size() ? a : b;
  const MPolyX& s = a.size() >= b.size() ? b : a;
  for (size_t i = 0; i < s.size(); ++i) r[i] += s[i];
  mpx_trim(r);
  return r;
}

inline MPolyX mpx_mul(const MPolyX& a, const MPolyX& b) {
  int arity = a[0].arity();
  MPolyX r(a.size() + b.size() - 1, MultiPoly(arity));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  mpx_trim(r);
  return r;
}

inline MPolyX mpx_scale(const Rat& c, const MPolyX& a) {
  MPolyX r = a;
  for (auto& p : r) p = c * p;
  mpx_trim(r);
  return r;
}

// S_i = P^i * Q^(top - i) for i = 0..top
inline std::vector<MPolyX> mixed_powers(const MPolyX& P, const MPolyX& Q, int top) {
  std::vector<MPolyX> ppow(top + 1), qpow(top + 1);
  ppow[0] = qpow[0] = {MultiPoly::constant(P[0].arity(), 1)};
  for (int i = 1; i <= top; ++i) {
    ppow[i] = mpx_mul(ppow[i - 1], P);
    qpow[i] = mpx_mul(qpow[i - 1], Q);
  }
  std::vector<MPolyX> out(top + 1);
  for (int i = 0; i <= top; ++i) out[i] = mpx_mul(ppow[i], qpow[top - i]);
  return out;
}

inline std::vector<Rat> rat_coeffs(const UniPoly& p) {
  std::vector<Rat> out;
  for (int i = 0; i <= p.degree(); ++i) out.push_back(p.coeff(i).as_rat());
  return out;
}

}  // namespace detail

// Coefficient families parametrizing compositions with one fixed factor g and
// one unknown factor of degree <= n.  Variables 0..n are the unknown
// numerator's coefficients, n+1..2n+1 the denominator's.  Evaluating the
// right-variant family at a coefficient vector gives (a representative of)
// g o h; the left variant gives h o g and is linear in the vector.
struct LiftFamily {
  enum Variant { right_composition, left_composition };
  Variant variant;
  UniRat g;
  int n = 0;
  std::vector<MultiPoly> p, q;  // x-coefficient polynomials, ascending

  // coefficient vectors of the composed representative at (znum, wden)
  std::pair<std::vector<Scalar>, std::vector<Scalar>> evaluate(const std::vector<Scalar>& znum,
                                                               const std::vector<Scalar>& wden) const {
    if ((int)znum.size() != n + 1 || (int)wden.size() != n + 1) throw input_error("coefficient vector length");
    std::vector<Scalar> point = znum;
    point.insert(point.end(), wden.begin(), wden.end());
    std::vector<Scalar> pe, qe;
    for (const auto& poly : p) pe.push_back(poly.eval(point));
    for (const auto& poly : q) qe.push_back(poly.eval(point));
    return {pe, qe};
  }
};

// The two families for g and inner/outer degree n, built so that the
// composition identities hold for every coefficient vector, with the shorter
// part of g padded by denominator powers to stay homogeneous.
inline std::pair<LiftFamily, LiftFamily> lift_family(const UniRat& g, int n) {
  if (g.is_constant()) throw input_error("constant composition factor");
  if (n < 1) throw input_error("degree parameter must be positive");
  if (!g.is_rational()) throw input_error("rational coefficients required");

  int m = g.degree();
  int arity = 2 * (n + 1);
  std::vector<Rat> bp = detail::rat_coeffs(g.num()), bq = detail::rat_coeffs(g.den());

  detail::MPolyX P(n + 1, MultiPoly(arity)), Q(n + 1, MultiPoly(arity));
  for (int i = 0; i <= n; ++i) {
    P[i] = MultiPoly::variable(arity, i);
    Q[i] = MultiPoly::variable(arity, n + 1 + i);
  }

  LiftFamily right{LiftFamily::right_composition, g, n, {}, {}};
  {
    // sum_i b_i P^i Q^(m-i); implicit Q-padding for the lower-degree part
    auto S = detail::mixed_powers(P, Q, m);
    detail::MPolyX num = detail::mpx_zero(arity), den = detail::mpx_zero(arity);
    for (size_t i = 0; i < bp.size(); ++i)
      if (bp[i] != 0) num = detail::mpx_add(num, detail::mpx_scale(bp[i], S[i]));
    for (size_t i = 0; i < bq.size(); ++i)
      if (bq[i] != 0) den = detail::mpx_add(den, detail::mpx_scale(bq[i], S[i]));
    num.resize(n * m + 1, MultiPoly(arity));
    den.resize(n * m + 1, MultiPoly(arity));
    right.p = std::move(num);
    right.q = std::move(den);
  }

  LiftFamily left{LiftFamily::left_composition, g, n, {}, {}};
  {
    // sum_i z_i pg^i qg^(n-i) and the w analogue: linear in the variables
    std::vector<UniPoly> s(n + 1);
    for (int i = 0; i <= n; ++i) s[i] = g.num().pow(i) * g.den().pow(n - i);
    detail::MPolyX num = detail::mpx_zero(arity), den = detail::mpx_zero(arity);
    for (int i = 0; i <= n; ++i) {
      detail::MPolyX si(s[i].degree() + 1, MultiPoly(arity));
      for (int j = 0; j <= s[i].degree(); ++j) si[j] = MultiPoly::constant(arity, s[i].coeff(j).as_rat());
      num = detail::mpx_add(num, detail::mpx_mul({MultiPoly::variable(arity, i)}, si));
      den = detail::mpx_add(den, detail::mpx_mul({MultiPoly::variable(arity, n + 1 + i)}, si));
    }
    num.resize(n * m + 1, MultiPoly(arity));
    den.resize(n * m + 1, MultiPoly(arity));
    left.p = std::move(num);
    left.q = std::move(den);
  }
  return {std::move(right), std::move(left)};
}

}  // namespace ratalg

#endif
