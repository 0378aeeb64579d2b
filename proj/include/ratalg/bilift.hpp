#ifndef RATALG_BILIFT_HPP
#define RATALG_BILIFT_HPP

#include <optional>
#include <vector>

#include "ratalg/birat.hpp"
#include "ratalg/decompose.hpp"

namespace ratalg {

enum class LiftSide { outer, inner };

namespace detail {

// bivariate polynomials with multi-polynomial coefficients, dense grid [i][j]
// for x1^i x2^j
using MPolyGrid = std::vector<std::vector<MultiPoly>>;

inline MPolyGrid grid_zero(int arity) { return {{MultiPoly(arity)}}; }

inline MPolyGrid grid_add(const MPolyGrid& a, const MPolyGrid& b) {
  size_t r1 = std::max(a.size(), b.size());
  size_t r2 = std::max(a[0].size(), b[0].size());
  int arity = a[0][0].arity();
  MPolyGrid r(r1, std::vector<MultiPoly>(r2, MultiPoly(arity)));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j) r[i][j] += a[i][j];
  for (size_t i = 0; i < b.size(); ++i)
    for (size_t j = 0; j < b[i].size(); ++j) r[i][j] += b[i][j];
  return r;
}

inline MPolyGrid grid_mul(const MPolyGrid& a, const MPolyGrid& b) {
  int arity = a[0][0].arity();
  MPolyGrid r(a.size() + b.size() - 1, std::vector<MultiPoly>(a[0].size() + b[0].size() - 1, MultiPoly(arity)));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j) {
      if (a[i][j].is_zero()) continue;
      for (size_t k = 0; k < b.size(); ++k)
        for (size_t l = 0; l < b[k].size(); ++l) r[i + k][j + l] += a[i][j] * b[k][l];
    }
  return r;
}

inline MPolyGrid grid_scale(const Rat& c, MPolyGrid a) {
  for (auto& row : a)
    for (auto& e : row) e = e * MultiPoly::constant(e.arity(), c);
  return a;
}

inline MPolyGrid grid_from_bipoly(const BiPoly& p, int arity) {
  MPolyGrid r(p.deg1() < 0 ? 1 : p.deg1() + 1,
              std::vector<MultiPoly>(p.deg2() < 0 ? 1 : p.deg2() + 1, MultiPoly(arity)));
  for (const auto& [e, c] : p.terms()) r[e.first][e.second] = MultiPoly::constant(arity, c.as_rat());
  return r;
}

}  // namespace detail

// outer lift: f = g(B) with B a bivariate rational of bidegree
// (deg1 f / deg g, deg2 f / deg g); solved by a gauge-fixed coefficient search
inline std::optional<BiRat> solve_bivariate_lift_outer(const BiRat& f, const UniRat& g) {
  if (g.is_constant()) throw input_error("nonconstant outer factor required");
  if (!f.is_rational() || !g.is_rational()) throw input_error("rational coefficients required");
  int m = g.degree();
  int d1 = std::max(f.num().deg1(), f.den().deg1());
  int d2 = std::max(f.num().deg2(), f.den().deg2());
  if (d1 % m != 0 || d2 % m != 0) return std::nullopt;
  if (m == 1) {
    BiRat h = compose_uni_bi(detail::mobius_of(g).inverse().to_unirat(), f);
    if (compose_uni_bi(g, h) == f) return h;
    return std::nullopt;
  }
  int dd1 = d1 / m, dd2 = d2 / m;
  int per = (dd1 + 1) * (dd2 + 1);
  if (2 * per > 24) throw cap_exceeded("degree cap exceeded");

  for (int pin = 0; pin < 2 * per; ++pin) {
    // slot layout: numerator grid row-major, then denominator grid
    std::vector<detail::Slot> slots(2 * per);
    int arity = 0;
    for (int s = 0; s < 2 * per; ++s)
      slots[s] = (s == pin) ? detail::Slot::pinned(1) : detail::Slot::free(arity++);

    detail::MPolyGrid A(dd1 + 1, std::vector<MultiPoly>(dd2 + 1, MultiPoly(arity)));
    detail::MPolyGrid B = A;
    for (int i = 0; i <= dd1; ++i)
      for (int j = 0; j <= dd2; ++j) {
        A[i][j] = detail::slot_poly(slots[i * (dd2 + 1) + j], arity);
        B[i][j] = detail::slot_poly(slots[per + i * (dd2 + 1) + j], arity);
      }

    std::vector<detail::MPolyGrid> apow(m + 1), bpow(m + 1);
    apow[0] = bpow[0] = {{MultiPoly::constant(arity, 1)}};
    for (int i = 1; i <= m; ++i) {
      apow[i] = detail::grid_mul(apow[i - 1], A);
      bpow[i] = detail::grid_mul(bpow[i - 1], B);
    }
    detail::MPolyGrid N = detail::grid_zero(arity), D = detail::grid_zero(arity);
    for (int i = 0; i <= m; ++i) {
      detail::MPolyGrid s = detail::grid_mul(apow[i], bpow[m - i]);
      if (!g.num().coeff(i).is_zero()) N = detail::grid_add(N, detail::grid_scale(g.num().coeff(i).as_rat(), s));
      if (!g.den().coeff(i).is_zero()) D = detail::grid_add(D, detail::grid_scale(g.den().coeff(i).as_rat(), s));
    }
    detail::MPolyGrid E = detail::grid_add(detail::grid_mul(N, detail::grid_from_bipoly(f.den(), arity)),
                                           detail::grid_scale(-1, detail::grid_mul(D, detail::grid_from_bipoly(f.num(), arity))));
    std::vector<MultiPoly> gens;
    for (auto& row : E)
      for (auto& e : row)
        if (!e.is_zero()) gens.push_back(std::move(e));
    auto sols = detail::solve_system(gens, arity);
    for (const auto& pt : sols.points) {
      BiPoly An, Bd;
      for (int i = 0; i <= dd1; ++i)
        for (int j = 0; j <= dd2; ++j) {
          Scalar ca = detail::slot_value(slots[i * (dd2 + 1) + j], pt);
          Scalar cb = detail::slot_value(slots[per + i * (dd2 + 1) + j], pt);
          if (!ca.is_zero()) An += BiPoly::monomial(i, j, ca);
          if (!cb.is_zero()) Bd += BiPoly::monomial(i, j, cb);
        }
      if (Bd.is_zero()) continue;
      BiRat h(An, Bd);
      if (compose_uni_bi(g, h) == f) return h;
    }
  }
  return std::nullopt;
}

// inner lift: f(x1,x2) = h(g(x1), x2); linear in h's coefficients, solved over
// the scalars; the returned function's first slot is the new variable y
inline std::optional<BiRat> solve_bivariate_lift_inner(const BiRat& f, const UniRat& g) {
  if (g.is_constant()) throw input_error("nonconstant inner factor required");
  if (!f.is_rational() || !g.is_rational()) throw input_error("rational coefficients required");
  int m = g.degree();
  int d1 = std::max(f.num().deg1(), f.den().deg1());
  int d2 = std::max(f.num().deg2(), f.den().deg2());
  if (d1 % m != 0) return std::nullopt;
  if (m == 1) {
    BiRat h = compose_bi(f, detail::mobius_of(g).inverse().to_unirat(), UniRat::x());
    if (compose_bi(h, g, UniRat::x()) == f) return h;
    return std::nullopt;
  }
  int dy = d1 / m;
  int per = (dy + 1) * (d2 + 1);
  if (2 * per > 24) throw cap_exceeded("degree cap exceeded");

  // substituting y = g homogeneously: column u_ij carries q_f * pg^i qg^(dy-i) * x2^j
  std::vector<UniPoly> G(dy + 1);
  for (int i = 0; i <= dy; ++i) G[i] = g.num().pow(i) * g.den().pow(dy - i);
  int amax = std::max(f.num().deg1(), f.den().deg1()) + dy * m;
  int bmax = std::max(f.num().deg2(), f.den().deg2()) + d2;
  Matrix M((amax + 1) * (bmax + 1), std::vector<Scalar>(2 * per, Scalar(0)));
  auto fill = [&](int col, const BiPoly& poly) {
    for (const auto& [e, c] : poly.terms()) M[e.first * (bmax + 1) + e.second][col] += c;
  };
  for (int i = 0; i <= dy; ++i)
    for (int j = 0; j <= d2; ++j) {
      BiPoly gi = BiPoly::from_uni(G[i], 1) * BiPoly::monomial(0, j, Scalar(1));
      fill(i * (d2 + 1) + j, f.den() * gi);
      fill(per + i * (d2 + 1) + j, -(f.num() * gi));
    }
  auto kernel = nullspace(M, 2 * per);
  if (kernel.empty()) return std::nullopt;
  const auto& k = kernel.front();
  BiPoly U, V;
  for (int i = 0; i <= dy; ++i)
    for (int j = 0; j <= d2; ++j) {
      if (!k[i * (d2 + 1) + j].is_zero()) U += BiPoly::monomial(i, j, k[i * (d2 + 1) + j]);
      if (!k[per + i * (d2 + 1) + j].is_zero()) V += BiPoly::monomial(i, j, k[per + i * (d2 + 1) + j]);
    }
  if (V.is_zero()) return std::nullopt;
  BiRat h(U, V);
  if (compose_bi(h, g, UniRat::x()) == f) return h;
  return std::nullopt;
}

inline std::optional<BiRat> solve_bivariate_lift(const BiRat& f, const UniRat& g, LiftSide side) {
  return side == LiftSide::outer ? solve_bivariate_lift_outer(f, g) : solve_bivariate_lift_inner(f, g);
}

}  // namespace ratalg

#endif
