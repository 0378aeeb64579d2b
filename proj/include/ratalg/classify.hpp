#ifndef RATALG_CLASSIFY_HPP
#define RATALG_CLASSIFY_HPP

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "ratalg/bilift.hpp"
#include "ratalg/birat.hpp"
#include "ratalg/decompose.hpp"

namespace ratalg {

struct Mat2 {
  Scalar a, b, c, d;  // rows [a b; c d]
  static Mat2 identity() { return {Scalar(1), Scalar(0), Scalar(0), Scalar(1)}; }
  Scalar det() const { return a * d - b * c; }
  Scalar trace() const { return a + d; }
  bool is_scalar() const { return b.is_zero() && c.is_zero() && a == d; }
  Mat2 operator*(const Mat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
  Mat2 inverse() const {
    Scalar dt = det();
    if (dt.is_zero()) throw calc_error("singular matrix");
    Scalar i = Scalar(1) / dt;
    return {d * i, -b * i, -c * i, a * i};
  }
  Mobius to_mobius() const { return {a, b, c, d}; }
  friend bool operator==(const Mat2& x, const Mat2& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
};

// h as a Moebius map in x1 whose matrix is X*x2 + Y
struct BilinearPencil {
  Mat2 X, Y;
};

inline BilinearPencil extract_pencil(const BiRat& h) {
  if (h.num().deg1() > 1 || h.num().deg2() > 1 || h.den().deg1() > 1 || h.den().deg2() > 1)
    throw input_error("bidegree exceeds (1,1)");
  auto cf = [](const BiPoly& p, int e1, int e2) { return p.coeff(e1, e2); };
  Mat2 X{cf(h.num(), 1, 1), cf(h.num(), 0, 1), cf(h.den(), 1, 1), cf(h.den(), 0, 1)};
  Mat2 Y{cf(h.num(), 1, 0), cf(h.num(), 0, 0), cf(h.den(), 1, 0), cf(h.den(), 0, 0)};
  return {X, Y};
}

// smallest nonnegative integer shift of x2 making the constant matrix of the
// pencil invertible; at most two shifts can fail when h depends on x1
inline std::pair<Scalar, BiRat> shift_normalize(const BiRat& h) {
  if (std::max(h.num().deg1(), h.den().deg1()) != 1) throw input_error("first variable must appear");
  for (int a = 0; a <= 3; ++a) {
    BiRat ha(h.num().shift_x2(Scalar(a)), h.den().shift_x2(Scalar(a)));
    if (!extract_pencil(ha).Y.det().is_zero()) return {Scalar(a), ha};
  }
  throw calc_error("no invertible shift found");
}

enum class JordanCase { I, II, III };

struct JordanData {
  Mat2 H, J;
  JordanCase kind;
  Scalar discriminant;
};

enum class ClassifyMode { real, complex };

namespace detail {

// sqrt of a nonzero rational as s or s*sqrt(delta) with delta squarefree
inline Scalar rat_sqrt_scalar(const Rat& r) {
  Int nd = rat_num(r) * rat_den(r);
  Int sf, co;
  squarefree_split(nd, sf, co);
  Rat s(co, rat_den(r));
  if (sf == 1) return Scalar(s);
  return Scalar(Rat(0), s, sf);
}

inline std::pair<Scalar, Scalar> eigvec(const Mat2& Z, const Scalar& lam) {
  if (!Z.b.is_zero()) return {Z.b, lam - Z.a};
  if (!Z.c.is_zero()) return {lam - Z.d, Z.c};
  return lam == Z.a ? std::pair{Scalar(1), Scalar(0)} : std::pair{Scalar(0), Scalar(1)};
}

}  // namespace detail

inline JordanData jordan_2x2(const Mat2& Z, ClassifyMode mode) {
  for (const Scalar* e : {&Z.a, &Z.b, &Z.c, &Z.d})
    if (!e->is_rational()) throw input_error("rational matrix required");
  Rat tr = Z.trace().as_rat(), de = Z.det().as_rat();
  Rat disc = tr * tr - 4 * de;

  JordanData out;
  out.discriminant = Scalar(disc);
  if (disc == 0) {
    Scalar lam(tr / 2);
    if (Z.is_scalar()) {
      out.kind = JordanCase::II;
      out.J = Z;
      out.H = Mat2::identity();
    } else {
      out.kind = JordanCase::I;
      out.J = {lam, Scalar(1), Scalar(0), lam};
      Mat2 N{Z.a - lam, Z.b, Z.c, Z.d - lam};
      // column v with Nv != 0, then H = [Nv | v]
      std::pair<Scalar, Scalar> v = (!N.a.is_zero() || !N.c.is_zero()) ? std::pair{Scalar(1), Scalar(0)}
                                                                       : std::pair{Scalar(0), Scalar(1)};
      std::pair<Scalar, Scalar> w{N.a * v.first + N.b * v.second, N.c * v.first + N.d * v.second};
      out.H = {w.first, v.first, w.second, v.second};
    }
  } else if (disc > 0 || mode == ClassifyMode::complex) {
    out.kind = JordanCase::II;
    Scalar root = detail::rat_sqrt_scalar(disc);
    Scalar l1 = (Scalar(tr) + root) / Scalar(2), l2 = (Scalar(tr) - root) / Scalar(2);
    out.J = {l1, Scalar(0), Scalar(0), l2};
    auto v1 = detail::eigvec(Z, l1), v2 = detail::eigvec(Z, l2);
    out.H = {v1.first, v2.first, v1.second, v2.second};
  } else {
    out.kind = JordanCase::III;
    Scalar b = detail::rat_sqrt_scalar(-disc) / Scalar(2);
    Scalar a(tr / 2);
    out.J = {a, b, -b, a};
    // real and imaginary parts of an eigenvector for a + ib; H = [vr | vi]
    std::pair<Scalar, Scalar> vr, vi;
    if (!Z.b.is_zero()) {
      vr = {Z.b, a - Z.a};
      vi = {Scalar(0), b};
    } else {
      vr = {a - Z.d, Z.c};  // Z.c != 0 here, else disc >= 0
      vi = {b, Scalar(0)};
    }
    out.H = {vr.first, vi.first, vr.second, vi.second};
  }
  if (out.H.det().is_zero()) throw calc_error("transition matrix degenerate");
  if (!(out.H * out.J * out.H.inverse() == Z)) throw calc_error("similarity verification failed");
  return out;
}

enum class FormKind { additive, multiplicative, tangent };

struct SpecialForm {
  FormKind kind;
  UniRat g, l1, l2;
};

inline bool verify_form(const BiRat& f, const SpecialForm& sf) {
  BiRat l1b(BiPoly::from_uni(sf.l1.num(), 1), BiPoly::from_uni(sf.l1.den(), 1));
  BiRat l2b(BiPoly::from_uni(sf.l2.num(), 2), BiPoly::from_uni(sf.l2.den(), 2));
  BiRat inner;
  if (sf.kind == FormKind::additive) {
    inner = l1b + l2b;
  } else if (sf.kind == FormKind::multiplicative) {
    inner = l1b * l2b;
  } else {
    BiRat den = BiRat(BiPoly(Scalar(1))) - l1b * l2b;
    if (den.num().is_zero()) return false;
    inner = (l1b + l2b) / den;
  }
  BiRat recomposed;
  try {
    recomposed = compose_uni_bi(sf.g, inner);
  } catch (const calc_error&) {
    return false;
  }
  // interpolation pre-filter over an integer grid, then the symbolic check
  int D = 1;
  for (const BiPoly* p : {&f.num(), &f.den(), &recomposed.num(), &recomposed.den()})
    D = std::max(D, p->total_degree());
  for (int x = 0; x <= 2 * D; ++x)
    for (int y = 0; y <= 2 * D; ++y) {
      auto ef = f.eval_opt(Scalar(x), Scalar(y));
      auto er = recomposed.eval_opt(Scalar(x), Scalar(y));
      if (ef.has_value() != er.has_value()) return false;
      if (ef && er && *ef != *er) return false;
    }
  return recomposed == f;
}

// classification of f = gdot(hdot(l1dot(x1), l2dot(x2))) with bilinear hdot,
// via the pencil's Jordan form; every returned form is re-verified
inline SpecialForm classify_bilinear(const UniRat& gdot, const BiRat& hdot, const UniRat& l1dot,
                                     const UniRat& l2dot, ClassifyMode mode = ClassifyMode::real) {
  if (hdot.num().deg1() > 1 || hdot.num().deg2() > 1 || hdot.den().deg1() > 1 || hdot.den().deg2() > 1)
    throw input_error("bidegree exceeds (1,1)");
  BiRat f = compose_uni_bi(gdot, compose_bi(hdot, l1dot, l2dot));

  int dh1 = std::max(hdot.num().deg1(), hdot.den().deg1());
  int dh2 = std::max(hdot.num().deg2(), hdot.den().deg2());
  if (dh1 == 0 || dh2 == 0) {
    // one-variable collapse: constant side keeps the additive identity valid
    int dead = dh1 == 0 ? 1 : 2;
    UniRat u;
    for (int c = 0;; ++c) {
      try {
        u = specialize(hdot, dead, Scalar(c));
        break;
      } catch (const input_error&) {
        if (c > 4) throw;
      }
    }
    SpecialForm sf;
    sf.kind = FormKind::additive;
    sf.g = gdot;
    if (dead == 1) {
      sf.l1 = UniRat(Scalar(0));
      sf.l2 = compose_uni(u, l2dot);
    } else {
      sf.l1 = compose_uni(u, l1dot);
      sf.l2 = UniRat(Scalar(0));
    }
    if (!verify_form(f, sf)) throw calc_error("classification verification failed");
    return sf;
  }

  auto [shift, ha] = shift_normalize(hdot);
  BilinearPencil pen = extract_pencil(ha);
  Mat2 Z = pen.Y.inverse() * pen.X;
  JordanData jd = jordan_2x2(Z, mode);

  UniRat g = compose_uni(compose_uni(gdot, pen.Y.to_mobius().to_unirat()), jd.H.to_mobius().to_unirat());
  UniRat l1 = compose_uni(jd.H.to_mobius().inverse().to_unirat(), l1dot);
  UniRat t = l2dot - UniRat(shift);

  SpecialForm sf;
  sf.g = g;
  sf.l1 = l1;
  if (jd.kind == JordanCase::I) {
    sf.kind = FormKind::additive;
    UniRat lhat(UniPoly({Scalar(0), Scalar(1)}), UniPoly({Scalar(1), jd.J.a}));
    sf.l2 = compose_uni(lhat, t);
  } else if (jd.kind == JordanCase::II) {
    sf.kind = FormKind::multiplicative;
    UniRat lhat(UniPoly({Scalar(1), jd.J.a}), UniPoly({Scalar(1), jd.J.d}));
    sf.l2 = compose_uni(lhat, t);
  } else {
    sf.kind = FormKind::tangent;
    // J*t + I acts as u -> (u + s)/(1 - s*u) with s = b*t/(a*t+1)
    UniRat lhat(UniPoly({Scalar(0), jd.J.b}), UniPoly({Scalar(1), jd.J.a}));
    sf.l2 = compose_uni(lhat, t);
    if (!verify_form(f, sf)) sf.l2 = -sf.l2;
  }
  if (!verify_form(f, sf)) throw calc_error("classification verification failed");
  return sf;
}

struct ClassifyBounds {
  int max_deg = 6;
  int max_outer = 2;
  int max_inner = 2;
};

namespace detail {

// smallest integer slice keeping the generic degree in the surviving variable
inline UniRat generic_slice(const BiRat& f, int axis, int want_deg, Scalar* used = nullptr) {
  for (int c = 0; c < 200; ++c) {
    try {
      UniRat s = specialize(f, axis, Scalar(c));
      if (s.degree() != want_deg) continue;
      if (used) *used = Scalar(c);
      return s;
    } catch (const input_error&) {
    }
  }
  throw calc_error("no generic slice found");
}

// candidate inner functions for one slot, up to the Moebius freedom the
// bilinear middle absorbs
inline std::vector<UniRat> inner_candidates(const BiRat& f, int slot, int dg, int dd, int full_deg) {
  if (dd == 1) return {UniRat::x()};
  UniRat slice = generic_slice(f, slot == 1 ? 2 : 1, full_deg);
  if (dg == 1) return {slice};
  std::vector<UniRat> out;
  for (const auto& d : enumerate_decompositions(slice))
    if (d.right.degree() == dd && d.left.degree() == dg) out.push_back(d.right);
  return out;
}

// middle layer B with f = B(u(x1), v(x2)) and bidegree (dg, dg): linear
inline std::optional<BiRat> separated_middle(const BiRat& f, const UniRat& u, const UniRat& v, int dg) {
  int per = (dg + 1) * (dg + 1);
  std::vector<UniPoly> pu(dg + 1), pv(dg + 1);
  for (int i = 0; i <= dg; ++i) {
    pu[i] = u.num().pow(i) * u.den().pow(dg - i);
    pv[i] = v.num().pow(i) * v.den().pow(dg - i);
  }
  int amax = std::max(f.num().deg1(), f.den().deg1()) + dg * u.degree();
  int bmax = std::max(f.num().deg2(), f.den().deg2()) + dg * v.degree();
  Matrix M((amax + 1) * (bmax + 1), std::vector<Scalar>(2 * per, Scalar(0)));
  auto fill = [&](int col, const BiPoly& poly) {
    for (const auto& [e, c] : poly.terms()) M[e.first * (bmax + 1) + e.second][col] += c;
  };
  for (int i = 0; i <= dg; ++i)
    for (int j = 0; j <= dg; ++j) {
      BiPoly base = BiPoly::from_uni(pu[i], 1) * BiPoly::from_uni(pv[j], 2);
      fill(i * (dg + 1) + j, f.den() * base);
      fill(per + i * (dg + 1) + j, -(f.num() * base));
    }
  auto kernel = nullspace(M, 2 * per);
  if (kernel.empty()) return std::nullopt;
  const auto& k = kernel.front();
  BiPoly N, D;
  for (int i = 0; i <= dg; ++i)
    for (int j = 0; j <= dg; ++j) {
      if (!k[i * (dg + 1) + j].is_zero()) N += BiPoly::monomial(i, j, k[i * (dg + 1) + j]);
      if (!k[per + i * (dg + 1) + j].is_zero()) D += BiPoly::monomial(i, j, k[per + i * (dg + 1) + j]);
    }
  if (D.is_zero()) return std::nullopt;
  BiRat B(N, D);
  if (compose_bi(B, u, v) == f) return B;
  return std::nullopt;
}

// B = gdot o hdot with hdot bilinear, gauged so hdot(y1, c) = y1
inline std::optional<std::pair<UniRat, BiRat>> split_outer_bilinear(const BiRat& B, int dg) {
  if (dg == 1) {
    if (B.num().deg1() > 1 || B.num().deg2() > 1 || B.den().deg1() > 1 || B.den().deg2() > 1)
      return std::nullopt;
    return std::pair{UniRat::x(), B};
  }
  Scalar c;
  UniRat gdot = generic_slice(B, 2, dg, &c);
  Rat cr = c.as_rat();

  int arity = 4;
  auto var = [&](int i) { return MultiPoly::variable(arity, i); };
  auto con = [&](const Rat& r) { return MultiPoly::constant(arity, r); };
  MPolyGrid hn = {{con(0) - con(cr) * var(1), var(1)}, {con(1) - con(cr) * var(0), var(0)}};
  MPolyGrid hd = {{con(1) - con(cr) * var(3), var(3)}, {con(0) - con(cr) * var(2), var(2)}};

  std::vector<MPolyGrid> np(dg + 1), dp(dg + 1);
  np[0] = dp[0] = {{con(1)}};
  for (int i = 1; i <= dg; ++i) {
    np[i] = grid_mul(np[i - 1], hn);
    dp[i] = grid_mul(dp[i - 1], hd);
  }
  MPolyGrid N = grid_zero(arity), D = grid_zero(arity);
  for (int i = 0; i <= dg; ++i) {
    MPolyGrid s = grid_mul(np[i], dp[dg - i]);
    if (!gdot.num().coeff(i).is_zero()) N = grid_add(N, grid_scale(gdot.num().coeff(i).as_rat(), s));
    if (!gdot.den().coeff(i).is_zero()) D = grid_add(D, grid_scale(gdot.den().coeff(i).as_rat(), s));
  }
  MPolyGrid E = grid_add(grid_mul(N, grid_from_bipoly(B.den(), arity)),
                         grid_scale(-1, grid_mul(D, grid_from_bipoly(B.num(), arity))));
  std::vector<MultiPoly> gens;
  for (auto& row : E)
    for (auto& e : row)
      if (!e.is_zero()) gens.push_back(std::move(e));
  auto sols = solve_system(gens, arity);
  for (const auto& pt : sols.points) {
    Scalar a1 = pt[0], a2 = pt[1], a3 = pt[2], a4 = pt[3];
    BiPoly num = a1 * BiPoly::monomial(1, 1, Scalar(1)) + (Scalar(1) - c * a1) * BiPoly::monomial(1, 0, Scalar(1)) +
                 a2 * BiPoly::monomial(0, 1, Scalar(1)) + (-(c * a2)) * BiPoly::monomial(0, 0, Scalar(1));
    BiPoly den = a3 * BiPoly::monomial(1, 1, Scalar(1)) + (-(c * a3)) * BiPoly::monomial(1, 0, Scalar(1)) +
                 a4 * BiPoly::monomial(0, 1, Scalar(1)) + (Scalar(1) - c * a4) * BiPoly::monomial(0, 0, Scalar(1));
    if (den.is_zero()) continue;
    BiRat hdot(num, den);
    if (compose_uni_bi(gdot, hdot) == B) return std::pair{gdot, hdot};
  }
  return std::nullopt;
}

}  // namespace detail

// bounded search for f = gdot(hdot(l1dot(x1), l2dot(x2))), then the pencil
// classification; "none" certifies only exhaustion of the bounded search
inline std::optional<SpecialForm> classify_full(const BiRat& f, const ClassifyBounds& bounds = {},
                                                ClassifyMode mode = ClassifyMode::real) {
  if (!f.is_rational()) throw input_error("rational coefficients required");
  int D1 = f.deg1(), D2 = f.deg2();
  if (std::max(D1, D2) > bounds.max_deg) throw cap_exceeded("degree cap exceeded");

  if (D1 == 0 || D2 == 0) {
    SpecialForm sf;
    sf.kind = FormKind::additive;
    if (D1 == 0) {
      sf.g = detail::generic_slice(f, 1, D2);
      sf.l1 = UniRat(Scalar(0));
      sf.l2 = UniRat::x();
    } else {
      sf.g = detail::generic_slice(f, 2, D1);
      sf.l1 = UniRat::x();
      sf.l2 = UniRat(Scalar(0));
    }
    if (!verify_form(f, sf)) throw calc_error("degenerate form verification failed");
    return sf;
  }

  std::vector<std::pair<int, int>> order;  // (unknown metric, dg)
  for (int dg = 1; dg <= bounds.max_outer; ++dg) {
    if (D1 % dg != 0 || D2 % dg != 0) continue;
    int d1 = D1 / dg, d2 = D2 / dg;
    if (d1 > bounds.max_inner || d2 > bounds.max_inner) continue;
    order.emplace_back(dg + d1 + d2, dg);
  }
  std::sort(order.begin(), order.end());

  for (auto [metric, dg] : order) {
    int d1 = D1 / dg, d2 = D2 / dg;
    std::vector<UniRat> c1, c2;
    try {
      c1 = detail::inner_candidates(f, 1, dg, d1, D1);
      c2 = detail::inner_candidates(f, 2, dg, d2, D2);
    } catch (const calc_error&) {
      continue;
    }
    for (const auto& u : c1)
      for (const auto& v : c2) {
        try {
          auto B = detail::separated_middle(f, u, v, dg);
          if (!B) continue;
          auto split = detail::split_outer_bilinear(*B, dg);
          if (!split) continue;
          return classify_bilinear(split->first, split->second, u, v, mode);
        } catch (const calc_error&) {
          continue;
        }
      }
  }
  return std::nullopt;
}

}  // namespace ratalg

#endif
