#ifndef RATALG_DECOMPOSE_HPP
#define RATALG_DECOMPOSE_HPP

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "ratalg/groebner.hpp"
#include "ratalg/lift.hpp"
#include "ratalg/linalg.hpp"
#include "ratalg/mobius.hpp"
#include "ratalg/unirat.hpp"

namespace ratalg {

// f = left o right
struct Decomposition {
  UniRat left, right;
};

namespace detail {

// coefficient slot: either a pinned rational or a free system variable
struct Slot {
  int var = -1;
  Rat value = 0;
  static Slot pinned(const Rat& v) { return {-1, v}; }
  static Slot free(int idx) { return {idx, 0}; }
};

inline MultiPoly slot_poly(const Slot& s, int arity) {
  return s.var >= 0 ? MultiPoly::variable(arity, s.var) : MultiPoly::constant(arity, s.value);
}

inline Scalar slot_value(const Slot& s, const std::vector<Scalar>& point) {
  return s.var >= 0 ? point[s.var] : Scalar(s.value);
}

// coefficient equations of (U/V) o (P/Q) = f after cross-multiplication
inline std::vector<MultiPoly> compose_match_equations(const std::vector<Slot>& u, const std::vector<Slot>& v,
                                                      const std::vector<Slot>& z, const std::vector<Slot>& w,
                                                      int arity, const UniRat& f) {
  int m = (int)u.size() - 1;
  int n = (int)z.size() - 1;
  MPolyX P(n + 1, MultiPoly(arity)), Q(n + 1, MultiPoly(arity));
  for (int k = 0; k <= n; ++k) {
    P[k] = slot_poly(z[k], arity);
    Q[k] = slot_poly(w[k], arity);
  }
  auto S = mixed_powers(P, Q, m);
  MPolyX N = mpx_zero(arity), D = mpx_zero(arity);
  for (int i = 0; i <= m; ++i) {
    N = mpx_add(N, mpx_mul({slot_poly(u[i], arity)}, S[i]));
    D = mpx_add(D, mpx_mul({slot_poly(v[i], arity)}, S[i]));
  }
  MPolyX pf(f.num().degree() + 1, MultiPoly(arity)), qf(f.den().degree() + 1, MultiPoly(arity));
  for (int i = 0; i <= f.num().degree(); ++i) pf[i] = MultiPoly::constant(arity, f.num().coeff(i).as_rat());
  for (int i = 0; i <= f.den().degree(); ++i) qf[i] = MultiPoly::constant(arity, f.den().coeff(i).as_rat());
  MPolyX E = mpx_add(mpx_mul(N, qf), mpx_scale(-1, mpx_mul(D, pf)));
  std::vector<MultiPoly> gens;
  for (auto& e : E)
    if (!e.is_zero()) gens.push_back(std::move(e));
  return gens;
}

struct SystemSolutions {
  std::vector<std::vector<Scalar>> points;
  bool residue_warning = false;
};

inline SystemSolutions solve_system(const std::vector<MultiPoly>& gens, int arity) {
  SystemSolutions out;
  if (arity == 0) {
    for (const auto& g : gens)
      if (!g.is_zero()) return out;
    out.points.push_back({});
    return out;
  }
  bool all_zero = true;
  for (const auto& g : gens)
    if (!g.is_zero()) all_zero = false;
  if (gens.empty() || all_zero) throw calc_error("underdetermined composition system");
  // a graded basis detects inconsistency far faster than lex and seeds the
  // lex computation with an interreduced generating set
  GroebnerBasis pre = buchberger(gens, MonomialOrder{MonomialOrder::grlex});
  for (const auto& g : pre.gens)
    if (!g.is_zero() && g.total_degree() == 0) return out;
  GroebnerBasis gb = buchberger(pre.gens, MonomialOrder{MonomialOrder::lex});
  ZeroDimSolution sol = solve_zero_dim(gb);
  out.points = std::move(sol.points);
  out.residue_warning = !sol.residues.empty();
  return out;
}

inline UniPoly poly_from(const std::vector<Slot>& slots, const std::vector<Scalar>& point) {
  std::vector<Scalar> cs;
  cs.reserve(slots.size());
  for (const auto& s : slots) cs.push_back(slot_value(s, point));
  return UniPoly(std::move(cs));
}

inline void require_plain(const UniRat& f, const char* what) {
  if (!f.is_rational()) throw input_error(std::string(what) + ": rational coefficients required");
}

inline Mobius mobius_of(const UniRat& g) {
  return {g.num().coeff(1), g.num().coeff(0), g.den().coeff(1), g.den().coeff(0)};
}

}  // namespace detail

struct RightSolveReport {
  std::vector<UniRat> inners;  // sorted, deduplicated
  bool residue_warning = false;
};

// every h with f = g o h, by coefficient matching in the two scaling charts
// (top numerator coefficient 1, else top denominator coefficient 1);
// inner degree n forces one of the two to be nonzero
inline RightSolveReport solve_right_all(const UniRat& f, const UniRat& g, bool stop_at_first = false) {
  detail::require_plain(f, "composition target");
  detail::require_plain(g, "outer factor");
  RightSolveReport report;
  if (f.is_constant() || g.is_constant()) throw input_error("nonconstant functions required");
  int m = g.degree();
  if (f.degree() % m != 0) return report;
  int n = f.degree() / m;

  if (m == 1) {
    UniRat h = compose_uni(detail::mobius_of(g).inverse().to_unirat(), f);
    if (compose_uni(g, h) == f) report.inners.push_back(h);
    return report;
  }

  std::vector<detail::Slot> u(m + 1), v(m + 1);
  for (int i = 0; i <= m; ++i) {
    u[i] = detail::Slot::pinned(g.num().coeff(i).as_rat());
    v[i] = detail::Slot::pinned(g.den().coeff(i).as_rat());
  }

  std::set<UniRat> found;
  for (int chart = 0; chart < 2 && !(stop_at_first && !found.empty()); ++chart) {
    std::vector<detail::Slot> z(n + 1), w(n + 1);
    int arity = 0;
    for (int k = 0; k < n; ++k) z[k] = detail::Slot::free(arity++);
    for (int k = 0; k < n; ++k) w[k] = detail::Slot::free(arity++);
    if (chart == 0) {
      z[n] = detail::Slot::pinned(1);
      w[n] = detail::Slot::free(arity++);
    } else {
      z[n] = detail::Slot::pinned(0);
      w[n] = detail::Slot::pinned(1);
    }
    auto gens = detail::compose_match_equations(u, v, z, w, arity, f);
    auto sols = detail::solve_system(gens, arity);
    report.residue_warning = report.residue_warning || sols.residue_warning;
    for (const auto& pt : sols.points) {
      UniPoly P = detail::poly_from(z, pt), Q = detail::poly_from(w, pt);
      if (Q.is_zero()) continue;
      UniRat h(P, Q);
      if (h.degree() == n && compose_uni(g, h) == f) found.insert(h);
    }
  }
  report.inners.assign(found.begin(), found.end());
  return report;
}

inline std::optional<Decomposition> solve_right_component(const UniRat& f, const UniRat& g) {
  auto report = solve_right_all(f, g, true);
  if (report.inners.empty()) return std::nullopt;
  return Decomposition{g, report.inners.front()};
}

// h with f = h o g: linear in h's coefficients, solved by exact nullspace
inline std::optional<Decomposition> solve_left_component(const UniRat& f, const UniRat& g) {
  detail::require_plain(f, "composition target");
  detail::require_plain(g, "inner factor");
  if (f.is_constant() || g.is_constant()) throw input_error("nonconstant functions required");
  int m = g.degree();
  if (f.degree() % m != 0) return std::nullopt;
  int dh = f.degree() / m;

  // columns u_0..u_dh, v_0..v_dh; rows indexed by x-power of
  // q_f * sum u_i s_i - p_f * sum v_i s_i with s_i = pg^i qg^(dh-i)
  std::vector<UniPoly> s(dh + 1);
  for (int i = 0; i <= dh; ++i) s[i] = g.num().pow(i) * g.den().pow(dh - i);
  int rows = f.degree() + dh * m + 1;
  Matrix M(rows, std::vector<Scalar>(2 * (dh + 1), Scalar(0)));
  for (int i = 0; i <= dh; ++i) {
    UniPoly colu = f.den() * s[i];
    UniPoly colv = -(f.num() * s[i]);
    for (int r = 0; r <= colu.degree(); ++r) M[r][i] += colu.coeff(r);
    for (int r = 0; r <= colv.degree(); ++r) M[r][dh + 1 + i] += colv.coeff(r);
  }
  auto kernel = nullspace(M, 2 * (dh + 1));
  if (kernel.empty()) return std::nullopt;
  const auto& k = kernel.front();
  UniPoly U(std::vector<Scalar>(k.begin(), k.begin() + dh + 1));
  UniPoly V(std::vector<Scalar>(k.begin() + dh + 1, k.end()));
  if (V.is_zero()) return std::nullopt;
  UniRat h(U, V);
  if (compose_uni(h, g) != f) return std::nullopt;
  return Decomposition{h, g};
}

// a fractional-linear M with g1 = g2 o g_M, by matching preimage triples
inline std::optional<Mobius> are_equivalent(const UniRat& g1, const UniRat& g2) {
  if (g1.degree() != g2.degree()) return std::nullopt;
  if (g1.is_constant()) {
    if (g1 == g2) return Mobius::identity();
    return std::nullopt;
  }
  Int delta = 0;
  for (const UniPoly* p : {&g1.num(), &g1.den(), &g2.num(), &g2.den()})
    for (int i = 0; i <= p->degree() && delta == 0; ++i)
      if (p->coeff(i).delta() != 0) delta = p->coeff(i).delta();

  // three non-pole sample points
  std::vector<Scalar> xs;
  for (int t = 0; (int)xs.size() < 3; ++t) {
    Scalar x(t);
    if (!g1.den().eval(x).is_zero()) xs.push_back(x);
  }
  std::vector<std::vector<ProjPoint>> pre(3);
  int d2 = g2.degree();
  for (int i = 0; i < 3; ++i) {
    Scalar v = g1.eval(xs[i]);
    UniPoly probe = g2.num() - v * g2.den();
    if (probe.is_zero()) return std::nullopt;  // g2 constant, handled above
    if (probe.degree() >= 1) {
      auto ext = roots_in_field(probe, delta);
      for (const Scalar& r : ext.roots) pre[i].push_back(ProjPoint::at(r));
    }
    if (probe.degree() < d2) pre[i].push_back(ProjPoint::infinity());
    if (pre[i].empty()) return std::nullopt;
  }
  std::array<ProjPoint, 3> src = {ProjPoint::at(xs[0]), ProjPoint::at(xs[1]), ProjPoint::at(xs[2])};
  for (const auto& p1 : pre[0])
    for (const auto& p2 : pre[1])
      for (const auto& p3 : pre[2]) {
        if (p1 == p2 || p1 == p3 || p2 == p3) continue;
        Mobius M = mobius_through(src, {p1, p2, p3});
        if (!M.invertible()) continue;
        if (compose_uni(g2, M.to_unirat()) == g1) return M;
      }
  return std::nullopt;
}

// All decompositions f = g o h with deg g, deg h >= 2, one representative per
// equivalence class.  The inner factor is rigidly gauged: h(0) = 0, leading
// structure pinned per shape, so each class solves to exactly one point.
inline std::vector<Decomposition> enumerate_decompositions(const UniRat& f) {
  detail::require_plain(f, "decomposition target");
  int d = f.degree();
  if (d > 8) throw cap_exceeded("degree cap exceeded");
  std::vector<Decomposition> out;
  if (d <= 3) {
    if (d >= 1) return out;  // prime or trivial degree
    throw input_error("nonconstant function required");
  }

  std::set<std::pair<UniRat, UniRat>> seen;
  for (int m = 2; m * 2 <= d; ++m) {
    if (d % m != 0) continue;
    int n = d / m;
    if (n < 2) continue;

    struct Shape {
      std::vector<detail::Slot> z, w;
      int frees;
    };
    std::vector<Shape> shapes;
    // shape A: deg num h = n, denominator degree dq enumerated below it
    for (int dq = 0; dq < n; ++dq) {
      Shape sh;
      sh.z.assign(n + 1, detail::Slot::pinned(0));
      sh.w.assign(n + 1, detail::Slot::pinned(0));
      int idx = 0;
      for (int k = 1; k < n; ++k) sh.z[k] = detail::Slot::free(idx++);
      sh.z[n] = detail::Slot::pinned(1);
      for (int k = 0; k < dq; ++k) sh.w[k] = detail::Slot::free(idx++);
      sh.w[dq] = detail::Slot::pinned(1);
      sh.frees = idx;
      shapes.push_back(std::move(sh));
    }
    // shape B: deg den h = n, numerator degree dp below it; w_dp pinned to 0
    // to cut the residual stabilizer
    for (int dp = 1; dp < n; ++dp) {
      Shape sh;
      sh.z.assign(n + 1, detail::Slot::pinned(0));
      sh.w.assign(n + 1, detail::Slot::pinned(0));
      int idx = 0;
      for (int k = 1; k < dp; ++k) sh.z[k] = detail::Slot::free(idx++);
      sh.z[dp] = detail::Slot::pinned(1);
      for (int k = 0; k < n; ++k)
        if (k != dp) sh.w[k] = detail::Slot::free(idx++);
      sh.w[n] = detail::Slot::pinned(1);
      sh.frees = idx;
      shapes.push_back(std::move(sh));
    }

    for (const auto& sh : shapes) {
      for (int gchart = 0; gchart < 2; ++gchart) {
        int arity = sh.frees;
        std::vector<detail::Slot> z = sh.z, w = sh.w;
        // renumber h's frees first, then g's
        std::vector<detail::Slot> u(m + 1), v(m + 1);
        for (int i = 0; i < m; ++i) u[i] = detail::Slot::free(arity++);
        for (int i = 0; i < m; ++i) v[i] = detail::Slot::free(arity++);
        if (gchart == 0) {
          u[m] = detail::Slot::pinned(1);
          v[m] = detail::Slot::free(arity++);
        } else {
          u[m] = detail::Slot::pinned(0);
          v[m] = detail::Slot::pinned(1);
        }
        auto gens = detail::compose_match_equations(u, v, z, w, arity, f);
        auto sols = detail::solve_system(gens, arity);
        for (const auto& pt : sols.points) {
          UniPoly P = detail::poly_from(z, pt), Q = detail::poly_from(w, pt);
          UniPoly U = detail::poly_from(u, pt), V = detail::poly_from(v, pt);
          if (Q.is_zero() || V.is_zero()) continue;
          UniRat h(P, Q), g(U, V);
          if (h.degree() != n || g.degree() != m) continue;
          if (compose_uni(g, h) != f) continue;
          if (seen.insert({g, h}).second) out.push_back({g, h});
        }
      }
    }
  }

  Int cap = 1;
  for (int i = 0; i < d; ++i) cap *= 2;
  if ((Int)out.size() > cap) throw calc_error("decomposition class bound exceeded");
  std::sort(out.begin(), out.end(), [](const Decomposition& a, const Decomposition& b) {
    if (a.left.degree() != b.left.degree()) return a.left.degree() < b.left.degree();
    if (a.left != b.left) return a.left < b.left;
    return a.right < b.right;
  });
  return out;
}

struct DominatingTriple {
  UniRat g, h1, h2;
};

// common left component of maximal degree, searched in decreasing degree over
// f1's left components plus f1 itself and the identity
inline DominatingTriple dominating_function(const UniRat& f1, const UniRat& f2) {
  if (f1.is_constant() || f2.is_constant()) throw input_error("nonconstant functions required");
  if (f1.degree() > 8 || f2.degree() > 8) throw cap_exceeded("degree cap exceeded");

  std::vector<std::pair<UniRat, UniRat>> candidates;  // (g, h1)
  candidates.emplace_back(f1, UniRat::x());
  for (const auto& d : enumerate_decompositions(f1)) candidates.emplace_back(d.left, d.right);
  candidates.emplace_back(UniRat::x(), f1);
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const auto& a, const auto& b) { return a.first.degree() > b.first.degree(); });

  for (const auto& [g, h1] : candidates) {
    if (f2.degree() % g.degree() != 0) continue;
    auto r = solve_right_component(f2, g);
    if (r) return {g, h1, r->right};
  }
  throw calc_error("identity candidate unexpectedly failed");
}

}  // namespace ratalg

#endif
