#ifndef RATALG_GEOMETRY_HPP
#define RATALG_GEOMETRY_HPP

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "ratalg/birat.hpp"
#include "ratalg/roots.hpp"

namespace ratalg {

// Ordered evaluation points, pairwise distinct.
struct EvalSet {
  std::vector<Scalar> elements;
  EvalSet() = default;
  explicit EvalSet(std::vector<Scalar> v) : elements(std::move(v)) {
    std::set<Scalar> seen;
    for (const auto& e : elements)
      if (!seen.insert(e).second) throw input_error("evaluation set elements must be distinct");
  }
  int size() const { return (int)elements.size(); }
};

struct SimpleGraph {
  int vertices = 0;
  std::set<std::pair<int, int>> edges;  // normalized i < j
  void add_edge(int i, int j) {
    if (i == j) throw input_error("loop edge");
    if (i < 0 || j < 0 || i >= vertices || j >= vertices) throw input_error("vertex out of range");
    edges.insert({std::min(i, j), std::max(i, j)});
  }
  bool has_edge(int i, int j) const { return edges.count({std::min(i, j), std::max(i, j)}) > 0; }
  int max_degree() const {
    std::vector<int> d(vertices, 0);
    for (const auto& [i, j] : edges) {
      ++d[i];
      ++d[j];
    }
    int m = 0;
    for (int x : d) m = std::max(m, x);
    return m;
  }
};

enum class CurveVariant { C1, C2 };

// Plane curve crossing two one-variable slices of f; C1 slices the second
// argument, C2 the first.
struct CurveSpec {
  BiPoly defining;
  BiRat f;
  std::pair<Scalar, Scalar> at;
  CurveVariant variant;
};

namespace detail {

// zero exactly when both slices are one equal constant
inline BiPoly slice_cross(const BiRat& f, CurveVariant variant, const std::pair<Scalar, Scalar>& at) {
  int axis = variant == CurveVariant::C1 ? 2 : 1;
  UniRat s1 = specialize(f, axis, at.first);
  UniRat s2 = specialize(f, axis, at.second);
  return cross_poly(s1, s2);
}

}  // namespace detail

inline CurveSpec curve(const BiRat& f, CurveVariant variant, const std::pair<Scalar, Scalar>& at) {
  BiPoly defining = detail::slice_cross(f, variant, at);
  if (defining.is_zero()) throw input_error("degenerate curve");
  return {defining, f, at, variant};
}

// every ordered pair over `values`; pole and degenerate pairs are skipped and
// counted so experiments degrade loudly
inline std::vector<CurveSpec> curve_family(const BiRat& f, CurveVariant variant, const EvalSet& values,
                                           int* skipped = nullptr) {
  std::vector<CurveSpec> out;
  int miss = 0;
  for (const auto& a : values.elements)
    for (const auto& b : values.elements) {
      try {
        out.push_back(curve(f, variant, {a, b}));
      } catch (const input_error&) {
        ++miss;
      }
    }
  if (skipped) *skipped = miss;
  return out;
}

// membership of a1 in the C1 curve at a2 against membership of a2 in the C2
// curve at a1; with all four grid points in the domain both reduce to the same
// value equation, so this must always return true
inline bool duality_check(const BiRat& f, const std::pair<Scalar, Scalar>& a1,
                          const std::pair<Scalar, Scalar>& a2) {
  for (const Scalar& x : {a1.first, a1.second})
    for (const Scalar& y : {a2.first, a2.second})
      if (!f.eval_opt(x, y)) throw input_error("point outside the domain");
  BiPoly d1 = detail::slice_cross(f, CurveVariant::C1, a2);
  BiPoly d2 = detail::slice_cross(f, CurveVariant::C2, a1);
  // a vanishing cross polynomial puts every point on the curve
  bool m1 = d1.eval(a1.first, a1.second).is_zero();
  bool m2 = d2.eval(a2.first, a2.second).is_zero();
  return m1 == m2;
}

namespace detail {

// value -> multiplicity over the full grid, keyed by canonical scalars
inline std::map<Scalar, long long> value_counts(const BiRat& h, const EvalSet& A1, const EvalSet& A2) {
  std::map<Scalar, long long> m;
  for (const auto& a1 : A1.elements)
    for (const auto& a2 : A2.elements) {
      auto v = h.eval_opt(a1, a2);
      if (!v) throw input_error("grid point outside the domain");
      ++m[*v];
    }
  return m;
}

}  // namespace detail

// number of value-collision quadruples (a1, a2, a1', a2'), i.e. the sum of
// squared value multiplicities
inline long long quadruple_count(const BiRat& h, const EvalSet& A1, const EvalSet& A2) {
  long long q = 0;
  for (const auto& [v, m] : detail::value_counts(h, A1, A2)) q += m * m;
  return q;
}

// O(n^4) cross-check with no value hashing
inline long long quadruple_count_brute(const BiRat& h, const EvalSet& A1, const EvalSet& A2) {
  std::vector<std::vector<Scalar>> grid(A1.size(), std::vector<Scalar>(A2.size()));
  for (int i = 0; i < A1.size(); ++i)
    for (int j = 0; j < A2.size(); ++j) {
      auto v = h.eval_opt(A1.elements[i], A2.elements[j]);
      if (!v) throw input_error("grid point outside the domain");
      grid[i][j] = *v;
    }
  long long q = 0;
  for (int i = 0; i < A1.size(); ++i)
    for (int j = 0; j < A2.size(); ++j)
      for (int k = 0; k < A1.size(); ++k)
        for (int l = 0; l < A2.size(); ++l)
          if (grid[i][j] == grid[k][l]) ++q;
  return q;
}

inline long long image_count(const BiRat& h, const EvalSet& A1, const EvalSet& A2) {
  return (long long)detail::value_counts(h, A1, A2).size();
}

// (|A1||A2|)^2 / Q; the image size is at least this by Cauchy-Schwarz
inline Rat cs_lower_bound(const BiRat& h, const EvalSet& A1, const EvalSet& A2) {
  Int n = Int(A1.size()) * Int(A2.size());
  return Rat(n * n, Int(quadruple_count(h, A1, A2)));
}

// (point, curve) incidence count over the grid B1 x B2; the family is indexed,
// so equal curves from distinct pairs count separately
inline long long incidences(const EvalSet& B1, const EvalSet& B2, const std::vector<CurveSpec>& curves) {
  long long count = 0;
  for (const auto& c : curves)
    for (const auto& b1 : B1.elements)
      for (const auto& b2 : B2.elements)
        if (c.defining.eval(b1, b2).is_zero()) ++count;
  return count;
}

// edge iff the defining polynomials share a factor
inline SimpleGraph component_sharing_graph(const std::vector<CurveSpec>& curves) {
  SimpleGraph g;
  g.vertices = (int)curves.size();
  for (int i = 0; i < g.vertices; ++i)
    for (int j = i + 1; j < g.vertices; ++j)
      if (poly_gcd_bivariate(curves[i].defining, curves[j].defining).total_degree() > 0) g.add_edge(i, j);
  return g;
}

// vertices in index order, each takes the lowest class no neighbor holds;
// uses at most max_degree + 1 classes
inline std::vector<std::vector<int>> greedy_partition(const SimpleGraph& g) {
  std::vector<int> cls(g.vertices, -1);
  std::vector<std::vector<int>> out;
  for (int v = 0; v < g.vertices; ++v) {
    std::set<int> used;
    for (int u = 0; u < v; ++u)
      if (g.has_edge(u, v)) used.insert(cls[u]);
    int k = 0;
    while (used.count(k)) ++k;
    if (k == (int)out.size()) out.emplace_back();
    out[k].push_back(v);
    cls[v] = k;
  }
  return out;
}

namespace detail {

inline Int curve_delta(const BiPoly& p, const BiPoly& q) {
  for (const BiPoly* c : {&p, &q})
    for (const auto& [e, s] : c->terms())
      if (!s.is_rational()) return s.delta();
  return 0;
}

}  // namespace detail

// intersection bound deg * deg for curves without a shared component; common
// points are located over the working field by resultant plus back-substitution
inline bool bezout_check(const CurveSpec& c1, const CurveSpec& c2) {
  const BiPoly &P = c1.defining, &Q = c2.defining;
  if (P.is_zero() || Q.is_zero()) throw input_error("zero defining polynomial");
  if (poly_gcd_bivariate(P, Q).total_degree() > 0) return true;  // bound holds vacuously
  Int delta = detail::curve_delta(P, Q);

  std::vector<Scalar> cand;
  if (P.deg1() > 0 && Q.deg1() > 0) {
    UniPoly r = resultant(P, Q, 1);
    if (r.is_zero()) throw calc_error("vanishing resultant without a shared component");
    if (r.degree() > 0) cand = roots_in_field(r, delta).roots;
  } else if (P.deg1() == 0) {
    UniPoly u = P.substitute(1, Scalar(0));
    if (u.degree() > 0) cand = roots_in_field(u, delta).roots;
  } else {
    UniPoly u = Q.substitute(1, Scalar(0));
    if (u.degree() > 0) cand = roots_in_field(u, delta).roots;
  }

  std::set<std::pair<Scalar, Scalar>> pts;
  for (const auto& b2 : std::set<Scalar>(cand.begin(), cand.end())) {
    UniPoly p1 = P.substitute(2, b2), p2 = Q.substitute(2, b2);
    if (p1.is_zero() && p2.is_zero()) return false;  // shared vertical line: bound cannot hold
    UniPoly g = p1.is_zero() ? p2 : p2.is_zero() ? p1 : UniPoly::gcd(p1, p2);
    if (g.degree() <= 0) continue;
    for (const auto& b1 : roots_in_field(g, delta).roots) pts.insert({b1, b2});
  }
  return (long long)pts.size() <= (long long)P.total_degree() * Q.total_degree();
}

}  // namespace ratalg

#endif
