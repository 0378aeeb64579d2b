#ifndef RATALG_GROEBNER_HPP
#define RATALG_GROEBNER_HPP

#include <algorithm>
#include <set>
#include <vector>

#include "ratalg/multipoly.hpp"
#include "ratalg/roots.hpp"
#include "ratalg/unipoly.hpp"

namespace ratalg {

struct GroebnerBasis {
  std::vector<MultiPoly> gens;
  MonomialOrder order;
  bool reduced = false;
};

// full normal form: no term of the result is divisible by any basis leading
// term.  Head terms only ever shrink, so irreducible heads move straight to
// the result.
inline MultiPoly reduce_full(MultiPoly p, const std::vector<MultiPoly>& basis, const MonomialOrder& ord) {
  std::vector<std::pair<Mono, Rat>> lts;
  lts.reserve(basis.size());
  for (const auto& b : basis) lts.push_back(b.leading(ord));
  MultiPoly r(p.arity());
  const MultiPoly one = MultiPoly::constant(p.arity(), 1);
  while (!p.is_zero()) {
    auto [m, c] = p.leading(ord);
    bool hit = false;
    for (size_t i = 0; i < basis.size(); ++i) {
      if (!mono_divides(lts[i].first, m)) continue;
      p.sub_scaled(c / lts[i].second, mono_div(m, lts[i].first), basis[i]);
      hit = true;
      break;
    }
    if (!hit) {
      r.sub_scaled(-c, m, one);
      p.sub_scaled(c, m, one);
    }
  }
  return r;
}

namespace detail {

inline MultiPoly make_monic(const MultiPoly& p, const MonomialOrder& ord) {
  Rat lc = p.leading(ord).second;
  return (Rat(1) / lc) * p;
}

inline MultiPoly s_poly(const MultiPoly& f, const MultiPoly& g, const MonomialOrder& ord) {
  auto [lf, cf] = f.leading(ord);
  auto [lg, cg] = g.leading(ord);
  Mono l = mono_lcm(lf, lg);
  MultiPoly r(f.arity());
  r.sub_scaled(-Rat(1) / cf, mono_div(l, lf), f);
  r.sub_scaled(Rat(1) / cg, mono_div(l, lg), g);
  return r;
}

}  // namespace detail

// Buchberger with normal pair selection (smallest lcm first), the product and
// chain criteria, and full final inter-reduction; output monic and sorted
// ascending by leading term, so the reduced basis is unique for the ideal and
// order.  A nonzero constant remainder short-circuits to the unit ideal.
inline GroebnerBasis buchberger(const std::vector<MultiPoly>& generators, const MonomialOrder& ord) {
  std::vector<MultiPoly> g;
  for (const auto& p : generators)
    if (!p.is_zero()) g.push_back(detail::make_monic(p, ord));
  if (g.empty()) throw input_error("no nonzero generators");
  int arity = g[0].arity();
  auto unit = [&] { return GroebnerBasis{{MultiPoly::constant(arity, 1)}, ord, true}; };
  for (const auto& p : g)
    if (p.is_constant()) return unit();

  std::vector<Mono> lt;
  lt.reserve(g.size());
  for (const auto& p : g) lt.push_back(p.leading(ord).first);

  auto pair_key = [&](size_t i, size_t j) { return std::tuple(mono_lcm(lt[i], lt[j]), i, j); };
  struct KeyLess {
    const MonomialOrder* ord;
    bool operator()(const std::tuple<Mono, size_t, size_t>& a, const std::tuple<Mono, size_t, size_t>& b) const {
      int c = ord->compare(std::get<0>(a), std::get<0>(b));
      if (c != 0) return c < 0;
      if (std::get<1>(a) != std::get<1>(b)) return std::get<1>(a) < std::get<1>(b);
      return std::get<2>(a) < std::get<2>(b);
    }
  };
  std::set<std::tuple<Mono, size_t, size_t>, KeyLess> queue{KeyLess{&ord}};
  std::set<std::pair<size_t, size_t>> pending;
  auto push_pair = [&](size_t i, size_t j) {
    queue.insert(pair_key(i, j));
    pending.insert({i, j});
  };
  for (size_t i = 0; i < g.size(); ++i)
    for (size_t j = i + 1; j < g.size(); ++j) push_pair(i, j);

  auto still_pending = [&](size_t a, size_t b) {
    return pending.count(a < b ? std::pair{a, b} : std::pair{b, a}) > 0;
  };
  while (!queue.empty()) {
    auto [l, i, j] = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({i, j});
    if (mono_mul(lt[i], lt[j]) == l) continue;  // coprime leading terms
    bool chained = false;
    for (size_t k = 0; k < g.size() && !chained; ++k)
      if (k != i && k != j && mono_divides(lt[k], l) && !still_pending(i, k) && !still_pending(j, k)) chained = true;
    if (chained) continue;
    MultiPoly r = reduce_full(detail::s_poly(g[i], g[j], ord), g, ord);
    if (r.is_zero()) continue;
    if (r.is_constant()) return unit();
    g.push_back(detail::make_monic(r, ord));
    lt.push_back(g.back().leading(ord).first);
    for (size_t k = 0; k + 1 < g.size(); ++k) push_pair(k, g.size() - 1);
  }

  // inter-reduce until stable
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < g.size(); ++i) {
      std::vector<MultiPoly> others;
      others.reserve(g.size() - 1);
      for (size_t j = 0; j < g.size(); ++j)
        if (j != i) others.push_back(g[j]);
      if (others.empty()) break;
      MultiPoly r = reduce_full(g[i], others, ord);
      if (r.is_zero()) {
        g.erase(g.begin() + i);
        changed = true;
        break;
      }
      r = detail::make_monic(r, ord);
      if (r != g[i]) {
        g[i] = r;
        changed = true;
      }
    }
  }
  std::sort(g.begin(), g.end(), [&](const MultiPoly& a, const MultiPoly& b) {
    int c = ord.compare(a.leading(ord).first, b.leading(ord).first);
    if (c != 0) return c < 0;
    return a < b;
  });
  return {std::move(g), ord, true};
}

// basis elements free of the first m variables; requires a lex basis with the
// eliminated variables at highest priority
inline std::vector<MultiPoly> elimination_ideal(const GroebnerBasis& gb, int m) {
  if (gb.order.kind != MonomialOrder::lex) throw input_error("elimination requires a lex basis");
  std::vector<MultiPoly> out;
  for (const auto& p : gb.gens) {
    bool clean = true;
    for (auto& [mono, c] : p.terms()) {
      for (int i = 0; i < m && clean; ++i)
        if (mono[i] > 0) clean = false;
      if (!clean) break;
    }
    if (clean) out.push_back(p);
  }
  return out;
}

struct ZeroDimSolution {
  std::vector<std::vector<Scalar>> points;
  // monic factors whose roots fall outside the working field
  std::vector<UniPoly> residues;
};

namespace detail {

inline bool lt_is_pure_power(const Mono& m, int var) {
  for (size_t i = 0; i < m.size(); ++i)
    if ((int)i != var && m[i] > 0) return false;
  return m[var] > 0;
}

// substitute values for all variables after `var`; fails if earlier variables
// remain (cannot happen for the elements picked during back-substitution)
inline UniPoly collapse_to_var(const MultiPoly& p, int var, const std::vector<Scalar>& tail_vals) {
  std::vector<Scalar> cs;
  int arity = p.arity();
  for (auto& [m, c] : p.terms()) {
    for (int i = 0; i < var; ++i)
      if (m[i] > 0) throw calc_error("unexpected leading variable in back-substitution");
    Scalar t{c};
    for (int i = var + 1; i < arity; ++i)
      for (int k = 0; k < m[i]; ++k) t *= tail_vals[i - var - 1];
    if ((int)cs.size() <= m[var]) cs.resize(m[var] + 1, Scalar(0));
    cs[m[var]] += t;
  }
  return UniPoly(std::move(cs));
}

}  // namespace detail

// Lex basis of a zero-dimensional ideal: take the eliminant in the last
// variable, extract its roots in the working field, back-substitute.
inline ZeroDimSolution solve_zero_dim(const GroebnerBasis& gb, const Int& delta = 0) {
  if (gb.order.kind != MonomialOrder::lex) throw input_error("zero-dimensional solve requires a lex basis");
  ZeroDimSolution out;
  if (gb.gens.empty()) throw input_error("empty basis");
  int n = gb.gens[0].arity();
  if (gb.gens.size() == 1 && gb.gens[0].is_constant()) return out;  // unit ideal
  for (const auto& p : gb.gens)
    if (p.is_constant() && !p.is_zero()) return out;

  for (int v = 0; v < n; ++v) {
    bool found = false;
    for (const auto& p : gb.gens)
      if (detail::lt_is_pure_power(p.leading(gb.order).first, v)) {
        found = true;
        break;
      }
    if (!found) throw calc_error("not zero-dimensional");
  }

  std::set<UniPoly> residues;
  // partial assignments grow from the last variable backwards
  std::vector<std::vector<Scalar>> partial{{}};
  for (int v = n - 1; v >= 0; --v) {
    std::vector<std::vector<Scalar>> next;
    for (const auto& tail : partial) {
      // gcd of all basis elements supported on variables >= v
      UniPoly cond;
      bool usable = false;
      for (const auto& p : gb.gens) {
        bool ok = true;
        for (auto& [m, c] : p.terms())
          for (int i = 0; i < v && ok; ++i)
            if (m[i] > 0) ok = false;
        if (!ok) continue;
        UniPoly u = detail::collapse_to_var(p, v, tail);
        if (u.is_zero()) continue;
        usable = true;
        cond = cond.is_zero() ? u : UniPoly::gcd(cond, u);
        if (cond.degree() == 0) break;
      }
      if (!usable) throw calc_error("unconstrained variable in back-substitution");
      if (cond.degree() == 0) continue;  // contradictory branch
      auto ext = roots_in_field(cond, delta);
      if (ext.residual.degree() >= 1) residues.insert(ext.residual);
      for (const Scalar& r : ext.roots) {
        std::vector<Scalar> t;
        t.reserve(tail.size() + 1);
        t.push_back(r);
        t.insert(t.end(), tail.begin(), tail.end());
        next.push_back(std::move(t));
      }
    }
    partial = std::move(next);
  }
  std::sort(partial.begin(), partial.end());
  out.points = std::move(partial);
  out.residues.assign(residues.begin(), residues.end());
  return out;
}

// max basis degree against 2 (d^2/2 + d)^(2^(n-1)), computed exactly
inline bool dube_degree_check(const GroebnerBasis& gb, int d, int nvars) {
  if (nvars < 1) throw input_error("need at least one variable");
  Rat base = Rat(d) * Rat(d) / 2 + d;
  long long e = 1;
  for (int i = 1; i < nvars; ++i) e *= 2;
  Rat bound = 2;
  Rat acc = 1;
  for (long long i = 0; i < e; ++i) acc *= base;
  bound *= acc;
  int maxdeg = 0;
  for (const auto& p : gb.gens) maxdeg = std::max(maxdeg, p.total_degree());
  return Rat(maxdeg) <= bound;
}

// Zariski closure of the image of a homogeneous polynomial map: eliminate the
// source variables from the graph ideal < p_i - y_i >.
inline std::vector<MultiPoly> image_closure(const std::vector<MultiPoly>& ps, int source_arity) {
  if (ps.empty()) throw input_error("empty map");
  if (source_arity < 1 || source_arity > 6) throw input_error("source arity out of range");
  int deg = ps[0].total_degree();
  for (const auto& p : ps) {
    if (p.arity() != source_arity) throw input_error("map arity mismatch");
    if (!p.is_homogeneous() || p.total_degree() != deg) throw input_error("map must be homogeneous of one degree");
  }
  int m = (int)ps.size();
  int big = source_arity + m;
  std::vector<MultiPoly> gens;
  gens.reserve(m);
  for (int i = 0; i < m; ++i)
    gens.push_back(ps[i].embed(big, 0) - MultiPoly::variable(big, source_arity + i));
  GroebnerBasis gb = buchberger(gens, MonomialOrder{MonomialOrder::lex});
  std::vector<MultiPoly> elim = elimination_ideal(gb, source_arity);
  // return in the image ring
  std::vector<MultiPoly> out;
  for (const auto& p : elim) {
    MultiPoly q(m);
    for (auto& [mono, c] : p.terms()) {
      Mono t(mono.begin() + source_arity, mono.end());
      q += MultiPoly::term(m, std::move(t), c);
    }
    out.push_back(std::move(q));
  }
  return out;
}

}  // namespace ratalg

#endif
