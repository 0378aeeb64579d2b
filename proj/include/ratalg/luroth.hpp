#ifndef RATALG_LUROTH_HPP
#define RATALG_LUROTH_HPP

#include <optional>
#include <vector>

#include "ratalg/birat.hpp"
#include "ratalg/decompose.hpp"

namespace ratalg {

// generator h of the smallest field containing every f_i as a function of h,
// read off the gcd of the difference curves f_i(x1) = f_i(x2)
inline UniRat luroth_generator(const std::vector<UniRat>& fs) {
  std::vector<UniRat> active;
  for (const auto& f : fs) {
    detail::require_plain(f, "generator input");
    if (!f.is_constant()) active.push_back(f);
  }
  if (active.empty()) throw input_error("all inputs constant");

  BiPoly G = cross_poly(active[0], active[0]);
  for (size_t i = 1; i < active.size(); ++i) G = poly_gcd_bivariate(G, cross_poly(active[i], active[i]));
  if (G.total_degree() <= 0) throw calc_error("difference gcd collapsed");

  // coefficients of G in the second variable, as polynomials in the first;
  // any two independent ones are a numerator/denominator pair for h
  auto cs = G.swap_vars().coeffs_in_x1();
  size_t j0 = 0;
  while (j0 < cs.size() && cs[j0].is_zero()) ++j0;
  const UniPoly& base = cs[j0];
  std::optional<UniRat> h;
  for (size_t k = j0 + 1; k < cs.size(); ++k) {
    if (cs[k].is_zero()) continue;
    bool proportional = cs[k].degree() == base.degree() &&
                        base * cs[k].coeff(cs[k].degree()) == cs[k] * base.coeff(base.degree());
    if (proportional) continue;
    h = UniRat(cs[k], base);
    break;
  }
  if (!h) throw calc_error("generator extraction failed");
  if (h->degree() != G.deg1()) throw calc_error("generator degree mismatch");
  for (const auto& f : active)
    if (!solve_left_component(f, *h)) throw calc_error("generator verification failed");
  return *h;
}

struct CommonLeftPair {
  UniRat g1, g2, h1, h2;  // f11 = g1 o h1, f12 = g2 o h1, f21 = g1 o h2, f22 = g2 o h2
};

// common outer pair across two sides, gated by a shared difference-curve
// component and resolved through the generator of the first side
inline std::optional<CommonLeftPair> common_left_pair(const UniRat& f11, const UniRat& f12, const UniRat& f21,
                                                      const UniRat& f22) {
  for (const UniRat* f : {&f11, &f12, &f21, &f22}) {
    detail::require_plain(*f, "pair input");
    if (f->is_constant()) throw input_error("nonconstant functions required");
  }
  BiPoly G = poly_gcd_bivariate(cross_poly(f11, f21), cross_poly(f12, f22));
  if (G.total_degree() <= 0) return std::nullopt;

  UniRat h1 = luroth_generator({f11, f12});
  auto L1 = solve_left_component(f11, h1);
  auto L2 = solve_left_component(f12, h1);
  if (!L1 || !L2) return std::nullopt;
  const UniRat& g1 = L1->left;
  const UniRat& g2 = L2->left;
  if (f21.degree() % g1.degree() != 0) return std::nullopt;
  for (const UniRat& h2 : solve_right_all(f21, g1).inners)
    if (compose_uni(g2, h2) == f22) return CommonLeftPair{g1, g2, h1, h2};
  return std::nullopt;
}

}  // namespace ratalg

#endif
