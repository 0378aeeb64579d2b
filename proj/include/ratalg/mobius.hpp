#ifndef RATALG_MOBIUS_HPP
#define RATALG_MOBIUS_HPP

#include <array>
#include <optional>

#include "ratalg/unirat.hpp"

namespace ratalg {

// Point of the projective line over the working field.
struct ProjPoint {
  bool inf = false;
  Scalar v = Scalar(0);

  static ProjPoint infinity() { return {true, Scalar(0)}; }
  static ProjPoint at(const Scalar& s) { return {false, s}; }
  friend bool operator==(const ProjPoint& a, const ProjPoint& b) {
    if (a.inf != b.inf) return false;
    return a.inf || a.v == b.v;
  }
  friend bool operator!=(const ProjPoint& a, const ProjPoint& b) { return !(a == b); }
};

// x -> (a x + b) / (c x + d)
struct Mobius {
  Scalar a = Scalar(1), b = Scalar(0), c = Scalar(0), d = Scalar(1);

  static Mobius identity() { return {}; }

  Scalar det() const { return a * d - b * c; }
  bool invertible() const { return !det().is_zero(); }

  UniRat to_unirat() const {
    if (c.is_zero() && d.is_zero()) throw input_error("degenerate fractional map");
    UniPoly n({b, a}), m({d, c});
    return UniRat(n, m);
  }

  Mobius inverse() const {
    if (!invertible()) throw calc_error("non-invertible fractional map");
    return {d, -b, -c, a};
  }

  ProjPoint apply(const ProjPoint& p) const {
    if (p.inf) {
      if (c.is_zero()) return ProjPoint::infinity();
      return ProjPoint::at(a * c.inverse());
    }
    Scalar dn = c * p.v + d;
    if (dn.is_zero()) return ProjPoint::infinity();
    return ProjPoint::at((a * p.v + b) * dn.inverse());
  }
};

inline Mobius mobius_compose(const Mobius& X, const Mobius& Y) {
  return {X.a * Y.a + X.b * Y.c, X.a * Y.b + X.b * Y.d, X.c * Y.a + X.d * Y.c, X.c * Y.b + X.d * Y.d};
}

inline UniRat mobius_apply(const Mobius& X, const UniRat& f) { return compose_uni(X.to_unirat(), f); }

namespace detail {
// map sending (p1, p2, p3) to (0, 1, infinity); points must be distinct
inline Mobius to_standard_triple(const ProjPoint& p1, const ProjPoint& p2, const ProjPoint& p3) {
  if (p1 == p2 || p1 == p3 || p2 == p3) throw input_error("coincident interpolation points");
  if (p1.inf) return {Scalar(0), p2.v - p3.v, Scalar(1), -p3.v};
  if (p2.inf) return {Scalar(1), -p1.v, Scalar(1), -p3.v};
  if (p3.inf) return {Scalar(1), -p1.v, Scalar(0), p2.v - p1.v};
  return {p2.v - p3.v, -p1.v * (p2.v - p3.v), p2.v - p1.v, -p3.v * (p2.v - p1.v)};
}
}  // namespace detail

// unique fractional-linear map with src[i] -> dst[i]
inline Mobius mobius_through(const std::array<ProjPoint, 3>& src, const std::array<ProjPoint, 3>& dst) {
  Mobius s = detail::to_standard_triple(src[0], src[1], src[2]);
  Mobius t = detail::to_standard_triple(dst[0], dst[1], dst[2]);
  return mobius_compose(t.inverse(), s);
}

}  // namespace ratalg

#endif
