#ifndef RATALG_ROOTS_HPP
#define RATALG_ROOTS_HPP

#include <map>
#include <vector>

#include "ratalg/unipoly.hpp"

namespace ratalg {

// trial-division factorization; primes beyond the bound are accepted only
// when the remainder is certified prime by size, otherwise we refuse rather
// than risk missing divisors
inline std::map<Int, int> factor_int(Int n) {
  assert(n > 0);
  std::map<Int, int> f;
  for (Int p = 2; p * p <= n && p < 1000000; p += (p == 2 ? 1 : 2)) {
    while (n % p == 0) {
      n /= p;
      ++f[p];
    }
  }
  if (n > 1) {
    if (n >= Int("1000000000000")) throw cap_exceeded("root extraction overflow: coefficient too large to factor");
    ++f[n];
  }
  return f;
}

inline std::vector<Int> divisors_of(const Int& n) {
  std::vector<Int> d{1};
  for (const auto& [p, e] : factor_int(n)) {
    size_t base = d.size();
    if (base * (e + 1) > 200000) throw cap_exceeded("root extraction overflow: too many divisors");
    Int pk = 1;
    for (int i = 1; i <= e; ++i) {
      pk *= p;
      for (size_t j = 0; j < base; ++j) d.push_back(d[j] * pk);
    }
  }
  return d;
}

struct RootExtraction {
  std::vector<Scalar> roots;  // distinct, sorted
  UniPoly residual;           // monic squarefree factor with no root in the field
};

// All roots of p inside Q(sqrt(delta)); delta == 0 means plain Q.
// Whatever cannot be split off with rational or quadratic tools is returned
// untouched in `residual` (degree >= 2), never silently dropped.
inline RootExtraction roots_in_field(const UniPoly& p, const Int& delta = 0) {
  if (p.is_zero()) throw calc_error("root extraction of the zero polynomial");
  RootExtraction out;
  out.residual = UniPoly(Scalar(1));
  if (p.is_constant()) return out;

  UniPoly s = p.divexact(UniPoly::gcd(p, p.derivative())).monic();

  auto take_quadratic = [&](const UniPoly& q) -> bool {
    Scalar a = q.coeff(2), b = q.coeff(1), c = q.coeff(0);
    Scalar disc = b * b - Scalar(4) * a * c;
    auto sq = sqrt_in_field(disc, delta);
    if (!sq) return false;
    Scalar twoa = Scalar(2) * a;
    out.roots.push_back((-b + *sq) / twoa);
    out.roots.push_back((-b - *sq) / twoa);
    return true;
  };

  if (!s.is_rational()) {
    // extension coefficients: only linear and quadratic factors are split
    if (s.degree() == 1) {
      out.roots.push_back(-s.coeff(0) / s.coeff(1));
    } else if (s.degree() == 2 && take_quadratic(s)) {
    } else {
      out.residual = s;
    }
  } else {
    if (s.degree() > 0 && s.coeff(0).is_zero()) {
      // squarefree: the root 0 appears exactly once
      out.roots.push_back(Scalar(0));
      s = s.divexact(UniPoly::x());
    }
    if (s.degree() > 0) {
      std::vector<Int> ic = integer_normal_coeffs(s);
      std::vector<Int> dn = divisors_of(boost::multiprecision::abs(ic.front()));
      std::vector<Int> dd = divisors_of(boost::multiprecision::abs(ic.back()));
      if (dn.size() * dd.size() > 400000) throw cap_exceeded("root extraction overflow: candidate set too large");
      for (const Int& a : dn) {
        for (const Int& b : dd) {
          if (boost::multiprecision::gcd(a, b) != 1) continue;
          for (int sg = 0; sg < 2; ++sg) {
            Scalar cand{Rat(sg ? -a : a, b)};
            if (s.eval(cand).is_zero()) {
              out.roots.push_back(cand);
              s = s.divexact(UniPoly{-cand, Scalar(1)});
            }
            if (s.degree() == 0) break;
          }
          if (s.degree() == 0) break;
        }
        if (s.degree() == 0) break;
      }
    }
    if (s.degree() == 2 && take_quadratic(s)) s = UniPoly(Scalar(1));
    if (s.degree() > 0) out.residual = s.monic();
  }
  std::sort(out.roots.begin(), out.roots.end());
  out.roots.erase(std::unique(out.roots.begin(), out.roots.end()), out.roots.end());
  return out;
}

}  // namespace ratalg

#endif
