#ifndef RATALG_MULTIPOLY_HPP
#define RATALG_MULTIPOLY_HPP

#include <functional>
#include <map>
#include <numeric>
#include <vector>

#include "ratalg/scalar.hpp"

namespace ratalg {

// exponent vector; arity is fixed per polynomial
using Mono = std::vector<int>;

inline int mono_total(const Mono& m) { return std::accumulate(m.begin(), m.end(), 0); }
inline bool mono_divides(const Mono& a, const Mono& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}
inline Mono mono_mul(const Mono& a, const Mono& b) {
  Mono r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}
inline Mono mono_div(const Mono& a, const Mono& b) {
  Mono r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}
inline Mono mono_lcm(const Mono& a, const Mono& b) {
  Mono r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] = std::max(r[i], b[i]);
  return r;
}

// variable priority is index order: x0 highest
struct MonomialOrder {
  enum Kind { lex, grlex };
  Kind kind = lex;

  int compare(const Mono& a, const Mono& b) const {
    if (kind == grlex) {
      int ta = mono_total(a), tb = mono_total(b);
      if (ta != tb) return ta < tb ? -1 : 1;
    }
    for (size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
  }
  bool less(const Mono& a, const Mono& b) const { return compare(a, b) < 0; }
  bool greater(const Mono& a, const Mono& b) const { return compare(a, b) > 0; }
};

// Sparse polynomial over Q in a fixed number of variables.  Storage order is
// plain lexicographic-descending so equality and printing are order-free;
// basis computations query leading terms through a MonomialOrder.
class MultiPoly {
 public:
  using TermMap = std::map<Mono, Rat, std::greater<Mono>>;

  explicit MultiPoly(int arity = 0) : arity_(arity) {}

  static MultiPoly constant(int arity, const Rat& c) {
    MultiPoly p(arity);
    if (c != 0) p.t_[Mono(arity, 0)] = c;
    return p;
  }
  static MultiPoly variable(int arity, int i) {
    MultiPoly p(arity);
    Mono m(arity, 0);
    m[i] = 1;
    p.t_[m] = 1;
    return p;
  }
  static MultiPoly term(int arity, Mono m, const Rat& c) {
    MultiPoly p(arity);
    if (c != 0) p.t_[std::move(m)] = c;
    return p;
  }

  int arity() const { return arity_; }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && mono_total(t_.begin()->first) == 0); }
  const TermMap& terms() const { return t_; }

  Rat coeff(const Mono& m) const {
    auto it = t_.find(m);
    return it == t_.end() ? Rat(0) : it->second;
  }

  int total_degree() const {
    int d = -1;
    for (auto& [m, c] : t_) d = std::max(d, mono_total(m));
    return d;
  }
  bool is_homogeneous() const {
    if (t_.empty()) return true;
    int d = mono_total(t_.begin()->first);
    for (auto& [m, c] : t_)
      if (mono_total(m) != d) return false;
    return true;
  }

  std::pair<Mono, Rat> leading(const MonomialOrder& ord) const {
    if (t_.empty()) throw calc_error("leading term of zero");
    if (ord.kind == MonomialOrder::lex) return *t_.begin();  // storage is lex-descending
    auto best = t_.begin();
    for (auto it = std::next(t_.begin()); it != t_.end(); ++it)
      if (ord.greater(it->first, best->first)) best = it;
    return {best->first, best->second};
  }

  friend bool operator==(const MultiPoly& p, const MultiPoly& q) { return p.arity_ == q.arity_ && p.t_ == q.t_; }
  friend bool operator!=(const MultiPoly& p, const MultiPoly& q) { return !(p == q); }
  friend bool operator<(const MultiPoly& p, const MultiPoly& q) {
    if (p.arity_ != q.arity_) return p.arity_ < q.arity_;
    return std::lexicographical_compare(p.t_.begin(), p.t_.end(), q.t_.begin(), q.t_.end());
  }

  friend MultiPoly operator-(const MultiPoly& p) {
    MultiPoly r = p;
    for (auto& [m, c] : r.t_) c = -c;
    return r;
  }
  friend MultiPoly operator+(const MultiPoly& p, const MultiPoly& q) {
    p.check(q);
    MultiPoly r = p;
    for (auto& [m, c] : q.t_) r.add_term(m, c);
    return r;
  }
  friend MultiPoly operator-(const MultiPoly& p, const MultiPoly& q) { return p + (-q); }
  friend MultiPoly operator*(const MultiPoly& p, const MultiPoly& q) {
    p.check(q);
    MultiPoly r(p.arity_);
    for (auto& [m, c] : p.t_)
      for (auto& [n, d] : q.t_) r.add_term(mono_mul(m, n), c * d);
    return r;
  }
  friend MultiPoly operator*(const Rat& s, const MultiPoly& p) {
    MultiPoly r(p.arity_);
    if (s == 0) return r;
    r.t_ = p.t_;
    for (auto& [m, c] : r.t_) c = s * c;
    return r;
  }
  MultiPoly& operator+=(const MultiPoly& q) { return *this = *this + q; }
  MultiPoly& operator-=(const MultiPoly& q) { return *this = *this - q; }
  MultiPoly& operator*=(const MultiPoly& q) { return *this = *this * q; }

  MultiPoly pow(int e) const {
    if (e < 0) throw calc_error("negative power of a polynomial");
    MultiPoly r = constant(arity_, 1), b = *this;
    while (e > 0) {
      if (e & 1) r *= b;
      b *= b;
      e >>= 1;
    }
    return r;
  }

  void sub_scaled(const Rat& c, const Mono& shift, const MultiPoly& q) {
    for (auto& [m, d] : q.t_) add_term(mono_mul(shift, m), -c * d);
  }

  Scalar eval(const std::vector<Scalar>& v) const {
    if ((int)v.size() != arity_) throw input_error("evaluation arity mismatch");
    Scalar acc(0);
    for (auto& [m, c] : t_) {
      Scalar t{c};
      for (int i = 0; i < arity_; ++i)
        for (int k = 0; k < m[i]; ++k) t *= v[i];
      acc += t;
    }
    return acc;
  }
  Rat eval_rat(const std::vector<Rat>& v) const {
    if ((int)v.size() != arity_) throw input_error("evaluation arity mismatch");
    Rat acc = 0;
    for (auto& [m, c] : t_) {
      Rat t = c;
      for (int i = 0; i < arity_; ++i)
        for (int k = 0; k < m[i]; ++k) t *= v[i];
      acc += t;
    }
    return acc;
  }

  // same polynomial in a wider ring, variable i becoming variable i + offset
  MultiPoly embed(int new_arity, int offset) const {
    if (offset < 0 || arity_ + offset > new_arity) throw input_error("embedding does not fit");
    MultiPoly r(new_arity);
    for (auto& [m, c] : t_) {
      Mono n(new_arity, 0);
      for (int i = 0; i < arity_; ++i) n[i + offset] = m[i];
      r.t_[std::move(n)] = c;
    }
    return r;
  }

 private:
  void check(const MultiPoly& q) const {
    if (arity_ != q.arity_) throw calc_error("arity mismatch");
  }
  void add_term(const Mono& m, const Rat& c) {
    auto it = t_.find(m);
    if (it == t_.end()) {
      if (c != 0) t_[m] = c;
    } else {
      it->second += c;
      if (it->second == 0) t_.erase(it);
    }
  }

  int arity_;
  TermMap t_;
};

}  // namespace ratalg

#endif
