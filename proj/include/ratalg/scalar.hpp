#ifndef RATALG_SCALAR_HPP
#define RATALG_SCALAR_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cassert>
#include <cmath>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace ratalg {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// malformed user input (CLI exit code 1)
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// desk-scale cap tripped (CLI exit code 2)
struct cap_exceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// internal arithmetic violation (division by zero, mixed extensions, ...)
struct calc_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

// floor square root test; n >= 0
inline bool int_is_square(const Int& n, Int* root = nullptr) {
  if (n < 0) return false;
  Int s = boost::multiprecision::sqrt(n);
  if (s * s == n) {
    if (root) *root = s;
    return true;
  }
  return false;
}

inline bool rat_is_square(const Rat& r, Rat* root = nullptr) {
  if (r < 0) return false;
  Int sn, sd;
  if (!int_is_square(rat_num(r), &sn) || !int_is_square(rat_den(r), &sd)) return false;
  if (root) *root = Rat(sn, sd);
  return true;
}

// n = sf * co^2 with sf squarefree up to the trial-division bound.
// A square factor made of primes beyond the bound stays inside sf; every
// consumer only relies on consistency of the returned sf, not on true
// squarefreeness.
inline void squarefree_split(const Int& n, Int& sf, Int& co) {
  assert(n != 0);
  Int rem = boost::multiprecision::abs(n);
  sf = n < 0 ? -1 : 1;
  co = 1;
  for (Int p = 2; p * p <= rem && p < 1000000; p += (p == 2 ? 1 : 2)) {
    if (rem % p != 0) continue;
    int e = 0;
    while (rem % p == 0) {
      rem /= p;
      ++e;
    }
    for (int i = 0; i + 1 < e; i += 2) co *= p;
    if (e % 2 == 1) sf *= p;
  }
  Int r;
  if (int_is_square(rem, &r)) {
    co *= r;
  } else {
    sf *= rem;
  }
}

// Element of Q or of a quadratic extension Q(sqrt(delta)), delta a nonzero
// non-square integer carried per value.  b == 0 forces delta == 0, so plain
// rationals mix freely with any extension; two extension values combine only
// when their deltas agree.
class Scalar {
 public:
  Scalar() : a_(0), b_(0), d_(0) {}
  Scalar(int v) : a_(v), b_(0), d_(0) {}
  Scalar(long v) : a_(v), b_(0), d_(0) {}
  Scalar(long long v) : a_((Int)v), b_(0), d_(0) {}
  Scalar(const Int& v) : a_(v), b_(0), d_(0) {}
  Scalar(const Rat& v) : a_(v), b_(0), d_(0) {}
  Scalar(const Int& num, const Int& den) : b_(0), d_(0) {
    if (den == 0) throw calc_error("scalar with zero denominator");
    a_ = Rat(num, den);
  }
  Scalar(const Rat& a, const Rat& b, const Int& delta) : a_(a), b_(b), d_(delta) {
    if (b_ == 0)
      d_ = 0;
    else if (d_ == 0 || d_ == 1)
      throw calc_error("invalid quadratic extension delta");
  }

  static Scalar sqrt_delta(const Int& delta) { return Scalar(Rat(0), Rat(1), delta); }

  const Rat& rat_a() const { return a_; }
  const Rat& rat_b() const { return b_; }
  const Int& delta() const { return d_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_one() const { return b_ == 0 && a_ == 1; }
  bool is_rational() const { return b_ == 0; }

  const Rat& as_rat() const {
    if (b_ != 0) throw calc_error("extension scalar used where a rational is required");
    return a_;
  }

  Scalar conj() const { return Scalar(a_, -b_, d_); }

  friend Scalar operator-(const Scalar& x) { return Scalar(-x.a_, -x.b_, x.d_); }

  friend Scalar operator+(const Scalar& x, const Scalar& y) {
    Int d = merged_delta(x, y);
    return make(x.a_ + y.a_, x.b_ + y.b_, d);
  }
  friend Scalar operator-(const Scalar& x, const Scalar& y) {
    Int d = merged_delta(x, y);
    return make(x.a_ - y.a_, x.b_ - y.b_, d);
  }
  friend Scalar operator*(const Scalar& x, const Scalar& y) {
    Int d = merged_delta(x, y);
    return make(x.a_ * y.a_ + x.b_ * y.b_ * Rat(d), x.a_ * y.b_ + x.b_ * y.a_, d);
  }
  friend Scalar operator/(const Scalar& x, const Scalar& y) { return x * y.inverse(); }

  Scalar& operator+=(const Scalar& y) { return *this = *this + y; }
  Scalar& operator-=(const Scalar& y) { return *this = *this - y; }
  Scalar& operator*=(const Scalar& y) { return *this = *this * y; }
  Scalar& operator/=(const Scalar& y) { return *this = *this / y; }

  Scalar inverse() const {
    if (is_zero()) throw calc_error("division by zero scalar");
    if (b_ == 0) return Scalar(Rat(1) / a_);
    // norm a^2 - b^2*delta vanishes only at 0 because delta is not a square
    Rat n = a_ * a_ - b_ * b_ * Rat(d_);
    if (n == 0) throw calc_error("degenerate quadratic extension (delta is a square)");
    return Scalar(a_ / n, -b_ / n, d_);
  }

  friend bool operator==(const Scalar& x, const Scalar& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
  }
  friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

  // total order for deterministic containers; coincides with the numeric
  // order on plain rationals
  friend bool operator<(const Scalar& x, const Scalar& y) {
    if (x.d_ != y.d_) return x.d_ < y.d_;
    if (x.a_ != y.a_) return x.a_ < y.a_;
    return x.b_ < y.b_;
  }

  // approximate value; only the growth statistics use this
  double to_double() const {
    double v = a_.convert_to<double>();
    if (b_ != 0) {
      if (d_ < 0) throw calc_error("no real value for negative delta");
      v += b_.convert_to<double>() * std::sqrt(d_.convert_to<double>());
    }
    return v;
  }

  std::string str() const {
    std::ostringstream os;
    if (b_ == 0) {
      os << a_;
      return os.str();
    }
    bool have_a = (a_ != 0);
    if (have_a) os << a_;
    if (b_ > 0 && have_a) os << " + ";
    if (b_ < 0) os << (have_a ? " - " : "-");
    Rat ab = boost::multiprecision::abs(b_);
    if (ab != 1) os << ab << "*";
    os << "sqrt(" << d_ << ")";
    return os.str();
  }

 private:
  static Int merged_delta(const Scalar& x, const Scalar& y) {
    if (x.d_ == 0) return y.d_;
    if (y.d_ == 0) return x.d_;
    if (x.d_ != y.d_) throw calc_error("mixed quadratic extensions");
    return x.d_;
  }
  static Scalar make(Rat a, Rat b, const Int& d) {
    if (b == 0) return Scalar(std::move(a));
    return Scalar(std::move(a), std::move(b), d);
  }

  Rat a_, b_;
  Int d_;
};

// square root of s inside Q(sqrt(delta)) if it exists there.
// delta == 0 restricts the search to Q itself.
inline std::optional<Scalar> sqrt_in_field(const Scalar& s, const Int& delta) {
  if (s.is_zero()) return Scalar(0);
  if (s.is_rational()) {
    Rat r;
    if (rat_is_square(s.as_rat(), &r)) return Scalar(r);
    if (delta != 0) {
      // v*sqrt(delta) with v^2 = a/delta
      Rat q = s.as_rat() / Rat(delta);
      if (rat_is_square(q, &r)) return Scalar(Rat(0), r, delta);
    }
    return std::nullopt;
  }
  if (delta == 0 || s.delta() != delta) return std::nullopt;
  // (u + v sqrt(d))^2 = a + b sqrt(d):  u^2 = (a +- sqrt(a^2 - b^2 d))/2, v = b/(2u)
  Rat a = s.rat_a(), b = s.rat_b();
  Rat norm = a * a - b * b * Rat(delta);
  Rat sq;
  if (!rat_is_square(norm, &sq)) return std::nullopt;
  for (int sign = 0; sign < 2; ++sign) {
    Rat u2 = (a + (sign ? -sq : sq)) / 2;
    Rat u;
    if (u2 > 0 && rat_is_square(u2, &u)) {
      Rat v = b / (2 * u);
      Scalar cand(u, v, delta);
      if (cand * cand == s) return cand;
    }
  }
  return std::nullopt;
}

}  // namespace ratalg

#endif
