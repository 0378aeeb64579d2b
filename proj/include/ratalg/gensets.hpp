#ifndef RATALG_GENSETS_HPP
#define RATALG_GENSETS_HPP

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "ratalg/geometry.hpp"
#include "ratalg/parse.hpp"

namespace ratalg {

namespace detail {

// deterministic 64-bit stream, stable across platforms
struct SplitMix64 {
  std::uint64_t state;
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // uniform-ish draw in [0, bound), widened word by word for big bounds
  Int draw(const Int& bound) {
    Int acc = 0, cap = 1;
    while (cap < bound) {
      acc = (acc << 64) + Int(next());
      cap <<= 64;
    }
    return acc % bound;
  }
};

}  // namespace detail

struct SetFamily {
  enum class Kind { ap, gp, random, tan_orbit };
  Kind kind;
  Rat a, b;   // start/step, start/ratio, or the tangent seed in a
  Int bound;  // random draw range; 0 selects n^3

  static SetFamily ap(const Rat& start, const Rat& diff) { return {Kind::ap, start, diff, 0}; }
  static SetFamily gp(const Rat& start, const Rat& ratio) { return {Kind::gp, start, ratio, 0}; }
  static SetFamily random(const Int& bound = 0) { return {Kind::random, 0, 0, bound}; }
  static SetFamily tan_orbit(const Rat& t) { return {Kind::tan_orbit, t, 0, 0}; }

  std::string id() const {
    switch (kind) {
      case Kind::ap:
        return "ap:" + detail::rat_text(a) + "," + detail::rat_text(b);
      case Kind::gp:
        return "gp:" + detail::rat_text(a) + "," + detail::rat_text(b);
      case Kind::random:
        return "random:" + (bound > 0 ? bound.str() : std::string("n^3"));
      default:
        return "tan:" + detail::rat_text(a);
    }
  }
};

// n distinct scalars; the seed only matters for the random family
inline EvalSet gen_set(const SetFamily& fam, int n, std::uint64_t seed = 0) {
  if (n < 0) throw input_error("negative size");
  std::vector<Scalar> out;
  out.reserve(n);
  switch (fam.kind) {
    case SetFamily::Kind::ap: {
      if (fam.b == 0 && n > 1) throw input_error("zero common difference");
      for (int k = 0; k < n; ++k) out.emplace_back(fam.a + Rat(k) * fam.b);
      break;
    }
    case SetFamily::Kind::gp: {
      if (fam.b == 0 || fam.b == 1 || fam.b == -1) throw input_error("ratio must avoid 0 and +-1");
      if (fam.a == 0) throw input_error("zero start");
      Rat v = fam.a;
      for (int k = 0; k < n; ++k) {
        out.emplace_back(v);
        v *= fam.b;
      }
      break;
    }
    case SetFamily::Kind::random: {
      Int bound = fam.bound > 0 ? fam.bound : Int(n) * n * n;
      if (bound < n) throw input_error("range smaller than the requested size");
      detail::SplitMix64 rng{seed};
      std::set<Int> seen;
      int attempts = 0;
      while ((int)out.size() < n) {
        if (++attempts > 10 * n) throw input_error("cannot reach the requested size within the attempt cap");
        Int d = rng.draw(bound);
        if (seen.insert(d).second) out.emplace_back(Rat(d));
      }
      break;
    }
    case SetFamily::Kind::tan_orbit: {
      // projective tangent-addition iterates u/v; infinities are skipped, the
      // orbit continues through them
      Rat t = fam.a, u = t, v = 1;
      std::set<Rat> seen;
      int attempts = 0;
      while ((int)out.size() < n) {
        if (++attempts > 10 * n) throw input_error("cannot reach the requested size within the attempt cap");
        if (v != 0) {
          Rat val = u / v;
          if (seen.insert(val).second) out.emplace_back(val);
        }
        Rat nu = u + t * v, nv = v - t * u;
        u = nu;
        v = nv;
      }
      break;
    }
  }
  return EvalSet(out);
}

namespace detail {

inline Rat parse_rat_text(const std::string& s, const Scanner& where) {
  size_t slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
  } catch (const std::exception&) {
    where.fail("malformed rational " + s);
  }
}

}  // namespace detail

// "ap:0,1", "gp:1,2", "random", "random:1000", "tan:1/2"
inline SetFamily parse_family(const std::string& text) {
  detail::Scanner sc(text);
  size_t colon = text.find(':');
  std::string head = text.substr(0, colon == std::string::npos ? text.size() : colon);
  std::string rest = colon == std::string::npos ? "" : text.substr(colon + 1);
  size_t comma = rest.find(',');
  std::string p1 = rest.substr(0, comma == std::string::npos ? rest.size() : comma);
  std::string p2 = comma == std::string::npos ? "" : rest.substr(comma + 1);

  if (head == "ap" || head == "gp") {
    if (p1.empty() || p2.empty()) sc.fail("expected two parameters");
    Rat a = detail::parse_rat_text(p1, sc), b = detail::parse_rat_text(p2, sc);
    return head == "ap" ? SetFamily::ap(a, b) : SetFamily::gp(a, b);
  }
  if (head == "random") {
    if (!p2.empty()) sc.fail("random takes one optional bound");
    if (p1.empty() || p1 == "n^3") return SetFamily::random();
    try {
      return SetFamily::random(Int(p1));
    } catch (const std::exception&) {
      sc.fail("malformed bound " + p1);
    }
  }
  if (head == "tan" || head == "tan_orbit") {
    if (p1.empty() || !p2.empty()) sc.fail("expected one parameter");
    return SetFamily::tan_orbit(detail::parse_rat_text(p1, sc));
  }
  sc.fail("unknown family " + head);
}

}  // namespace ratalg

#endif
