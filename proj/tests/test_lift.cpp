#include <catch2/catch_amalgamated.hpp>

#include "ratalg/lift.hpp"

using namespace ratalg;

namespace {

UniPoly upoly(std::initializer_list<Rat> cs) {
  std::vector<Scalar> v;
  for (const Rat& c : cs) v.emplace_back(c);
  return UniPoly(v);
}

std::vector<Scalar> coeffs_to(const UniPoly& p, int len) {
  std::vector<Scalar> v;
  for (int i = 0; i < len; ++i) v.push_back(p.coeff(i));
  return v;
}

// (pe, qe) and (p2, q2) agree up to one common nonzero scalar
bool proportional(const std::pair<std::vector<Scalar>, std::vector<Scalar>>& a, const UniRat& b, int len) {
  std::vector<Scalar> p2 = coeffs_to(b.num(), len), q2 = coeffs_to(b.den(), len);
  Scalar lam(0);
  for (int i = 0; i < len; ++i) {
    for (auto [x, y] : {std::pair{a.first[i], p2[i]}, std::pair{a.second[i], q2[i]}}) {
      if (y.is_zero() != x.is_zero()) return false;
      if (!y.is_zero()) {
        Scalar r = x / y;
        if (lam.is_zero())
          lam = r;
        else if (r != lam)
          return false;
      }
    }
  }
  return !lam.is_zero();
}

}  // namespace

TEST_CASE("right family of the squaring map") {
  auto [right, left] = lift_family(UniRat(upoly({0, 0, 1}), upoly({1})), 1);
  REQUIRE(right.variant == LiftFamily::right_composition);
  REQUIRE(right.p.size() == 3);
  REQUIRE(right.q.size() == 3);

  int arity = 4;
  MultiPoly z0 = MultiPoly::variable(arity, 0), z1 = MultiPoly::variable(arity, 1);
  MultiPoly w0 = MultiPoly::variable(arity, 2), w1 = MultiPoly::variable(arity, 3);
  CHECK(right.p[0] == z0 * z0);
  CHECK(right.p[1] == MultiPoly::constant(arity, 2) * z0 * z1);
  CHECK(right.p[2] == z1 * z1);
  CHECK(right.q[0] == w0 * w0);
  CHECK(right.q[1] == MultiPoly::constant(arity, 2) * w0 * w1);
  CHECK(right.q[2] == w1 * w1);
}

TEST_CASE("identity map passes coefficients through") {
  auto [right, left] = lift_family(UniRat::x(), 1);
  int arity = 4;
  CHECK(right.p[0] == MultiPoly::variable(arity, 0));
  CHECK(right.p[1] == MultiPoly::variable(arity, 1));
  CHECK(right.q[0] == MultiPoly::variable(arity, 2));
  CHECK(right.q[1] == MultiPoly::variable(arity, 3));
  CHECK(left.p == right.p);
  CHECK(left.q == right.q);
}

TEST_CASE("left family is linear and matches a shifted square") {
  UniRat g(upoly({0, 0, 1}), upoly({1}));  // x^2
  auto [right, left] = lift_family(g, 1);
  for (const auto& poly : left.p) CHECK(poly.total_degree() <= 1);
  for (const auto& poly : left.q) CHECK(poly.total_degree() <= 1);

  // h = x + 1, h o g = x^2 + 1
  auto ev = left.evaluate({Scalar(1), Scalar(1)}, {Scalar(1), Scalar(0)});
  UniRat expect = compose_uni(UniRat(upoly({1, 1}), upoly({1})), g);
  CHECK(proportional(ev, expect, 3));
}

TEST_CASE("both families reproduce compositions across a sample pool") {
  std::vector<UniRat> gs = {
      UniRat(upoly({0, 0, 1}), upoly({1})),      // x^2
      UniRat(upoly({1}), upoly({0, 1})),         // 1/x
      UniRat(upoly({-1, 0, 1}), upoly({0, 1})),  // (x^2-1)/x
      UniRat(upoly({2, 3}), upoly({1, 0, 1})),   // (3x+2)/(x^2+1)
  };
  std::vector<std::pair<std::vector<Scalar>, std::vector<Scalar>>> hs = {
      {{Scalar(1), Scalar(2), Scalar(0)}, {Scalar(1), Scalar(0), Scalar(0)}},   // 2x+1
      {{Scalar(0), Scalar(0), Scalar(1)}, {Scalar(1), Scalar(1), Scalar(0)}},   // x^2/(x+1)
      {{Scalar(3), Scalar(0), Scalar(-1)}, {Scalar(0), Scalar(2), Scalar(1)}},  // (3-x^2)/(x^2+2x)
  };
  for (const auto& g : gs) {
    auto [right, left] = lift_family(g, 2);
    for (const auto& [zc, wc] : hs) {
      UniRat h{UniPoly(zc), UniPoly(wc)};
      auto evr = right.evaluate(zc, wc);
      auto evl = left.evaluate(zc, wc);
      // evaluation yields possibly unreduced representatives; compare as functions
      UniRat fr{UniPoly(evr.first), UniPoly(evr.second)};
      UniRat fl{UniPoly(evl.first), UniPoly(evl.second)};
      CHECK(fr == compose_uni(g, h));
      CHECK(fl == compose_uni(h, g));
      // denominator part never collapses for genuine coefficient vectors
      bool qzero = true;
      for (const auto& c : evr.second) qzero = qzero && c.is_zero();
      CHECK_FALSE(qzero);
    }
  }
}

TEST_CASE("family construction rejects bad inputs") {
  CHECK_THROWS_AS(lift_family(UniRat(upoly({5}), upoly({1})), 2), input_error);
  CHECK_THROWS_AS(lift_family(UniRat::x(), 0), input_error);
  UniPoly ext({Scalar::sqrt_delta(2), Scalar(1)});
  CHECK_THROWS_AS(lift_family(UniRat(ext, upoly({1})), 1), input_error);
}
