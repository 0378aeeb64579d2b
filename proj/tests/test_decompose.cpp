#include <catch2/catch_amalgamated.hpp>

#include "ratalg/bilift.hpp"
#include "ratalg/decompose.hpp"
#include "ratalg/luroth.hpp"

using namespace ratalg;

namespace {

UniPoly upoly(std::initializer_list<Rat> cs) {
  std::vector<Scalar> v;
  for (const Rat& c : cs) v.emplace_back(c);
  return UniPoly(v);
}

UniRat ur(std::initializer_list<Rat> num, std::initializer_list<Rat> den) { return UniRat(upoly(num), upoly(den)); }

bool contains(const std::vector<UniRat>& v, const UniRat& f) {
  return std::find(v.begin(), v.end(), f) != v.end();
}

}  // namespace

TEST_CASE("inner factors of even powers") {
  UniRat sq = ur({0, 0, 1}, {1});

  auto r = solve_right_all(ur({0, 0, 0, 0, 1}, {1}), sq);  // x^4
  REQUIRE(r.inners.size() == 2);
  CHECK(contains(r.inners, sq));
  CHECK(contains(r.inners, ur({0, 0, -1}, {1})));
  CHECK_FALSE(r.residue_warning);

  auto s = solve_right_component(ur({1, 0, 2, 0, 1}, {1}), sq);  // (x^2+1)^2
  REQUIRE(s);
  CHECK(s->right.degree() == 2);
  CHECK(compose_uni(sq, s->right) == ur({1, 0, 2, 0, 1}, {1}));

  CHECK(solve_right_all(ur({0, 1, 0, 0, 1}, {1}), sq).inners.empty());  // x^4 + x
  CHECK(solve_right_all(ur({0, 0, 0, 1}, {1}), sq).inners.empty());     // degree mismatch
}

TEST_CASE("inner factor living in the second scaling chart") {
  // 1/x^4 = sq o (1/x^2); the inner's numerator is constant
  UniRat sq = ur({0, 0, 1}, {1});
  auto r = solve_right_all(ur({1}, {0, 0, 0, 0, 1}), sq);
  REQUIRE(r.inners.size() == 2);
  CHECK(contains(r.inners, ur({1}, {0, 0, 1})));
  CHECK(contains(r.inners, ur({-1}, {0, 0, 1})));
}

TEST_CASE("fractional linear outer factor inverts directly") {
  UniRat g = ur({1, 1}, {-1, 1});  // (x+1)/(x-1)
  UniRat f = ur({1, 2, 1}, {1, -2, 1});
  auto r = solve_right_component(f, g);
  REQUIRE(r);
  CHECK(compose_uni(g, r->right) == f);
}

TEST_CASE("solutions only over an extension raise the residue flag") {
  // 2x^4 = sq o (sqrt(2) x^2), irrational either way
  UniRat sq = ur({0, 0, 1}, {1});
  auto r = solve_right_all(ur({0, 0, 0, 0, 2}, {1}), sq);
  CHECK(r.inners.empty());
  CHECK(r.residue_warning);
}

TEST_CASE("outer factors by linear solve") {
  UniRat sq = ur({0, 0, 1}, {1});

  auto a = solve_left_component(ur({1, 0, 2, 0, 1}, {1}), sq);
  REQUIRE(a);
  CHECK(a->left == ur({1, 2, 1}, {1}));  // (y+1)^2

  UniRat inner = ur({0, -1, 1}, {1});  // x^2 - x
  UniRat f = compose_uni(ur({1}, {1, 0, 1}), inner);
  auto b = solve_left_component(f, inner);
  REQUIRE(b);
  CHECK(b->left == ur({1}, {1, 0, 1}));

  CHECK_FALSE(solve_left_component(ur({0, 1, 0, 0, 1}, {1}), sq));  // x^4 + x
  CHECK_FALSE(solve_left_component(ur({0, 0, 0, 1}, {1}), sq));     // degree mismatch
}

TEST_CASE("full class enumeration on pure powers") {
  UniRat sq = ur({0, 0, 1}, {1});
  UniRat cube = ur({0, 0, 0, 1}, {1});

  auto quartic = enumerate_decompositions(ur({0, 0, 0, 0, 1}, {1}));
  REQUIRE(quartic.size() == 1);
  CHECK(quartic[0].left == sq);
  CHECK(quartic[0].right == sq);

  auto sextic = enumerate_decompositions(ur({0, 0, 0, 0, 0, 0, 1}, {1}));
  REQUIRE(sextic.size() == 2);
  CHECK(sextic[0].left == sq);
  CHECK(sextic[0].right == cube);
  CHECK(sextic[1].left == cube);
  CHECK(sextic[1].right == sq);
}

TEST_CASE("a four-group invariant has three distinct classes") {
  // (x^4+1)/x^2 is fixed by x -> -x and x -> 1/x
  UniRat f = ur({1, 0, 0, 0, 1}, {0, 0, 1});
  auto classes = enumerate_decompositions(f);
  REQUIRE(classes.size() == 3);

  std::set<std::pair<UniRat, UniRat>> got;
  for (const auto& d : classes) {
    CHECK(compose_uni(d.left, d.right) == f);
    got.insert({d.left, d.right});
  }
  std::set<std::pair<UniRat, UniRat>> want = {
      {ur({1, 0, 1}, {0, 1}), ur({0, 0, 1}, {1})},       // (y^2+1)/y o x^2
      {ur({1, 0, -2}, {0, 0, 1}), ur({0, 1}, {1, 0, 1})},   // (1-2y^2)/y^2 o x/(x^2+1)
      {ur({1, 0, 2}, {0, 0, 1}), ur({0, 1}, {-1, 0, 1})},   // (1+2y^2)/y^2 o x/(x^2-1)
  };
  CHECK(got == want);
}

TEST_CASE("enumeration edge cases") {
  CHECK(enumerate_decompositions(ur({0, 1, 0, 0, 1}, {1})).empty());     // x^4 + x
  CHECK(enumerate_decompositions(ur({0, 0, 0, 0, 0, 1}, {1})).empty());  // prime degree
  CHECK_THROWS_AS(enumerate_decompositions(ur({0, 0, 0, 0, 0, 0, 0, 0, 0, 1}, {1})), cap_exceeded);
  CHECK_THROWS_AS(enumerate_decompositions(ur({7}, {1})), input_error);
}

TEST_CASE("equivalence of outer factors") {
  UniRat sq = ur({0, 0, 1}, {1});

  auto m1 = are_equivalent(sq, ur({1, 2, 1}, {1}));  // (x+1)^2
  REQUIRE(m1);
  CHECK(compose_uni(ur({1, 2, 1}, {1}), m1->to_unirat()) == sq);

  auto m2 = are_equivalent(ur({1}, {0, 0, 1}), sq);  // 1/x^2 vs x^2
  REQUIRE(m2);
  CHECK(compose_uni(sq, m2->to_unirat()) == ur({1}, {0, 0, 1}));

  CHECK_FALSE(are_equivalent(sq, ur({0, 0, 0, 1}, {1})));
  CHECK_FALSE(are_equivalent(sq, ur({0, 1, 1}, {1})));     // x^2 + x
  CHECK_FALSE(are_equivalent(ur({0, 0, 2}, {1}), sq));     // 2x^2 needs sqrt(2)
}

TEST_CASE("dominating component search") {
  UniRat sq = ur({0, 0, 1}, {1});
  UniRat x4 = ur({0, 0, 0, 0, 1}, {1});
  UniRat x6 = ur({0, 0, 0, 0, 0, 0, 1}, {1});

  auto d = dominating_function(x4, x6);
  CHECK(d.g == sq);
  CHECK(compose_uni(d.g, d.h1) == x4);
  CHECK(compose_uni(d.g, d.h2) == x6);

  auto e = dominating_function(ur({1, 0, 0, 0, 1}, {1}), ur({1, 0, 0, 0, 0, 0, 1}, {1}));
  CHECK(e.g == ur({1, 0, 1}, {1}));  // y^2 + 1
  CHECK(compose_uni(e.g, e.h2) == ur({1, 0, 0, 0, 0, 0, 1}, {1}));

  auto tight = dominating_function(sq, ur({0, 0, 0, 1}, {1}));
  CHECK(tight.g.degree() == 1);  // only the identity survives
}

TEST_CASE("outer bivariate lift") {
  UniRat sq = ur({0, 0, 1}, {1});
  BiPoly X1 = BiPoly::x1(), X2 = BiPoly::x2();
  BiRat core(X1 * X2 + BiPoly(Scalar(1)), X1 - X2);
  BiRat f = core * core;

  auto h = solve_bivariate_lift(f, sq, LiftSide::outer);
  REQUIRE(h);
  CHECK(compose_uni_bi(sq, *h) == f);

  CHECK_FALSE(solve_bivariate_lift(BiRat(X1 * X1 * X2), sq, LiftSide::outer));

  // fractional linear outer
  UniRat rec = ur({1}, {0, 1});
  BiRat g2(X1 + X2, X1 * X2);
  auto h2 = solve_bivariate_lift(BiRat(X1 * X2, X1 + X2), rec, LiftSide::outer);
  REQUIRE(h2);
  CHECK(*h2 == g2);

  BiPoly big = (X1 * X2).pow(3);
  CHECK_THROWS_AS(solve_bivariate_lift(BiRat(big * big), sq, LiftSide::outer), cap_exceeded);
}

TEST_CASE("inner bivariate lift") {
  UniRat sq = ur({0, 0, 1}, {1});
  BiPoly X1 = BiPoly::x1(), X2 = BiPoly::x2();
  BiRat f(X1 * X1 + X2, X1 * X1 - X2);

  auto h = solve_bivariate_lift(f, sq, LiftSide::inner);
  REQUIRE(h);
  CHECK(*h == BiRat(X1 + X2, X1 - X2));  // first slot is the new variable
  CHECK(compose_bi(*h, sq, UniRat::x()) == f);

  CHECK_FALSE(solve_bivariate_lift(BiRat(X1 * X1 * X1), sq, LiftSide::inner));

  UniRat shift = ur({1, 1}, {1});  // x + 1
  auto h2 = solve_bivariate_lift(BiRat(X1 * X2), shift, LiftSide::inner);
  REQUIRE(h2);
  CHECK(compose_bi(*h2, shift, UniRat::x()) == BiRat(X1 * X2));
}

TEST_CASE("field generator from difference curves") {
  UniRat sq = ur({0, 0, 1}, {1});

  auto h1 = luroth_generator({sq});
  CHECK(h1 == ur({-1}, {0, 0, 1}));

  auto h2 = luroth_generator({ur({0, 0, 0, 1}, {1}), sq});
  CHECK(h2 == ur({-1}, {0, 1}));  // together they generate everything

  auto h3 = luroth_generator({ur({1, 0, 0, 0, 1}, {0, 0, 1})});
  CHECK(h3.degree() == 4);
  CHECK(solve_left_component(ur({1, 0, 0, 0, 1}, {0, 0, 1}), h3));

  auto h4 = luroth_generator({ur({5}, {1}), sq});  // constants are skipped
  CHECK(h4 == h1);

  CHECK_THROWS_AS(luroth_generator({ur({5}, {1})}), input_error);
}

TEST_CASE("shared outer pair across two inner functions") {
  UniRat h1 = ur({1, 1}, {1});  // x + 1
  UniRat h2 = ur({0, 2}, {1});  // 2x
  UniRat g1 = ur({0, 0, 1}, {1});
  UniRat g2 = ur({0, 1, 1}, {1});  // y^2 + y
  UniRat f11 = compose_uni(g1, h1), f12 = compose_uni(g2, h1);
  UniRat f21 = compose_uni(g1, h2), f22 = compose_uni(g2, h2);

  auto r = common_left_pair(f11, f12, f21, f22);
  REQUIRE(r);
  CHECK(compose_uni(r->g1, r->h1) == f11);
  CHECK(compose_uni(r->g2, r->h1) == f12);
  CHECK(compose_uni(r->g1, r->h2) == f21);
  CHECK(compose_uni(r->g2, r->h2) == f22);

  CHECK_FALSE(common_left_pair(ur({0, 0, 1}, {1}), ur({0, 0, 0, 1}, {1}), ur({1, 0, 1}, {1}),
                               ur({0, 0, 0, 1}, {1})));
}
