#include "doctest_main.hpp"

#include <klbm/laurent.hpp>
#include <klbm/multipoly.hpp>
#include <klbm/polymatrix.hpp>
#include <klbm/weyl.hpp>

#include <random>

using namespace klbm;

namespace {

IntLaurentPoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> nterms(0, 4), exp(-5, 5), coeff(-9, 9);
  IntLaurentPoly p;
  int k = nterms(rng);
  for (int i = 0; i < k; ++i) p.add_term(exp(rng), coeff(rng));
  return p;
}

}  // namespace

TEST_CASE("laurent arithmetic basics") {
  IntLaurentPoly q = IntLaurentPoly::monomial(1, 1);  // t
  IntLaurentPoly one = IntLaurentPoly::one();
  CHECK((one + q) * (one - q) == one - q * q);
  CHECK((q * IntLaurentPoly()).is_zero());
  CHECK(q.bar() == IntLaurentPoly::monomial(1, -1));
}

TEST_CASE("ring axioms on random samples") {
  std::mt19937 rng(42);
  for (int i = 0; i < 200; ++i) {
    IntLaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("substitutions are ring homomorphisms") {
  std::mt19937 rng(7);
  for (int i = 0; i < 100; ++i) {
    IntLaurentPoly a = random_poly(rng), b = random_poly(rng);
    CHECK((a * b).negate_var() == a.negate_var() * b.negate_var());
    CHECK((a + b).bar() == a.bar() + b.bar());
    CHECK((a * b).bar() == a.bar() * b.bar());
    // p(t^{-2}) t^j  *  q(t^{-2}) t^k  =  (pq)(t^{-2}) t^{j+k}
    CHECK(a.inv_square_sub(3) * b.inv_square_sub(2) == (a * b).inv_square_sub(5));
  }
}

TEST_CASE("inv_square_sub worked example") {
  // (1+q) under q -> t^{-2} with prefactor t^3 gives t^3 + t
  IntLaurentPoly p = IntLaurentPoly::one() + IntLaurentPoly::monomial(1, 1);
  IntLaurentPoly expect = IntLaurentPoly::monomial(1, 3) + IntLaurentPoly::monomial(1, 1);
  CHECK(p.inv_square_sub(3) == expect);
  // t -> -t on t^3 + t is odd
  CHECK(expect.negate_var() == -expect);
}

TEST_CASE("graded rank round trips") {
  GradedRank r;
  CHECK(r.to_poly().is_zero());
  r.add(1);
  r.add(-1);
  // {1,-1} -> t^{-1} + t
  CHECK(r.to_poly() == IntLaurentPoly::monomial(1, -1) + IntLaurentPoly::monomial(1, 1));
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> shift(-6, 6), mult(1, 3), n(0, 5);
  for (int i = 0; i < 100; ++i) {
    GradedRank s;
    int k = n(rng);
    for (int j = 0; j < k; ++j) s.add(shift(rng), mult(rng));
    CHECK(GradedRank::from_poly(s.to_poly()) == s);
    CHECK(s.shifted(3).shifted(-3) == s);
    CHECK(s.negated().negated() == s);
    CHECK(s.shifted(2).total() == s.total());
  }
  CHECK_THROWS(GradedRank::from_poly(IntLaurentPoly::constant(-1)));
}

TEST_CASE("multipoly homogeneity is graded") {
  MultiPoly x = MultiPoly::variable(3, 0), y = MultiPoly::variable(3, 1);
  MultiPoly p = x * x + y * x;  // poly degree 2, graded degree 4
  CHECK(p.graded_degree() == 4);
  MultiPoly q = x + y;
  CHECK((p * q).graded_degree() == p.graded_degree() + q.graded_degree());
  CHECK((x + x * x).homogeneous_poly_degree() == -2);
}

TEST_CASE("multipoly reduction modulo a linear form") {
  // mod x0 + x1: x0 == -x1
  LinearForm f(RatVec{Rat(1), Rat(1)});
  MultiPoly x = MultiPoly::variable(2, 0), y = MultiPoly::variable(2, 1);
  MultiPoly r = (x * x - y * y).reduce_mod(f);
  CHECK(r.is_zero());
  MultiPoly r2 = (x * y).reduce_mod(f);
  CHECK(r2 == (y * y) * Rat(-1));
}

TEST_CASE("polymatrix product with reindexing") {
  auto g = weyl::WeylGroup::make("A2");
  std::vector<weyl::WeylElt> idx{g->identity(), g->generator(1), g->generator(2)};
  poly::PolyMatrix id = poly::PolyMatrix::identity(idx);
  poly::PolyMatrix m(idx);
  m.at(0, 1) = IntLaurentPoly::monomial(2, 1);
  m.at(2, 2) = IntLaurentPoly::one();
  CHECK(id.product(m) == m);
  CHECK(m.product(id) == m);
  CHECK(id.is_identity());
  CHECK_THROWS(poly::PolyMatrix(std::vector<weyl::WeylElt>{g->identity(), g->identity()}));
}
