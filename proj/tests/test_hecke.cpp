#include "doctest_main.hpp"
#include "oracles.hpp"

#include <klbm/hecke.hpp>

#include <random>

using namespace klbm;
using hecke::Family;
using hecke::KLTable;
using weyl::ParabolicType;
using weyl::WeylElt;
using weyl::WeylGroup;

TEST_CASE("trivialities and input validation") {
  auto g = WeylGroup::make("A2");
  KLTable t(g, {}, Family::TypeQ);
  for (const auto& x : g->ball(3)) {
    CHECK(t.parabolic_P(x, x).is_one());
    CHECK(t.inverse_Q(x, x).is_one());
  }
  CHECK(t.parabolic_P(g->generator(1), g->generator(2)).is_zero());
  KLTable tp(g, ParabolicType{1}, Family::TypeQ);
  CHECK_THROWS(tp.parabolic_P(g->generator(1), g->parse("1,2")));  // s1 not a min rep
}

TEST_CASE("the A3 value 1+q from both engines") {
  auto g = WeylGroup::make("A3");
  KLTable t(g, {}, Family::TypeQ);
  WeylElt y = g->generator(2), x = g->parse("2,1,3,2");
  IntLaurentPoly expect = IntLaurentPoly::one() + IntLaurentPoly::monomial(1, 1);
  CHECK(hecke::kl(t, y, x) == expect);
  oracle::BarSolveOracle orc(g, {}, Family::TypeQ);
  CHECK(orc.P(y, x) == expect);
}

TEST_CASE("production engine agrees with the bar-solve oracle") {
  // ordinary, finite A3 (full group)
  {
    auto g = WeylGroup::make("A3");
    KLTable t(g, {}, Family::TypeQ);
    oracle::BarSolveOracle orc(g, {}, Family::TypeQ);
    auto ball = g->ball(6);
    for (const auto& x : ball)
      for (const auto& y : ball)
        if (g->bruhat_leq(y, x)) CHECK(t.parabolic_P(y, x) == orc.P(y, x));
  }
  // ordinary, truncated affine A1
  {
    auto g = WeylGroup::make("A1~");
    KLTable t(g, {}, Family::TypeQ);
    oracle::BarSolveOracle orc(g, {}, Family::TypeQ);
    auto ball = g->ball(8);
    for (const auto& x : ball)
      for (const auto& y : ball)
        if (g->bruhat_leq(y, x)) CHECK(t.parabolic_P(y, x) == orc.P(y, x));
  }
  // parabolic, both families, affine A2 small ball
  {
    auto g = WeylGroup::make("A2~");
    ParabolicType mu{0};
    for (Family f : {Family::TypeQ, Family::TypeMinusOne}) {
      KLTable t(g, mu, f);
      oracle::BarSolveOracle orc(g, mu, f);
      for (const auto& x : g->ball(4)) {
        if (!g->is_min_rep(x, mu)) continue;
        for (const auto& y : g->ball(4)) {
          if (!g->is_min_rep(y, mu) || !g->bruhat_leq(y, x)) continue;
          CHECK(t.parabolic_P(y, x) == orc.P(y, x));
        }
      }
    }
  }
}

TEST_CASE("bar invariance of the KL basis") {
  auto g = WeylGroup::make("B2");
  KLTable t(g, {}, Family::TypeQ);
  for (const auto& x : g->ball(5)) {
    const auto& col = t.C_column(x);
    CHECK(t.bar(col) == col);
  }
  auto ga = WeylGroup::make("A2~");
  ParabolicType mu{1};
  KLTable tp(ga, mu, Family::TypeMinusOne);
  for (const auto& x : ga->ball(4)) {
    if (!ga->is_min_rep(x, mu)) continue;
    const auto& col = tp.C_column(x);
    CHECK(tp.bar(col) == col);
  }
}

TEST_CASE("inverse invariance P_{y,x} = P_{y^-1,x^-1} and likewise for Q") {
  auto g = WeylGroup::make("A2~");
  KLTable t(g, {}, Family::TypeQ);
  KLTable tm(g, {}, Family::TypeMinusOne);
  std::mt19937 rng(31);
  auto ball = g->ball(5);
  std::uniform_int_distribution<size_t> pick(0, ball.size() - 1);
  for (int rep = 0; rep < 40; ++rep) {
    const WeylElt &a = ball[pick(rng)], &b = ball[pick(rng)];
    CHECK(t.parabolic_P(a, b) == t.parabolic_P(g->inverse(a), g->inverse(b)));
    CHECK(tm.inverse_Q(a, b) == tm.inverse_Q(g->inverse(a), g->inverse(b)));
  }
}

TEST_CASE("mu = empty: both families reduce to ordinary KL") {
  auto g = WeylGroup::make("B2");
  KLTable tq(g, {}, Family::TypeQ);
  KLTable tm(g, {}, Family::TypeMinusOne);
  auto ball = g->ball(6);
  for (const auto& x : ball)
    for (const auto& y : ball) {
      if (!g->bruhat_leq(y, x)) continue;
      CHECK(tq.parabolic_P(y, x) == tm.parabolic_P(y, x));
      CHECK(tq.inverse_Q(y, x) == tm.inverse_Q(y, x));
    }
}

TEST_CASE("degree bounds and nonnegativity") {
  auto g = WeylGroup::make("A1~");
  KLTable t(g, {}, Family::TypeQ);
  auto ball = g->ball(7);
  for (const auto& x : ball)
    for (const auto& y : ball) {
      if (!g->bruhat_leq(y, x)) continue;
      IntLaurentPoly p = t.parabolic_P(y, x);
      CHECK(p.coeffs_nonnegative());
      if (!(y == x) && !p.is_zero())
        CHECK(2 * p.max_exp() < x.length() - y.length());
    }
}

TEST_CASE("deodhar identities against the ordinary polynomials") {
  // For minimal representatives of the left cosets x W_mu:
  //   P^{mu,-1}_{y,x} = sum_{u in W_mu} (-1)^{l(u)} P_{yu,x}
  //   P^{mu,q}_{y,x}  = P_{y w_mu, x w_mu}
  for (const char* type : {"A2", "B2"}) {
    auto g = WeylGroup::make(type);
    ParabolicType mu{1};
    KLTable ord(g, {}, Family::TypeQ);
    KLTable pm1(g, mu, Family::TypeMinusOne);
    KLTable pq(g, mu, Family::TypeQ);
    WeylElt wmu = g->longest_element(mu);
    const auto& wmu_elems = g->parabolic_subgroup(mu);
    auto ball = g->ball(8);
    for (const auto& x : ball) {
      if (!g->is_min_rep(x, mu)) continue;
      for (const auto& y : ball) {
        if (!g->is_min_rep(y, mu) || !g->bruhat_leq(y, x)) continue;
        IntLaurentPoly alt;
        for (const auto& u : wmu_elems) {
          IntLaurentPoly term = ord.parabolic_P(g->multiply(y, u), x);
          alt += (u.length() % 2) ? -term : term;
        }
        CHECK(pm1.parabolic_P(y, x) == alt);
        CHECK(pq.parabolic_P(y, x) ==
              ord.parabolic_P(g->multiply(y, wmu), g->multiply(x, wmu)));
      }
    }
  }
}

TEST_CASE("finite-type twist: Q^{mu,-1}_{x,y} = P^{mu,q}_{w0 y wmu, w0 x wmu}") {
  for (const char* type : {"A2", "B2"}) {
    auto g = WeylGroup::make(type);
    WeylElt w0 = g->longest_element(ParabolicType{1, 2});
    for (ParabolicType mu : {ParabolicType{}, ParabolicType{1}}) {
      KLTable qm1(g, mu, Family::TypeMinusOne);
      KLTable pq(g, mu, Family::TypeQ);
      WeylElt wmu = g->longest_element(mu);
      auto ball = g->ball(8);
      for (const auto& x : ball) {
        if (!g->is_min_rep(x, mu)) continue;
        for (const auto& y : ball) {
          if (!g->is_min_rep(y, mu) || !g->bruhat_leq(x, y)) continue;
          WeylElt xx = g->multiply(g->multiply(w0, y), wmu);
          WeylElt yy = g->multiply(g->multiply(w0, x), wmu);
          CHECK(qm1.inverse_Q(x, y) == pq.parabolic_P(xx, yy));
        }
      }
    }
  }
}

TEST_CASE("inversion identity on truncations") {
  // singleton truncation
  {
    auto g = WeylGroup::make("A2");
    KLTable t(g, {}, Family::TypeQ);
    CHECK(hecke::verify_inversion(t, g->identity()).ok);
  }
  // finite A2 full group, both families
  {
    auto g = WeylGroup::make("A2");
    for (Family f : {Family::TypeQ, Family::TypeMinusOne}) {
      KLTable t(g, {}, f);
      CHECK(hecke::verify_inversion(t, g->parse("1,2,1")).ok);
    }
  }
  // affine A1, l(w) = 6, mu in {empty, {1}}
  {
    auto g = WeylGroup::make("A1~");
    WeylElt w = g->parse("0,1,0,1,0,1");
    for (ParabolicType mu : {ParabolicType{}, ParabolicType{1}})
      for (Family f : {Family::TypeQ, Family::TypeMinusOne}) {
        KLTable t(g, mu, f);
        CHECK(hecke::verify_inversion(t, w).ok);
      }
  }
}
