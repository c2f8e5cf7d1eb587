#include "doctest_main.hpp"

#include <klbm/moment.hpp>

#include <random>

using namespace klbm;
using moment::MomentGraph;
using weyl::ParabolicType;
using weyl::WeylGroup;

TEST_CASE("build_graph examples") {
  // single vertex, no edges
  {
    auto g = WeylGroup::make("A2");
    auto mg = moment::build_graph(g, {}, -1, g->identity());
    CHECK(mg.verts.size() == 1);
    CHECK(mg.edges.empty());
  }
  // finite A1: 2 vertices, 1 edge labelled by the coroot line
  {
    auto g = WeylGroup::make("A1");
    auto mg = moment::build_graph(g, {}, -1, g->generator(1));
    CHECK(mg.verts.size() == 2);
    REQUIRE(mg.edges.size() == 1);
    CHECK(mg.edges[0].label.coords == RatVec{Rat(1)});
  }
  // affine A1, w = s0 s1: square with four edges
  {
    auto g = WeylGroup::make("A1~");
    auto mg = moment::build_graph(g, {}, -1, g->parse("0,1"));
    CHECK(mg.verts.size() == 4);
    CHECK(mg.edges.size() == 4);
    // every edge joins comparable vertices
    for (const auto& e : mg.edges)
      CHECK((mg.bruhat(e.a, e.b) || mg.bruhat(e.b, e.a)));
    CHECK(moment::gkm_check(mg));
    // the two edges at e carry the two affine simple coroot lines
    int ve = mg.index_of(g->identity());
    std::vector<RatVec> at_e;
    for (const auto& e : mg.edges)
      if (e.a == ve || e.b == ve) at_e.push_back(e.label.coords);
    REQUIRE(at_e.size() == 2);
    CHECK(at_e[0] != at_e[1]);
  }
  // dual-side graph carries root labels with a delta coordinate
  {
    auto g = WeylGroup::make("A1~");
    auto mg = moment::build_graph(g, {}, -1, g->parse("0,1"), /*dual_side=*/true);
    CHECK(mg.nvars == 2);
    bool some_delta = false;
    for (const auto& e : mg.edges) some_delta = some_delta || e.label.coords[0] != 0;
    CHECK(some_delta);
    CHECK(moment::gkm_check(mg));
  }
  auto g = WeylGroup::make("A1~");
  CHECK_THROWS(moment::build_graph(g, ParabolicType{1}, -1, g->parse("0,1")));
}

TEST_CASE("gkm counterexample") {
  auto g = WeylGroup::make("A1");
  auto mg = moment::build_graph(g, {}, -1, g->generator(1));
  // duplicate the edge with the same label line: GKM fails at both vertices
  mg.edges.push_back(mg.edges[0]);
  CHECK(!moment::gkm_check(mg));
}

TEST_CASE("sections of the structure sheaf") {
  auto g = WeylGroup::make("A1");
  auto mg = moment::build_graph(g, {}, -1, g->generator(1));
  // structural algebra of the finite A1 graph over t (one variable):
  // degree 0 forces a_e = a_s (dim 1), every positive even degree gives 2
  CHECK(moment::structural_algebra_dim(mg, 0, 8) == 1);
  CHECK(moment::structural_algebra_dim(mg, 2, 8) == 2);
  CHECK(moment::structural_algebra_dim(mg, 4, 8) == 2);
  CHECK(moment::structural_algebra_dim(mg, 1, 8) == 0);
  CHECK(moment::structural_algebra_dim(mg, -2, 8) == 0);

  // single vertex: the full stalk
  auto s = moment::structure_sheaf(mg, 8);
  CHECK(s.sections_dim({0}, 0) == 1);
  CHECK(s.sections_dim({0}, 2) == 1);

  // affine A1 square: vertices e and s0s1 have no joining edge, so sections
  // over that pair are the full product of stalks
  auto ga = WeylGroup::make("A1~");
  auto sq = moment::build_graph(ga, {}, -1, ga->parse("0,1"));
  auto ss = moment::structure_sheaf(sq, 8);
  int ve = sq.index_of(ga->identity());
  int vt = sq.index_of(ga->parse("0,1"));
  for (int d = 0; d <= 6; d += 2)
    CHECK(ss.sections_dim({ve, vt}, d) ==
          ss.sections_dim({ve}, d) + ss.sections_dim({vt}, d));
}

TEST_CASE("sections subadditivity over unions") {
  auto ga = WeylGroup::make("A1~");
  auto sq = moment::build_graph(ga, {}, -1, ga->parse("0,1,0"));
  auto ss = moment::structure_sheaf(sq, 8);
  std::mt19937 rng(12);
  std::uniform_int_distribution<int> coin(0, 1);
  int n = static_cast<int>(sq.verts.size());
  for (int rep = 0; rep < 10; ++rep) {
    std::vector<int> J, K, U;
    for (int v = 0; v < n; ++v) {
      bool inJ = coin(rng), inK = coin(rng);
      if (inJ) J.push_back(v);
      if (inK && !inJ) K.push_back(v);
      if (inJ || inK) U.push_back(v);
    }
    for (int d = 0; d <= 6; d += 2)
      CHECK(ss.sections_dim(U, d) <= ss.sections_dim(J, d) + ss.sections_dim(K, d));
  }
}

TEST_CASE("gkm holds on all built graphs up to length 6") {
  for (const char* t : {"A2", "B2"}) {
    auto g = WeylGroup::make(t);
    for (ParabolicType mu : {ParabolicType{}, ParabolicType{1}})
      for (int sign : {+1, -1}) {
        auto w = g->coset_min(g->longest_element(ParabolicType{1, 2}), mu);
        auto mg = moment::build_graph(g, mu, sign, w);
        CHECK(moment::gkm_check(mg));
        auto mgd = moment::build_graph(g, mu, sign, w, true);
        CHECK(moment::gkm_check(mgd));
      }
  }
  auto ga = WeylGroup::make("A1~");
  for (ParabolicType mu : {ParabolicType{}, ParabolicType{1}}) {
    std::vector<int> word{0, 1, 0, 1, 0, 1};
    auto w = ga->coset_min(ga->normalize(word), mu);
    for (int sign : {+1, -1}) {
      CHECK(moment::gkm_check(moment::build_graph(ga, mu, sign, w)));
      CHECK(moment::gkm_check(moment::build_graph(ga, mu, sign, w, true)));
    }
  }
}
