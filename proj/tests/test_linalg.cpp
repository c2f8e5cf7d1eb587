#include "doctest_main.hpp"

#include <klbm/linalg.hpp>

#include <random>

using namespace klbm;

TEST_CASE("primitive normalization") {
  RatVec v{Rat(2, 3), Rat(-4, 3), Rat(0)};
  normalize_primitive(v);
  CHECK(v == RatVec{Rat(1), Rat(-2), Rat(0)});
  RatVec w{Rat(-1, 2), Rat(-1, 4)};
  normalize_primitive(w);
  CHECK(w == RatVec{Rat(2), Rat(1)});
}

TEST_CASE("rref and nullspace on a hand example") {
  // x + y + z = 0, x - z = 0  ->  kernel spanned by (1, -2, 1)
  RatRows rows{{Rat(1), Rat(1), Rat(1)}, {Rat(1), Rat(0), Rat(-1)}};
  CHECK(rank_of(rows, 3) == 2);
  RatRows ns = nullspace_basis(rows, 3);
  REQUIRE(ns.size() == 1);
  Rat t = ns[0][0];
  CHECK(ns[0][1] == -2 * t);
  CHECK(ns[0][2] == t);
}

TEST_CASE("rowspace absorb and containment") {
  RowSpace sp(3);
  CHECK(sp.absorb({Rat(1), Rat(2), Rat(3)}));
  CHECK(!sp.absorb({Rat(2), Rat(4), Rat(6)}));
  CHECK(sp.absorb({Rat(0), Rat(1), Rat(0)}));
  CHECK(sp.rank() == 2);
  CHECK(sp.contains({Rat(1), Rat(3), Rat(3)}));
  CHECK(!sp.contains({Rat(0), Rat(0), Rat(1)}));
}

TEST_CASE("rank + nullity = ncols on random matrices") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> dim(1, 7), val(-4, 4);
  for (int rep = 0; rep < 60; ++rep) {
    int r = dim(rng), c = dim(rng);
    RatRows rows(r, RatVec(c));
    for (auto& row : rows)
      for (auto& x : row) x = val(rng);
    int rk = rank_of(rows, c);
    RatRows ns = nullspace_basis(rows, c);
    CHECK(rk + static_cast<int>(ns.size()) == c);
    // every basis vector solves the system
    for (const auto& v : ns)
      for (const auto& row : rows) {
        Rat acc = 0;
        for (int j = 0; j < c; ++j) acc += row[j] * v[j];
        CHECK(acc == 0);
      }
    // basis is independent
    CHECK(rank_of(ns, c) == static_cast<int>(ns.size()));
  }
}
