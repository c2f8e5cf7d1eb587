#pragma once

#include <klbm/bm.hpp>
#include <klbm/hecke.hpp>
#include <klbm/polymatrix.hpp>

#include <optional>
#include <string>
#include <vector>

namespace klbm::koszul {

using hecke::KLTable;
using moment::MomentGraph;
using weyl::GroupPtr;
using weyl::ParabolicType;
using weyl::WeylElt;

enum class Provenance { FromKLFormula, FromBMHomFiltration };

struct HilbertMatrix {
  poly::PolyMatrix mat;
  ParabolicType mu;
  int sign;
  WeylElt w;
  Provenance prov;
};

// P(^wA_{mu,+}, t)_{x,x'} = sum_{y<=x,x'} P^{mu,q}_{y,x}(t^-2) P^{mu,q}_{y,x'}(t^-2)
//                            t^{l(x)+l(x')-2l(y)}
HilbertMatrix hilbert_plus(KLTable& pq, const WeylElt& w);

// P(^wA_{mu,-}, t)_{x,x'} = sum_{y>=x,x'} Q^{mu,-1}_{x,y}(t^-2) Q^{mu,-1}_{x',y}(t^-2)
//                            t^{2l(y)-l(x)-l(x')}
HilbertMatrix hilbert_minus(KLTable& qm1, const WeylElt& w);

// Independent recomputation through the Hom filtration of BM sheaves:
// entry (x,x') = sum over vertices y, defect shifts i of B(x) at y and stalk
// shifts a of B(x') at y of t^{a-i}.
HilbertMatrix hilbert_from_bm(const MomentGraph& g, std::optional<int> dmax = {});

// every entry lies in delta_{x,x'} + t N[t]
bool basic_positivity(const HilbertMatrix& m);

struct KoszulReport {
  bool ok;
  poly::PolyMatrix product;  // should be the identity
  std::string failure;       // offending entry when not ok
};

// P(^wA_{phi,-}, t) P(^vA_{phi,+}, -t) = 1 with v = w^{-1} and index map
// x -> x^{-1}.
KoszulReport koszul_identity_check(GroupPtr g, const WeylElt& w);

struct ThetaReport {
  bool ok = true;
  bool summands_ok = true;   // theta(f): summand multiset at each root x
  bool theta_g_ok = true;    // theta(g): graded-rank identities, both signs
  bool z_ranks_ok = true;    // isom1 bookkeeping, degreewise
  std::string detail;
};

// Rank-level verification of Prop. theta(f),(g) and the isom1 bookkeeping on
// the truncation with top w in I_mu^min (z = w w_mu on the regular side).
ThetaReport theta_decomposition_check(GroupPtr g, const ParabolicType& mu, const WeylElt& w,
                                      std::optional<int> dmax = {});

// flag rank of Gamma(B): the multiset union of the defect ranks
GradedRank flag_rank(const bm::BMSheaf& b);

}  // namespace klbm::koszul
