#pragma once

#include <klbm/hecke.hpp>
#include <klbm/moment.hpp>

#include <map>
#include <optional>
#include <vector>

namespace klbm::bm {

using moment::GradedSheaf;
using moment::MomentGraph;
using weyl::WeylElt;

// Braden-MacPherson sheaf B(x) on an ordered GKM graph, built by the staged
// construction: sweep the coideal {y >= x} in a linear extension of the
// graph order, at each vertex forming the boundary module
// B_{dy} = Im(rho_{<y, d_y}) from the sections built so far and taking its
// projective cover (free module on minimal homogeneous generators).
// Normalization: the stalk at the root is A{+l(x)} on plus graphs and
// A{-l(x)} on minus graphs.
class BMSheaf {
 public:
  BMSheaf(const MomentGraph& g, GradedSheaf sheaf, int root, int d_lo, int d_hi)
      : g_(&g), sheaf_(std::move(sheaf)), root_(root), d_lo_(d_lo), d_hi_(d_hi) {}

  const MomentGraph& graph() const { return *g_; }
  const GradedSheaf& sheaf() const { return sheaf_; }
  GradedSheaf& sheaf_mut() { return sheaf_; }
  int root() const { return root_; }
  const WeylElt& root_elt() const { return g_->verts[root_]; }
  int d_lo() const { return d_lo_; }
  int d_hi() const { return d_hi_; }

  GradedRank stalk(int v) const { return sheaf_.stalk_rank(v); }
  GradedRank stalk(const WeylElt& y) const;

  // M_{[y]} = Ker(rho_{y,d_y}); graded free by Delta-filteredness, verified
  // degreewise up to the window bound.
  const GradedRank& defect(int v) const;
  // M^y = Ker(rho_{y,e_y})
  const GradedRank& costalk(int v) const;

  // support vertices in sweep order (root first, then poset-ascending)
  const std::vector<int>& support() const { return support_; }

 private:
  friend BMSheaf bm_sheaf(const MomentGraph& g, const WeylElt& x, std::optional<int> dmax);
  GradedRank kernel_rank(int v, const std::vector<int>& edges) const;

  const MomentGraph* g_;
  GradedSheaf sheaf_;
  int root_;
  int d_lo_, d_hi_;
  std::vector<int> support_;
  mutable std::map<int, GradedRank> defect_cache_, costalk_cache_;
};

BMSheaf bm_sheaf(const MomentGraph& g, const WeylElt& x, std::optional<int> dmax = {});

// Verma flag: the multiset of (vertex, shift) pairs of the Verma filtration,
// listed from the top of the filtration downward, so the first entry is the
// quotient (root, sign*l(root)) and later entries sit at poset-larger
// vertices.
std::vector<std::pair<WeylElt, int>> verma_flag(const BMSheaf& b);

// Graded-rank level duality: stalks of D(B) at y are the negated costalk
// ranks of B.  Self-duality check compares those with B's own stalks.
GradedRank dual_stalk_rank(const BMSheaf& b, int v);
bool rank_self_dual(const BMSheaf& b);

// Prop. 3.26(a): stalk(B_+(x), y) = + A{l(x)-2i} with multiplicity
// P^{mu,q}_{y,x,i}.
GradedRank predicted_stalk_plus(hecke::KLTable& pq, const WeylElt& y, const WeylElt& x);
// Prop. 3.26(b): defect(B_+(x), y) shifts 2l(y)-l(x)+2i, same multiplicities.
GradedRank predicted_defect_plus(hecke::KLTable& pq, const WeylElt& y, const WeylElt& x);
// Cor. B1: stalk(B_-(x), y) = + S{-l(x)-2i} with multiplicity Q^{mu,-1}_{x,y,i}.
GradedRank predicted_stalk_minus(hecke::KLTable& qm1, const WeylElt& x, const WeylElt& y);

// Checks Cor. B1 for every vertex of a minus-ordered graph.
bool minus_stalks_vs_Q(const MomentGraph& g_minus, const WeylElt& x, hecke::KLTable& qm1);

}  // namespace klbm::bm
