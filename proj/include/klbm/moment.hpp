#pragma once

#include <klbm/laurent.hpp>
#include <klbm/multipoly.hpp>
#include <klbm/weyl.hpp>

#include <map>
#include <optional>
#include <vector>

namespace klbm::moment {

using weyl::GroupPtr;
using weyl::ParabolicType;
using weyl::WeylElt;
using weyl::WeylGroup;

// Moment graph ^wG_{mu,+-} of the paper: vertices are the minimal coset
// representatives x <= w, an edge joins x,y whenever some affine reflection
// s_alpha has x in s_alpha y W_mu, labelled by the line k*alphacheck (or
// k*alpha for the dual-side graph over t*).  Labels are stored in solver
// coordinates: the derivation coordinate of t never meets a coroot and the
// Lambda0 coordinate never meets a root, so those are dropped; this changes
// no rank computed anywhere (extension of scalars by a free variable).
struct Edge {
  int a, b;  // vertex indices, a before b in the (length, lex) vertex order
  LinearForm label;
};

class MomentGraph {
 public:
  GroupPtr group;
  ParabolicType mu;
  int sign;        // +1: opposite Bruhat order; -1: Bruhat order
  WeylElt w;
  bool dual_side;  // labels k*alpha over t* instead of k*alphacheck over t
  int nvars;

  std::vector<WeylElt> verts;  // sorted (length, lex)
  std::vector<Edge> edges;

  int index_of(const WeylElt& x) const;
  bool bruhat(int i, int j) const { return bruhat_[i][j]; }
  // the graph's own order
  bool poset_leq(int i, int j) const { return sign > 0 ? bruhat_[j][i] : bruhat_[i][j]; }
  bool poset_less(int i, int j) const { return i != j && poset_leq(i, j); }

  int origin(const Edge& e) const { return poset_less(e.a, e.b) ? e.a : e.b; }
  int goal(const Edge& e) const { return poset_less(e.a, e.b) ? e.b : e.a; }

  std::vector<int> down_edges(int v) const;  // edges with goal v
  std::vector<int> up_edges(int v) const;    // edges with origin v

  std::vector<std::vector<bool>> bruhat_;
};

MomentGraph build_graph(GroupPtr g, const ParabolicType& mu, int sign, const WeylElt& w,
                        bool dual_side = false);

// Pairwise distinct label lines at every vertex.
bool gkm_check(const MomentGraph& g);

// Free graded module: list of generator degrees (gen of A{j} has degree -j).
struct FreeModule {
  std::vector<int> gen_deg;
  GradedRank rank() const;
  bool empty() const { return gen_deg.empty(); }
};

// Matrix of polynomials: rows indexed by target generators, columns by
// source generators; entry (r,c) homogeneous of degree deg_c - deg_r.
using PolyMat = std::vector<std::vector<MultiPoly>>;

// Graded sheaf on a moment graph.  Edge modules are free over S/(label) on
// the listed generators; for F-projectively built sheaves the edge module is
// the quotient of the origin stalk and rho_origin is the identity.
class GradedSheaf {
 public:
  explicit GradedSheaf(const MomentGraph* graph, int d_max);

  const MomentGraph& graph() const { return *g_; }
  int d_max() const { return d_max_; }
  int nvars() const { return g_->nvars; }

  FreeModule& stalk(int v) { return stalks_[v]; }
  const FreeModule& stalk(int v) const { return stalks_[v]; }
  GradedRank stalk_rank(int v) const { return stalks_[v].rank(); }

  bool edge_active(int h) const { return edge_set_[h]; }
  const FreeModule& edge_module(int h) const;
  const PolyMat& rho(int h, bool origin_side) const;

  // install the canonical edge module B_h = B_{h'}/alpha_h B_{h'}
  void set_edge_canonical(int h);
  void set_rho_goal(int h, PolyMat m);
  // edge with explicit module and maps (used by the structure sheaf)
  void set_edge(int h, FreeModule mod, PolyMat rho_orig, PolyMat rho_goal);

  // ---- degreewise exact computations ----

  struct Layout {
    struct Block {
      int id;       // vertex or edge index
      int gen;      // generator number
      int gen_deg;  // generator degree
      const std::vector<Exps>* monos = nullptr;  // full-S blocks
      std::vector<Exps> quot_monos;              // quotient blocks
      int offset;
      const std::vector<Exps>& m() const { return monos ? *monos : quot_monos; }
    };
    std::vector<Block> blocks;
    int total = 0;
  };

  Layout vertex_layout(const std::vector<int>& J, int d) const;
  Layout edge_layout(const std::vector<int>& E, int d) const;

  // Basis of the degree-d sections M(J): solutions of the congruence
  // conditions over all edges internal to J, as an exact rational nullspace.
  RatRows sections_basis(const std::vector<int>& J, int d) const;

  // dimension only
  long sections_dim(const std::vector<int>& J, int d) const;

  // image of a section vector in the modules of the chosen edges, taking
  // each edge's value through its origin-side restriction
  RatVec edge_image(const Layout& vl, const RatVec& section, const std::vector<int>& E,
                    int d) const;

  // decode one vertex block of a section vector into polynomial components
  std::vector<MultiPoly> decode_vertex(const Layout& vl, const RatVec& vec, int v) const;

  // restriction matrix of edge h from the chosen side in degree d
  const RatRows& restriction_block(int h, bool origin_side, int d) const;

 private:
  void drop_edge_cache(int h) const;

  const MomentGraph* g_;
  int d_max_;
  std::vector<FreeModule> stalks_;
  std::vector<bool> edge_set_;
  std::vector<FreeModule> edge_mods_;
  std::vector<PolyMat> rho_origin_, rho_goal_;
  mutable std::map<std::tuple<int, bool, int>, RatRows> restr_cache_;
};

// Structure sheaf Z-bar: stalk A at every vertex, edge modules A/(label),
// both restrictions canonical.
GradedSheaf structure_sheaf(const MomentGraph& g, int d_max);

// Degreewise dimension of the structural algebra.
long structural_algebra_dim(const MomentGraph& g, int degree, int d_max);

int default_dmax(const MomentGraph& g);

}  // namespace klbm::moment
