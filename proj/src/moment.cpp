#include <klbm/moment.hpp>

#include <algorithm>
#include <set>

namespace klbm::moment {

using cartan::Coweight;
using cartan::Weight;

int MomentGraph::index_of(const WeylElt& x) const {
  auto it = std::lower_bound(verts.begin(), verts.end(), x);
  if (it == verts.end() || !(*it == x)) return -1;
  return static_cast<int>(it - verts.begin());
}

std::vector<int> MomentGraph::down_edges(int v) const {
  std::vector<int> out;
  for (size_t h = 0; h < edges.size(); ++h)
    if (goal(edges[h]) == v) out.push_back(static_cast<int>(h));
  return out;
}

std::vector<int> MomentGraph::up_edges(int v) const {
  std::vector<int> out;
  for (size_t h = 0; h < edges.size(); ++h)
    if (origin(edges[h]) == v) out.push_back(static_cast<int>(h));
  return out;
}

MomentGraph build_graph(GroupPtr g, const ParabolicType& mu, int sign, const WeylElt& w,
                        bool dual_side) {
  g->check_parabolic(mu);
  if (!g->is_min_rep(w, mu))
    throw InvalidInput("build_graph: w must be a minimal coset representative");

  MomentGraph mg;
  mg.group = g;
  mg.mu = mu;
  mg.sign = sign;
  mg.w = w;
  mg.dual_side = dual_side;
  const auto& datum = *g->datum();
  mg.nvars = dual_side ? datum.label_dim_root() : datum.label_dim_coroot();

  for (const auto& x : g->bruhat_ideal(w))
    if (g->is_min_rep(x, mu)) mg.verts.push_back(x);
  std::sort(mg.verts.begin(), mg.verts.end());

  size_t n = mg.verts.size();
  mg.bruhat_.assign(n, std::vector<bool>(n, false));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) mg.bruhat_[i][j] = g->bruhat_leq(mg.verts[i], mg.verts[j]);

  // basis vectors for the reflection test on t*
  std::vector<Weight> wbasis;
  if (datum.affine()) wbasis.push_back(datum.delta_weight());
  for (int i = 1; i <= datum.rank(); ++i) wbasis.push_back(datum.fundamental_weight(i));
  if (datum.affine()) wbasis.push_back(datum.Lambda0_weight());

  const auto& wmu_elems = g->parabolic_subgroup(mu);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      std::vector<LinearForm> labels;
      WeylElt yinv = g->inverse(mg.verts[j]);
      for (const auto& u : wmu_elems) {
        WeylElt t = g->multiply(g->multiply(mg.verts[i], u), yinv);
        if (t.length() % 2 == 0) continue;  // reflections have odd length
        if (!g->multiply(t, t).is_identity()) continue;
        RatRows diff;
        for (const auto& b : wbasis) {
          Weight im = g->act(t, b);
          RatVec col = (im - b).flat();
          diff.push_back(std::move(col));
        }
        if (rank_of(diff, static_cast<int>(diff[0].size())) != 1) continue;
        // t = s_alpha; extract the label line
        RatVec lab;
        if (dual_side) {
          for (const auto& b : wbasis) {
            Weight im = g->act(t, b) - b;
            if (!im.is_zero()) {
              lab = datum.root_label(im);
              break;
            }
          }
        } else {
          std::vector<Coweight> cbasis;
          if (datum.affine()) {
            Coweight dpart;
            dpart.ctx = &datum;
            dpart.c_d = 1;
            dpart.cr.assign(datum.rank(), Rat(0));
            dpart.c_one = 0;
            cbasis.push_back(dpart);
          }
          for (int k = 1; k <= datum.rank(); ++k) cbasis.push_back(datum.simple_coroot(k));
          if (datum.affine()) {
            Coweight one;
            one.ctx = &datum;
            one.c_d = 0;
            one.cr.assign(datum.rank(), Rat(0));
            one.c_one = 1;
            cbasis.push_back(one);
          }
          for (const auto& b : cbasis) {
            Coweight im = g->act(t, b);
            Coweight df = im;
            df.c_d -= b.c_d;
            for (int k = 0; k < datum.rank(); ++k) df.cr[k] -= b.cr[k];
            df.c_one -= b.c_one;
            bool zero = df.c_d == 0 && df.c_one == 0;
            for (const auto& c : df.cr) zero = zero && c == 0;
            if (!zero) {
              lab = datum.coroot_label(df);
              break;
            }
          }
        }
        labels.emplace_back(std::move(lab));
      }
      if (labels.empty()) continue;
      for (size_t k = 1; k < labels.size(); ++k)
        if (!labels[k].same_line(labels[0]))
          throw std::logic_error("build_graph: two reflections with distinct lines join one pair");
      mg.edges.push_back(Edge{static_cast<int>(i), static_cast<int>(j), labels[0]});
    }
  return mg;
}

bool gkm_check(const MomentGraph& g) {
  for (size_t v = 0; v < g.verts.size(); ++v) {
    std::vector<const LinearForm*> at;
    for (const auto& e : g.edges)
      if (e.a == static_cast<int>(v) || e.b == static_cast<int>(v)) at.push_back(&e.label);
    for (size_t i = 0; i < at.size(); ++i)
      for (size_t j = i + 1; j < at.size(); ++j)
        if (at[i]->same_line(*at[j])) return false;
  }
  return true;
}

GradedRank FreeModule::rank() const {
  GradedRank r;
  for (int d : gen_deg) r.add(-d);
  return r;
}

GradedSheaf::GradedSheaf(const MomentGraph* graph, int d_max)
    : g_(graph),
      d_max_(d_max),
      stalks_(graph->verts.size()),
      edge_set_(graph->edges.size(), false),
      edge_mods_(graph->edges.size()),
      rho_origin_(graph->edges.size()),
      rho_goal_(graph->edges.size()) {}

const FreeModule& GradedSheaf::edge_module(int h) const {
  if (!edge_set_[h]) throw std::logic_error("edge module not set");
  return edge_mods_[h];
}

const PolyMat& GradedSheaf::rho(int h, bool origin_side) const {
  if (!edge_set_[h]) throw std::logic_error("edge module not set");
  return origin_side ? rho_origin_[h] : rho_goal_[h];
}

void GradedSheaf::drop_edge_cache(int h) const {
  for (auto it = restr_cache_.begin(); it != restr_cache_.end();)
    if (std::get<0>(it->first) == h) it = restr_cache_.erase(it);
    else ++it;
}

void GradedSheaf::set_edge_canonical(int h) {
  int v = g_->origin(g_->edges[h]);
  const FreeModule& src = stalks_[v];
  edge_mods_[h] = src;
  size_t k = src.gen_deg.size();
  PolyMat id(k, std::vector<MultiPoly>(k, MultiPoly(nvars())));
  for (size_t i = 0; i < k; ++i) id[i][i] = MultiPoly::constant(nvars(), Rat(1));
  rho_origin_[h] = std::move(id);
  rho_goal_[h].assign(k, std::vector<MultiPoly>());
  edge_set_[h] = true;
  drop_edge_cache(h);
}

void GradedSheaf::set_rho_goal(int h, PolyMat m) {
  rho_goal_[h] = std::move(m);
  drop_edge_cache(h);
}

void GradedSheaf::set_edge(int h, FreeModule mod, PolyMat rho_orig, PolyMat rho_goal) {
  edge_mods_[h] = std::move(mod);
  rho_origin_[h] = std::move(rho_orig);
  rho_goal_[h] = std::move(rho_goal);
  edge_set_[h] = true;
  drop_edge_cache(h);
}

GradedSheaf::Layout GradedSheaf::vertex_layout(const std::vector<int>& J, int d) const {
  Layout l;
  for (int v : J) {
    const auto& m = stalks_[v];
    for (size_t gidx = 0; gidx < m.gen_deg.size(); ++gidx) {
      int D = m.gen_deg[gidx];
      if (d < D || (d - D) % 2 != 0) continue;
      const auto& monos = monomials_of_degree(nvars(), (d - D) / 2);
      if (monos.empty()) continue;
      Layout::Block b;
      b.id = v;
      b.gen = static_cast<int>(gidx);
      b.gen_deg = D;
      b.monos = &monos;
      b.offset = l.total;
      l.total += static_cast<int>(monos.size());
      l.blocks.push_back(std::move(b));
    }
  }
  return l;
}

GradedSheaf::Layout GradedSheaf::edge_layout(const std::vector<int>& E, int d) const {
  Layout l;
  for (int h : E) {
    if (!edge_set_[h]) continue;
    const auto& m = edge_mods_[h];
    int pivot = g_->edges[h].label.pivot();
    for (size_t gidx = 0; gidx < m.gen_deg.size(); ++gidx) {
      int D = m.gen_deg[gidx];
      if (d < D || (d - D) % 2 != 0) continue;
      auto monos = monomials_avoiding(nvars(), (d - D) / 2, pivot);
      if (monos.empty()) continue;
      Layout::Block b;
      b.id = h;
      b.gen = static_cast<int>(gidx);
      b.gen_deg = D;
      b.quot_monos = std::move(monos);
      b.offset = l.total;
      l.total += static_cast<int>(b.quot_monos.size());
      l.blocks.push_back(std::move(b));
    }
  }
  return l;
}

const RatRows& GradedSheaf::restriction_block(int h, bool origin_side, int d) const {
  auto key = std::make_tuple(h, origin_side, d);
  auto it = restr_cache_.find(key);
  if (it != restr_cache_.end()) return it->second;

  const Edge& e = g_->edges[h];
  int v = origin_side ? g_->origin(e) : g_->goal(e);
  Layout vl = vertex_layout({v}, d);
  Layout el = edge_layout({h}, d);
  const PolyMat& m = origin_side ? rho_origin_[h] : rho_goal_[h];

  RatRows rows(el.total, RatVec(vl.total, Rat(0)));
  for (const auto& vb : vl.blocks) {
    for (size_t mi = 0; mi < vb.m().size(); ++mi) {
      MultiPoly mono = MultiPoly::monomial(nvars(), vb.m()[mi], Rat(1));
      // image of (generator vb.gen) * mono in each edge generator row
      for (const auto& eb : el.blocks) {
        if (static_cast<size_t>(eb.gen) >= m.size() ||
            static_cast<size_t>(vb.gen) >= m[eb.gen].size())
          continue;
        const MultiPoly& entry = m[eb.gen][vb.gen];
        if (entry.is_zero()) continue;
        MultiPoly img = (entry * mono).reduce_mod(e.label);
        for (const auto& [ex, c] : img.terms()) {
          auto pos = std::lower_bound(eb.m().begin(), eb.m().end(), ex);
          if (pos == eb.m().end() || *pos != ex)
            throw std::logic_error("restriction_block: image outside quotient basis");
          rows[eb.offset + (pos - eb.m().begin())][vb.offset + mi] += c;
        }
      }
    }
  }
  return restr_cache_.emplace(std::move(key), std::move(rows)).first->second;
}

// Global column indices of a vertex's slots inside a layout, in the same
// order that vertex_layout({v}, d) enumerates them.
static std::map<int, std::vector<int>> layout_columns(const GradedSheaf::Layout& vl) {
  std::map<int, std::vector<int>> cols;
  for (const auto& b : vl.blocks)
    for (size_t mi = 0; mi < b.m().size(); ++mi)
      cols[b.id].push_back(b.offset + static_cast<int>(mi));
  return cols;
}

RatRows GradedSheaf::sections_basis(const std::vector<int>& J, int d) const {
  Layout vl = vertex_layout(J, d);
  auto vcols = layout_columns(vl);

  std::set<int> in_J(J.begin(), J.end());
  RatRows constraints;
  for (size_t h = 0; h < g_->edges.size(); ++h) {
    if (!edge_set_[h]) continue;
    const Edge& e = g_->edges[h];
    if (!in_J.count(e.a) || !in_J.count(e.b)) continue;
    Layout el = edge_layout({static_cast<int>(h)}, d);
    if (el.total == 0) continue;
    int vo = g_->origin(e), vgl = g_->goal(e);
    const RatRows& ro = restriction_block(static_cast<int>(h), true, d);
    const RatRows& rg = restriction_block(static_cast<int>(h), false, d);
    const std::vector<int>* oc = vcols.count(vo) ? &vcols[vo] : nullptr;
    const std::vector<int>* gc = vcols.count(vgl) ? &vcols[vgl] : nullptr;
    for (int r = 0; r < el.total; ++r) {
      RatVec row(vl.total, Rat(0));
      bool nonzero = false;
      if (oc)
        for (size_t c = 0; c < ro[r].size(); ++c)
          if (ro[r][c] != 0) {
            row[(*oc)[c]] += ro[r][c];
            nonzero = true;
          }
      if (gc)
        for (size_t c = 0; c < rg[r].size(); ++c)
          if (rg[r][c] != 0) {
            row[(*gc)[c]] -= rg[r][c];
            nonzero = true;
          }
      if (nonzero) constraints.push_back(std::move(row));
    }
  }
  return nullspace_basis(constraints, vl.total);
}

long GradedSheaf::sections_dim(const std::vector<int>& J, int d) const {
  return static_cast<long>(sections_basis(J, d).size());
}

RatVec GradedSheaf::edge_image(const Layout& vl, const RatVec& section,
                               const std::vector<int>& E, int d) const {
  Layout el = edge_layout(E, d);
  auto vcols = layout_columns(vl);
  RatVec out(el.total, Rat(0));
  for (int h : E) {
    if (!edge_set_[h]) continue;
    int vo = g_->origin(g_->edges[h]);
    if (!vcols.count(vo)) continue;
    const RatRows& ro = restriction_block(h, true, d);
    if (ro.empty()) continue;
    const std::vector<int>& oc = vcols[vo];
    RatVec sub(oc.size());
    for (size_t c = 0; c < oc.size(); ++c) sub[c] = section[oc[c]];
    // rows of the single-edge block align with el's blocks for h, in order
    int local_row = 0;
    for (const auto& eb : el.blocks) {
      if (eb.id != h) continue;
      for (size_t mi = 0; mi < eb.m().size(); ++mi, ++local_row) {
        Rat acc = 0;
        for (size_t c = 0; c < sub.size(); ++c)
          if (ro[local_row][c] != 0) acc += ro[local_row][c] * sub[c];
        out[eb.offset + mi] = acc;
      }
    }
  }
  return out;
}

std::vector<MultiPoly> GradedSheaf::decode_vertex(const Layout& vl, const RatVec& vec,
                                                  int v) const {
  std::vector<MultiPoly> out(stalks_[v].gen_deg.size(), MultiPoly(nvars()));
  for (const auto& b : vl.blocks) {
    if (b.id != v) continue;
    for (size_t mi = 0; mi < b.m().size(); ++mi) {
      const Rat& c = vec[b.offset + mi];
      if (c != 0) out[b.gen].add_term(b.m()[mi], c);
    }
  }
  return out;
}

GradedSheaf structure_sheaf(const MomentGraph& g, int d_max) {
  GradedSheaf s(&g, d_max);
  for (size_t v = 0; v < g.verts.size(); ++v) s.stalk(static_cast<int>(v)).gen_deg = {0};
  int nv = g.nvars;
  for (size_t h = 0; h < g.edges.size(); ++h) {
    FreeModule m;
    m.gen_deg = {0};
    PolyMat id{{MultiPoly::constant(nv, Rat(1))}};
    s.set_edge(static_cast<int>(h), m, id, id);
  }
  return s;
}

long structural_algebra_dim(const MomentGraph& g, int degree, int d_max) {
  GradedSheaf s = structure_sheaf(g, d_max);
  std::vector<int> all;
  for (size_t v = 0; v < g.verts.size(); ++v) all.push_back(static_cast<int>(v));
  return s.sections_dim(all, degree);
}

int default_dmax(const MomentGraph& g) {
  int maxl = 0;
  for (const auto& v : g.verts) maxl = std::max(maxl, v.length());
  return 2 * maxl + 2;
}

}  // namespace klbm::moment
