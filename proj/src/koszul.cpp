#include <klbm/koszul.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace klbm::koszul {

using bm::BMSheaf;
using moment::GradedSheaf;

HilbertMatrix hilbert_plus(KLTable& pq, const WeylElt& w) {
  if (pq.family() != hecke::Family::TypeQ)
    throw InvalidInput("hilbert_plus: needs the type-q table");
  const auto& g = pq.group();
  auto idx = hecke::min_rep_ideal(g, pq.mu(), w);
  poly::PolyMatrix m(idx);
  for (size_t i = 0; i < idx.size(); ++i)
    for (size_t j = 0; j < idx.size(); ++j) {
      IntLaurentPoly sum;
      for (const auto& y : idx) {
        if (!g.bruhat_leq(y, idx[i]) || !g.bruhat_leq(y, idx[j])) continue;
        IntLaurentPoly prod = pq.parabolic_P(y, idx[i]) * pq.parabolic_P(y, idx[j]);
        sum += prod.inv_square_sub(idx[i].length() + idx[j].length() - 2 * y.length());
      }
      m.at(i, j) = sum;
    }
  return HilbertMatrix{std::move(m), pq.mu(), +1, w, Provenance::FromKLFormula};
}

HilbertMatrix hilbert_minus(KLTable& qm1, const WeylElt& w) {
  if (qm1.family() != hecke::Family::TypeMinusOne)
    throw InvalidInput("hilbert_minus: needs the type--1 table");
  const auto& g = qm1.group();
  auto idx = hecke::min_rep_ideal(g, qm1.mu(), w);
  poly::PolyMatrix m(idx);
  for (size_t i = 0; i < idx.size(); ++i)
    for (size_t j = 0; j < idx.size(); ++j) {
      IntLaurentPoly sum;
      for (const auto& y : idx) {
        if (!g.bruhat_leq(idx[i], y) || !g.bruhat_leq(idx[j], y)) continue;
        IntLaurentPoly prod = qm1.inverse_Q(idx[i], y) * qm1.inverse_Q(idx[j], y);
        sum += prod.inv_square_sub(2 * y.length() - idx[i].length() - idx[j].length());
      }
      m.at(i, j) = sum;
    }
  return HilbertMatrix{std::move(m), qm1.mu(), -1, w, Provenance::FromKLFormula};
}

HilbertMatrix hilbert_from_bm(const MomentGraph& g, std::optional<int> dmax) {
  std::vector<BMSheaf> sheaves;
  sheaves.reserve(g.verts.size());
  for (const auto& x : g.verts) sheaves.push_back(bm::bm_sheaf(g, x, dmax));

  poly::PolyMatrix m(g.verts);
  for (size_t i = 0; i < g.verts.size(); ++i)
    for (size_t j = 0; j < g.verts.size(); ++j) {
      IntLaurentPoly sum;
      for (size_t y = 0; y < g.verts.size(); ++y) {
        GradedRank defects = sheaves[i].defect(static_cast<int>(y));
        GradedRank stalks = sheaves[j].stalk(static_cast<int>(y));
        for (const auto& [ish, imult] : defects.shifts())
          for (const auto& [ash, amult] : stalks.shifts())
            sum.add_term(ash - ish, Int(imult) * Int(amult));
      }
      m.at(i, j) = sum;
    }
  return HilbertMatrix{std::move(m), g.mu, g.sign, g.w, Provenance::FromBMHomFiltration};
}

bool basic_positivity(const HilbertMatrix& m) {
  for (size_t i = 0; i < m.mat.size(); ++i)
    for (size_t j = 0; j < m.mat.size(); ++j) {
      const IntLaurentPoly& p = m.mat.at(i, j);
      if (!p.coeffs_nonnegative()) return false;
      if (!p.is_zero() && p.min_exp() < 0) return false;
      Int c0 = p.coeff(0);
      if (i == j && c0 != 1) return false;
      if (i != j && c0 != 0) return false;
    }
  return true;
}

KoszulReport koszul_identity_check(GroupPtr g, const WeylElt& w) {
  ParabolicType empty;
  KLTable pq(g, empty, hecke::Family::TypeQ);
  KLTable qm1(g, empty, hecke::Family::TypeMinusOne);
  WeylElt v = g->inverse(w);
  HilbertMatrix minus = hilbert_minus(qm1, w);
  HilbertMatrix plus = hilbert_plus(pq, v);
  poly::PolyMatrix plus_neg =
      plus.mat.map([](const IntLaurentPoly& p) { return p.negate_var(); });
  auto inv = [g](const WeylElt& x) { return g->inverse(x); };
  poly::PolyMatrix prod = minus.mat.product(plus_neg, inv);
  KoszulReport rep{prod.is_identity(), prod, ""};
  if (!rep.ok) {
    for (size_t i = 0; i < prod.size() && rep.failure.empty(); ++i)
      for (size_t j = 0; j < prod.size(); ++j) {
        bool bad = (i == j) ? !prod.at(i, j).is_one() : !prod.at(i, j).is_zero();
        if (bad) {
          std::ostringstream os;
          os << "entry (" << prod.index()[i].word_str() << ", " << prod.index()[j].word_str()
             << ") = " << prod.at(i, j).str();
          rep.failure = os.str();
          break;
        }
      }
  }
  return rep;
}

GradedRank flag_rank(const BMSheaf& b) {
  GradedRank r;
  for (int v : b.support()) r += b.defect(v);
  return r;
}

namespace {

// multiply a vertex-layout vector by a variable (free modules, no quotient)
RatVec raise_free_vec(const GradedSheaf& s, const std::vector<int>& J, int d,
                      const RatVec& v, int var) {
  GradedSheaf::Layout vl = s.vertex_layout(J, d);
  GradedSheaf::Layout vl2 = s.vertex_layout(J, d + 2);
  RatVec out(vl2.total, Rat(0));
  for (const auto& b : vl.blocks) {
    for (size_t mi = 0; mi < b.m().size(); ++mi) {
      const Rat& c = v[b.offset + mi];
      if (c == 0) continue;
      Exps e = b.m()[mi];
      ++e[var];
      for (const auto& b2 : vl2.blocks) {
        if (b2.id != b.id || b2.gen != b.gen) continue;
        auto pos = std::lower_bound(b2.m().begin(), b2.m().end(), e);
        if (pos == b2.m().end() || *pos != e)
          throw std::logic_error("raise_free_vec: missing monomial");
        out[b2.offset + (pos - b2.m().begin())] += c;
        break;
      }
    }
  }
  return out;
}

// Generator degrees of the image of Gamma(B) inside the stalk sum over the
// given vertex subset (a graded free module; freeness checked degreewise).
GradedRank coset_restriction_rank(const BMSheaf& B, const std::vector<int>& coset) {
  const GradedSheaf& s = B.sheaf();
  std::vector<int> J = B.support();
  GradedRank out;
  RatRows prev[2];
  std::map<int, long> dim_d;
  for (int d = B.d_lo(); d <= B.d_hi(); ++d) {
    RatRows& pb = prev[((d % 2) + 2) % 2];
    GradedSheaf::Layout cl = s.vertex_layout(coset, d);
    if (cl.total == 0) {
      pb.clear();
      dim_d[d] = 0;
      continue;
    }
    GradedSheaf::Layout vl = s.vertex_layout(J, d);
    // columns of the coset inside the full layout
    std::vector<int> cols;
    for (const auto& b : vl.blocks)
      if (std::find(coset.begin(), coset.end(), b.id) != coset.end())
        for (size_t mi = 0; mi < b.m().size(); ++mi) cols.push_back(b.offset + (int)mi);
    if (static_cast<int>(cols.size()) != cl.total)
      throw std::logic_error("coset_restriction_rank: layout mismatch");

    RowSpace image(cl.total);
    RatRows image_basis;
    for (const auto& sec : s.sections_basis(J, d)) {
      RatVec proj(cl.total);
      for (size_t c = 0; c < cols.size(); ++c) proj[c] = sec[cols[c]];
      if (image.absorb(proj)) image_basis.push_back(std::move(proj));
    }
    dim_d[d] = image.rank();

    RowSpace span(cl.total);
    for (const auto& b : pb)
      for (int var = 0; var < s.nvars(); ++var)
        span.absorb(raise_free_vec(s, coset, d - 2, b, var));
    long fresh = 0;
    for (const auto& iv : image_basis)
      if (span.absorb(iv)) ++fresh;
    if (fresh) out.add(-d, fresh);
    pb = std::move(image_basis);
  }
  // freeness surrogate
  for (int d = B.d_lo(); d <= B.d_hi(); ++d) {
    long expect = 0;
    for (const auto& [shift, mult] : out.shifts()) {
      int gd = -shift;
      if (d >= gd && (d - gd) % 2 == 0)
        expect += mult * static_cast<long>(monomials_of_degree(s.nvars(), (d - gd) / 2).size());
    }
    if (dim_d[d] != expect)
      throw std::logic_error("theta restriction is not graded free within the window");
  }
  return out;
}

}  // namespace

ThetaReport theta_decomposition_check(GroupPtr g, const ParabolicType& mu, const WeylElt& w,
                                      std::optional<int> dmax) {
  ThetaReport rep;
  std::ostringstream detail;

  if (!g->is_min_rep(w, mu))
    throw InvalidInput("theta_decomposition_check: w must be in I_mu^min");
  WeylElt wmu = g->longest_element(mu);
  WeylElt z = g->multiply(w, wmu);
  if (z.length() != w.length() + wmu.length())
    throw std::logic_error("theta_decomposition_check: z = w w_mu lengths do not add");
  const auto& wmu_elems = g->parabolic_subgroup(mu);

  ParabolicType empty;
  MomentGraph Gmu_p = moment::build_graph(g, mu, +1, w);
  MomentGraph Gphi_p = moment::build_graph(g, empty, +1, z);
  MomentGraph Gmu_m = moment::build_graph(g, mu, -1, w);
  MomentGraph Gphi_m = moment::build_graph(g, empty, -1, z);

  int dm = dmax.value_or(moment::default_dmax(Gphi_p));

  // coset saturation of the ideal {<= z}: every x W_mu with x <= w lies in it
  for (const auto& x : Gmu_p.verts)
    for (const auto& u : wmu_elems)
      if (Gphi_p.index_of(g->multiply(x, u)) < 0)
        throw std::logic_error("theta_decomposition_check: ideal of z is not coset saturated");

  // mu-side BM sheaves (plus), one per vertex, used by the peel
  std::map<int, BMSheaf> Bmu_p;
  for (size_t t = 0; t < Gmu_p.verts.size(); ++t)
    Bmu_p.emplace(static_cast<int>(t), bm::bm_sheaf(Gmu_p, Gmu_p.verts[t], dm));

  for (size_t xi = 0; xi < Gmu_p.verts.size(); ++xi) {
    const WeylElt& x = Gmu_p.verts[xi];
    WeylElt xwmu = g->multiply(x, wmu);
    BMSheaf Bphi = bm::bm_sheaf(Gphi_p, xwmu, dm);

    // restricted stalk data per coset vertex
    std::map<int, GradedRank> residual;
    for (size_t v = 0; v < Gmu_p.verts.size(); ++v) {
      std::vector<int> coset;
      for (const auto& u : wmu_elems) {
        int id = Gphi_p.index_of(g->multiply(Gmu_p.verts[v], u));
        if (id >= 0) coset.push_back(id);
      }
      std::sort(coset.begin(), coset.end());
      GradedRank r = coset_restriction_rank(Bphi, coset);
      if (!r.empty()) residual[static_cast<int>(v)] = r;
    }

    // greedy peel from poset-minimal support vertices
    std::vector<std::pair<int, int>> summands;  // (mu-vertex, shift)
    bool peel_ok = true;
    while (!residual.empty() && peel_ok) {
      // poset-minimal support vertex, ties by (length, lex)
      int v0 = -1;
      for (const auto& [v, r] : residual) {
        bool minimal = true;
        for (const auto& [u, r2] : residual)
          if (u != v && Gmu_p.poset_less(u, v)) minimal = false;
        if (minimal && (v0 < 0 || Gmu_p.verts[v] < Gmu_p.verts[v0])) v0 = v;
      }
      GradedRank at_v0 = residual[v0];
      int lv0 = Gmu_p.verts[v0].length();
      const BMSheaf& cand = Bmu_p.at(v0);
      for (const auto& [shift, mult] : at_v0.shifts()) {
        int c = shift - lv0;  // stalk at the root is A{l(v0)}
        for (long k = 0; k < mult && peel_ok; ++k) {
          summands.emplace_back(v0, c);
          for (size_t v = 0; v < Gmu_p.verts.size(); ++v) {
            GradedRank pat = cand.stalk(static_cast<int>(v)).shifted(c);
            if (pat.empty()) continue;
            auto it = residual.find(static_cast<int>(v));
            if (it == residual.end()) {
              peel_ok = false;
              break;
            }
            bool fits = true;
            for (const auto& [sh, mm] : pat.shifts())
              if (it->second.mult(sh) < mm) fits = false;
            if (!fits) {
              peel_ok = false;
              break;
            }
            for (const auto& [sh, mm] : pat.shifts()) it->second.add(sh, -mm);
            if (it->second.empty()) residual.erase(it);
          }
        }
      }
      if (!peel_ok) {
        detail << "peel failure at x=" << x.word_str() << " vertex " << Gmu_p.verts[v0].word_str()
               << "; residual remains\n";
      }
    }
    if (!peel_ok) {
      rep.summands_ok = false;
      continue;
    }

    // theta(f): multiset of shifts at x must be {l(w_mu) - 2 l(y) ; y in W_mu},
    // all other summands at Bruhat-smaller vertices
    std::multiset<int> at_root, expected;
    bool others_ok = true;
    for (const auto& [v, c] : summands) {
      if (v == static_cast<int>(xi)) at_root.insert(c);
      else if (!Gmu_p.bruhat(v, static_cast<int>(xi)) || v == static_cast<int>(xi))
        others_ok = false;
    }
    for (const auto& u : wmu_elems) expected.insert(wmu.length() - 2 * u.length());
    if (at_root != expected || !others_ok) {
      rep.summands_ok = false;
      detail << "theta(f) summand mismatch at x=" << x.word_str() << "\n";
    }

    // theta(g) plus: flag(B_{mu,+}(x)) spread over W_mu equals
    // flag(B_{phi,+}(x w_mu)) { -l(w_mu) }
    {
      GradedRank lhs;
      for (const auto& u : wmu_elems)
        lhs += flag_rank(Bmu_p.at(static_cast<int>(xi))).shifted(-2 * u.length());
      GradedRank rhs = flag_rank(Bphi).shifted(-wmu.length());
      if (lhs != rhs) {
        rep.theta_g_ok = false;
        detail << "theta(g) plus mismatch at x=" << x.word_str() << ": " << lhs.str()
               << " vs " << rhs.str() << "\n";
      }
    }

    // theta(g) minus: flag(B_{mu,-}(x)) spread over W_mu equals
    // flag(B_{phi,-}(x))
    {
      BMSheaf Bmu_minus = bm::bm_sheaf(Gmu_m, x, dm);
      BMSheaf Bphi_minus = bm::bm_sheaf(Gphi_m, x, dm);
      GradedRank lhs;
      for (const auto& u : wmu_elems) lhs += flag_rank(Bmu_minus).shifted(-2 * u.length());
      GradedRank rhs = flag_rank(Bphi_minus);
      if (lhs != rhs) {
        rep.theta_g_ok = false;
        detail << "theta(g) minus mismatch at x=" << x.word_str() << ": " << lhs.str()
               << " vs " << rhs.str() << "\n";
      }
    }
  }

  // isom1 bookkeeping: dim Z_phi^d = sum_{y in W_mu} dim Z_mu^{d - 2 l(y)}
  for (int d = -2; d <= dm; ++d) {
    long lhs = moment::structural_algebra_dim(Gphi_p, d, dm);
    long rhs = 0;
    for (const auto& u : wmu_elems)
      rhs += moment::structural_algebra_dim(Gmu_p, d - 2 * u.length(), dm);
    if (lhs != rhs) {
      rep.z_ranks_ok = false;
      detail << "isom1 mismatch in degree " << d << ": " << lhs << " vs " << rhs << "\n";
      break;
    }
  }

  rep.ok = rep.summands_ok && rep.theta_g_ok && rep.z_ranks_ok;
  rep.detail = detail.str();
  return rep;
}

}  // namespace klbm::koszul
