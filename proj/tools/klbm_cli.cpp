// Command-line front end: exact Kazhdan-Lusztig polynomials, Braden-MacPherson
// sheaves, Hilbert matrices of the graded endomorphism algebras, the Koszul
// matrix identity, truncated posets and CRDAHA block data.
//
// Exit codes: 0 success, 1 identity-check failure, 2 usage error,
// 3 degree-bound overflow.

#include <klbm/cache.hpp>
#include <klbm/crdaha.hpp>
#include <klbm/json_io.hpp>
#include <klbm/koszul.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace klbm;
using nlohmann::json;

std::vector<long> parse_longs(const std::string& csv) {
  std::vector<long> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty()) out.push_back(std::stol(tok));
  return out;
}

struct KlArgs {
  std::string type, x, y, mu, family = "q", kind = "P", cache_path;
  bool paranoid = false;
};

int run_kl(const KlArgs& a, bool parabolic) {
  auto g = weyl::WeylGroup::make(a.type);
  weyl::ParabolicType mu =
      parabolic ? weyl::ParabolicType::parse(a.mu) : weyl::ParabolicType{};
  hecke::Family fam = parabolic ? hecke::family_parse(a.family) : hecke::Family::TypeQ;
  weyl::WeylElt x = g->parse(a.x), y = g->parse(a.y);

  std::string cpath = a.cache_path.empty() ? cache::KLCache::default_path() : a.cache_path;
  cache::KLCache kcache(cpath);
  cache::KLCache::Key key{a.type, mu.str().substr(1, mu.str().size() - 2),
                          hecke::family_str(fam), a.kind, x.word_str(), y.word_str()};

  IntLaurentPoly p;
  auto hit = kcache.lookup(key);
  if (hit && !a.paranoid) {
    p = *hit;
  } else {
    hecke::KLTable table(g, mu, fam);
    p = (a.kind == "Q") ? table.inverse_Q(x, y) : table.parabolic_P(x, y);
    if (hit && !(p == *hit))
      throw std::logic_error("cache entry disagrees with recomputation (corrupt cache?)");
    kcache.store(key, p);
  }
  std::cout << io::poly_to_json(p).dump() << "\n";
  return 0;
}

int run_selftest(const std::string& level, int trunc) {
  int failures = 0;
  auto check = [&](const char* name, bool ok) {
    std::cout << (ok ? "ok " : "FAIL ") << name << "\n";
    if (!ok) ++failures;
  };

  // cartan: delta pairs to zero, diagonal Cartan entries, dot action basics
  {
    auto d = cartan::CartanDatum::make("A1~");
    bool ok = true;
    for (int i : d->gens()) ok = ok && d->pairing(d->delta_weight(), i) == 0;
    check("cartan.delta-orthogonal", ok);
    check("cartan.diagonal", d->pairing(d->simple_root(1), 1) == 2);
    auto g = weyl::WeylGroup::make(d);
    cartan::Weight lam = d->fundamental_weight(1);
    check("cartan.dot-identity", g->dot_action(g->identity(), lam) == lam);
  }
  // weyl: involutions, products, cosets
  {
    auto g = weyl::WeylGroup::make("A2");
    auto s1 = g->generator(1), s2 = g->generator(2);
    check("weyl.involution", g->multiply(s1, s1).is_identity());
    check("weyl.product", g->multiply(s1, s2).length() == 2);
    weyl::ParabolicType mu{2};
    check("weyl.coset-min", g->coset_min(g->multiply(s1, s2), mu) == s1);
    check("weyl.longest", g->longest_element(weyl::ParabolicType{1, 2}).length() == 3);
  }
  // poly: graded rank round trip, substitution
  {
    GradedRank r;
    r.add(1);
    r.add(-1);
    IntLaurentPoly p = r.to_poly();
    check("poly.rank-roundtrip", GradedRank::from_poly(p) == r);
    IntLaurentPoly q = IntLaurentPoly::one() + IntLaurentPoly::monomial(1, 1);
    check("poly.inv-square", q.inv_square_sub(3) ==
                                 IntLaurentPoly::monomial(1, 3) + IntLaurentPoly::monomial(1, 1));
  }
  // hecke: inversion identity on finite A2
  {
    auto g = weyl::WeylGroup::make("A2");
    hecke::KLTable t(g, {}, hecke::Family::TypeQ);
    auto w0 = g->parse("1,2,1");
    check("hecke.inversion-A2", hecke::verify_inversion(t, w0).ok);
  }
  // moment: rank-1 graph, GKM
  {
    auto g = weyl::WeylGroup::make("A1");
    auto graph = moment::build_graph(g, {}, -1, g->generator(1));
    check("moment.A1-graph", graph.verts.size() == 2 && graph.edges.size() == 1);
    check("moment.gkm", moment::gkm_check(graph));
  }
  // bm: finite A1 plus sheaf
  {
    auto g = weyl::WeylGroup::make("A1");
    auto graph = moment::build_graph(g, {}, +1, g->generator(1));
    auto B = bm::bm_sheaf(graph, g->generator(1));
    GradedRank one;
    one.add(1);
    GradedRank me;
    me.add(-1);
    check("bm.A1-stalks", B.stalk(g->generator(1)) == one && B.stalk(g->identity()) == one);
    check("bm.A1-defect", B.defect(graph.index_of(g->identity())) == me);
  }
  // koszul: the worked 2x2 identity
  {
    auto g = weyl::WeylGroup::make("A1");
    auto rep = koszul::koszul_identity_check(g, g->generator(1));
    check("koszul.A1-identity", rep.ok);
  }
  // crdaha: node counts
  {
    auto lam = crdaha::parse_multipartition("2,1");
    auto n = crdaha::node_count_nu(lam, {0}, 2);
    check("crdaha.node-count", lam.size() == 3 && n[0] + n[1] == 3);
  }

  if (level == "full") {
    {
      auto g = weyl::WeylGroup::make("A2");
      auto rep = koszul::koszul_identity_check(g, g->parse("1,2,1"));
      check("koszul.A2-identity", rep.ok);
    }
    {
      auto g = weyl::WeylGroup::make("B2");
      hecke::KLTable t(g, {}, hecke::Family::TypeQ);
      check("hecke.inversion-B2", hecke::verify_inversion(t, g->parse("1,2,1,2")).ok);
    }
    {
      auto g = weyl::WeylGroup::make("A1~");
      std::vector<int> word;
      for (int i = 0; i < trunc; ++i) word.push_back(i % 2);
      auto rep = koszul::koszul_identity_check(g, g->normalize(word));
      check("koszul.A1~-identity", rep.ok);
    }
  }
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact KL polynomials, BM sheaves and Koszul-identity checks"};
  app.require_subcommand(1);

  std::string format = "json";

  // --- kl ---
  KlArgs kl_args;
  auto* c_kl = app.add_subcommand("kl", "ordinary Kazhdan-Lusztig polynomial P_{x,y}");
  c_kl->add_option("--type", kl_args.type, "Cartan type, e.g. A3 or A1~")->required();
  c_kl->add_option("--x", kl_args.x, "lower element, comma-separated word");
  c_kl->add_option("--y", kl_args.y, "upper element, comma-separated word");
  c_kl->add_option("--cache", kl_args.cache_path, "cache file (default: $KLBM_CACHE)");
  c_kl->add_flag("--paranoid", kl_args.paranoid, "revalidate cache hits by recomputation");

  // --- pkl ---
  KlArgs pkl_args;
  auto* c_pkl = app.add_subcommand("pkl", "parabolic P^{mu,u} / inverse parabolic Q^{mu,u}");
  c_pkl->add_option("--type", pkl_args.type)->required();
  c_pkl->add_option("--mu", pkl_args.mu, "parabolic type, e.g. 1,2");
  c_pkl->add_option("--family", pkl_args.family, "q or -1")->default_val("q");
  c_pkl->add_option("--kind", pkl_args.kind, "P or Q")->default_val("P");
  c_pkl->add_option("--x", pkl_args.x, "lower element");
  c_pkl->add_option("--y", pkl_args.y, "upper element");
  c_pkl->add_option("--cache", pkl_args.cache_path);
  c_pkl->add_flag("--paranoid", pkl_args.paranoid);

  // --- bm ---
  std::string bm_type, bm_mu, bm_w, bm_x, bm_sign = "+";
  bool bm_dual = false;
  int bm_dmax = -1;
  auto* c_bm = app.add_subcommand("bm", "Braden-MacPherson sheaf stalks/defects/flag");
  c_bm->add_option("--type", bm_type)->required();
  c_bm->add_option("--mu", bm_mu);
  c_bm->add_option("--sign", bm_sign, "+ (opposite order) or - (Bruhat)")->default_val("+");
  c_bm->add_option("--w", bm_w, "truncation element")->required();
  c_bm->add_option("--x", bm_x, "root vertex")->required();
  c_bm->add_flag("--dual", bm_dual, "dual-side graph over t* (labels k alpha)");
  c_bm->add_option("--dmax", bm_dmax, "degree bound (default 2*maxlen+2)");

  // --- hilbert ---
  std::string h_type, h_mu, h_w, h_sign = "+", h_source = "kl";
  auto* c_h = app.add_subcommand("hilbert", "Hilbert matrix of ^wA_{mu,+-}");
  c_h->add_option("--type", h_type)->required();
  c_h->add_option("--mu", h_mu);
  c_h->add_option("--sign", h_sign)->default_val("+");
  c_h->add_option("--w", h_w)->required();
  c_h->add_option("--source", h_source, "kl (closed formula) or bm (Hom filtration)")
      ->default_val("kl");
  c_h->add_option("--format", format, "json, csv or latex")->default_val("json");

  // --- koszul-check ---
  std::string k_type, k_w, k_report;
  auto* c_k = app.add_subcommand("koszul-check",
                                 "verify P(^wA_{phi,-},t) P(^vA_{phi,+},-t) = 1");
  c_k->add_option("--type", k_type)->required();
  c_k->add_option("--w", k_w)->required();
  c_k->add_option("--report", k_report, "write the product matrix to this file");

  // --- theta-check ---
  std::string t_type, t_mu, t_w;
  int t_dmax = -1;
  auto* c_t = app.add_subcommand("theta-check", "translation-functor rank identities");
  c_t->add_option("--type", t_type)->required();
  c_t->add_option("--mu", t_mu)->required();
  c_t->add_option("--w", t_w)->required();
  c_t->add_option("--dmax", t_dmax);

  // --- poset ---
  std::string p_type, p_mu, p_nu, p_w, p_sign = "-";
  auto* c_p = app.add_subcommand("poset", "truncated poset ^wI^nu_{mu,+-}");
  c_p->add_option("--type", p_type)->required();
  c_p->add_option("--mu", p_mu);
  c_p->add_option("--nu", p_nu);
  c_p->add_option("--sign", p_sign)->default_val("-");
  c_p->add_option("--w", p_w)->required();

  // --- crdaha-block ---
  int cb_e = 0;
  std::string cb_nu, cb_lambda;
  auto* c_cb = app.add_subcommand("crdaha-block", "block datum of a multipartition");
  c_cb->add_option("--e", cb_e, "quantum characteristic")->required();
  c_cb->add_option("--nu", cb_nu, "composition, e.g. 2,1")->required();
  c_cb->add_option("--lambda", cb_lambda, "multipartition, e.g. 2,1|1|")->required();

  // --- selftest ---
  std::string st_level = "quick";
  int st_trunc = 6;
  auto* c_st = app.add_subcommand("selftest", "built-in invariant checks");
  c_st->add_option("--level", st_level, "quick or full")->default_val("quick");
  c_st->add_option("--trunc", st_trunc, "truncation length for affine runs")->default_val("6");

  try {
    app.parse(argc, argv);

    if (*c_kl) return run_kl(kl_args, false);
    if (*c_pkl) return run_kl(pkl_args, true);

    if (*c_bm) {
      auto g = weyl::WeylGroup::make(bm_type);
      auto mu = weyl::ParabolicType::parse(bm_mu);
      int sign = bm_sign == "+" ? +1 : -1;
      auto graph = moment::build_graph(g, mu, sign, g->parse(bm_w), bm_dual);
      auto B = bm::bm_sheaf(graph, g->parse(bm_x),
                            bm_dmax > 0 ? std::optional<int>(bm_dmax) : std::nullopt);
      std::cout << io::bm_to_json(B).dump(2) << "\n";
      return 0;
    }

    if (*c_h) {
      auto g = weyl::WeylGroup::make(h_type);
      auto mu = weyl::ParabolicType::parse(h_mu);
      int sign = h_sign == "+" ? +1 : -1;
      auto w = g->parse(h_w);
      koszul::HilbertMatrix m = [&]() {
        if (h_source == "bm") {
          auto graph = moment::build_graph(g, mu, sign, w, /*dual_side=*/sign < 0);
          return koszul::hilbert_from_bm(graph);
        }
        if (sign > 0) {
          hecke::KLTable t(g, mu, hecke::Family::TypeQ);
          return koszul::hilbert_plus(t, w);
        }
        hecke::KLTable t(g, mu, hecke::Family::TypeMinusOne);
        return koszul::hilbert_minus(t, w);
      }();
      if (format == "csv") std::cout << io::matrix_to_csv(m.mat);
      else if (format == "latex") std::cout << io::matrix_to_latex(m.mat);
      else std::cout << io::matrix_to_json(m.mat).dump(2) << "\n";
      return 0;
    }

    if (*c_k) {
      auto g = weyl::WeylGroup::make(k_type);
      auto rep = koszul::koszul_identity_check(g, g->parse(k_w));
      json out{{"ok", rep.ok}, {"size", rep.product.size()}};
      if (!rep.ok) out["failure"] = rep.failure;
      std::cout << out.dump() << "\n";
      if (!k_report.empty()) {
        std::ofstream f(k_report);
        f << io::matrix_to_json(rep.product).dump(2) << "\n";
      }
      return rep.ok ? 0 : 1;
    }

    if (*c_t) {
      auto g = weyl::WeylGroup::make(t_type);
      auto mu = weyl::ParabolicType::parse(t_mu);
      auto rep = koszul::theta_decomposition_check(
          g, mu, g->parse(t_w), t_dmax > 0 ? std::optional<int>(t_dmax) : std::nullopt);
      json out{{"ok", rep.ok},
               {"summands_ok", rep.summands_ok},
               {"theta_g_ok", rep.theta_g_ok},
               {"z_ranks_ok", rep.z_ranks_ok}};
      if (!rep.detail.empty()) out["detail"] = rep.detail;
      std::cout << out.dump() << "\n";
      return rep.ok ? 0 : 1;
    }

    if (*c_p) {
      auto g = weyl::WeylGroup::make(p_type);
      auto poset = g->truncated_poset(weyl::ParabolicType::parse(p_mu),
                                      weyl::ParabolicType::parse(p_nu),
                                      p_sign == "+" ? +1 : -1, g->parse(p_w));
      json elems = json::array(), rel = json::array();
      for (const auto& x : poset.elems) elems.push_back(x.word_str());
      for (const auto& row : poset.leq) {
        json r = json::array();
        for (bool b : row) r.push_back(b);
        rel.push_back(r);
      }
      std::cout << json{{"elements", elems}, {"leq", rel}}.dump(2) << "\n";
      return 0;
    }

    if (*c_cb) {
      auto lam = crdaha::parse_multipartition(cb_lambda);
      auto nu = parse_longs(cb_nu);
      auto key = crdaha::block_of(lam, nu, cb_e);
      json out{{"a", key.a}, {"n", key.n}};
      if (crdaha::in_P_nu(lam, nu)) {
        auto emb = crdaha::embed(lam, nu);
        auto st = crdaha::stabilizer_type(emb, nu, cb_e);
        out["k"] = st.composition;
        out["stabilizer"] = st.finite_generators;
      }
      std::cout << out.dump() << "\n";
      return 0;
    }

    if (*c_st) return run_selftest(st_level, st_trunc);

    return 2;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const DegreeBoundExceeded& e) {
    std::cerr << "klbm: degree bound exceeded: " << e.what() << "\n";
    return 3;
  } catch (const InvalidInput& e) {
    std::cerr << "klbm: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "klbm: " << e.what() << "\n";
    return 1;
  }
}
