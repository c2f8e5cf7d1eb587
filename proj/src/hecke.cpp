#include <klbm/hecke.hpp>

#include <algorithm>

namespace klbm::hecke {

std::string family_str(Family f) {
  return f == Family::TypeQ ? "q" : "-1";
}

Family family_parse(const std::string& s) {
  if (s == "q") return Family::TypeQ;
  if (s == "-1") return Family::TypeMinusOne;
  throw InvalidInput("family must be 'q' or '-1'");
}

KLTable::KLTable(GroupPtr g, ParabolicType mu, Family fam)
    : g_(std::move(g)), mu_(std::move(mu)), fam_(fam) {
  g_->check_parabolic(mu_);
  g_->parabolic_subgroup(mu_);  // validates finiteness
  u_eigen_ = (fam_ == Family::TypeQ) ? IntLaurentPoly::monomial(1, 2)
                                     : IntLaurentPoly::constant(-1);
}

const char* KLTable::convention_descriptor() {
  return "klbm-kl-v1: left cosets W/W_mu; C_x = v^{-l(x)} sum P^{mu,u}_{y,x}(v^2) m_y "
         "bar-invariant with deg_q P < (l(x)-l(y))/2; Q from the dual bar involution "
         "(bar B)^T with D_x = sum (-1)^{l(y)-l(x)} v^{l(x)} Q_{x,y}(v^2) m*_y; "
         "pinned by the inversion identity and BM-stalk agreement";
}

// T_s m_y:   m_{sy}                 if sy in Imin, sy > y
//            q m_{sy} + (q-1) m_y   if sy < y
//            u m_y                  if sy = y t, t in S_mu
ModElt KLTable::apply_Ts(int s, const ModElt& f) const {
  static const IntLaurentPoly q = IntLaurentPoly::monomial(1, 2);
  static const IntLaurentPoly qm1 = IntLaurentPoly::monomial(1, 2) - IntLaurentPoly::one();
  ModElt out;
  auto add = [&out](const WeylElt& y, const IntLaurentPoly& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = out.emplace(y, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) out.erase(it);
    }
  };
  for (const auto& [y, c] : f) {
    WeylElt sy = g_->multiply_gen_left(s, y);
    if (sy.length() < y.length()) {
      add(sy, q * c);
      add(y, qm1 * c);
    } else if (g_->is_min_rep(sy, mu_)) {
      add(sy, c);
    } else {
      add(y, u_eigen_ * c);
    }
  }
  return out;
}

// T_s^{-1} m_y: q^{-1} m_{sy} + (q^{-1}-1) m_y   if sy in Imin, sy > y
//               m_{sy}                            if sy < y
//               q^{-1} m_y (type q) / -m_y (type -1) otherwise
ModElt KLTable::apply_Ts_inv(int s, const ModElt& f) const {
  static const IntLaurentPoly qi = IntLaurentPoly::monomial(1, -2);
  static const IntLaurentPoly qim1 = IntLaurentPoly::monomial(1, -2) - IntLaurentPoly::one();
  const IntLaurentPoly diag =
      (fam_ == Family::TypeQ) ? qi : IntLaurentPoly::constant(-1);
  ModElt out;
  auto add = [&out](const WeylElt& y, const IntLaurentPoly& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = out.emplace(y, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) out.erase(it);
    }
  };
  for (const auto& [y, c] : f) {
    WeylElt sy = g_->multiply_gen_left(s, y);
    if (sy.length() < y.length()) {
      add(sy, c);
    } else if (g_->is_min_rep(sy, mu_)) {
      add(sy, qi * c);
      add(y, qim1 * c);
    } else {
      add(y, diag * c);
    }
  }
  return out;
}

const ModElt& KLTable::bar_basis(const WeylElt& y) {
  auto it = bar_memo_.find(y);
  if (it != bar_memo_.end()) return it->second;
  ModElt r;
  if (y.is_identity()) {
    r.emplace(y, IntLaurentPoly::one());
  } else {
    int s = y.word().front();
    WeylElt y2(y.group(), {y.word().begin() + 1, y.word().end()});
    r = apply_Ts_inv(s, bar_basis(y2));
  }
  return bar_memo_.emplace(y, std::move(r)).first->second;
}

ModElt KLTable::bar(const ModElt& f) {
  ModElt out;
  for (const auto& [y, c] : f) {
    IntLaurentPoly cb = c.bar();
    for (const auto& [z, b] : bar_basis(y)) {
      IntLaurentPoly add = cb * b;
      if (add.is_zero()) continue;
      auto [it, fresh] = out.emplace(z, add);
      if (!fresh) {
        it->second += add;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  }
  return out;
}

const ModElt& KLTable::C_column(const WeylElt& x) {
  auto hit = c_cols_.find(x);
  if (hit != c_cols_.end()) return hit->second;
  if (!g_->is_min_rep(x, mu_))
    throw InvalidInput("KLTable: element is not a minimal coset representative");

  ModElt f;
  if (x.is_identity()) {
    f.emplace(x, IntLaurentPoly::one());
    return c_cols_.emplace(x, std::move(f)).first->second;
  }

  int s = x.word().front();
  WeylElt x2(x.group(), {x.word().begin() + 1, x.word().end()});
  const ModElt& col2 = C_column(x2);
  // C_s * C_{x'} = v^{-1} (T_s + 1) C_{x'}
  static const IntLaurentPoly vinv = IntLaurentPoly::monomial(1, -1);
  ModElt ts = apply_Ts(s, col2);
  f = ts;
  for (const auto& [y, c] : col2) {
    auto [it, fresh] = f.emplace(y, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) f.erase(it);
    }
  }
  for (auto& [y, c] : f) c = c * vinv;

  // Strip bar-invariant corrections until every coefficient sits in its
  // window [-l(x), -l(y)-1].
  for (;;) {
    const WeylElt* worst = nullptr;
    for (const auto& [z, c] : f) {
      if (z == x) continue;
      if (!c.at_least(-z.length()).is_zero())
        if (!worst || *worst < z) worst = &z;
    }
    if (!worst) break;
    WeylElt z = *worst;
    IntLaurentPoly viol = f.at(z).at_least(-z.length());
    IntLaurentPoly psi = viol.shifted(z.length());  // exponents >= 0
    IntLaurentPoly corr = psi + psi.bar() - IntLaurentPoly::constant(psi.coeff(0));
    const ModElt& cz = C_column(z);
    for (const auto& [y, c] : cz) {
      IntLaurentPoly sub = corr * c;
      if (sub.is_zero()) continue;
      auto [it, fresh] = f.emplace(y, -sub);
      if (!fresh) {
        it->second -= sub;
        if (it->second.is_zero()) f.erase(it);
      }
    }
  }

  // invariants of the KL column
  {
    auto it = f.find(x);
    if (it == f.end() || it->second != IntLaurentPoly::monomial(1, -x.length()))
      throw std::logic_error("KL recursion: leading coefficient is not v^{-l(x)}");
    for (const auto& [y, c] : f)
      if (!c.is_zero() && c.min_exp() < -x.length())
        throw std::logic_error("KL recursion: coefficient below window");
  }
  return c_cols_.emplace(x, std::move(f)).first->second;
}

IntLaurentPoly KLTable::extract_q_poly(const IntLaurentPoly& f, int shift,
                                       const char* what) const {
  IntLaurentPoly sh = f.shifted(shift);
  IntLaurentPoly out;
  for (const auto& [e, c] : sh.coeffs()) {
    if (e < 0 || e % 2 != 0)
      throw std::logic_error(std::string(what) + ": stray v-exponent");
    out.add_term(e / 2, c);
  }
  return out;
}

IntLaurentPoly KLTable::parabolic_P(const WeylElt& y, const WeylElt& x) {
  if (!g_->is_min_rep(y, mu_) || !g_->is_min_rep(x, mu_))
    throw InvalidInput("parabolic_P: arguments must be minimal coset representatives");
  if (!g_->bruhat_leq(y, x)) return {};
  auto key = std::make_pair(y, x);
  auto hit = p_memo_.find(key);
  if (hit != p_memo_.end()) return hit->second;
  const ModElt& col = C_column(x);
  auto it = col.find(y);
  IntLaurentPoly p;
  if (it != col.end()) p = extract_q_poly(it->second, x.length(), "parabolic_P");
  p_memo_.emplace(key, p);
  return p;
}

IntLaurentPoly KLTable::inverse_Q(const WeylElt& x, const WeylElt& y) {
  if (!g_->is_min_rep(y, mu_) || !g_->is_min_rep(x, mu_))
    throw InvalidInput("inverse_Q: arguments must be minimal coset representatives");
  if (!g_->bruhat_leq(x, y)) return {};
  auto key = std::make_pair(x, y);
  auto hit = q_memo_.find(key);
  if (hit != q_memo_.end()) return hit->second;

  // Solve the dual bar-invariance d_z = sum_{x<=u<=z} bar(d_u) bar(b_{u,z})
  // upward through the interval [x, y], with seed d_x = v^{l(x)}.
  std::vector<WeylElt> interval;
  for (const auto& z : g_->bruhat_ideal(y))
    if (g_->is_min_rep(z, mu_) && g_->bruhat_leq(x, z)) interval.push_back(z);
  std::sort(interval.begin(), interval.end());

  std::map<WeylElt, IntLaurentPoly> d;
  for (const auto& z : interval) {
    if (z == x) {
      d[z] = IntLaurentPoly::monomial(1, x.length());
      q_memo_.emplace(std::make_pair(x, z), IntLaurentPoly::one());
      continue;
    }
    IntLaurentPoly gz;
    const ModElt& bz = bar_basis(z);
    for (const auto& [u, du] : d) {
      auto bu = bz.find(u);
      if (bu == bz.end()) continue;
      gz += du.bar() * bu->second.bar();
    }
    // d_z - v^{2l(z)} bar(d_z) = g_z with d_z supported below v^{l(z)}
    IntLaurentPoly dz = gz.below(z.length());
    IntLaurentPoly check = dz - dz.bar().shifted(2 * z.length());
    if (check != gz)
      throw std::logic_error("inverse_Q: dual bar solve failed degree constraints");
    d[z] = dz;
    IntLaurentPoly q = extract_q_poly(dz, -x.length(), "inverse_Q");
    if ((z.length() - x.length()) % 2 != 0) q = -q;
    // sign convention gives (+1)-normalized Q
    IntLaurentPoly stored = q;
    q_memo_.emplace(std::make_pair(x, z), stored);
  }
  return q_memo_.at(key);
}

void KLTable::seed_P(const WeylElt& y, const WeylElt& x, const IntLaurentPoly& p) {
  p_memo_.emplace(std::make_pair(y, x), p);
}

void KLTable::seed_Q(const WeylElt& x, const WeylElt& y, const IntLaurentPoly& p) {
  q_memo_.emplace(std::make_pair(x, y), p);
}

bool KLTable::has_P(const WeylElt& y, const WeylElt& x) const {
  return p_memo_.count(std::make_pair(y, x)) > 0;
}

IntLaurentPoly kl(KLTable& table, const WeylElt& y, const WeylElt& x) {
  if (!table.mu().empty()) throw InvalidInput("kl: ordinary table requires mu = {}");
  if (!table.group().bruhat_leq(y, x)) return {};
  return table.parabolic_P(y, x);
}

std::vector<WeylElt> min_rep_ideal(const WeylGroup& g, const ParabolicType& mu,
                                   const WeylElt& w) {
  std::vector<WeylElt> out;
  for (const auto& x : g.bruhat_ideal(w))
    if (g.is_min_rep(x, mu)) out.push_back(x);
  std::sort(out.begin(), out.end());
  return out;
}

InversionReport verify_inversion(KLTable& table, const WeylElt& w) {
  const WeylGroup& g = table.group();
  std::vector<WeylElt> idx = min_rep_ideal(g, table.mu(), w);
  poly::PolyMatrix m(idx);
  for (size_t i = 0; i < idx.size(); ++i)
    for (size_t j = 0; j < idx.size(); ++j) {
      IntLaurentPoly sum;
      for (const auto& y : idx) {
        if (!g.bruhat_leq(idx[i], y) || !g.bruhat_leq(y, idx[j])) continue;
        IntLaurentPoly term = table.inverse_Q(idx[i], y) * table.parabolic_P(y, idx[j]);
        if ((y.length() - idx[i].length()) % 2 != 0) term = -term;
        sum += term;
      }
      m.at(i, j) = sum;
    }
  return InversionReport{m.is_identity(), std::move(m)};
}

}  // namespace klbm::hecke
