#pragma once

// Test-only oracles, independent of the production code paths they check.

#include <klbm/hecke.hpp>
#include <klbm/weyl.hpp>

#include <map>
#include <set>
#include <vector>

namespace klbm::oracle {

// ---- Bruhat order via the subword property -------------------------------
// x <= y iff some subsequence of a reduced word of y is a reduced word of x.
inline bool bruhat_leq_subword(const weyl::WeylGroup& g, const weyl::WeylElt& x,
                               const weyl::WeylElt& y) {
  const auto& wy = y.word();
  size_t n = wy.size();
  if (x.length() > y.length()) return false;
  for (size_t mask = 0; mask < (size_t(1) << n); ++mask) {
    std::vector<int> sub;
    for (size_t i = 0; i < n; ++i)
      if (mask & (size_t(1) << i)) sub.push_back(wy[i]);
    if (static_cast<int>(sub.size()) != x.length()) continue;
    if (g.normalize(sub) == x) return true;
  }
  return false;
}

// ---- KL polynomials via the triangular bar-involution solve ---------------
// Self-contained: its own module action and bar matrix, no KLTable involved.
class BarSolveOracle {
 public:
  BarSolveOracle(weyl::GroupPtr g, weyl::ParabolicType mu, hecke::Family fam)
      : g_(std::move(g)), mu_(std::move(mu)), fam_(fam) {}

  // P^{mu,u}_{y,x} in q
  IntLaurentPoly P(const weyl::WeylElt& y, const weyl::WeylElt& x) {
    if (!g_->bruhat_leq(y, x)) return {};
    auto col = column(x);
    auto it = col.find(y);
    if (it == col.end()) return {};
    IntLaurentPoly shifted = it->second.shifted(x.length());
    IntLaurentPoly out;
    for (const auto& [e, c] : shifted.coeffs()) {
      if (e < 0 || e % 2) throw std::logic_error("oracle: stray exponent");
      out.add_term(e / 2, c);
    }
    return out;
  }

 private:
  using Elt = weyl::WeylElt;
  using Row = std::map<Elt, IntLaurentPoly>;

  // T_s^{-1} m_y in the parabolic module
  Row ts_inv(int s, const Elt& y) {
    Row out;
    Elt sy = g_->multiply_gen_left(s, y);
    IntLaurentPoly qi = IntLaurentPoly::monomial(1, -2);
    if (sy.length() < y.length()) {
      out[sy] = IntLaurentPoly::one();
    } else if (g_->is_min_rep(sy, mu_)) {
      out[sy] = qi;
      out[y] = qi - IntLaurentPoly::one();
    } else {
      out[y] = fam_ == hecke::Family::TypeQ ? qi : IntLaurentPoly::constant(-1);
    }
    return out;
  }

  const Row& bar_of(const Elt& y) {
    auto it = bar_.find(y);
    if (it != bar_.end()) return it->second;
    Row r;
    if (y.is_identity()) {
      r[y] = IntLaurentPoly::one();
    } else {
      int s = y.word().front();
      Elt y2(y.group(), {y.word().begin() + 1, y.word().end()});
      for (const auto& [z, c] : bar_of(y2))
        for (const auto& [u, b] : ts_inv(s, z)) {
          auto [jt, fresh] = r.emplace(u, b * c);
          if (!fresh) {
            jt->second += b * c;
            if (jt->second.is_zero()) r.erase(jt);
          }
        }
    }
    return bar_.emplace(y, std::move(r)).first->second;
  }

  Row column(const Elt& x) {
    // interval elements of the ideal below x that are minimal reps
    std::vector<Elt> ideal;
    for (const auto& z : g_->bruhat_ideal(x))
      if (g_->is_min_rep(z, mu_)) ideal.push_back(z);
    std::sort(ideal.begin(), ideal.end());

    Row a;
    a[x] = IntLaurentPoly::monomial(1, -x.length());
    // solve downward: a_y - v^{-2l(y)} bar(a_y) = sum_{z > y} bar(a_z) B_{y,z}
    for (auto it = ideal.rbegin(); it != ideal.rend(); ++it) {
      const Elt& y = *it;
      if (y == x) continue;
      IntLaurentPoly gy;
      for (const auto& [z, az] : a) {
        const Row& bz = bar_of(z);
        auto f = bz.find(y);
        if (f != bz.end()) gy += az.bar() * f->second;
      }
      IntLaurentPoly ay = gy.below(-y.length());
      IntLaurentPoly check = ay - ay.bar().shifted(-2 * y.length());
      if (check != gy) throw std::logic_error("oracle: bar solve inconsistent");
      if (!ay.is_zero()) a[y] = ay;
    }
    return a;
  }

  weyl::GroupPtr g_;
  weyl::ParabolicType mu_;
  hecke::Family fam_;
  std::map<Elt, Row> bar_;
};

}  // namespace klbm::oracle
