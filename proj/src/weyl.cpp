#include <klbm/weyl.hpp>

#include <algorithm>
#include <set>
#include <sstream>

namespace klbm::weyl {

std::string WeylElt::word_str() const {
  std::ostringstream os;
  for (size_t i = 0; i < w_.size(); ++i) {
    if (i) os << ",";
    os << static_cast<int>(w_[i]);
  }
  return os.str();
}

ParabolicType::ParabolicType(std::initializer_list<int> g) : gens(g) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
}

ParabolicType::ParabolicType(std::vector<int> g) : gens(std::move(g)) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
}

ParabolicType ParabolicType::parse(const std::string& csv) {
  std::vector<int> g;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    g.push_back(std::stoi(tok));
  }
  return ParabolicType(std::move(g));
}

bool ParabolicType::contains(int i) const {
  return std::binary_search(gens.begin(), gens.end(), i);
}

std::string ParabolicType::str() const {
  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < gens.size(); ++i) os << (i ? "," : "") << gens[i];
  os << "}";
  return os.str();
}

int TruncatedPoset::index_of(const WeylElt& x) const {
  auto it = std::lower_bound(elems.begin(), elems.end(), x);
  if (it == elems.end() || !(*it == x)) return -1;
  return static_cast<int>(it - elems.begin());
}

std::shared_ptr<const WeylGroup> WeylGroup::make(const std::string& type) {
  return make(CartanDatum::make(type));
}

std::shared_ptr<const WeylGroup> WeylGroup::make(CartanPtr datum) {
  return std::shared_ptr<const WeylGroup>(new WeylGroup(std::move(datum)));
}

WeylElt WeylGroup::generator(int i) const {
  return normalize({i});
}

// (x^{-1} applied when inverse_side) image of alpha_i is negative?
bool WeylGroup::root_negative_after(const WeylElt& x, int i, bool inverse_side) const {
  Weight v = datum_->simple_root(i);
  const auto& w = x.word();
  if (inverse_side) {
    // x^{-1}(alpha_i): x^{-1} = s_{jk}...s_{j1}, rightmost acts first
    for (auto it = w.begin(); it != w.end(); ++it) v = datum_->reflect(*it, v);
  } else {
    for (auto it = w.rbegin(); it != w.rend(); ++it) v = datum_->reflect(*it, v);
  }
  return !datum_->root_positive(v);
}

bool WeylGroup::left_descent(const WeylElt& a, int i) const {
  if (a.is_identity()) return false;
  return root_negative_after(a, i, /*inverse_side=*/true);
}

bool WeylGroup::right_descent(const WeylElt& a, int i) const {
  if (a.is_identity()) return false;
  return root_negative_after(a, i, /*inverse_side=*/false);
}

WeylElt WeylGroup::normalize(const std::vector<int>& word) const {
  auto g = datum_->gens();
  int lo = g.front(), hi = g.back();
  for (int i : word)
    if (i < lo || i > hi) throw InvalidInput("generator index out of range");

  // Greedy ShortLex normal form: repeatedly peel the smallest left descent.
  // The working word accumulates prepended letters: s_i * current.
  std::vector<int> work = word;
  std::vector<uint8_t> out;
  for (;;) {
    int descent = -1;
    for (int i : g) {
      Weight v = datum_->simple_root(i);
      for (int j : work) v = datum_->reflect(j, v);
      if (!datum_->root_positive(v)) {
        descent = i;
        break;
      }
    }
    if (descent < 0) break;  // identity reached
    out.push_back(static_cast<uint8_t>(descent));
    work.insert(work.begin(), descent);
  }
  return WeylElt(this, std::move(out));
}

WeylElt WeylGroup::parse(const std::string& csv) const {
  std::vector<int> w;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    w.push_back(std::stoi(tok));
  }
  return normalize(w);
}

WeylElt WeylGroup::multiply(const WeylElt& a, const WeylElt& b) const {
  if (a.group() != this || b.group() != this)
    throw InvalidInput("multiply: mismatched groups");
  std::vector<int> w;
  w.reserve(a.word().size() + b.word().size());
  for (auto i : a.word()) w.push_back(i);
  for (auto i : b.word()) w.push_back(i);
  return normalize(w);
}

WeylElt WeylGroup::multiply_gen_right(const WeylElt& a, int i) const {
  std::vector<int> w(a.word().begin(), a.word().end());
  w.push_back(i);
  return normalize(w);
}

WeylElt WeylGroup::multiply_gen_left(int i, const WeylElt& a) const {
  std::vector<int> w;
  w.reserve(a.word().size() + 1);
  w.push_back(i);
  for (auto j : a.word()) w.push_back(j);
  return normalize(w);
}

WeylElt WeylGroup::inverse(const WeylElt& a) const {
  if (a.group() != this) throw InvalidInput("inverse: mismatched group");
  std::vector<int> w(a.word().rbegin(), a.word().rend());
  return normalize(w);
}

bool WeylGroup::bruhat_leq(const WeylElt& x, const WeylElt& y) const {
  if (x.group() != this || y.group() != this)
    throw InvalidInput("bruhat_leq: mismatched groups");
  if (x.length() > y.length()) return false;
  if (x.is_identity()) return true;
  if (x.length() == y.length()) return x == y;
  auto key = std::make_pair(x.word(), y.word());
  auto it = bruhat_memo_.find(key);
  if (it != bruhat_memo_.end()) return it->second;
  // lifting property along the first letter of y
  int s = y.word().front();
  WeylElt sy(this, std::vector<uint8_t>(y.word().begin() + 1, y.word().end()));
  bool res;
  if (left_descent(x, s)) res = bruhat_leq(multiply_gen_left(s, x), sy);
  else res = bruhat_leq(x, sy);
  bruhat_memo_.emplace(std::move(key), res);
  return res;
}

Weight WeylGroup::act(const WeylElt& a, const Weight& v) const {
  if (a.group() != this) throw InvalidInput("act: mismatched group");
  return datum_->act_seq(a.word(), v);
}

Coweight WeylGroup::act(const WeylElt& a, const Coweight& v) const {
  if (a.group() != this) throw InvalidInput("act: mismatched group");
  return datum_->act_seq(a.word(), v);
}

Weight WeylGroup::dot_action(const WeylElt& a, const Weight& lambda) const {
  if (a.group() != this) throw InvalidInput("dot_action: mismatched group");
  return datum_->dot_action(a.word(), lambda);
}

void WeylGroup::check_parabolic(const ParabolicType& mu) const {
  auto g = gens();
  for (int i : mu.gens)
    if (!std::binary_search(g.begin(), g.end(), i))
      throw InvalidInput("parabolic type: index " + std::to_string(i) + " not a generator");
  // mu must be a proper subset of the affine generator set; a finite context
  // is itself a proper subset, so any mu is allowed there
  if (affine() && mu.gens.size() == g.size())
    throw InvalidInput("parabolic type must be a proper subset");
}

const std::vector<WeylElt>& WeylGroup::parabolic_subgroup(const ParabolicType& mu,
                                                          size_t cap) const {
  check_parabolic(mu);
  auto it = parabolic_memo_.find(mu.gens);
  if (it != parabolic_memo_.end()) return it->second;
  std::set<WeylElt> seen;
  std::vector<WeylElt> queue{identity()};
  seen.insert(identity());
  while (!queue.empty()) {
    WeylElt x = queue.back();
    queue.pop_back();
    for (int i : mu.gens) {
      WeylElt y = multiply_gen_right(x, i);
      if (seen.insert(y).second) {
        if (seen.size() > cap)
          throw InvalidInput("parabolic subgroup exceeds enumeration cap (infinite?)");
        queue.push_back(y);
      }
    }
  }
  auto& slot = parabolic_memo_[mu.gens];
  slot.assign(seen.begin(), seen.end());
  return slot;
}

WeylElt WeylGroup::longest_element(const ParabolicType& mu) const {
  const auto& wmu = parabolic_subgroup(mu);
  const WeylElt& top = wmu.back();  // sorted by (length, lex): unique maximum
  if (wmu.size() >= 2 && wmu[wmu.size() - 2].length() == top.length())
    throw std::logic_error("longest_element: maximum not unique");
  if (!multiply(top, top).is_identity())
    throw std::logic_error("longest_element: not an involution");
  return top;
}

WeylElt WeylGroup::coset_min(const WeylElt& x, const ParabolicType& mu) const {
  WeylElt y = x;
  for (;;) {
    bool moved = false;
    for (int i : mu.gens)
      if (right_descent(y, i)) {
        y = multiply_gen_right(y, i);
        moved = true;
        break;
      }
    if (!moved) return y;
  }
}

WeylElt WeylGroup::coset_max(const WeylElt& x, const ParabolicType& mu) const {
  return multiply(coset_min(x, mu), longest_element(mu));
}

bool WeylGroup::is_min_rep(const WeylElt& x, const ParabolicType& mu) const {
  for (int i : mu.gens)
    if (right_descent(x, i)) return false;
  return true;
}

bool WeylGroup::is_max_rep(const WeylElt& x, const ParabolicType& mu) const {
  for (int i : mu.gens)
    if (!right_descent(x, i)) return false;
  return true;
}

std::vector<Weight> WeylGroup::parabolic_positive_roots(const ParabolicType& mu) const {
  WeylElt wmu = longest_element(mu);
  std::vector<Weight> out;
  const auto& w = wmu.word();
  // inversions of w_mu: s_{i1}...s_{i_{j-1}}(alpha_{i_j})
  for (size_t j = 0; j < w.size(); ++j) {
    Weight v = datum_->simple_root(w[j]);
    for (size_t k = j; k-- > 0;) v = datum_->reflect(w[k], v);
    out.push_back(v);
  }
  return out;
}

std::vector<WeylElt> WeylGroup::ball(int len) const {
  std::set<WeylElt> seen;
  seen.insert(identity());
  std::vector<WeylElt> frontier{identity()};
  for (int l = 0; l < len; ++l) {
    std::vector<WeylElt> next;
    for (const auto& x : frontier)
      for (int i : gens()) {
        WeylElt y = multiply_gen_right(x, i);
        if (y.length() == x.length() + 1 && seen.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

std::vector<WeylElt> WeylGroup::bruhat_ideal(const WeylElt& w) const {
  std::vector<WeylElt> out;
  for (const auto& x : ball(w.length()))
    if (bruhat_leq(x, w)) out.push_back(x);
  return out;
}

bool WeylGroup::in_truncation_set(const WeylElt& x, const ParabolicType& mu,
                                  const ParabolicType& nu, int sign) const {
  WeylElt y = multiply(longest_element(mu), inverse(x));
  if (sign > 0) return is_min_rep(x, mu) && is_min_rep(y, nu);
  return is_max_rep(x, mu) && is_max_rep(y, nu);
}

TruncatedPoset WeylGroup::truncated_poset(const ParabolicType& mu, const ParabolicType& nu,
                                          int sign, const WeylElt& w) const {
  check_parabolic(mu);
  check_parabolic(nu);
  if (!in_truncation_set(w, mu, nu, sign))
    throw InvalidInput("truncated_poset: w lies outside I^nu_{mu,sign}");
  TruncatedPoset p;
  p.group = this;
  p.mu = mu;
  p.nu = nu;
  p.sign = sign;
  p.w = w;
  for (const auto& x : bruhat_ideal(w))
    if (in_truncation_set(x, mu, nu, sign)) p.elems.push_back(x);
  size_t n = p.elems.size();
  p.leq.assign(n, std::vector<bool>(n, false));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      bool b = bruhat_leq(p.elems[i], p.elems[j]);
      if (sign > 0) p.leq[j][i] = b;  // opposite Bruhat order
      else p.leq[i][j] = b;
    }
  return p;
}

WeylElt WeylGroup::bijection_pm(const WeylElt& x, const ParabolicType& mu,
                                const ParabolicType& nu, int target_sign) const {
  if (!in_truncation_set(x, mu, nu, -target_sign))
    throw InvalidInput("bijection_pm: x outside I^nu_{mu,-sign}");
  WeylElt img = multiply(multiply(longest_element(nu), x), longest_element(mu));
  if (!in_truncation_set(img, mu, nu, target_sign))
    throw std::logic_error("bijection_pm: image escaped I^nu_{mu,sign}");
  return img;
}

WeylGroup::TwoSides WeylGroup::appendix_c_membership(const WeylElt& x,
                                                     const ParabolicType& mu,
                                                     const ParabolicType& nu,
                                                     char variant, int sign) const {
  auto dominance = [&](const WeylElt& u, const ParabolicType& p, bool positive) {
    // u in I^p_{phi,+} iff u^{-1}(Pi_p^+) consists of positive roots;
    // u in I^p_{phi,-} iff it consists of negative roots
    WeylElt ui = inverse(u);
    for (const Weight& beta : parabolic_positive_roots(p)) {
      Weight v = act(ui, beta);
      if (datum_->root_positive(v) != positive) return false;
    }
    return true;
  };
  TwoSides r{};
  switch (variant) {
    case 'a':
      r.lhs = dominance(x, mu, true);
      r.rhs = is_min_rep(inverse(x), mu);
      break;
    case 'b':
      r.lhs = dominance(x, mu, false);
      r.rhs = is_max_rep(inverse(x), mu);
      break;
    case 'c': {
      bool in_phi_side = dominance(x, mu, sign > 0);
      bool coset_side = (sign > 0) ? is_max_rep(x, nu) : is_min_rep(x, nu);
      r.lhs = in_phi_side && coset_side;
      r.rhs = in_truncation_set(multiply(x, longest_element(nu)), nu, mu, sign);
      break;
    }
    case 'd':
      r.lhs = in_truncation_set(x, nu, mu, -1);
      r.rhs = in_truncation_set(
          multiply(multiply(longest_element(mu), x), longest_element(nu)), nu, mu, +1);
      break;
    default:
      throw InvalidInput("appendix_c_membership: variant must be a..d");
  }
  return r;
}

}  // namespace klbm::weyl
