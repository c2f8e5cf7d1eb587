#include <klbm/cartan.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace klbm::cartan {

bool Weight::operator==(const Weight& o) const {
  return ctx == o.ctx && c_delta == o.c_delta && fw == o.fw && c_lambda0 == o.c_lambda0;
}

Weight Weight::operator+(const Weight& o) const {
  if (ctx != o.ctx) throw InvalidInput("Weight: mismatched Cartan data");
  Weight r = *this;
  r.c_delta += o.c_delta;
  for (size_t i = 0; i < fw.size(); ++i) r.fw[i] += o.fw[i];
  r.c_lambda0 += o.c_lambda0;
  return r;
}

Weight Weight::operator-(const Weight& o) const {
  if (ctx != o.ctx) throw InvalidInput("Weight: mismatched Cartan data");
  Weight r = *this;
  r.c_delta -= o.c_delta;
  for (size_t i = 0; i < fw.size(); ++i) r.fw[i] -= o.fw[i];
  r.c_lambda0 -= o.c_lambda0;
  return r;
}

Weight Weight::operator*(const Rat& c) const {
  Weight r = *this;
  r.c_delta *= c;
  for (auto& x : r.fw) x *= c;
  r.c_lambda0 *= c;
  return r;
}

bool Weight::equal_mod_delta(const Weight& o) const {
  return ctx == o.ctx && fw == o.fw && c_lambda0 == o.c_lambda0;
}

bool Weight::is_zero() const {
  if (c_delta != 0 || c_lambda0 != 0) return false;
  for (const auto& x : fw)
    if (x != 0) return false;
  return true;
}

RatVec Weight::flat() const {
  RatVec v;
  if (ctx && ctx->affine()) {
    v.push_back(c_delta);
    v.insert(v.end(), fw.begin(), fw.end());
    v.push_back(c_lambda0);
  } else {
    v = fw;
  }
  return v;
}

std::string Weight::str() const {
  std::ostringstream os;
  os << "(" << c_delta << ";";
  for (size_t i = 0; i < fw.size(); ++i) os << (i ? "," : " ") << fw[i];
  os << "; " << c_lambda0 << ")";
  return os.str();
}

bool Coweight::operator==(const Coweight& o) const {
  return ctx == o.ctx && c_d == o.c_d && cr == o.cr && c_one == o.c_one;
}

RatVec Coweight::flat() const {
  RatVec v;
  if (ctx && ctx->affine()) {
    v.push_back(c_d);
    v.insert(v.end(), cr.begin(), cr.end());
    v.push_back(c_one);
  } else {
    v = cr;
  }
  return v;
}

namespace {

std::vector<std::vector<int>> finite_cartan(char letter, int n) {
  auto bad = [&]() -> std::vector<std::vector<int>> {
    throw InvalidInput(std::string("unsupported Cartan type ") + letter + std::to_string(n));
  };
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto chain = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
  switch (letter) {
    case 'A':
      if (n < 1) return bad();
      for (int i = 0; i + 1 < n; ++i) chain(i, i + 1);
      break;
    case 'B':
      if (n < 2) return bad();
      for (int i = 0; i + 1 < n; ++i) chain(i, i + 1);
      a[n - 1][n - 2] = -2;  // alpha_n short
      break;
    case 'C':
      if (n < 2) return bad();
      for (int i = 0; i + 1 < n; ++i) chain(i, i + 1);
      a[n - 2][n - 1] = -2;  // alpha_n long
      break;
    case 'D':
      if (n < 4) return bad();
      for (int i = 0; i + 2 < n; ++i) chain(i, i + 1);
      chain(n - 3, n - 1);
      break;
    case 'E':
      if (n < 6 || n > 8) return bad();
      // Bourbaki: node 2 attaches to node 4 of the A-chain 1-3-4-5-6(-7-8)
      chain(0, 2);
      chain(2, 3);
      chain(3, 4);
      chain(4, 5);
      if (n >= 7) chain(5, 6);
      if (n == 8) chain(6, 7);
      chain(1, 3);
      break;
    case 'F':
      if (n != 4) return bad();
      chain(0, 1);
      chain(2, 3);
      a[1][2] = -2;
      a[2][1] = -1;
      break;
    case 'G':
      if (n != 2) return bad();
      a[0][1] = -3;
      a[1][0] = -1;
      break;
    default:
      return bad();
  }
  return a;
}

int dual_coxeter_table(char letter, int n) {
  switch (letter) {
    case 'A': return n + 1;
    case 'B': return 2 * n - 1;
    case 'C': return n + 1;
    case 'D': return 2 * n - 2;
    case 'E': return n == 6 ? 12 : (n == 7 ? 18 : 30);
    case 'F': return 9;
    case 'G': return 4;
  }
  throw InvalidInput("dual_coxeter_table");
}

// All roots of the finite system in simple-root coordinates.
std::vector<std::vector<Int>> enumerate_roots(const std::vector<std::vector<int>>& a) {
  int n = static_cast<int>(a.size());
  std::set<std::vector<Int>> seen;
  std::vector<std::vector<Int>> queue;
  for (int i = 0; i < n; ++i) {
    std::vector<Int> e(n, 0);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    auto b = queue.back();
    queue.pop_back();
    for (int i = 0; i < n; ++i) {
      Int pair = 0;
      for (int j = 0; j < n; ++j) pair += Int(a[i][j]) * b[j];
      std::vector<Int> nb = b;
      nb[i] -= pair;
      if (seen.insert(nb).second) queue.push_back(nb);
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

std::shared_ptr<const CartanDatum> CartanDatum::make(const std::string& type) {
  static std::map<std::string, std::shared_ptr<const CartanDatum>> cache;
  auto hit = cache.find(type);
  if (hit != cache.end()) return hit->second;

  if (type.empty()) throw InvalidInput("empty Cartan type");
  char letter = type[0];
  bool affine = type.back() == '~';
  std::string digits = type.substr(1, type.size() - 1 - (affine ? 1 : 0));
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit))
    throw InvalidInput("cannot parse Cartan type: " + type);
  int n = std::stoi(digits);
  if (n < 1 || n > 8) throw InvalidInput("rank out of range: " + type);

  auto d = std::shared_ptr<CartanDatum>(new CartanDatum());
  d->letter_ = letter;
  d->n_ = n;
  d->affine_ = affine;
  d->type_ = type;
  d->fin_ = finite_cartan(letter, n);

  // integer symmetrizers by propagation along the diagram, then rescaled so
  // that the highest root has squared norm 2
  std::vector<Rat> ds(n, Rat(0));
  ds[0] = 1;
  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j || d->fin_[i][j] == 0) continue;
        if (ds[i] != 0 && ds[j] == 0) {
          ds[j] = ds[i] * d->fin_[i][j] / d->fin_[j][i];
          changed = true;
        }
      }
  }
  for (const auto& x : ds)
    if (x == 0) throw InvalidInput("disconnected Cartan matrix");

  auto roots = enumerate_roots(d->fin_);
  const std::vector<Int>* theta = nullptr;
  Int best_height = -1;
  for (const auto& b : roots) {
    Int h = 0;
    bool pos = true;
    for (const auto& x : b) {
      h += x;
      if (x < 0) pos = false;
    }
    if (pos && h > best_height) {
      best_height = h;
      theta = &b;
    }
  }
  d->theta_alpha_ = *theta;

  // <theta,theta> under the provisional form <a_i,a_j> = ds_i * a_ij
  Rat norm = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      norm += Rat(d->theta_alpha_[i]) * Rat(d->theta_alpha_[j]) * ds[i] * Rat(d->fin_[i][j]);
  Rat scale = Rat(2) / norm;
  d->sym_.assign(n + 1, Rat(0));
  for (int i = 0; i < n; ++i) d->sym_[i + 1] = ds[i] * scale;

  d->theta_fw_.assign(n, Rat(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) d->theta_fw_[i] += Rat(d->fin_[i][j]) * Rat(d->theta_alpha_[j]);

  d->thetacheck_pair_.assign(n, Rat(0));
  for (int i = 0; i < n; ++i) d->thetacheck_pair_[i] = Rat(d->theta_alpha_[i]) * d->sym_[i + 1];

  // affine Cartan matrix; d_0 = 1 since alpha_0 = delta - theta is long
  d->aff_.assign(n + 1, std::vector<int>(n + 1, 0));
  d->aff_[0][0] = 2;
  d->sym_[0] = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) d->aff_[i][j] = d->fin_[i - 1][j - 1];
  for (int j = 1; j <= n; ++j) {
    // (alpha_j : alphacheck_0) = -(alpha_j : thetacheck) = -<alpha_j, theta>
    Rat v = 0;
    for (int i = 1; i <= n; ++i)
      v += Rat(d->theta_alpha_[i - 1]) * d->sym_[i] * Rat(d->fin_[i - 1][j - 1]);
    d->aff_[0][j] = static_cast<int>(to_int(-v));
    // (alpha_0 : alphacheck_j) = -(theta : alphacheck_j)
    Int u = 0;
    for (int k = 1; k <= n; ++k) u += Int(d->fin_[j - 1][k - 1]) * d->theta_alpha_[k - 1];
    d->aff_[j][0] = static_cast<int>(-u);
  }

  // inverse finite Cartan matrix
  {
    RatRows aug(n, RatVec(2 * n, Rat(0)));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) aug[i][j] = Rat(d->fin_[i][j]);
      aug[i][n + i] = 1;
    }
    Rref rr = rref(aug, 2 * n);
    if (static_cast<int>(rr.rows.size()) != n)
      throw InvalidInput("singular Cartan matrix");
    d->fin_inv_.assign(n, RatVec(n, Rat(0)));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d->fin_inv_[i][j] = rr.rows[i][n + j];
  }

  // dual Coxeter number: 1 + (rho : thetacheck); assert the standard table
  {
    Rat s = 0;
    for (int i = 0; i < n; ++i) s += d->thetacheck_pair_[i];
    d->m_ = static_cast<int>(to_int(s)) + 1;
    if (d->m_ != dual_coxeter_table(letter, n))
      throw std::logic_error("dual Coxeter number disagrees with table for " + type);
  }

  cache[type] = d;
  return d;
}

std::vector<int> CartanDatum::gens() const {
  std::vector<int> g;
  for (int i = affine_ ? 0 : 1; i <= n_; ++i) g.push_back(i);
  return g;
}

int CartanDatum::coxeter_order(int i, int j) const {
  if (i == j) return 1;
  int p = aff_[i][j] * aff_[j][i];
  switch (p) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
  }
  throw std::logic_error("coxeter_order: product out of range (non-affine braid?)");
}

Weight CartanDatum::zero_weight() const {
  Weight w;
  w.ctx = this;
  w.c_delta = 0;
  w.fw.assign(n_, Rat(0));
  w.c_lambda0 = 0;
  return w;
}

Weight CartanDatum::simple_root(int i) const {
  Weight w = zero_weight();
  if (i == 0) {
    if (!affine_) throw InvalidInput("simple_root 0 in finite type");
    w.c_delta = 1;
    for (int j = 0; j < n_; ++j) w.fw[j] = -theta_fw_[j];
  } else {
    for (int j = 0; j < n_; ++j) w.fw[j] = Rat(fin_[j][i - 1]);
  }
  return w;
}

Weight CartanDatum::fundamental_weight(int i) const {
  Weight w = zero_weight();
  w.fw[i - 1] = 1;
  return w;
}

Weight CartanDatum::rho_hat() const {
  Weight w = zero_weight();
  for (int j = 0; j < n_; ++j) w.fw[j] = 1;
  if (affine_) w.c_lambda0 = m_;
  return w;
}

Weight CartanDatum::delta_weight() const {
  Weight w = zero_weight();
  w.c_delta = 1;
  return w;
}

Weight CartanDatum::Lambda0_weight() const {
  Weight w = zero_weight();
  w.c_lambda0 = 1;
  return w;
}

Coweight CartanDatum::simple_coroot(int i) const {
  Coweight x;
  x.ctx = this;
  x.c_d = 0;
  x.cr.assign(n_, Rat(0));
  x.c_one = 0;
  if (i == 0) {
    if (!affine_) throw InvalidInput("simple_coroot 0 in finite type");
    for (int j = 0; j < n_; ++j) x.cr[j] = -thetacheck_pair_[j];
    x.c_one = 1;
  } else {
    x.cr[i - 1] = 1;
  }
  return x;
}

Rat CartanDatum::pairing(const Weight& w, int i) const {
  check_ctx(w);
  if (i < (affine_ ? 0 : 1) || i > n_) throw InvalidInput("pairing: index out of range");
  if (i > 0) return w.fw[i - 1];
  Rat v = w.c_lambda0;
  for (int j = 0; j < n_; ++j) v -= w.fw[j] * thetacheck_pair_[j];
  return v;
}

Rat CartanDatum::copairing(int i, const Coweight& x) const {
  check_ctx(x);
  Rat v = (i == 0) ? x.c_d : Rat(0);
  for (int j = 1; j <= n_; ++j) v += x.cr[j - 1] * Rat(aff_[j][i]);
  return v;
}

Weight CartanDatum::reflect(int i, const Weight& w) const {
  Rat p = pairing(w, i);
  if (p == 0) return w;
  return w - simple_root(i) * p;
}

Coweight CartanDatum::reflect(int i, const Coweight& x) const {
  Rat p = copairing(i, x);
  if (p == 0) return x;
  Coweight a = simple_coroot(i);
  Coweight r = x;
  r.c_d -= p * a.c_d;
  for (int j = 0; j < n_; ++j) r.cr[j] -= p * a.cr[j];
  r.c_one -= p * a.c_one;
  return r;
}

Weight CartanDatum::act(std::span<const int> word, Weight v) const {
  for (auto it = word.rbegin(); it != word.rend(); ++it) v = reflect(*it, v);
  return v;
}

Coweight CartanDatum::act(std::span<const int> word, Coweight v) const {
  for (auto it = word.rbegin(); it != word.rend(); ++it) v = reflect(*it, v);
  return v;
}

bool CartanDatum::root_positive(const Weight& v) const {
  check_ctx(v);
  if (v.c_lambda0 != 0)
    throw InvalidInput("root_positive: not a root vector (nonzero level)");
  Int b0 = to_int(v.c_delta);
  if (!affine_ && b0 != 0) throw InvalidInput("root_positive: delta part in finite type");
  // finite alpha-coordinates of the finite part + b0 * theta
  bool all_nonneg = b0 >= 0, all_nonpos = b0 <= 0, nonzero = b0 != 0;
  for (int i = 0; i < n_; ++i) {
    Rat c = 0;
    for (int j = 0; j < n_; ++j)
      c += fin_inv_[i][j] * (v.fw[j] + Rat(b0) * theta_fw_[j]);
    Int ci = to_int(c);
    if (ci > 0) all_nonpos = false;
    if (ci < 0) all_nonneg = false;
    if (ci != 0) nonzero = true;
  }
  if (!nonzero) throw InvalidInput("root_positive: zero vector");
  if (all_nonneg == all_nonpos)
    throw std::logic_error("root_positive: mixed signs, not a root");
  return all_nonneg;
}

RatVec CartanDatum::coroot_label(const Coweight& x) const {
  check_ctx(x);
  if (x.c_d != 0) throw std::logic_error("coroot_label: derivation coordinate nonzero");
  RatVec v = x.cr;
  if (affine_) v.push_back(x.c_one);
  return v;
}

RatVec CartanDatum::root_label(const Weight& w) const {
  check_ctx(w);
  if (w.c_lambda0 != 0) throw std::logic_error("root_label: Lambda0 coordinate nonzero");
  RatVec v;
  if (affine_) v.push_back(w.c_delta);
  v.insert(v.end(), w.fw.begin(), w.fw.end());
  return v;
}

void CartanDatum::check_ctx(const Weight& w) const {
  if (w.ctx != this) throw InvalidInput("mismatched Cartan data (weight)");
}

void CartanDatum::check_ctx(const Coweight& x) const {
  if (x.ctx != this) throw InvalidInput("mismatched Cartan data (coweight)");
}

}  // namespace klbm::cartan
