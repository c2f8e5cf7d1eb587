#include <klbm/multipoly.hpp>

#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace klbm {

LinearForm::LinearForm(RatVec c) : coords(std::move(c)) {
  normalize_primitive(coords);
  if (pivot() < 0) throw std::domain_error("LinearForm: zero vector");
}

int LinearForm::pivot() const {
  for (size_t i = 0; i < coords.size(); ++i)
    if (coords[i] != 0) return static_cast<int>(i);
  return -1;
}

std::string LinearForm::str() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < coords.size(); ++i) {
    if (i) os << ",";
    os << coords[i];
  }
  os << "]";
  return os.str();
}

MultiPoly MultiPoly::constant(int nvars, Rat c) {
  MultiPoly p(nvars);
  p.add_term(Exps(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::monomial(int nvars, const Exps& e, Rat c) {
  MultiPoly p(nvars);
  p.add_term(e, c);
  return p;
}

MultiPoly MultiPoly::variable(int nvars, int k) {
  Exps e(nvars, 0);
  e[k] = 1;
  return monomial(nvars, e, Rat(1));
}

MultiPoly MultiPoly::from_linear(const LinearForm& f) {
  MultiPoly p(static_cast<int>(f.coords.size()));
  for (size_t k = 0; k < f.coords.size(); ++k) {
    if (f.coords[k] == 0) continue;
    Exps e(f.coords.size(), 0);
    e[k] = 1;
    p.add_term(e, f.coords[k]);
  }
  return p;
}

Rat MultiPoly::coeff(const Exps& e) const {
  auto it = t_.find(e);
  return it == t_.end() ? Rat(0) : it->second;
}

void MultiPoly::add_term(const Exps& e, const Rat& c) {
  if (c == 0) return;
  Rat& v = t_[e];
  v += c;
  if (v == 0) t_.erase(e);
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [e, c] : o.t_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [e, c] : o.t_) add_term(e, -c);
  return *this;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  MultiPoly r = *this;
  r += o;
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  MultiPoly r = *this;
  r -= o;
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  MultiPoly r(nvars_);
  for (const auto& [e1, c1] : t_)
    for (const auto& [e2, c2] : o.t_) {
      Exps e = e1;
      for (int i = 0; i < nvars_; ++i) e[i] += e2[i];
      r.add_term(e, c1 * c2);
    }
  return r;
}

MultiPoly MultiPoly::operator*(const Rat& c) const {
  MultiPoly r(nvars_);
  if (c == 0) return r;
  for (const auto& [e, v] : t_) r.t_.emplace(e, v * c);
  return r;
}

MultiPoly MultiPoly::mul_var(int k) const {
  MultiPoly r(nvars_);
  for (const auto& [e, v] : t_) {
    Exps e2 = e;
    ++e2[k];
    r.t_.emplace(std::move(e2), v);
  }
  return r;
}

int MultiPoly::homogeneous_poly_degree() const {
  if (t_.empty()) return -1;
  int d = -1;
  for (const auto& [e, c] : t_) {
    int s = 0;
    for (int x : e) s += x;
    if (d == -1) d = s;
    else if (d != s) return -2;
  }
  return d;
}

int MultiPoly::graded_degree() const {
  int d = homogeneous_poly_degree();
  if (d == -2) throw std::domain_error("graded_degree: inhomogeneous polynomial");
  return d < 0 ? 0 : 2 * d;
}

MultiPoly MultiPoly::reduce_mod(const LinearForm& f) const {
  int k = f.pivot();
  Rat pc = f.coords[k];
  MultiPoly rem(nvars_);
  MultiPoly work = *this;
  while (!work.t_.empty()) {
    auto it = work.t_.begin();
    Exps e = it->first;
    Rat c = it->second;
    work.t_.erase(it);
    if (e[k] == 0) {
      rem.add_term(e, c);
      continue;
    }
    // x_k = -(sum_{j != k} f_j x_j) / f_k  (mod f)
    --e[k];
    for (int j = 0; j < nvars_; ++j) {
      if (j == k || f.coords[j] == 0) continue;
      Exps e2 = e;
      ++e2[j];
      work.add_term(e2, -c * f.coords[j] / pc);
    }
  }
  return rem;
}

std::string MultiPoly::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : t_) {
    if (!first) os << " + ";
    os << "(" << c << ")";
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) {
        os << "*x" << i;
        if (e[i] != 1) os << "^" << e[i];
      }
    first = false;
  }
  return os.str();
}

const std::vector<Exps>& monomials_of_degree(int nvars, int d) {
  static std::map<std::pair<int, int>, std::vector<Exps>> cache;
  auto key = std::make_pair(nvars, d);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<Exps> out;
  if (d >= 0) {
    Exps e(nvars, 0);
    std::function<void(int, int)> rec = [&](int pos, int rem) {
      if (pos == nvars - 1) {
        e[pos] = rem;
        out.push_back(e);
        return;
      }
      for (int v = 0; v <= rem; ++v) {
        e[pos] = v;
        rec(pos + 1, rem - v);
      }
    };
    if (nvars == 0) {
      if (d == 0) out.push_back(Exps{});
    } else {
      rec(0, d);
    }
  }
  return cache.emplace(key, std::move(out)).first->second;
}

std::vector<Exps> monomials_avoiding(int nvars, int d, int pivot) {
  std::vector<Exps> out;
  if (d < 0) return out;
  for (const Exps& e : monomials_of_degree(nvars, d))
    if (e[pivot] == 0) out.push_back(e);
  return out;
}

}  // namespace klbm
