#include <klbm/laurent.hpp>

#include <sstream>

namespace klbm {

IntLaurentPoly IntLaurentPoly::constant(Int c) {
  IntLaurentPoly p;
  p.add_term(0, c);
  return p;
}

IntLaurentPoly IntLaurentPoly::monomial(Int c, int exp) {
  IntLaurentPoly p;
  p.add_term(exp, c);
  return p;
}

bool IntLaurentPoly::is_one() const {
  return c_.size() == 1 && c_.begin()->first == 0 && c_.begin()->second == 1;
}

Int IntLaurentPoly::coeff(int exp) const {
  auto it = c_.find(exp);
  return it == c_.end() ? Int(0) : it->second;
}

int IntLaurentPoly::min_exp() const {
  if (c_.empty()) throw std::domain_error("min_exp of zero polynomial");
  return c_.begin()->first;
}

int IntLaurentPoly::max_exp() const {
  if (c_.empty()) throw std::domain_error("max_exp of zero polynomial");
  return c_.rbegin()->first;
}

void IntLaurentPoly::add_term(int exp, const Int& c) {
  if (c == 0) return;
  auto [it, fresh] = c_.emplace(exp, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) c_.erase(it);
  }
}

IntLaurentPoly& IntLaurentPoly::operator+=(const IntLaurentPoly& o) {
  for (const auto& [e, c] : o.c_) add_term(e, c);
  return *this;
}

IntLaurentPoly& IntLaurentPoly::operator-=(const IntLaurentPoly& o) {
  for (const auto& [e, c] : o.c_) add_term(e, -c);
  return *this;
}

IntLaurentPoly IntLaurentPoly::operator+(const IntLaurentPoly& o) const {
  IntLaurentPoly r = *this;
  r += o;
  return r;
}

IntLaurentPoly IntLaurentPoly::operator-(const IntLaurentPoly& o) const {
  IntLaurentPoly r = *this;
  r -= o;
  return r;
}

IntLaurentPoly IntLaurentPoly::operator-() const {
  IntLaurentPoly r;
  for (const auto& [e, c] : c_) r.c_.emplace(e, -c);
  return r;
}

IntLaurentPoly IntLaurentPoly::operator*(const IntLaurentPoly& o) const {
  IntLaurentPoly r;
  for (const auto& [e1, c1] : c_)
    for (const auto& [e2, c2] : o.c_) r.add_term(e1 + e2, c1 * c2);
  return r;
}

IntLaurentPoly IntLaurentPoly::operator*(const Int& c) const {
  IntLaurentPoly r;
  if (c == 0) return r;
  for (const auto& [e, v] : c_) r.c_.emplace(e, v * c);
  return r;
}

IntLaurentPoly IntLaurentPoly::negate_var() const {
  IntLaurentPoly r;
  for (const auto& [e, c] : c_) r.c_.emplace(e, (e % 2 == 0) ? c : -c);
  return r;
}

IntLaurentPoly IntLaurentPoly::bar() const {
  IntLaurentPoly r;
  for (const auto& [e, c] : c_) r.c_.emplace(-e, c);
  return r;
}

IntLaurentPoly IntLaurentPoly::inv_square_sub(int prefactor) const {
  IntLaurentPoly r;
  for (const auto& [e, c] : c_) r.c_.emplace(-2 * e + prefactor, c);
  return r;
}

IntLaurentPoly IntLaurentPoly::stretch2() const {
  IntLaurentPoly r;
  for (const auto& [e, c] : c_) r.c_.emplace(2 * e, c);
  return r;
}

IntLaurentPoly IntLaurentPoly::shifted(int k) const {
  IntLaurentPoly r;
  for (const auto& [e, c] : c_) r.c_.emplace(e + k, c);
  return r;
}

IntLaurentPoly IntLaurentPoly::below(int cut) const {
  IntLaurentPoly r;
  for (const auto& [e, c] : c_)
    if (e < cut) r.c_.emplace(e, c);
  return r;
}

IntLaurentPoly IntLaurentPoly::at_least(int cut) const {
  IntLaurentPoly r;
  for (const auto& [e, c] : c_)
    if (e >= cut) r.c_.emplace(e, c);
  return r;
}

bool IntLaurentPoly::coeffs_nonnegative() const {
  for (const auto& [e, c] : c_)
    if (c < 0) return false;
  return true;
}

std::string IntLaurentPoly::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : c_) {
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    Int a = c > 0 ? c : Int(-c);
    if (a != 1 || e == 0) os << a.str();
    if (e != 0) {
      if (a != 1) os << "*";
      os << var;
      if (e != 1) os << "^" << e;
    }
    first = false;
  }
  return os.str();
}

void GradedRank::add(int shift, long mult) {
  if (mult == 0) return;
  long& v = m_[shift];
  v += mult;
  if (v == 0) {
    m_.erase(shift);
    return;
  }
  if (v < 0) throw std::domain_error("GradedRank: negative multiplicity");
}

long GradedRank::total() const {
  long t = 0;
  for (const auto& [s, m] : m_) t += m;
  return t;
}

long GradedRank::mult(int shift) const {
  auto it = m_.find(shift);
  return it == m_.end() ? 0 : it->second;
}

GradedRank GradedRank::shifted(int j) const {
  GradedRank r;
  for (const auto& [s, m] : m_) r.m_.emplace(s + j, m);
  return r;
}

GradedRank GradedRank::negated() const {
  GradedRank r;
  for (const auto& [s, m] : m_) r.m_.emplace(-s, m);
  return r;
}

GradedRank& GradedRank::operator+=(const GradedRank& o) {
  for (const auto& [s, m] : o.m_) add(s, m);
  return *this;
}

IntLaurentPoly GradedRank::to_poly() const {
  IntLaurentPoly p;
  for (const auto& [s, m] : m_) p.add_term(-s, m);
  return p;
}

GradedRank GradedRank::from_poly(const IntLaurentPoly& p) {
  GradedRank r;
  for (const auto& [e, c] : p.coeffs()) {
    if (c < 0)
      throw std::domain_error("GradedRank::from_poly: negative coefficient");
    r.add(-e, static_cast<long>(c));
  }
  return r;
}

std::string GradedRank::str() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [s, m] : m_)
    for (long i = 0; i < m; ++i) {
      if (!first) os << ",";
      os << s;
      first = false;
    }
  os << "}";
  return os.str();
}

}  // namespace klbm
