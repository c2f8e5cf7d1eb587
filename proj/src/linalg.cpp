#include <klbm/linalg.hpp>

#include <algorithm>

namespace klbm {

namespace {

int first_nonzero(const RatVec& v) {
  for (size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) return static_cast<int>(i);
  return -1;
}

}  // namespace

void normalize_primitive(RatVec& v) {
  Int lcm = 1;
  for (const Rat& x : v)
    if (x != 0) lcm = boost::multiprecision::lcm(lcm, rat_den(x));
  Int content = 0;
  std::vector<Int> ints(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    ints[i] = rat_num(v[i]) * (lcm / rat_den(v[i]));
    content = boost::multiprecision::gcd(content, ints[i]);
  }
  if (content == 0) return;
  int fn = first_nonzero(v);
  if (ints[fn] < 0) content = -content;
  for (size_t i = 0; i < v.size(); ++i) v[i] = Rat(ints[i] / content);
}

RatVec RowSpace::reduce(RatVec r) const {
  for (size_t k = 0; k < rows_.size(); ++k) {
    int p = pivots_[k];
    if (r[p] == 0) continue;
    Rat factor = r[p] / rows_[k][p];
    for (int j = p; j < ncols_; ++j)
      if (rows_[k][j] != 0) r[j] -= factor * rows_[k][j];
  }
  return r;
}

bool RowSpace::absorb(RatVec r) {
  r = reduce(std::move(r));
  int p = first_nonzero(r);
  if (p < 0) return false;
  normalize_primitive(r);
  // keep rows ordered by pivot column
  size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
  rows_.insert(rows_.begin() + pos, std::move(r));
  pivots_.insert(pivots_.begin() + pos, p);
  return true;
}

bool RowSpace::contains(const RatVec& r) const {
  return first_nonzero(reduce(r)) < 0;
}

Rref rref(RatRows rows, int ncols) {
  Rref out;
  RowSpace sp(ncols);
  for (auto& r : rows) sp.absorb(std::move(r));
  out.rows = sp.rows();
  out.pivots.clear();
  for (const auto& r : out.rows) out.pivots.push_back(first_nonzero(r));
  // back-substitute to fully reduced form, unit pivots
  for (int k = static_cast<int>(out.rows.size()) - 1; k >= 0; --k) {
    int p = out.pivots[k];
    Rat pv = out.rows[k][p];
    for (int j = p; j < ncols; ++j) out.rows[k][j] /= pv;
    for (int i = 0; i < k; ++i) {
      Rat f = out.rows[i][p];
      if (f == 0) continue;
      for (int j = p; j < ncols; ++j) out.rows[i][j] -= f * out.rows[k][j];
    }
  }
  return out;
}

int rank_of(const RatRows& rows, int ncols) {
  RowSpace sp(ncols);
  for (const auto& r : rows) sp.absorb(r);
  return sp.rank();
}

RatRows nullspace_basis(const RatRows& rows, int ncols) {
  Rref rr = rref(rows, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (int p : rr.pivots) is_pivot[p] = true;
  RatRows basis;
  for (int f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    RatVec v(ncols, Rat(0));
    v[f] = 1;
    for (size_t k = 0; k < rr.rows.size(); ++k) v[rr.pivots[k]] = -rr.rows[k][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace klbm
