#pragma once

#include <klbm/laurent.hpp>
#include <klbm/weyl.hpp>

#include <functional>
#include <vector>

namespace klbm::poly {

// Square matrix of integer Laurent polynomials indexed by an ordered list of
// Weyl group elements (no duplicates).
class PolyMatrix {
 public:
  PolyMatrix() = default;
  explicit PolyMatrix(std::vector<weyl::WeylElt> index)
      : index_(std::move(index)), a_(index_.size() * index_.size()) {
    for (size_t i = 0; i < index_.size(); ++i)
      for (size_t j = i + 1; j < index_.size(); ++j)
        if (index_[i] == index_[j]) throw InvalidInput("PolyMatrix: duplicate index");
  }

  static PolyMatrix identity(std::vector<weyl::WeylElt> index) {
    PolyMatrix m(std::move(index));
    for (size_t i = 0; i < m.size(); ++i) m.at(i, i) = IntLaurentPoly::one();
    return m;
  }

  size_t size() const { return index_.size(); }
  const std::vector<weyl::WeylElt>& index() const { return index_; }

  IntLaurentPoly& at(size_t i, size_t j) { return a_[i * index_.size() + j]; }
  const IntLaurentPoly& at(size_t i, size_t j) const { return a_[i * index_.size() + j]; }

  int index_of(const weyl::WeylElt& x) const {
    for (size_t i = 0; i < index_.size(); ++i)
      if (index_[i] == x) return static_cast<int>(i);
    return -1;
  }

  PolyMatrix map(const std::function<IntLaurentPoly(const IntLaurentPoly&)>& f) const {
    PolyMatrix r(index_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = f(a_[k]);
    return r;
  }

  PolyMatrix transpose() const {
    PolyMatrix r(index_);
    for (size_t i = 0; i < size(); ++i)
      for (size_t j = 0; j < size(); ++j) r.at(j, i) = at(i, j);
    return r;
  }

  // Relabel: entry at (x, y) of the result is the entry at (phi(x), phi(y)).
  PolyMatrix reindexed(std::vector<weyl::WeylElt> new_index,
                       const std::function<weyl::WeylElt(const weyl::WeylElt&)>& phi) const {
    PolyMatrix r(std::move(new_index));
    for (size_t i = 0; i < r.size(); ++i)
      for (size_t j = 0; j < r.size(); ++j) {
        int oi = index_of(phi(r.index_[i]));
        int oj = index_of(phi(r.index_[j]));
        if (oi < 0 || oj < 0) throw InvalidInput("reindexed: bijection misses index");
        r.at(i, j) = at(oi, oj);
      }
    return r;
  }

  // Product with identification of the left column labels and right row
  // labels through phi; both factors must be indexed compatibly.
  PolyMatrix product(const PolyMatrix& rhs,
                     const std::function<weyl::WeylElt(const weyl::WeylElt&)>& phi) const {
    PolyMatrix rhs_rel = rhs.reindexed(index_, phi);
    PolyMatrix r(index_);
    for (size_t i = 0; i < size(); ++i)
      for (size_t j = 0; j < size(); ++j) {
        IntLaurentPoly s;
        for (size_t k = 0; k < size(); ++k) s += at(i, k) * rhs_rel.at(k, j);
        r.at(i, j) = s;
      }
    return r;
  }

  PolyMatrix product(const PolyMatrix& rhs) const {
    return product(rhs, [](const weyl::WeylElt& x) { return x; });
  }

  bool is_identity() const {
    for (size_t i = 0; i < size(); ++i)
      for (size_t j = 0; j < size(); ++j) {
        if (i == j && !at(i, j).is_one()) return false;
        if (i != j && !at(i, j).is_zero()) return false;
      }
    return true;
  }

  bool operator==(const PolyMatrix& o) const { return index_ == o.index_ && a_ == o.a_; }

 private:
  std::vector<weyl::WeylElt> index_;
  std::vector<IntLaurentPoly> a_;
};

}  // namespace klbm::poly
