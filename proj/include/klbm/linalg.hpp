#pragma once

#include <klbm/rational.hpp>

#include <vector>

namespace klbm {

using RatVec = std::vector<Rat>;
using RatRows = std::vector<RatVec>;

// Incremental echelon form over Q.  Rows are kept as primitive integer
// vectors (denominators cleared, content divided out) so the elimination is
// fraction-free; pivoting is deterministic: first nonzero column, rows in
// insertion order.
class RowSpace {
 public:
  explicit RowSpace(int ncols) : ncols_(ncols) {}

  int ncols() const { return ncols_; }
  int rank() const { return static_cast<int>(rows_.size()); }

  // Residual of r after reduction against the stored echelon rows.
  RatVec reduce(RatVec r) const;

  // Insert r if independent; returns true when the rank grew.
  bool absorb(RatVec r);

  bool contains(const RatVec& r) const;

  const RatRows& rows() const { return rows_; }

 private:
  int ncols_;
  RatRows rows_;              // echelon, ordered by pivot column
  std::vector<int> pivots_;   // pivot column per stored row
};

struct Rref {
  RatRows rows;            // fully reduced rows, pivot entries == 1
  std::vector<int> pivots; // pivot column per row
};

Rref rref(RatRows rows, int ncols);

int rank_of(const RatRows& rows, int ncols);

// Basis of {x : M x = 0} for M given by rows; deterministic order (one basis
// vector per free column, ascending).
RatRows nullspace_basis(const RatRows& rows, int ncols);

// Make the vector primitive-integer: clear denominators, divide by content,
// first nonzero entry positive.  Zero vector stays zero.
void normalize_primitive(RatVec& v);

}  // namespace klbm
