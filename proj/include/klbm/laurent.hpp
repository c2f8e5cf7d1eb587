#pragma once

#include <klbm/rational.hpp>

#include <map>
#include <string>

namespace klbm {

// Integer Laurent polynomial in one variable, sparse exponent -> coefficient.
// No zero coefficients are ever stored.
class IntLaurentPoly {
 public:
  IntLaurentPoly() = default;
  static IntLaurentPoly constant(Int c);
  static IntLaurentPoly one() { return constant(1); }
  static IntLaurentPoly monomial(Int c, int exp);

  bool is_zero() const { return c_.empty(); }
  bool is_one() const;
  Int coeff(int exp) const;
  int min_exp() const;  // throws on zero polynomial
  int max_exp() const;
  const std::map<int, Int>& coeffs() const { return c_; }

  IntLaurentPoly& operator+=(const IntLaurentPoly& o);
  IntLaurentPoly& operator-=(const IntLaurentPoly& o);
  IntLaurentPoly operator+(const IntLaurentPoly& o) const;
  IntLaurentPoly operator-(const IntLaurentPoly& o) const;
  IntLaurentPoly operator-() const;
  IntLaurentPoly operator*(const IntLaurentPoly& o) const;
  IntLaurentPoly operator*(const Int& c) const;
  bool operator==(const IntLaurentPoly& o) const { return c_ == o.c_; }
  bool operator!=(const IntLaurentPoly& o) const { return !(*this == o); }

  // t -> -t
  IntLaurentPoly negate_var() const;
  // t -> t^{-1}
  IntLaurentPoly bar() const;
  // p(t) -> p(t^{-2}) * t^{prefactor}
  IntLaurentPoly inv_square_sub(int prefactor) const;
  // p(t) -> p(t^2), exponents doubled
  IntLaurentPoly stretch2() const;
  // multiply by t^k
  IntLaurentPoly shifted(int k) const;

  // keep only terms with exponent strictly below / at least the cut
  IntLaurentPoly below(int cut) const;
  IntLaurentPoly at_least(int cut) const;

  bool coeffs_nonnegative() const;

  void add_term(int exp, const Int& c);

  std::string str(const std::string& var = "t") const;

 private:
  std::map<int, Int> c_;
};

// A graded free module recorded as a multiset of shift degrees {j_1,...,j_k},
// denoting A{j_1} + ... + A{j_k}.  With the convention M{j}^i = M^{i+j} the
// generator of A{j} sits in degree -j.
class GradedRank {
 public:
  GradedRank() = default;

  void add(int shift, long mult = 1);
  long total() const;
  bool empty() const { return m_.empty(); }
  long mult(int shift) const;
  const std::map<int, long>& shifts() const { return m_; }

  GradedRank shifted(int j) const;   // apply {j}: A{a}{j} = A{a+j}
  GradedRank negated() const;        // graded dual at rank level: {j} -> {-j}
  GradedRank& operator+=(const GradedRank& o);
  bool operator==(const GradedRank& o) const { return m_ == o.m_; }
  bool operator!=(const GradedRank& o) const { return !(*this == o); }

  // A{j} contributes t^{-j}.
  IntLaurentPoly to_poly() const;
  // Inverse of to_poly; rejects negative coefficients.
  static GradedRank from_poly(const IntLaurentPoly& p);

  std::string str() const;

 private:
  std::map<int, long> m_;  // shift -> multiplicity > 0
};

}  // namespace klbm
