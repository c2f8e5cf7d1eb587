#pragma once

#include <klbm/linalg.hpp>

#include <map>
#include <string>
#include <vector>

namespace klbm {

// Exponent vector; std::map with std::vector's lexicographic < gives the
// deterministic monomial order used everywhere.
using Exps = std::vector<int>;

// A nonzero rational coordinate vector used as a moment-graph edge label.
// Labels are lines k*v, so they are stored as primitive integer vectors with
// positive leading entry; as elements of S a linear form has degree 2.
struct LinearForm {
  RatVec coords;

  explicit LinearForm(RatVec c);
  bool same_line(const LinearForm& o) const { return coords == o.coords; }
  int pivot() const;  // first index with nonzero coordinate
  std::string str() const;
};

// Sparse multivariate polynomial with rational coefficients over a basis of
// V.  Grading: each variable has degree 2, so a polynomial homogeneous of
// polynomial degree k sits in graded degree 2k.
class MultiPoly {
 public:
  MultiPoly() = default;
  explicit MultiPoly(int nvars) : nvars_(nvars) {}
  static MultiPoly constant(int nvars, Rat c);
  static MultiPoly monomial(int nvars, const Exps& e, Rat c);
  static MultiPoly variable(int nvars, int k);
  static MultiPoly from_linear(const LinearForm& f);

  int nvars() const { return nvars_; }
  bool is_zero() const { return t_.empty(); }
  const std::map<Exps, Rat>& terms() const { return t_; }
  Rat coeff(const Exps& e) const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator*(const Rat& c) const;
  bool operator==(const MultiPoly& o) const { return nvars_ == o.nvars_ && t_ == o.t_; }

  MultiPoly mul_var(int k) const;

  // -1 for 0; -2 if inhomogeneous; else the common polynomial degree.
  int homogeneous_poly_degree() const;
  // graded degree = 2 * polynomial degree (requires homogeneity)
  int graded_degree() const;

  // Remainder modulo the principal ideal (f): repeatedly eliminates the
  // pivot variable of f.
  MultiPoly reduce_mod(const LinearForm& f) const;

  void add_term(const Exps& e, const Rat& c);

  std::string str() const;

 private:
  int nvars_ = 0;
  std::map<Exps, Rat> t_;
};

// All monomials of polynomial degree d in nvars variables, lex-sorted.
const std::vector<Exps>& monomials_of_degree(int nvars, int d);

// Monomials of degree d with zero exponent on the pivot variable: a basis of
// (S/(f))_d once f's pivot is eliminated.
std::vector<Exps> monomials_avoiding(int nvars, int d, int pivot);

}  // namespace klbm
