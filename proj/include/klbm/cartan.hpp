#pragma once

#include <klbm/linalg.hpp>

#include <memory>
#include <span>
#include <string>
#include <vector>

namespace klbm::cartan {

// Affine weight in the coordinates t* = C x t* x C of the identification
// alpha_i -> (0, alpha_i, 0) for i != 0, Lambda0 -> (0,0,1), delta -> (1,0,0).
// The finite part is stored in the fundamental-weight basis, so
// (lambda : alphacheck_i) = fw[i-1] for i = 1..n.  Finite contexts simply
// keep c_delta = c_lambda0 = 0.
struct Weight {
  const class CartanDatum* ctx = nullptr;
  Rat c_delta;
  RatVec fw;
  Rat c_lambda0;

  bool operator==(const Weight& o) const;
  Weight operator+(const Weight& o) const;
  Weight operator-(const Weight& o) const;
  Weight operator*(const Rat& c) const;
  bool equal_mod_delta(const Weight& o) const;
  bool is_zero() const;
  RatVec flat() const;  // [c_delta, fw..., c_lambda0] (affine) or fw (finite)
  std::string str() const;
};

// Element of t in the basis (partial derivation, simple coroots, central 1).
struct Coweight {
  const class CartanDatum* ctx = nullptr;
  Rat c_d;
  RatVec cr;
  Rat c_one;

  bool operator==(const Coweight& o) const;
  RatVec flat() const;
};

// Root datum of a finite simple type together with its untwisted affine
// extension (node 0, alpha_0 = delta - theta).  All scalars exact rationals.
class CartanDatum {
 public:
  // "A2" for the finite group, "A2~" for the affine one.
  static std::shared_ptr<const CartanDatum> make(const std::string& type);

  char letter() const { return letter_; }
  int rank() const { return n_; }
  bool affine() const { return affine_; }
  const std::string& type_string() const { return type_; }
  int dual_coxeter_number() const { return m_; }

  // generator indices: 0..n affine, 1..n finite
  std::vector<int> gens() const;
  int num_gens() const { return affine_ ? n_ + 1 : n_; }

  // (n+1)x(n+1), indices 0..n; entry [i][j] = (alpha_j : alphacheck_i)
  const std::vector<std::vector<int>>& affine_cartan() const { return aff_; }
  // Coxeter order m_ij of s_i s_j
  int coxeter_order(int i, int j) const;
  const std::vector<Rat>& symmetrizers() const { return sym_; }

  Weight zero_weight() const;
  Weight simple_root(int i) const;
  Weight fundamental_weight(int i) const;  // i in 1..n
  Weight rho_hat() const;                  // rho + m Lambda0 (finite: rho)
  Weight delta_weight() const;
  Weight Lambda0_weight() const;
  Coweight simple_coroot(int i) const;

  Rat pairing(const Weight& w, int i) const;   // (w : alphacheck_i)
  Rat copairing(int i, const Coweight& x) const;  // (alpha_i : x)
  Rat level(const Weight& w) const { return w.c_lambda0; }

  Weight reflect(int i, const Weight& w) const;
  Coweight reflect(int i, const Coweight& x) const;

  // Apply the word s_{w[0]} s_{w[1]} ... to the vector (rightmost acts first).
  Weight act(std::span<const int> word, Weight v) const;
  Coweight act(std::span<const int> word, Coweight v) const;
  template <typename Seq>
  Weight act_seq(const Seq& word, Weight v) const {
    for (auto it = word.rbegin(); it != word.rend(); ++it) v = reflect(*it, v);
    return v;
  }
  template <typename Seq>
  Coweight act_seq(const Seq& word, Coweight v) const {
    for (auto it = word.rbegin(); it != word.rend(); ++it) v = reflect(*it, v);
    return v;
  }

  // w . lambda = w(lambda + rho_hat) - rho_hat
  template <typename Seq>
  Weight dot_action(const Seq& word, const Weight& lambda) const {
    check_ctx(lambda);
    Weight v = lambda + rho_hat();
    v = act_seq(word, std::move(v));
    return v - rho_hat();
  }

  // Positivity of a real root given in weight coordinates.
  bool root_positive(const Weight& v) const;

  // dimension of V used for moment-graph labels: the coroot span t + C1
  // (affine) or t (finite); the derivation coordinate never meets a label.
  int label_dim_coroot() const { return affine_ ? n_ + 1 : n_; }
  int label_dim_root() const { return affine_ ? n_ + 1 : n_; }
  // coroot label coordinates: [cr..., c_one]; root label: [c_delta, fw...]
  RatVec coroot_label(const Coweight& x) const;
  RatVec root_label(const Weight& v) const;

  void check_ctx(const Weight& w) const;
  void check_ctx(const Coweight& x) const;

 private:
  CartanDatum() = default;

  char letter_;
  int n_;
  bool affine_;
  std::string type_;
  std::vector<std::vector<int>> fin_;  // n x n
  std::vector<std::vector<int>> aff_;  // (n+1) x (n+1)
  std::vector<Rat> sym_;               // d_0..d_n
  std::vector<Int> theta_alpha_;       // theta in simple-root coordinates
  RatVec theta_fw_;                    // theta in fundamental-weight coordinates
  RatVec thetacheck_pair_;             // (lambda : thetacheck) = sum fw[i]*this[i]
  std::vector<RatVec> fin_inv_;        // inverse finite Cartan matrix
  int m_;                              // dual Coxeter number
};

using CartanPtr = std::shared_ptr<const CartanDatum>;

}  // namespace klbm::cartan
