#pragma once

#include <klbm/cartan.hpp>

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace klbm::weyl {

using cartan::CartanDatum;
using cartan::CartanPtr;
using cartan::Coweight;
using cartan::Weight;

class WeylGroup;

// Group element in canonical form: the ShortLex-minimal reduced word over
// the generator indices.  Two elements are equal iff their canonical words
// are equal.
class WeylElt {
 public:
  WeylElt() = default;
  WeylElt(const WeylGroup* g, std::vector<uint8_t> w) : g_(g), w_(std::move(w)) {}

  int length() const { return static_cast<int>(w_.size()); }
  bool is_identity() const { return w_.empty(); }
  const std::vector<uint8_t>& word() const { return w_; }
  const WeylGroup* group() const { return g_; }

  std::string word_str() const;  // comma-separated indices, "" for e

  bool operator==(const WeylElt& o) const { return g_ == o.g_ && w_ == o.w_; }
  bool operator!=(const WeylElt& o) const { return !(*this == o); }
  // (length, lex) order; also the deterministic tie-break used everywhere
  bool operator<(const WeylElt& o) const {
    if (w_.size() != o.w_.size()) return w_.size() < o.w_.size();
    return w_ < o.w_;
  }

 private:
  const WeylGroup* g_ = nullptr;
  std::vector<uint8_t> w_;
};

// Proper subset of the simple reflections (a parabolic type).
struct ParabolicType {
  std::vector<int> gens;  // sorted, unique

  ParabolicType() = default;
  ParabolicType(std::initializer_list<int> g);
  explicit ParabolicType(std::vector<int> g);
  static ParabolicType parse(const std::string& csv);  // "1,2", "" = empty

  bool contains(int i) const;
  bool empty() const { return gens.empty(); }
  std::string str() const;
  bool operator<(const ParabolicType& o) const { return gens < o.gens; }
  bool operator==(const ParabolicType& o) const { return gens == o.gens; }
};

// Truncated poset ^wI^nu_{mu,sign}.  Sign - carries the Bruhat order, sign +
// the opposite Bruhat order; in both cases the member set is cut by x <= w
// in the Bruhat order (which is x >= w in the + order).
struct TruncatedPoset {
  const WeylGroup* group;
  ParabolicType mu, nu;
  int sign;  // +1 or -1
  WeylElt w;
  std::vector<WeylElt> elems;           // sorted by (length, lex)
  std::vector<std::vector<bool>> leq;   // leq[i][j]: elems[i] <= elems[j] in the poset order

  int index_of(const WeylElt& x) const;  // -1 if absent
};

class WeylGroup {
 public:
  static std::shared_ptr<const WeylGroup> make(const std::string& type);
  static std::shared_ptr<const WeylGroup> make(CartanPtr datum);

  const CartanPtr& datum() const { return datum_; }
  bool affine() const { return datum_->affine(); }
  std::vector<int> gens() const { return datum_->gens(); }

  WeylElt identity() const { return WeylElt(this, {}); }
  WeylElt generator(int i) const;
  WeylElt normalize(const std::vector<int>& word) const;
  WeylElt parse(const std::string& csv) const;

  WeylElt multiply(const WeylElt& a, const WeylElt& b) const;
  WeylElt multiply_gen_right(const WeylElt& a, int i) const;
  WeylElt multiply_gen_left(int i, const WeylElt& a) const;
  WeylElt inverse(const WeylElt& a) const;

  bool left_descent(const WeylElt& a, int i) const;   // l(s_i a) < l(a)
  bool right_descent(const WeylElt& a, int i) const;  // l(a s_i) < l(a)

  bool bruhat_leq(const WeylElt& x, const WeylElt& y) const;

  // weight/coweight action and the dot action
  Weight act(const WeylElt& a, const Weight& v) const;
  Coweight act(const WeylElt& a, const Coweight& v) const;
  Weight dot_action(const WeylElt& a, const Weight& lambda) const;

  // ---- parabolic machinery ----
  void check_parabolic(const ParabolicType& mu) const;
  // finite enumeration of W_mu; InvalidInput beyond the cap
  const std::vector<WeylElt>& parabolic_subgroup(const ParabolicType& mu,
                                                 size_t cap = 200000) const;
  WeylElt longest_element(const ParabolicType& mu) const;
  WeylElt coset_min(const WeylElt& x, const ParabolicType& mu) const;
  WeylElt coset_max(const WeylElt& x, const ParabolicType& mu) const;
  bool is_min_rep(const WeylElt& x, const ParabolicType& mu) const;
  bool is_max_rep(const WeylElt& x, const ParabolicType& mu) const;

  // positive roots of W_mu (the inversion set of w_mu)
  std::vector<Weight> parabolic_positive_roots(const ParabolicType& mu) const;

  // all elements of length <= len
  std::vector<WeylElt> ball(int len) const;
  // Bruhat ideal {y : y <= w}, sorted (length, lex)
  std::vector<WeylElt> bruhat_ideal(const WeylElt& w) const;

  // membership in I^nu_{mu,sign} via the Appendix C combinatorial description
  bool in_truncation_set(const WeylElt& x, const ParabolicType& mu,
                         const ParabolicType& nu, int sign) const;
  TruncatedPoset truncated_poset(const ParabolicType& mu, const ParabolicType& nu,
                                 int sign, const WeylElt& w) const;

  // x in I^nu_{mu,-sign} -> w_nu x w_mu in I^nu_{mu,sign}
  WeylElt bijection_pm(const WeylElt& x, const ParabolicType& mu,
                       const ParabolicType& nu, int target_sign) const;

  struct TwoSides {
    bool lhs, rhs;
    bool agree() const { return lhs == rhs; }
  };
  // Both sides of Appendix C Lemma (a)-(d), evaluated independently: the
  // left side through the root-dominance characterization, the right side
  // through coset-representative tests.  Variant c takes the sign instance.
  TwoSides appendix_c_membership(const WeylElt& x, const ParabolicType& mu,
                                 const ParabolicType& nu, char variant,
                                 int sign = +1) const;

 private:
  explicit WeylGroup(CartanPtr datum) : datum_(std::move(datum)) {}

  bool root_negative_after(const WeylElt& x, int i, bool inverse_side) const;

  CartanPtr datum_;
  // Bruhat memo; read-mostly.  Contract: concurrent readers with serialized
  // writers, or confine a group instance to one worker.
  mutable std::map<std::pair<std::vector<uint8_t>, std::vector<uint8_t>>, bool> bruhat_memo_;
  mutable std::map<std::vector<int>, std::vector<WeylElt>> parabolic_memo_;
};

using GroupPtr = std::shared_ptr<const WeylGroup>;

}  // namespace klbm::weyl
