#pragma once

#include <klbm/rational.hpp>

#include <string>
#include <vector>

namespace klbm::crdaha {

// Weakly decreasing positive parts.
using Partition = std::vector<long>;

struct Multipartition {
  std::vector<Partition> parts;  // ell components

  long size() const;
  int levels() const { return static_cast<int>(parts.size()); }
  std::string str() const;  // "2,1|1|"
  bool operator==(const Multipartition& o) const { return parts == o.parts; }
  bool operator<(const Multipartition& o) const { return parts < o.parts; }
};

// "2,1|1|" -> (  (2,1), (1), ()  )
Multipartition parse_multipartition(const std::string& s);

// l(lambda_p) <= nu_p for all p
bool in_P_nu(const Multipartition& lam, const std::vector<long>& nu);

// The inclusion P(nu,n) in N^m: concatenate each partition padded with zeros
// to length nu_p.
std::vector<long> embed(const Multipartition& lam, const std::vector<long>& nu);

// rho^nu = (nu_1, nu_1-1, ..., 1, nu_2, nu_2-1, ..., 1, ..., nu_ell, ..., 1)
std::vector<long> rho_nu(const std::vector<long>& nu);

// (i,pi)-nodes modulo e of a tuple in N^m: cells (x,y), y <= lam_x, with
// y - x + pi_x = i+1 (mod e).  Returns (n_0,...,n_{e-1}).
std::vector<long> node_count(const std::vector<long>& lam, const std::vector<long>& pi, int e);

// (i,nu)-nodes of a multipartition: cells (x,y,p) with y - x + nu_p = i (mod e).
// Note the convention differs from node_count by the "+1"; both are
// implemented verbatim.
std::vector<long> node_count_nu(const Multipartition& lam, const std::vector<long>& nu, int e);

// same for a tuple already embedded in N^m (rows are local to each nu-block)
std::vector<long> node_count_nu_embedded(const std::vector<long>& lam,
                                         const std::vector<long>& nu, int e);

// Block datum of Appendix A: (mu, a) with a = n_0 and mu recorded through the
// difference vector (n_i - a)_{i=1..e-1} together with nu.
struct BlockKey {
  int e = 0;
  std::vector<long> nu;
  std::vector<long> n;       // full residue vector
  long a = 0;                // n_0
  std::vector<long> diffs;   // n_i - a for i = 1..e-1

  bool operator==(const BlockKey& o) const {
    return e == o.e && nu == o.nu && n == o.n;
  }
  std::string str() const;
};

BlockKey block_of(const Multipartition& lam, const std::vector<long>& nu, int e);

// nu-dominance of a tuple in N^m: weakly decreasing inside every nu-block
bool nu_dominant(const std::vector<long>& lam, const std::vector<long>& nu);

// Lambda^nu_mu(n): all nu-dominant tuples lambda in N^m with |lambda| = n and
// (n_i^nu(lambda) - n_0^nu(lambda))_{i=1..e-1} equal to diffs.
std::vector<std::vector<long>> lambda_set(const std::vector<long>& nu, int e,
                                          const std::vector<long>& diffs, long n);
// refinement by a = n_0 (form 1.3bis)
std::vector<std::vector<long>> lambda_set_a(const std::vector<long>& nu, int e,
                                            const std::vector<long>& diffs, long n, long a);

struct KInvariants {
  std::vector<long> m_i;  // n_i(rho^nu, -rho, e)
  std::vector<long> k_i;  // n_i(lambda + rho^nu, -rho, e)
  std::vector<long> k;    // (k_0-k_1, ..., k_{e-1}-k_0+m)
};

// Computes the linkage invariants; the identity k_i = m_i + n_i^nu(lambda)
// is asserted on every call.
KInvariants k_invariants(const std::vector<long>& lam, const std::vector<long>& nu, int e);

struct StabilizerType {
  std::vector<long> composition;       // k(lambda), e parts summing to m
  std::vector<int> finite_generators;  // {1..m-1} minus the cut points
};

StabilizerType stabilizer_type(const std::vector<long>& lam, const std::vector<long>& nu,
                               int e);

// all multipartitions of n with ell components (enumeration helper)
std::vector<Multipartition> all_multipartitions(int ell, long n);

}  // namespace klbm::crdaha
