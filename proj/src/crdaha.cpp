#include <klbm/crdaha.hpp>

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace klbm::crdaha {

namespace {

long mod(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

long Multipartition::size() const {
  long s = 0;
  for (const auto& p : parts) s += std::accumulate(p.begin(), p.end(), 0L);
  return s;
}

std::string Multipartition::str() const {
  std::ostringstream os;
  for (size_t p = 0; p < parts.size(); ++p) {
    if (p) os << "|";
    for (size_t i = 0; i < parts[p].size(); ++i) {
      if (i) os << ",";
      os << parts[p][i];
    }
  }
  return os.str();
}

Multipartition parse_multipartition(const std::string& s) {
  Multipartition m;
  std::string comp;
  std::stringstream ss(s);
  // split on '|'; trailing separator yields a final empty component
  std::vector<std::string> pieces;
  std::string piece;
  for (char c : s) {
    if (c == '|') {
      pieces.push_back(piece);
      piece.clear();
    } else {
      piece += c;
    }
  }
  pieces.push_back(piece);
  for (const auto& ps : pieces) {
    Partition part;
    std::stringstream ps2(ps);
    std::string tok;
    while (std::getline(ps2, tok, ',')) {
      if (tok.empty()) continue;
      long v = std::stol(tok);
      if (v <= 0) throw InvalidInput("partition parts must be positive");
      part.push_back(v);
    }
    for (size_t i = 1; i < part.size(); ++i)
      if (part[i] > part[i - 1]) throw InvalidInput("partition parts must be weakly decreasing");
    m.parts.push_back(std::move(part));
  }
  return m;
}

bool in_P_nu(const Multipartition& lam, const std::vector<long>& nu) {
  if (lam.parts.size() != nu.size()) return false;
  for (size_t p = 0; p < nu.size(); ++p)
    if (static_cast<long>(lam.parts[p].size()) > nu[p]) return false;
  return true;
}

std::vector<long> embed(const Multipartition& lam, const std::vector<long>& nu) {
  if (!in_P_nu(lam, nu)) throw InvalidInput("embed: multipartition not in P(nu,n)");
  std::vector<long> out;
  for (size_t p = 0; p < nu.size(); ++p) {
    for (long v : lam.parts[p]) out.push_back(v);
    for (long k = static_cast<long>(lam.parts[p].size()); k < nu[p]; ++k) out.push_back(0);
  }
  return out;
}

std::vector<long> rho_nu(const std::vector<long>& nu) {
  std::vector<long> out;
  for (long np : nu)
    for (long v = np; v >= 1; --v) out.push_back(v);
  return out;
}

std::vector<long> node_count(const std::vector<long>& lam, const std::vector<long>& pi, int e) {
  if (e < 1) throw InvalidInput("node_count: e must be positive");
  if (lam.size() != pi.size()) throw InvalidInput("node_count: length mismatch");
  std::vector<long> n(e, 0);
  for (size_t x = 1; x <= lam.size(); ++x)
    for (long y = 1; y <= lam[x - 1]; ++y)
      ++n[mod(y - static_cast<long>(x) + pi[x - 1] - 1, e)];
  return n;
}

std::vector<long> node_count_nu(const Multipartition& lam, const std::vector<long>& nu, int e) {
  if (e < 1) throw InvalidInput("node_count_nu: e must be positive");
  if (lam.parts.size() != nu.size()) throw InvalidInput("node_count_nu: level mismatch");
  std::vector<long> n(e, 0);
  for (size_t p = 0; p < lam.parts.size(); ++p)
    for (size_t x = 1; x <= lam.parts[p].size(); ++x)
      for (long y = 1; y <= lam.parts[p][x - 1]; ++y)
        ++n[mod(y - static_cast<long>(x) + nu[p], e)];
  return n;
}

std::vector<long> node_count_nu_embedded(const std::vector<long>& lam,
                                         const std::vector<long>& nu, int e) {
  long m = std::accumulate(nu.begin(), nu.end(), 0L);
  if (static_cast<long>(lam.size()) != m)
    throw InvalidInput("node_count_nu_embedded: tuple length is not |nu|");
  std::vector<long> n(e, 0);
  size_t j = 0;
  for (size_t p = 0; p < nu.size(); ++p)
    for (long x = 1; x <= nu[p]; ++x, ++j)
      for (long y = 1; y <= lam[j]; ++y) ++n[mod(y - x + nu[p], e)];
  return n;
}

std::string BlockKey::str() const {
  std::ostringstream os;
  os << "e=" << e << " nu=(";
  for (size_t i = 0; i < nu.size(); ++i) os << (i ? "," : "") << nu[i];
  os << ") n=(";
  for (size_t i = 0; i < n.size(); ++i) os << (i ? "," : "") << n[i];
  os << ") a=" << a;
  return os.str();
}

BlockKey block_of(const Multipartition& lam, const std::vector<long>& nu, int e) {
  BlockKey k;
  k.e = e;
  k.nu = nu;
  k.n = node_count_nu(lam, nu, e);
  k.a = k.n[0];
  for (int i = 1; i < e; ++i) k.diffs.push_back(k.n[i] - k.a);
  return k;
}

bool nu_dominant(const std::vector<long>& lam, const std::vector<long>& nu) {
  size_t j = 0;
  for (long np : nu) {
    for (long x = 1; x < np; ++x)
      if (lam[j + x - 1] < lam[j + x]) return false;
    j += np;
  }
  return true;
}

static void enumerate_dominant(const std::vector<long>& nu, long n,
                               const std::function<void(const std::vector<long>&)>& cb) {
  long m = std::accumulate(nu.begin(), nu.end(), 0L);
  if (n > 64) throw InvalidInput("lambda_set: enumeration bound exceeded (n > 64)");
  std::vector<long> lam(m, 0);
  // fill block by block, weakly decreasing inside each block
  std::function<void(size_t, size_t, long, long)> rec = [&](size_t p, size_t pos, long rem,
                                                            long cap) {
    if (p == nu.size()) {
      if (rem == 0) cb(lam);
      return;
    }
    size_t block_len = static_cast<size_t>(nu[p]);
    if (pos == block_len) {
      rec(p + 1, 0, rem, -1);
      return;
    }
    long hi = (pos == 0) ? rem : std::min<long>(rem, cap);
    for (long v = hi; v >= 0; --v) {
      lam[std::accumulate(nu.begin(), nu.begin() + p, 0L) + pos] = v;
      rec(p, pos + 1, rem - v, v);
    }
  };
  rec(0, 0, n, -1);
}

std::vector<std::vector<long>> lambda_set(const std::vector<long>& nu, int e,
                                          const std::vector<long>& diffs, long n) {
  if (static_cast<int>(diffs.size()) != e - 1)
    throw InvalidInput("lambda_set: diffs must have e-1 entries");
  std::vector<std::vector<long>> out;
  enumerate_dominant(nu, n, [&](const std::vector<long>& lam) {
    auto nn = node_count_nu_embedded(lam, nu, e);
    for (int i = 1; i < e; ++i)
      if (nn[i] - nn[0] != diffs[i - 1]) return;
    out.push_back(lam);
  });
  return out;
}

std::vector<std::vector<long>> lambda_set_a(const std::vector<long>& nu, int e,
                                            const std::vector<long>& diffs, long n, long a) {
  std::vector<std::vector<long>> out;
  for (auto& lam : lambda_set(nu, e, diffs, n))
    if (node_count_nu_embedded(lam, nu, e)[0] == a) out.push_back(lam);
  return out;
}

KInvariants k_invariants(const std::vector<long>& lam, const std::vector<long>& nu, int e) {
  long m = std::accumulate(nu.begin(), nu.end(), 0L);
  if (static_cast<long>(lam.size()) != m)
    throw InvalidInput("k_invariants: tuple length is not |nu|");
  if (!nu_dominant(lam, nu)) throw InvalidInput("k_invariants: lambda is not nu-dominant");
  KInvariants out;
  std::vector<long> minus_rho(m);
  for (long x = 1; x <= m; ++x) minus_rho[x - 1] = x;  // -rho = (1,2,...,m)
  std::vector<long> rn = rho_nu(nu);
  out.m_i = node_count(rn, minus_rho, e);
  std::vector<long> sum(m);
  for (long j = 0; j < m; ++j) sum[j] = lam[j] + rn[j];
  out.k_i = node_count(sum, minus_rho, e);
  // Lemma A.3(a), asserted on every call
  auto nnu = node_count_nu_embedded(lam, nu, e);
  for (int i = 0; i < e; ++i)
    if (out.k_i[i] != out.m_i[i] + nnu[i])
      throw std::logic_error("k_invariants: Lemma A.3(a) failed; conventions drifted");
  out.k.resize(e);
  for (int i = 0; i + 1 < e; ++i) out.k[i] = out.k_i[i] - out.k_i[i + 1];
  out.k[e - 1] = out.k_i[e - 1] - out.k_i[0] + m;
  return out;
}

StabilizerType stabilizer_type(const std::vector<long>& lam, const std::vector<long>& nu,
                               int e) {
  long m = std::accumulate(nu.begin(), nu.end(), 0L);
  KInvariants ki = k_invariants(lam, nu, e);
  StabilizerType st;
  st.composition = ki.k;
  for (long c : ki.k)
    if (c < 0) throw std::logic_error("stabilizer_type: k(lambda) has a negative part");
  std::vector<bool> cut(m + 1, false);
  long acc = 0;
  for (long c : ki.k) {
    acc += c;
    if (acc >= 1 && acc <= m - 1) cut[acc] = true;
  }
  for (long i = 1; i <= m - 1; ++i)
    if (!cut[i]) st.finite_generators.push_back(static_cast<int>(i));
  return st;
}

std::vector<Multipartition> all_multipartitions(int ell, long n) {
  // partitions of each size
  std::vector<std::vector<Partition>> parts_of(n + 1);
  std::function<void(long, long, Partition&)> rec = [&](long rem, long cap, Partition& cur) {
    if (rem == 0) {
      parts_of[std::accumulate(cur.begin(), cur.end(), 0L)].push_back(cur);
      return;
    }
    for (long v = std::min(rem, cap); v >= 1; --v) {
      cur.push_back(v);
      rec(rem - v, v, cur);
      cur.pop_back();
    }
  };
  for (long k = 0; k <= n; ++k) {
    Partition cur;
    if (k == 0) parts_of[0].push_back({});
    else rec(k, k, cur);
  }
  std::vector<Multipartition> out;
  std::function<void(int, long, Multipartition&)> build = [&](int p, long rem,
                                                              Multipartition& mp) {
    if (p == ell) {
      if (rem == 0) out.push_back(mp);
      return;
    }
    for (long k = 0; k <= rem; ++k)
      for (const auto& part : parts_of[k]) {
        mp.parts.push_back(part);
        build(p + 1, rem - k, mp);
        mp.parts.pop_back();
      }
  };
  Multipartition mp;
  build(0, n, mp);
  return out;
}

}  // namespace klbm::crdaha
