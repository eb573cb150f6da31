#pragma once

#include <algorithm>
#include <array>
#include <stdexcept>
#include <vector>

#include "quintic/bundles.hpp"

namespace quintic {

struct NotMaximal : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline bool is_maximal(const BundlePair& bp, const Triple& t) {
  if (!valid_triple(t)) throw InvalidInput("triple out of range");
  for (int k = t.k + 1; k <= 4; ++k)
    if (bp.e[k - 1] <= bp.e[t.k - 1]) return false;
  for (int j = t.j + 1; j <= 5; ++j)
    if (bp.f[j - 1] <= bp.f[t.j - 1]) return false;
  for (int i = t.i + 1; i <= 5; ++i)
    if (i != t.j && bp.f[i - 1] <= bp.f[t.i - 1]) return false;
  return true;
}

inline std::vector<Triple> maximal_triples(const BundlePair& bp) {
  require_valid(bp);
  std::vector<Triple> out;
  for (const Triple& t : all_triples())
    if (is_maximal(bp, t)) out.push_back(t);
  return out;
}

// Push each index to the end of its block of equal degrees (I avoiding J).
inline Triple maximal_representative(const BundlePair& bp, const Triple& t) {
  if (!valid_triple(t)) throw InvalidInput("triple out of range");
  Triple m = t;
  for (int k = 4; k >= 1; --k)
    if (bp.e[k - 1] == bp.e[t.k - 1]) { m.k = k; break; }
  for (int j = 5; j >= 1; --j)
    if (bp.f[j - 1] == bp.f[t.j - 1]) { m.j = j; break; }
  for (int i = 5; i >= 1; --i)
    if (i != m.j && bp.f[i - 1] == bp.f[t.i - 1]) { m.i = i; break; }
  return m;
}

// Parameters of G killed by the stabilizer condition; valid for any triple.
inline int codim_G_direct(const BundlePair& bp, const Triple& t) {
  int n = 0;
  for (int k = 1; k <= 4; ++k)
    if (k != t.k && bp.e[k - 1] <= bp.e[t.k - 1]) ++n;
  for (int i = 1; i <= 5; ++i) {
    if (i == t.i || i == t.j) continue;
    for (int j : {t.i, t.j})
      if (bp.f[i - 1] <= bp.f[j - 1]) ++n;
  }
  return n;
}

inline int codim_G(const BundlePair& bp, const Triple& t) {
  if (!is_maximal(bp, t)) throw NotMaximal("codim_G formula needs a maximal triple");
  return t.i + t.j + t.k - 4;
}

inline int nu_offset(const BundlePair& bp, const Triple& t) {
  const int I = t.i, J = t.j, K = t.k;
  if (bp.d(I, J, K) > 1) return 1;
  for (int k = 1; k <= 4; ++k)
    if (k != K && bp.d(I, J, k) > 0) return 1;
  for (int x = 1; x <= 5; ++x) {
    if (x == I || x == J) continue;
    if (bp.d(I, x, K) > 0 || bp.d(x, J, K) > 0) return 1;
  }
  return 0;
}

namespace detail {
inline Triple sorted_triple(int a, int b, int k) { return a < b ? Triple{a, b, k} : Triple{b, a, k}; }
}  // namespace detail

// Entries forced to vanish mod u by the (I,J,K) normal form and not already zero for degree reasons.
// Index pairs are unordered (the matrices are alternating); output triples have i < j.
inline std::vector<Triple> accessory_triples(const BundlePair& bp, const Triple& t) {
  if (!valid_triple(t)) throw InvalidInput("triple out of range");
  const int I = t.i, J = t.j, K = t.k;
  std::vector<Triple> out;
  for (int k = 1; k <= 4; ++k)
    if (bp.d(I, J, k) >= 0) out.push_back({I, J, k});
  for (int x = 1; x <= 5; ++x) {
    if (x == I || x == J) continue;
    if (bp.d(I, x, K) >= 0) out.push_back(detail::sorted_triple(I, x, K));
    if (bp.d(x, J, K) >= 0) out.push_back(detail::sorted_triple(x, J, K));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// One coefficient per surviving congruence, plus the second one from a^(K)_IJ = 0 mod u^2.
inline int codim_U_exact(const BundlePair& bp, const Triple& t) {
  return static_cast<int>(accessory_triples(bp, t).size()) + (bp.d(t) >= 1 ? 1 : 0);
}

inline int dimH(int k) {
  int n = 0;
  for (int i = 1; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j)
      if (i + j + k >= 8) ++n;
  return n;
}

struct TripleCount {
  Triple t;
  int codimG = 0, codimG_direct = 0, nu = 0, n_accessory = 0, codimU_exact = 0;
  bool route_n2 = false;        // n >= I+J+K-2
  bool route_n3_nu0 = false;    // n >= I+J+K-3 and nu = 0
  bool route_n3_d1 = false;     // n >= I+J+K-3 and d^(K)_IJ >= 1
  bool pass = false;            // nu + codimG < codimU_exact
  bool route_ok() const { return route_n2 || route_n3_nu0 || route_n3_d1; }
};

struct StratumReport {
  BundlePair bp;
  std::vector<TripleCount> triples;
  std::array<int, 4> dim_h{};
  bool surjective = true;  // d_ij^(k) >= 0 whenever i+j+k >= 8
  bool all_pass() const {
    if (!surjective) return false;
    for (const auto& c : triples)
      if (!c.pass || !c.route_ok() || c.codimG != c.codimG_direct) return false;
    return true;
  }
};

inline TripleCount count_triple(const BundlePair& bp, const Triple& t) {
  TripleCount c;
  c.t = t;
  c.codimG = codim_G(bp, t);
  c.codimG_direct = codim_G_direct(bp, t);
  c.nu = nu_offset(bp, t);
  c.n_accessory = static_cast<int>(accessory_triples(bp, t).size());
  c.codimU_exact = codim_U_exact(bp, t);
  int s = t.i + t.j + t.k;
  c.route_n2 = c.n_accessory >= s - 2;
  c.route_n3_nu0 = c.n_accessory >= s - 3 && c.nu == 0;
  c.route_n3_d1 = c.n_accessory >= s - 3 && bp.d(t) >= 1;
  c.pass = c.nu + c.codimG < c.codimU_exact;
  return c;
}

inline StratumReport counting_verdict(const BundlePair& bp) {
  require_valid(bp);
  if (!theorem15_check(bp).satisfied()) throw InvalidInput("counting_verdict needs a pair satisfying the realizability criterion");
  StratumReport r;
  r.bp = bp;
  for (const Triple& t : maximal_triples(bp)) r.triples.push_back(count_triple(bp, t));
  for (int k = 1; k <= 4; ++k) r.dim_h[k - 1] = dimH(k);
  for (const Triple& t : all_triples())
    if (t.i + t.j + t.k >= 8 && bp.d(t) < 0) r.surjective = false;
  return r;
}

}  // namespace quintic
