#pragma once

#include <algorithm>
#include <array>
#include <numeric>
#include <tuple>
#include <string>
#include <utility>
#include <vector>

#include "quintic/field.hpp"

namespace quintic {

// (i, j, k) with 1 <= i < j <= 5, 1 <= k <= 4.
struct Triple {
  int i = 1, j = 2, k = 1;
  bool operator==(const Triple& o) const { return i == o.i && j == o.j && k == o.k; }
  bool operator<(const Triple& o) const { return std::tie(i, j, k) < std::tie(o.i, o.j, o.k); }
};

inline bool valid_triple(const Triple& t) { return 1 <= t.i && t.i < t.j && t.j <= 5 && 1 <= t.k && t.k <= 4; }

inline std::vector<Triple> all_triples() {
  std::vector<Triple> out;
  for (int i = 1; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j)
      for (int k = 1; k <= 4; ++k) out.push_back({i, j, k});
  return out;
}

struct BundlePair {
  int g = 0;
  std::array<int, 4> e{};
  std::array<int, 5> f{};

  int level() const { return g + 4; }
  // d_ij^(k), 1-based, symmetric in i, j
  int d(int i, int j, int k) const { return f[i - 1] + f[j - 1] + e[k - 1] - (g + 4); }
  int d(const Triple& t) const { return d(t.i, t.j, t.k); }
  bool operator==(const BundlePair& o) const { return g == o.g && e == o.e && f == o.f; }
  bool operator<(const BundlePair& o) const { return std::tie(g, e, f) < std::tie(o.g, o.e, o.f); }
};

// Structural problems with a pair; empty when the pair is an honest cover datum.
inline std::vector<std::string> bundle_warnings(const BundlePair& bp) {
  std::vector<std::string> w;
  if (!std::is_sorted(bp.e.begin(), bp.e.end())) w.push_back("e is not sorted ascending");
  if (!std::is_sorted(bp.f.begin(), bp.f.end())) w.push_back("f is not sorted ascending");
  if (std::accumulate(bp.e.begin(), bp.e.end(), 0) != bp.g + 4) w.push_back("sum of e differs from g+4");
  if (std::accumulate(bp.f.begin(), bp.f.end(), 0) != 2 * (bp.g + 4)) w.push_back("sum of f differs from 2(g+4)");
  if (bp.e[0] < 1) w.push_back("e1 < 1 violates Tschirnhausen positivity");
  if (bp.g < 0) w.push_back("negative genus");
  return w;
}

// Degree bookkeeping only needs sortedness and the two sum identities.
inline bool degree_consistent(const BundlePair& bp) {
  return std::is_sorted(bp.e.begin(), bp.e.end()) && std::is_sorted(bp.f.begin(), bp.f.end()) &&
         std::accumulate(bp.e.begin(), bp.e.end(), 0) == bp.g + 4 &&
         std::accumulate(bp.f.begin(), bp.f.end(), 0) == 2 * (bp.g + 4);
}

inline void require_valid(const BundlePair& bp) {
  auto w = bundle_warnings(bp);
  if (!w.empty()) throw InvalidInput("invalid bundle pair: " + w.front());
}

struct DegreeMatrix {
  std::array<std::array<std::array<int, 5>, 5>, 4> d{};
  int at(int i, int j, int k) const { return d[k - 1][i - 1][j - 1]; }
  int total() const {
    int s = 0;
    for (const Triple& t : all_triples()) s += at(t.i, t.j, t.k);
    return s;
  }
};

inline DegreeMatrix degree_matrix(const BundlePair& bp) {
  DegreeMatrix m;
  for (int k = 1; k <= 4; ++k)
    for (int i = 1; i <= 5; ++i)
      for (int j = 1; j <= 5; ++j) m.d[k - 1][i - 1][j - 1] = bp.d(i, j, k);
  return m;
}

struct Cohomology {
  long h0 = 0, h1 = 0;
  bool operator==(const Cohomology& o) const { return h0 == o.h0 && h1 == o.h1; }
};

inline Cohomology split_cohomology(const std::vector<int>& twists) {
  Cohomology c;
  for (int n : twists) {
    c.h0 += std::max(0, n + 1);
    c.h1 += std::max(0, -n - 1);
  }
  return c;
}

enum class Theorem15Status { Satisfied, FailsLinear, FailsFin };

inline const char* to_string(Theorem15Status s) {
  switch (s) {
    case Theorem15Status::Satisfied: return "Satisfied";
    case Theorem15Status::FailsLinear: return "FailsLinear";
    case Theorem15Status::FailsFin: return "FailsFin";
  }
  return "?";
}

struct Theorem15Verdict {
  Theorem15Status status = Theorem15Status::Satisfied;
  std::vector<Triple> violated;  // triples with i+j+k = 8 and negative degree
  bool fin_active = false;       // d15^(1), d24^(1), d12^(4) all negative
  int d25_1 = 0;
  bool satisfied() const { return status == Theorem15Status::Satisfied; }
};

inline std::vector<Triple> linear_condition_triples() {
  std::vector<Triple> out;
  for (const Triple& t : all_triples())
    if (t.i + t.j + t.k == 8) out.push_back(t);
  return out;
}

inline Theorem15Verdict theorem15_check(const BundlePair& bp) {
  Theorem15Verdict v;
  for (const Triple& t : linear_condition_triples())
    if (bp.d(t) < 0) v.violated.push_back(t);
  v.fin_active = bp.d(1, 5, 1) < 0 && bp.d(2, 4, 1) < 0 && bp.d(1, 2, 4) < 0;
  v.d25_1 = bp.d(2, 5, 1);
  if (!v.violated.empty())
    v.status = Theorem15Status::FailsLinear;
  else if (v.fin_active && v.d25_1 != 0)
    v.status = Theorem15Status::FailsFin;
  return v;
}

// e_{k+l} <= e_k + e_l for all k + l <= n.
template <size_t N>
bool subadditive(const std::array<int, N>& e) {
  for (size_t k = 1; k <= N; ++k)
    for (size_t l = k; k + l <= N; ++l)
      if (e[k + l - 1] > e[k - 1] + e[l - 1]) return false;
  return true;
}

inline bool realizable_scrollar(const std::array<int, 4>& e, int g) {
  if (!std::is_sorted(e.begin(), e.end())) throw InvalidInput("e must be sorted ascending");
  if (e[0] < 1) throw InvalidInput("e1 must be at least 1");
  if (std::accumulate(e.begin(), e.end(), 0) != g + 4) throw InvalidInput("sum of e must equal g+4");
  return subadditive(e);
}

inline std::vector<int> e_differences(const BundlePair& bp) {
  std::vector<int> v;
  for (int a : bp.e)
    for (int b : bp.e) v.push_back(a - b);
  return v;
}

inline std::vector<int> f_differences(const BundlePair& bp) {
  std::vector<int> v;
  for (int a : bp.f)
    for (int b : bp.f) v.push_back(a - b);
  return v;
}

inline std::vector<int> section_twists(const BundlePair& bp) {
  std::vector<int> v;
  for (const Triple& t : all_triples()) v.push_back(bp.d(t));
  return v;
}

inline long codim_HEF_unchecked(const BundlePair& bp) {
  return split_cohomology(e_differences(bp)).h1 + split_cohomology(f_differences(bp)).h1 -
         split_cohomology(section_twists(bp)).h1;
}

inline long codim_HEF(const BundlePair& bp) {
  require_valid(bp);
  if (!theorem15_check(bp).satisfied()) throw InvalidInput("codim_HEF requires a pair satisfying the realizability criterion");
  return codim_HEF_unchecked(bp);
}

// Dimension of the stratum: h0 of the section space minus dim G.
inline long dim_HEF(const BundlePair& bp) {
  return split_cohomology(section_twists(bp)).h0 - split_cohomology(e_differences(bp)).h0 -
         split_cohomology(f_differences(bp)).h0 + 1;
}

inline long hurwitz_dimension(int g) { return 2L * g + 8; }

}  // namespace quintic
