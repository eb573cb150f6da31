#pragma once

// Independent reference computations used to cross-check the library.

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <vector>

#include "quintic/polytopes.hpp"
#include "quintic/sections.hpp"

namespace quintic::testing {

// Polynomials in x1..x4 with binary-form coefficients.
template <class F>
using XPoly = std::map<std::array<int, 4>, BinaryForm<F>>;

template <class F>
void xpoly_add(XPoly<F>& p, const std::array<int, 4>& mono, const BinaryForm<F>& c) {
  if (c.is_zero()) return;
  auto it = p.find(mono);
  if (it == p.end()) {
    p.emplace(mono, c);
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) p.erase(it);
}

template <class F>
XPoly<F> xpoly_mul(const XPoly<F>& a, const XPoly<F>& b) {
  XPoly<F> r;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      std::array<int, 4> m{};
      for (int i = 0; i < 4; ++i) m[i] = ma[i] + mb[i];
      xpoly_add(r, m, ca * cb);
    }
  return r;
}

// Entry (i,j) of A(x) = sum_k x_k A_k as a linear polynomial.
template <class F>
XPoly<F> entry_poly(const Section<F>& sec, int i, int j) {
  XPoly<F> p;
  for (int k = 1; k <= 4; ++k) {
    std::array<int, 4> m{};
    m[k - 1] = 1;
    xpoly_add(p, m, sec.a(k, i, j));
  }
  return p;
}

// Leibniz expansion of the 4x4 principal minor omitting row/column l.
template <class F>
XPoly<F> leibniz_minor_det(const Section<F>& sec, int l) {
  std::array<int, 4> idx{};
  int n = 0;
  for (int i = 1; i <= 5; ++i)
    if (i != l) idx[n++] = i;
  std::array<int, 4> perm{0, 1, 2, 3};
  XPoly<F> det;
  do {
    int inversions = 0;
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b)
        if (perm[a] > perm[b]) ++inversions;
    XPoly<F> term;
    term[{0, 0, 0, 0}] = BinaryForm<F>::constant(sec.field, sec.field.one());
    bool zero = false;
    for (int r = 0; r < 4 && !zero; ++r) {
      if (r == perm[r]) {
        zero = true;  // alternating: zero diagonal
        break;
      }
      term = xpoly_mul(term, entry_poly(sec, idx[r], idx[perm[r]]));
      zero = term.empty();
    }
    if (zero) continue;
    for (const auto& [m, c] : term) xpoly_add(det, m, inversions % 2 ? -c : c);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

template <class F>
XPoly<F> quadric_poly(const PfaffianSystem<F>& ps, int l) {
  XPoly<F> q;
  for (int k = 0; k < 4; ++k)
    for (int kk = k; kk < 4; ++kk) {
      std::array<int, 4> m{};
      m[k] += 1;
      m[kk] += 1;
      xpoly_add(q, m, ps.q[l - 1][quad_index(k, kk)]);
    }
  return q;
}

// ---- exact simplex (Bland's rule), independent of the vertex enumerator ----

struct LpResult {
  enum Status { Optimal, Infeasible, Unbounded } status = Infeasible;
  Rat value;
  RationalPoint x;
};

// maximize c.x subject to the closed constraints of `region`, x free.
inline LpResult lp_maximize(const LinearRegion& region, const std::vector<Rat>& c) {
  LinearRegion R = region.closure();
  const int n = R.dim;
  const int m = static_cast<int>(R.cons.size());
  int nle = 0;
  for (const auto& k : R.cons)
    if (k.rel != Rel::Eq) ++nle;
  // columns: x+ (n), x- (n), slacks (nle), artificials (m)
  const int cols = 2 * n + nle + m;
  std::vector<std::vector<Rat>> T(m, std::vector<Rat>(cols + 1, Rat(0)));
  std::vector<int> basis(m);
  int s = 0;
  for (int r = 0; r < m; ++r) {
    const auto& k = R.cons[r];
    for (int j = 0; j < n; ++j) {
      T[r][j] = k.a[j];
      T[r][n + j] = -k.a[j];
    }
    if (k.rel != Rel::Eq) T[r][2 * n + s++] = 1;
    T[r][cols] = k.b;
    if (T[r][cols] < 0)
      for (auto& v : T[r]) v = -v;
    T[r][2 * n + nle + r] = 1;
    basis[r] = 2 * n + nle + r;
  }
  auto pivot = [&](int pr, int pc) {
    Rat d = T[pr][pc];
    for (auto& v : T[pr]) v /= d;
    for (int r = 0; r < m; ++r) {
      if (r == pr || sgn(T[r][pc]) == 0) continue;
      Rat f = T[r][pc];
      for (int j = 0; j <= cols; ++j) T[r][j] -= f * T[pr][j];
    }
    basis[pr] = pc;
  };
  // Runs the simplex on objective w (maximize), restricted to allowed columns; false if unbounded.
  auto run = [&](const std::vector<Rat>& w, int allowed) {
    for (;;) {
      int enter = -1;
      for (int j = 0; j < allowed && enter < 0; ++j) {
        if (std::find(basis.begin(), basis.end(), j) != basis.end()) continue;
        Rat red = w[j];
        for (int r = 0; r < m; ++r) red -= w[basis[r]] * T[r][j];
        if (red > 0) enter = j;
      }
      if (enter < 0) return true;
      int leave = -1;
      Rat best;
      for (int r = 0; r < m; ++r) {
        if (T[r][enter] <= 0) continue;
        Rat ratio = T[r][cols] / T[r][enter];
        if (leave < 0 || ratio < best || (ratio == best && basis[r] < basis[leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  };
  std::vector<Rat> w1(cols, Rat(0));
  for (int r = 0; r < m; ++r) w1[2 * n + nle + r] = -1;
  run(w1, cols);
  LpResult res;
  for (int r = 0; r < m; ++r)
    if (basis[r] >= 2 * n + nle && sgn(T[r][cols]) != 0) return res;  // infeasible
  // drive remaining artificials out of the basis where possible
  for (int r = 0; r < m; ++r) {
    if (basis[r] < 2 * n + nle) continue;
    for (int j = 0; j < 2 * n + nle; ++j)
      if (sgn(T[r][j]) != 0) {
        pivot(r, j);
        break;
      }
  }
  std::vector<Rat> w2(cols, Rat(0));
  for (int j = 0; j < n; ++j) {
    w2[j] = c[j];
    w2[n + j] = -c[j];
  }
  if (!run(w2, 2 * n + nle)) {
    res.status = LpResult::Unbounded;
    return res;
  }
  res.status = LpResult::Optimal;
  res.x.assign(n, Rat(0));
  for (int r = 0; r < m; ++r) {
    int b = basis[r];
    if (b < n)
      res.x[b] += T[r][cols];
    else if (b < 2 * n)
      res.x[b - n] -= T[r][cols];
  }
  res.value = 0;
  for (int j = 0; j < n; ++j) res.value += c[j] * res.x[j];
  return res;
}

}  // namespace quintic::testing
