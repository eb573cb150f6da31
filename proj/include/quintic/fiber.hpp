#pragma once

#include <array>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "quintic/linalg.hpp"
#include "quintic/sections.hpp"
#include "quintic/upoly.hpp"

namespace quintic {

template <class F>
using Vec4 = std::array<typename F::Elem, 4>;

template <class F>
using Quadrics = std::array<std::array<typename F::Elem, 10>, 5>;

namespace detail {

struct MonomialTables {
  std::array<std::array<int, 2>, 10> quad{};
  std::array<std::array<int, 3>, 20> cubic{};
  int cubic_index[4][4][4]{};
  int lin_quad[4][10]{};  // cubic index of x_i * quad monomial

  MonomialTables() {
    int n = 0;
    for (int k = 0; k < 4; ++k)
      for (int l = k; l < 4; ++l) quad[n++] = {k, l};
    n = 0;
    for (int a = 0; a < 4; ++a)
      for (int b = a; b < 4; ++b)
        for (int c = b; c < 4; ++c) {
          cubic[n] = {a, b, c};
          int idx[3] = {a, b, c};
          // every permutation maps to the same slot
          for (int x = 0; x < 3; ++x)
            for (int y = 0; y < 3; ++y)
              for (int z = 0; z < 3; ++z)
                if (x != y && y != z && x != z) cubic_index[idx[x]][idx[y]][idx[z]] = n;
          ++n;
        }
    for (int i = 0; i < 4; ++i)
      for (int q = 0; q < 10; ++q) lin_quad[i][q] = cubic_index[i][quad[q][0]][quad[q][1]];
  }
};

inline const MonomialTables& monomials() {
  static const MonomialTables t;
  return t;
}

}  // namespace detail

template <class F>
typename F::Elem eval_quadric(const F& K, const std::array<typename F::Elem, 10>& q, const Vec4<F>& x) {
  const auto& T = detail::monomials();
  typename F::Elem r = K.zero();
  for (int m = 0; m < 10; ++m)
    if (!K.is_zero(q[m])) r = r + q[m] * x[T.quad[m][0]] * x[T.quad[m][1]];
  return r;
}

// d/dx_j of a quadric at x
template <class F>
typename F::Elem quadric_partial(const F& K, const std::array<typename F::Elem, 10>& q, const Vec4<F>& x, int j) {
  const auto& T = detail::monomials();
  typename F::Elem r = K.zero();
  for (int m = 0; m < 10; ++m) {
    int a = T.quad[m][0], b = T.quad[m][1];
    if (a == j && b == j)
      r = r + (q[m] + q[m]) * x[j];
    else if (a == j)
      r = r + q[m] * x[b];
    else if (b == j)
      r = r + q[m] * x[a];
  }
  return r;
}

// First-order terms in u of the fiber quadrics when A = A0 + u A1 + O(u^2).
template <class F>
Quadrics<F> quadrics_u_derivative(const ConstQuad<F>& A0, const ConstQuad<F>& A1) {
  const F& K = A0.field;
  Quadrics<F> out;
  for (auto& row : out) row.fill(K.zero());
  using E = typename F::Elem;
  using Pair = std::pair<E, E>;
  for (int l = 1; l <= 5; ++l) {
    pfaffian_terms<F>(
        l, [&](int k, int i, int j) { return Pair(A0.get(k, i, j), A1.get(k, i, j)); },
        [](const Pair& x, const Pair& y) { return E(x.first * y.second + x.second * y.first); },
        [&](int k, int kk, int sg, const E& v) {
          auto& slot = out[l - 1][quad_index(k - 1, kk - 1)];
          slot = sg > 0 ? E(slot + v) : E(slot - v);
        });
  }
  return out;
}

// Value and u-derivative of a form at p in the chart where the unit form is 1.
template <class F>
std::pair<typename F::Elem, typename F::Elem> value_and_slope(const BinaryForm<F>& f, const P1Point<F>& p) {
  const F& K = p.field;
  if (f.is_zero()) return {K.zero(), K.zero()};
  int d = f.deg();
  const auto& c = f.coeffs();
  if (p.at_infinity()) return {c[d], d >= 1 ? c[d - 1] : K.zero()};
  typename F::Elem v = K.zero(), dv = K.zero();
  for (int m = d; m >= 0; --m) {
    dv = dv * p.t + v;
    v = v * p.t + c[m];
  }
  return {v, dv};
}

template <class F>
std::pair<ConstQuad<F>, ConstQuad<F>> specialize_with_slope(const Section<F>& sec, const P1Point<F>& p) {
  ConstQuad<F> A0(sec.field), A1(sec.field);
  for (const Triple& t : all_triples()) {
    auto [v, dv] = value_and_slope(sec.a(t.k, t.i, t.j), p);
    A0.set(t.k, t.i, t.j, v);
    A1.set(t.k, t.i, t.j, dv);
  }
  return {A0, A1};
}

// Projective normalization: last nonzero coordinate equal to 1.
template <class F>
Vec4<F> normalize_point(const F& K, Vec4<F> x) {
  for (int i = 3; i >= 0; --i)
    if (!K.is_zero(x[i])) {
      auto inv = K.inv(x[i]);
      for (auto& v : x) v = v * inv;
      return x;
    }
  throw InvalidInput("the zero vector is not a projective point");
}

template <class F>
int chart_index(const F& K, const Vec4<F>& x) {
  for (int i = 3; i >= 0; --i)
    if (!K.is_zero(x[i])) return i;
  return -1;
}

// Rank of the 5x4 Jacobian: three affine fiber coordinates plus the base uniformizer.
template <class F>
int jacobian_rank(const F& K, const Quadrics<F>& q, const Quadrics<F>& dq, const Vec4<F>& x) {
  int c = chart_index(K, x);
  Matrix<F> J(K, 5, 4);
  for (int l = 0; l < 5; ++l) {
    int col = 0;
    for (int j = 0; j < 4; ++j)
      if (j != c) J(l, col++) = quadric_partial(K, q[l], x, j);
    J(l, 3) = eval_quadric(K, dq[l], x);
  }
  return rank(J);
}

template <class F>
struct FiberPointMult {
  Vec4<F> x;
  int multiplicity = 1;
};

template <class F>
struct FiberSolution {
  bool degenerate = false;
  std::vector<FiberPointMult<F>> points;  // field-rational points of the fiber scheme
  bool irrational_reduced = true;         // points off the field are all simple
};

inline Gf random_scalar(const GfField& K, std::mt19937_64& rng) { return K.from_code(rng() % K.size()); }
inline mpq_class random_scalar(const QField&, std::mt19937_64& rng) { return mpq_class(static_cast<long>(rng() % 101) - 50); }

// Rational points of the scheme cut out by five quadrics in P^3, assuming it is
// finite of length 5. Multiplication matrices on (R/I)_2 -> (R/I)_3 and
// simultaneous eigenvalues; anything else is reported as degenerate.
template <class F>
FiberSolution<F> solve_fiber_quadrics(const F& K, const Quadrics<F>& qc, uint64_t seed = 0x5eed) {
  using E = typename F::Elem;
  const auto& T = detail::monomials();
  FiberSolution<F> out;
  out.degenerate = true;

  Matrix<F> M2(K, 5, 10);
  for (int l = 0; l < 5; ++l)
    for (int m = 0; m < 10; ++m) M2(l, m) = qc[l][m];
  auto piv2 = rref(M2);
  if (piv2.size() != 5) return out;
  std::vector<int> basis2;  // standard monomials of degree 2
  {
    std::vector<bool> is_piv(10, false);
    for (int c : piv2) is_piv[c] = true;
    for (int m = 0; m < 10; ++m)
      if (!is_piv[m]) basis2.push_back(m);
  }

  Matrix<F> M3(K, 20, 20);
  for (int i = 0; i < 4; ++i)
    for (int l = 0; l < 5; ++l)
      for (int m = 0; m < 10; ++m)
        if (!K.is_zero(M2(l, m))) M3(i * 5 + l, T.lin_quad[i][m]) = M2(l, m);
  auto piv3 = rref(M3);
  if (piv3.size() != 15) return out;
  std::array<int, 20> role3;  // >= 0: basis slot, < 0: -(pivot row)-1
  std::vector<bool> is_piv3(20, false);
  for (size_t r = 0; r < piv3.size(); ++r) {
    is_piv3[piv3[r]] = true;
    role3[piv3[r]] = -static_cast<int>(r) - 1;
  }
  std::vector<int> basis3;
  for (int m = 0; m < 20; ++m)
    if (!is_piv3[m]) {
      role3[m] = static_cast<int>(basis3.size());
      basis3.push_back(m);
    }

  // Mult[i]: x_i from (R/I)_2 to (R/I)_3 in the standard-monomial bases.
  std::array<Matrix<F>, 4> Mult;
  for (int i = 0; i < 4; ++i) {
    Mult[i] = Matrix<F>(K, 5, 5);
    for (int b = 0; b < 5; ++b) {
      int c = T.lin_quad[i][basis2[b]];
      if (role3[c] >= 0) {
        Mult[i](role3[c], b) = K.one();
      } else {
        int r = -role3[c] - 1;
        for (int n = 0; n < 5; ++n) Mult[i](n, b) = -M3(r, basis3[n]);
      }
    }
  }

  std::mt19937_64 rng(seed);
  auto draw = [&]() { return random_scalar(K, rng); };

  std::optional<Matrix<F>> inv;
  for (int attempt = 0; attempt < 16 && !inv; ++attempt) {
    Matrix<F> Ml(K, 5, 5);
    for (int i = 0; i < 4; ++i) Ml = Ml + Mult[i].scaled(draw());
    if (!K.is_zero(det(Ml))) inv = inverse(Ml);
  }
  if (!inv) return out;
  std::array<Matrix<F>, 4> Tm;
  for (int i = 0; i < 4; ++i) Tm[i] = *inv * Mult[i];
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (!(Tm[i] * Tm[j] == Tm[j] * Tm[i])) return out;

  for (int attempt = 0; attempt < 16; ++attempt) {
    Matrix<F> Tc(K, 5, 5);
    for (int i = 0; i < 4; ++i) Tc = Tc + Tm[i].scaled(draw());
    auto cp = charpoly(Tc);
    bool ok = true;
    std::vector<FiberPointMult<F>> pts;
    auto cp_roots = roots(cp);
    for (const auto& [lambda, mu] : cp_roots) {
      Matrix<F> N = Tc - Matrix<F>::identity(K, 5).scaled(lambda);
      Matrix<F> P = N;
      for (int e = 1; e < mu; ++e) P = P * N;
      auto V = nullspace(P);
      int dim = static_cast<int>(V.size());
      Matrix<F> Vb(K, 5, dim);
      for (int c = 0; c < dim; ++c)
        for (int r = 0; r < 5; ++r) Vb(r, c) = V[c][r];
      Matrix<F> Vt = Vb.transpose();
      auto rows = rref(Vt);
      Matrix<F> Vs(K, dim, dim);
      for (int a = 0; a < dim; ++a)
        for (int c = 0; c < dim; ++c) Vs(a, c) = Vb(rows[a], c);
      Matrix<F> Vsi = inverse(Vs);
      Vec4<F> sigma;
      for (int i = 0; i < 4 && ok; ++i) {
        Matrix<F> TV = Tm[i] * Vb;
        Matrix<F> TVs(K, dim, dim);
        for (int a = 0; a < dim; ++a)
          for (int c = 0; c < dim; ++c) TVs(a, c) = TV(rows[a], c);
        Matrix<F> R = Vsi * TVs;
        E tr = K.zero();
        for (int a = 0; a < dim; ++a) tr = tr + R(a, a);
        E s = tr * K.inv(K.from_int(dim));
        Matrix<F> Rn = R - Matrix<F>::identity(K, dim).scaled(s);
        Matrix<F> Pw = Rn;
        for (int e = 1; e < dim; ++e) Pw = Pw * Rn;
        if (!Pw.is_zero()) ok = false;
        sigma[i] = s;
      }
      if (!ok) break;
      pts.push_back({normalize_point(K, sigma), dim});
    }
    if (!ok) continue;
    for (const auto& pt : pts)
      for (int l = 0; l < 5; ++l)
        if (!K.is_zero(eval_quadric(K, qc[l], pt.x))) return out;
    UPoly<F> rest = cp;
    for (const auto& [lambda, mu] : cp_roots)
      for (int e = 0; e < mu; ++e) rest = divmod(rest, UPoly<F>(K, {-lambda, K.one()})).first;
    out.irrational_reduced = poly_gcd(rest, rest.derivative()).deg() <= 0;
    out.degenerate = false;
    out.points = std::move(pts);
    return out;
  }
  return out;
}

}  // namespace quintic
