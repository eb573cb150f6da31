#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "quintic/singularity.hpp"

namespace quintic {

enum class NormalFormKind { TypeK, TypeIJK };

struct NormalForm {
  NormalFormKind kind = NormalFormKind::TypeK;
  int I = 0, J = 0, K = 1;

  static NormalForm type_k(int K) { return {NormalFormKind::TypeK, 0, 0, K}; }
  static NormalForm type_ijk(int I, int J, int K) {
    if (I > J) std::swap(I, J);
    return {NormalFormKind::TypeIJK, I, J, K};
  }
  bool operator==(const NormalForm& o) const { return kind == o.kind && I == o.I && J == o.J && K == o.K; }
};

template <class F>
struct NormalFormCertificate {
  NormalForm form;
  P1Point<F> p;
  GroupElement<F> witness;
};

struct NotSingular : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IrrationalSingularPoint : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidCertificate : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

template <class F>
bool is_normal_form(const Section<F>& sec, const P1Point<F>& p, const NormalForm& nf) {
  auto ord = [&](int k, int i, int j) { return i == j ? kInfiniteOrder : order_at(sec.a(k, i, j), p); };
  if (nf.K < 1 || nf.K > 4) throw InvalidInput("K out of range");
  if (nf.kind == NormalFormKind::TypeK) {
    for (int i = 1; i <= 5; ++i)
      for (int j = i + 1; j <= 5; ++j)
        if (ord(nf.K, i, j) < 1) return false;
    return true;
  }
  if (!valid_triple({nf.I, nf.J, nf.K})) throw InvalidInput("triple out of range");
  for (int k = 1; k <= 4; ++k)
    if (ord(k, nf.I, nf.J) < 1) return false;
  for (int j = 1; j <= 5; ++j)
    if (ord(nf.K, nf.I, j) < 1 || ord(nf.K, j, nf.J) < 1) return false;
  return ord(nf.K, nf.I, nf.J) >= 2;
}

namespace detail {

// Lift a constant lower unipotent matrix to G: entry (a,b) becomes c * w^(deg_a - deg_b).
template <class F>
FormMatrix<F> lift_unipotent(const Matrix<F>& U, const P1Point<F>& p, const int* degs) {
  const F& K = p.field;
  int n = U.rows;
  FormMatrix<F> m = form_identity(K, n);
  auto w = unit_form(p);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < a; ++b)
      if (!K.is_zero(U(a, b))) m[a][b] = w.pow(degs[a] - degs[b]).scaled(U(a, b));
  return m;
}

template <class F>
GroupElement<F> unipotent_element(const BundlePair& bp, const P1Point<F>& p, const Matrix<F>& U4, const Matrix<F>& U5) {
  return GroupElement<F>{bp, p.field, lift_unipotent(U4, p, bp.e.data()), lift_unipotent(U5, p, bp.f.data())};
}

template <class F>
std::optional<Vec4<F>> rational_singular_point(const Section<F>& sec, const P1Point<F>& p, bool& irrational_candidates) {
  const F& K = sec.field;
  auto [A0, A1] = specialize_with_slope(sec, p);
  auto q = fiber_quadrics(A0);
  auto sol = solve_fiber_quadrics(K, q);
  if (sol.degenerate) throw DegenerateInput("the fiber above p is not a finite scheme of length 5");
  auto dq = quadrics_u_derivative(A0, A1);
  for (const auto& pt : sol.points)
    if (pt.multiplicity >= 2 && jacobian_rank(K, q, dq, pt.x) <= 2) return pt.x;
  irrational_candidates = !sol.irrational_reduced;
  return std::nullopt;
}

}  // namespace detail

// Constructive minimization at a rational singular point above p.
template <class F>
NormalFormCertificate<F> minimize_at(const Section<F>& sec, const P1Point<F>& p) {
  require_same_field(sec.field, p.field);
  const F& K = sec.field;
  const BundlePair& bp = sec.base;
  bool irrational = false;
  auto xs = detail::rational_singular_point(sec, p, irrational);
  if (!xs) {
    if (irrational) throw IrrationalSingularPoint("non-reduced fiber points above p are not rational over the working field");
    throw NotSingular("no singular fiber point above p");
  }
  Vec4<F> x = *xs;
  int Kc = chart_index(K, x) + 1;

  GroupElement<F> total = GroupElement<F>::identity(bp, K);
  Section<F> cur = sec;
  auto apply = [&](const Matrix<F>& U4, const Matrix<F>& U5) {
    auto g = detail::unipotent_element(bp, p, U4, U5);
    cur = act(g, cur);
    total = g.compose(total);
  };

  // (1) move x to the K-th coordinate point: y = (g4^t)^{-1} x with g4 lower unipotent
  {
    Matrix<F> V = Matrix<F>::identity(K, 4);
    for (int i = 0; i < Kc - 1; ++i) V(i, Kc - 1) = -x[i];
    apply(inverse(V).transpose(), Matrix<F>::identity(K, 5));
  }

  auto AK = specialize_fiber(cur, p).A[Kc - 1];
  auto finish = [&](const NormalForm& nf) {
    if (!is_normal_form(cur, p, nf)) throw std::logic_error("minimization did not reach the normal form");
    return NormalFormCertificate<F>{nf, p, total};
  };
  if (AK.is_zero()) return finish(NormalForm::type_k(Kc));

  // (2) A_K(p) = v ^ w; rows r0, r1 with A(r0,r1) != 0 span <v, w>
  Matrix<F> M(K, 2, 5);
  {
    int r0 = -1, r1 = -1;
    for (int i = 0; i < 5 && r0 < 0; ++i)
      for (int j = 0; j < 5; ++j)
        if (!K.is_zero(AK(i, j))) {
          r0 = i, r1 = j;
          break;
        }
    for (int j = 0; j < 5; ++j) {
      M(0, j) = AK(r0, j);
      M(1, j) = AK(r1, j);
    }
  }
  std::vector<int> piv;
  {
    for (int j = 0; j < 5 && piv.size() < 2; ++j) {
      Matrix<F> sub(K, 2, static_cast<int>(piv.size()) + 1);
      for (size_t c = 0; c < piv.size(); ++c)
        for (int r = 0; r < 2; ++r) sub(r, static_cast<int>(c)) = M(r, piv[c]);
      for (int r = 0; r < 2; ++r) sub(r, static_cast<int>(piv.size())) = M(r, j);
      if (rank(sub) == static_cast<int>(piv.size()) + 1) piv.push_back(j);
    }
  }
  if (piv.size() != 2) throw std::logic_error("rank-2 alternating matrix expected");
  {
    Matrix<F> U5 = Matrix<F>::identity(K, 5);
    Matrix<F> B(K, 2, 2);
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) B(r, c) = M(r, piv[c]);
    Matrix<F> Bi = inverse(B);
    for (int j = 0; j < 5; ++j) {
      if (j == piv[0] || j == piv[1]) continue;
      // column j = alpha col piv0 + beta col piv1; greedy pivots are never later than j
      typename F::Elem alpha = Bi(0, 0) * M(0, j) + Bi(0, 1) * M(1, j);
      typename F::Elem beta = Bi(1, 0) * M(0, j) + Bi(1, 1) * M(1, j);
      if ((!K.is_zero(alpha) && piv[0] > j) || (!K.is_zero(beta) && piv[1] > j))
        throw std::logic_error("column clearing needs a later column");
      U5(j, piv[0]) = -alpha;
      U5(j, piv[1]) = -beta;
    }
    apply(Matrix<F>::identity(K, 4), U5);
  }
  std::array<int, 3> S{};
  {
    int n = 0;
    for (int j = 0; j < 5; ++j)
      if (j != piv[0] && j != piv[1]) S[n++] = j + 1;
  }

  // (3) the 4x3 matrix N of pair columns (S1S2, S1S3, S2S3) at p
  auto A = specialize_fiber(cur, p);
  const std::array<std::array<int, 2>, 3> pairs{{{S[0], S[1]}, {S[0], S[2]}, {S[1], S[2]}}};
  auto column = [&](int c) {
    std::vector<typename F::Elem> v(4);
    for (int k = 1; k <= 4; ++k) v[k - 1] = A.get(k, pairs[c][0], pairs[c][1]);
    return v;
  };
  auto is_zero_vec = [&](const std::vector<typename F::Elem>& v) {
    return std::all_of(v.begin(), v.end(), [&](const auto& e) { return K.is_zero(e); });
  };
  // scalar c with v = c u, when u != 0 and v is a multiple of u
  auto ratio = [&](const std::vector<typename F::Elem>& v, const std::vector<typename F::Elem>& u) -> typename F::Elem {
    for (int k = 0; k < 4; ++k)
      if (!K.is_zero(u[k])) return v[k] * K.inv(u[k]);
    return K.zero();
  };
  std::array<std::vector<typename F::Elem>, 3> N{column(0), column(1), column(2)};
  Matrix<F> Nm(K, 4, 3);
  for (int c = 0; c < 3; ++c)
    for (int k = 0; k < 4; ++k) Nm(k, c) = N[c][k];
  int rkN = rank(Nm);
  if (rkN > 2) throw std::logic_error("tangent condition violated at a singular point");

  // Column operations on N come from U5 restricted to S:
  //   E(S3,S2): col(S1S3) += c col(S1S2); E(S2,S1): col(S2S3) += c col(S1S3); E(S3,S1): col(S2S3) -= c col(S1S2)
  auto col_op = [&](int from, int to, const typename F::Elem& c) {
    Matrix<F> U5 = Matrix<F>::identity(K, 5);
    if (from == 0 && to == 1) U5(S[2] - 1, S[1] - 1) = c;
    if (from == 1 && to == 2) U5(S[1] - 1, S[0] - 1) = c;
    if (from == 0 && to == 2) U5(S[2] - 1, S[0] - 1) = -c;
    apply(Matrix<F>::identity(K, 4), U5);
  };

  if (rkN <= 1) {
    // two zero columns; the surviving pair shares no index with the common index L
    int I, J, L;
    if (!is_zero_vec(N[0])) {
      if (!is_zero_vec(N[1])) col_op(0, 1, -ratio(N[1], N[0]));
      if (!is_zero_vec(N[2])) col_op(0, 2, -ratio(N[2], N[0]));
      I = S[0], J = S[1], L = S[2];
    } else if (!is_zero_vec(N[1])) {
      if (!is_zero_vec(N[2])) col_op(1, 2, -ratio(N[2], N[1]));
      I = S[0], J = S[2], L = S[1];
    } else {
      I = S[1], J = S[2], L = S[0];
    }
    // (I,L) and (J,L) vanish mod u; make one of them vanish mod u^2
    auto slope = [&](int i, int j) { return local_coeff(cur.a(Kc, i, j), p, 1); };
    auto sI = slope(I, L), sJ = slope(J, L);
    if (K.is_zero(sI)) return finish(NormalForm::type_ijk(I, L, Kc));
    if (K.is_zero(sJ)) return finish(NormalForm::type_ijk(J, L, Kc));
    int s = std::min(I, J), t = std::max(I, J);
    auto ss = s == I ? sI : sJ, st = s == I ? sJ : sI;
    Matrix<F> U5 = Matrix<F>::identity(K, 5);
    U5(t - 1, s - 1) = -st * K.inv(ss);
    apply(Matrix<F>::identity(K, 4), U5);
    return finish(NormalForm::type_ijk(t, L, Kc));
  }

  // rank 2: zero out one column, the mod u^2 condition then holds by the tangent computation
  int I, J;
  {
    Matrix<F> two(K, 4, 2);
    for (int k = 0; k < 4; ++k) two(k, 0) = N[0][k], two(k, 1) = N[1][k];
    if (rank(two) == 2) {
      Matrix<F> sol_m(K, 4, 3);
      for (int k = 0; k < 4; ++k) sol_m(k, 0) = N[0][k], sol_m(k, 1) = N[1][k], sol_m(k, 2) = N[2][k];
      auto ns = nullspace(sol_m);
      // a N0 + b N1 + c N2 = 0 with c != 0
      auto c = ns.at(0)[2];
      typename F::Elem a = ns[0][0] * K.inv(c), b = ns[0][1] * K.inv(c);
      if (!K.is_zero(a)) col_op(0, 2, a);
      if (!K.is_zero(b)) col_op(1, 2, b);
      I = S[1], J = S[2];
    } else if (!is_zero_vec(N[0])) {
      if (!is_zero_vec(N[1])) col_op(0, 1, -ratio(N[1], N[0]));
      I = S[0], J = S[2];
    } else {
      I = S[0], J = S[1];
    }
  }
  return finish(NormalForm::type_ijk(I, J, Kc));
}

// Minimum order at p that a normal form imposes on entry (k,i,j), i < j.
inline int required_order(const NormalForm& nf, int k, int i, int j) {
  if (nf.kind == NormalFormKind::TypeK) return k == nf.K ? 1 : 0;
  if (i == nf.I && j == nf.J) return k == nf.K ? 2 : 1;
  if (k == nf.K && (i == nf.I || j == nf.I || i == nf.J || j == nf.J)) return 1;
  return 0;
}

// Overwrite the constrained entries of sec with random multiples of the required uniformizer power.
template <class F>
Section<F> plant_normal_form(const Section<F>& sec, const P1Point<F>& p, const NormalForm& nf, uint64_t seed,
                             long bound = kDefaultSampleBound) {
  std::mt19937_64 rng(seed);
  Section<F> out = sec;
  auto u = uniformizer_form(p);
  for (const Triple& t : all_triples()) {
    int r = required_order(nf, t.k, t.i, t.j);
    if (r == 0) continue;
    int d = sec.base.d(t);
    out.set(t.k, t.i, t.j, d < r ? BinaryForm<F>::zero(sec.field) : u.pow(r) * sample_form(sec.field, d - r, rng, bound));
  }
  return out;
}

template <class F>
struct NormalizeResult {
  BundlePair base;
  Section<F> section;
  std::vector<std::string> warnings;
};

// Divide through by the uniformizer at the certified point and lower the splitting types.
template <class F>
NormalizeResult<F> partial_normalize(const Section<F>& sec, const NormalFormCertificate<F>& cert) {
  require_same_field(sec.field, cert.p.field);
  Section<F> B;
  try {
    B = act(cert.witness, sec);
  } catch (const std::invalid_argument& e) {
    throw InvalidCertificate(std::string("witness does not act: ") + e.what());
  }
  if (!is_normal_form(B, cert.p, cert.form)) throw InvalidCertificate("section is not in the certified normal form");
  const F& K = sec.field;
  const BundlePair& bp = sec.base;
  const auto& nf = cert.form;
  auto u = uniformizer_form(cert.p);
  BundlePair nb = bp;
  // exponent of u applied to entry (k,i,j)
  std::function<int(int, int, int)> shift;
  if (nf.kind == NormalFormKind::TypeK) {
    nb.g = bp.g - 5;
    for (int k = 0; k < 4; ++k) nb.e[k] = bp.e[k] - (k + 1 == nf.K ? 2 : 1);
    for (int i = 0; i < 5; ++i) nb.f[i] = bp.f[i] - 2;
    shift = [&](int k, int, int) { return k == nf.K ? -1 : 0; };
  } else {
    nb.g = bp.g - 1;
    nb.e[nf.K - 1] -= 1;
    nb.f[nf.I - 1] -= 1;
    nb.f[nf.J - 1] -= 1;
    shift = [&](int k, int i, int j) {
      int n = (i == nf.I || i == nf.J) + (j == nf.I || j == nf.J);
      return 1 - (k == nf.K) - n;
    };
  }
  // relabel so that both splitting types are sorted again
  std::array<int, 4> pe;
  std::array<int, 5> pf;
  std::iota(pe.begin(), pe.end(), 0);
  std::iota(pf.begin(), pf.end(), 0);
  std::stable_sort(pe.begin(), pe.end(), [&](int a, int b) { return nb.e[a] < nb.e[b]; });
  std::stable_sort(pf.begin(), pf.end(), [&](int a, int b) { return nb.f[a] < nb.f[b]; });
  BundlePair sorted = nb;
  for (int k = 0; k < 4; ++k) sorted.e[k] = nb.e[pe[k]];
  for (int i = 0; i < 5; ++i) sorted.f[i] = nb.f[pf[i]];

  NormalizeResult<F> out{sorted, Section<F>(sorted, K), bundle_warnings(sorted)};
  for (int k = 1; k <= 4; ++k)
    for (int i = 1; i <= 5; ++i)
      for (int j = i + 1; j <= 5; ++j) {
        // new (k,i,j) comes from old indices (pe[k-1]+1, pf[i-1]+1, pf[j-1]+1)
        int ok = pe[k - 1] + 1, oi = pf[i - 1] + 1, oj = pf[j - 1] + 1;
        BinaryForm<F> v = B.a(ok, oi, oj);
        int s = shift(ok, oi, oj);
        try {
          for (; s < 0; ++s) v = divide_by_uniformizer(v, cert.p);
        } catch (const std::domain_error&) {
          throw InvalidCertificate("uniformizer division left a remainder");
        }
        for (; s > 0; --s) v = v * u;
        if (!v.is_zero() && v.deg() != sorted.d(i, j, k)) throw InvalidCertificate("normalized entry has the wrong degree");
        out.section.set(k, i, j, v);
      }
  return out;
}

}  // namespace quintic
