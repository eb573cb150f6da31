#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "quintic/binary_form.hpp"
#include "quintic/bundles.hpp"
#include "quintic/linalg.hpp"

namespace quintic {

inline int pair_index(int i, int j) {
  // i < j, 1-based; 0..9 in lexicographic order
  static constexpr int base[5] = {0, 4, 7, 9, 10};
  return base[i - 1] + (j - i - 1);
}

// Four 5x5 alternating matrices of binary forms; only i < j is stored.
template <class F>
struct Section {
  using Form = BinaryForm<F>;
  BundlePair base;
  F field;
  std::array<Form, 40> entries;

  Section() = default;
  Section(const BundlePair& bp, const F& K) : base(bp), field(K) { entries.fill(Form::zero(K)); }

  Form a(int k, int i, int j) const {
    if (i == j) return Form::zero(field);
    if (i < j) return entries[(k - 1) * 10 + pair_index(i, j)];
    return -entries[(k - 1) * 10 + pair_index(j, i)];
  }
  void set(int k, int i, int j, const Form& v) {
    if (i == j) throw std::invalid_argument("diagonal entries of an alternating matrix are zero");
    if (i < j)
      entries[(k - 1) * 10 + pair_index(i, j)] = v;
    else
      entries[(k - 1) * 10 + pair_index(j, i)] = -v;
  }
  bool operator==(const Section& o) const { return base == o.base && field == o.field && entries == o.entries; }
  bool is_zero() const {
    for (const auto& v : entries)
      if (!v.is_zero()) return false;
    return true;
  }
};

// Degree violations: nonzero entries whose degree differs from d_ij^(k).
template <class F>
std::vector<Triple> audit_section(const Section<F>& sec) {
  std::vector<Triple> bad;
  for (const Triple& t : all_triples()) {
    const auto& v = sec.a(t.k, t.i, t.j);
    if (!v.is_zero() && v.deg() != sec.base.d(t)) bad.push_back(t);
  }
  return bad;
}

// ---------------------------------------------------------------------------
// Sampling

// Unbiased draw from [0, n) by rejection.
inline uint64_t draw_below(std::mt19937_64& rng, uint64_t n) {
  uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  for (;;) {
    uint64_t r = rng();
    if (r < limit) return r % n;
  }
}

inline mpq_class sample_scalar(const QField&, std::mt19937_64& rng, long bound) {
  return mpq_class(static_cast<long>(draw_below(rng, 2 * bound + 1)) - bound);
}

inline Gf sample_scalar(const GfField& K, std::mt19937_64& rng, long) { return K.from_code(draw_below(rng, K.size())); }

inline constexpr long kDefaultSampleBound = 50;

template <class F>
BinaryForm<F> sample_form(const F& K, int deg, std::mt19937_64& rng, long bound = kDefaultSampleBound) {
  if (deg < 0) return BinaryForm<F>::zero(K);
  std::vector<typename F::Elem> c;
  for (int m = 0; m <= deg; ++m) c.push_back(sample_scalar(K, rng, bound));
  return BinaryForm<F>(K, std::move(c));
}

template <class F>
Section<F> sample_section(const BundlePair& bp, const F& K, uint64_t seed, long bound = kDefaultSampleBound) {
  if (!degree_consistent(bp)) throw InvalidInput("bundle pair degrees are inconsistent");
  std::mt19937_64 rng(seed);
  Section<F> sec(bp, K);
  for (int k = 1; k <= 4; ++k)
    for (int i = 1; i <= 5; ++i)
      for (int j = i + 1; j <= 5; ++j) sec.set(k, i, j, sample_form(K, bp.d(i, j, k), rng, bound));
  return sec;
}

// ---------------------------------------------------------------------------
// Constant data over the field: the fiber of a section above a point.

template <class F>
struct ConstQuad {
  F field;
  std::array<Matrix<F>, 4> A;

  explicit ConstQuad(const F& K) : field(K) {
    for (auto& m : A) m = Matrix<F>(K, 5, 5);
  }
  typename F::Elem get(int k, int i, int j) const { return A[k - 1](i - 1, j - 1); }
  void set(int k, int i, int j, const typename F::Elem& v) {
    A[k - 1](i - 1, j - 1) = v;
    A[k - 1](j - 1, i - 1) = -v;
  }
  // sum_k x_k A_k
  Matrix<F> combine(const std::vector<typename F::Elem>& x) const {
    Matrix<F> m(field, 5, 5);
    for (int k = 0; k < 4; ++k) {
      if (field.is_zero(x[k])) continue;
      for (size_t n = 0; n < m.a.size(); ++n) m.a[n] = m.a[n] + x[k] * A[k].a[n];
    }
    return m;
  }
  bool operator==(const ConstQuad& o) const { return A == o.A; }
};

template <class F>
ConstQuad<F> specialize_fiber(const Section<F>& sec, const P1Point<F>& p) {
  require_same_field(sec.field, p.field);
  ConstQuad<F> q(sec.field);
  for (const Triple& t : all_triples()) q.set(t.k, t.i, t.j, eval_form(sec.a(t.k, t.i, t.j), p));
  return q;
}

// ---------------------------------------------------------------------------
// Sub-Pfaffians

// Monomials x_k x_l, k <= l, 0-based, in the order (0,0),(0,1),...,(3,3).
inline int quad_index(int k, int l) {
  if (k > l) std::swap(k, l);
  static constexpr int base[4] = {0, 4, 7, 9};
  return base[k] + (l - k);
}

template <class F>
struct PfaffianSystem {
  using Form = BinaryForm<F>;
  F field;
  // q[l][m]: coefficient of monomial m in the l-th quadric (0-based l)
  std::array<std::array<Form, 10>, 5> q;
};

inline std::array<int, 4> complement_of(int l) {
  std::array<int, 4> idx{};
  int n = 0;
  for (int i = 1; i <= 5; ++i)
    if (i != l) idx[n++] = i;
  return idx;
}

// Q_l = (-1)^(l+1) (m_ab m_cd - m_ac m_bd + m_ad m_bc) on the minor omitting l.
template <class F, class Entry, class Mul, class Add>
void pfaffian_terms(int l, Entry entry, Mul mul, Add add) {
  auto idx = complement_of(l);
  int a = idx[0], b = idx[1], c = idx[2], d = idx[3];
  int sign = (l % 2 == 1) ? 1 : -1;
  const std::array<std::array<int, 4>, 3> terms{{{a, b, c, d}, {a, c, b, d}, {a, d, b, c}}};
  const int tsign[3] = {1, -1, 1};
  for (int n = 0; n < 3; ++n)
    for (int k = 1; k <= 4; ++k)
      for (int kk = 1; kk <= 4; ++kk)
        add(k, kk, sign * tsign[n], mul(entry(k, terms[n][0], terms[n][1]), entry(kk, terms[n][2], terms[n][3])));
}

template <class F>
PfaffianSystem<F> pfaffians(const Section<F>& sec) {
  PfaffianSystem<F> ps{sec.field, {}};
  for (auto& row : ps.q) row.fill(BinaryForm<F>::zero(sec.field));
  for (int l = 1; l <= 5; ++l) {
    pfaffian_terms<F>(
        l, [&](int k, int i, int j) { return sec.a(k, i, j); },
        [](const BinaryForm<F>& x, const BinaryForm<F>& y) { return x * y; },
        [&](int k, int kk, int sg, const BinaryForm<F>& v) {
          if (v.is_zero()) return;
          auto& slot = ps.q[l - 1][quad_index(k - 1, kk - 1)];
          slot = sg > 0 ? slot + v : slot - v;
        });
  }
  return ps;
}

// Constant-coefficient quadrics of a fiber: c[l][m].
template <class F>
std::array<std::array<typename F::Elem, 10>, 5> fiber_quadrics(const ConstQuad<F>& q) {
  const F& K = q.field;
  std::array<std::array<typename F::Elem, 10>, 5> out;
  for (auto& row : out) row.fill(K.zero());
  for (int l = 1; l <= 5; ++l) {
    pfaffian_terms<F>(
        l, [&](int k, int i, int j) { return q.get(k, i, j); },
        [](const typename F::Elem& x, const typename F::Elem& y) { return typename F::Elem(x * y); },
        [&](int k, int kk, int sg, const typename F::Elem& v) {
          auto& slot = out[l - 1][quad_index(k - 1, kk - 1)];
          slot = sg > 0 ? typename F::Elem(slot + v) : typename F::Elem(slot - v);
        });
  }
  return out;
}

// ---------------------------------------------------------------------------
// The group G

template <class F>
using FormMatrix = std::vector<std::vector<BinaryForm<F>>>;

template <class F>
BinaryForm<F> form_det(const FormMatrix<F>& m, const F& K) {
  size_t n = m.size();
  if (n == 1) return m[0][0];
  BinaryForm<F> acc = BinaryForm<F>::zero(K);
  for (size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    FormMatrix<F> minor;
    for (size_t r = 1; r < n; ++r) {
      std::vector<BinaryForm<F>> row;
      for (size_t cc = 0; cc < n; ++cc)
        if (cc != c) row.push_back(m[r][cc]);
      minor.push_back(row);
    }
    BinaryForm<F> term = m[0][c] * form_det(minor, K);
    acc = (c % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

template <class F>
FormMatrix<F> form_identity(const F& K, int n) {
  FormMatrix<F> m(n, std::vector<BinaryForm<F>>(n, BinaryForm<F>::zero(K)));
  for (int i = 0; i < n; ++i) m[i][i] = BinaryForm<F>::constant(K, K.one());
  return m;
}

template <class F>
FormMatrix<F> form_mul(const FormMatrix<F>& x, const FormMatrix<F>& y, const F& K) {
  size_t n = x.size(), m = y[0].size(), inner = y.size();
  FormMatrix<F> r(n, std::vector<BinaryForm<F>>(m, BinaryForm<F>::zero(K)));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < m; ++j)
      for (size_t k = 0; k < inner; ++k)
        if (!x[i][k].is_zero() && !y[k][j].is_zero()) r[i][j] = r[i][j] + x[i][k] * y[k][j];
  return r;
}

template <class F>
Matrix<F> eval_matrix(const FormMatrix<F>& m, const P1Point<F>& p) {
  int n = static_cast<int>(m.size());
  Matrix<F> r(p.field, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r(i, j) = eval_form(m[i][j], p);
  return r;
}

template <class F>
struct GroupElement {
  BundlePair base;
  F field;
  FormMatrix<F> g4, g5;

  static GroupElement identity(const BundlePair& bp, const F& K) {
    return GroupElement{bp, K, form_identity(K, 4), form_identity(K, 5)};
  }
  // Apply this element after `inner`: (this o inner) acts as this(inner(A)).
  GroupElement compose(const GroupElement& inner) const {
    return GroupElement{base, field, form_mul(g4, inner.g4, field), form_mul(g5, inner.g5, field)};
  }
  bool operator==(const GroupElement& o) const { return base == o.base && g4 == o.g4 && g5 == o.g5; }
};

struct GroupElementError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Returns the constant det(g4); throws when the element is malformed.
template <class F>
typename F::Elem check_group_element(const GroupElement<F>& g) {
  const F& K = g.field;
  for (int k = 0; k < 4; ++k)
    for (int l = 0; l < 4; ++l) {
      const auto& v = g.g4[k][l];
      if (!v.is_zero() && v.deg() != g.base.e[k] - g.base.e[l]) throw GroupElementError("g4 entry has the wrong degree");
    }
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      const auto& v = g.g5[i][j];
      if (!v.is_zero() && v.deg() != g.base.f[i] - g.base.f[j]) throw GroupElementError("g5 entry has the wrong degree");
    }
  auto d4 = form_det(g.g4, K), d5 = form_det(g.g5, K);
  if (d4.is_zero() || d4.deg() != 0 || d5.is_zero() || d5.deg() != 0) throw GroupElementError("determinants must be nonzero constants");
  if (d4.coeff(0) * d4.coeff(0) != d5.coeff(0)) throw GroupElementError("det(g4)^2 must equal det(g5)");
  return d4.coeff(0);
}

template <class F>
Section<F> act(const GroupElement<F>& g, const Section<F>& sec) {
  if (!(g.base == sec.base)) throw InvalidInput("group element and section have different bundle data");
  require_same_field(g.field, sec.field);
  const F& K = sec.field;
  typename F::Elem det4 = check_group_element(g);
  // A'_k = g5 A_k g5^t
  std::array<std::array<std::array<BinaryForm<F>, 5>, 5>, 4> ap;
  for (int k = 1; k <= 4; ++k) {
    std::array<std::array<BinaryForm<F>, 5>, 5> tmp;  // g5 A_k
    for (int i = 0; i < 5; ++i)
      for (int b = 0; b < 5; ++b) {
        BinaryForm<F> acc = BinaryForm<F>::zero(K);
        for (int a = 0; a < 5; ++a) {
          if (g.g5[i][a].is_zero()) continue;
          auto v = sec.a(k, a + 1, b + 1);
          if (!v.is_zero()) acc = acc + g.g5[i][a] * v;
        }
        tmp[i][b] = acc;
      }
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) {
        BinaryForm<F> acc = BinaryForm<F>::zero(K);
        if (i != j)
          for (int b = 0; b < 5; ++b)
            if (!tmp[i][b].is_zero() && !g.g5[j][b].is_zero()) acc = acc + tmp[i][b] * g.g5[j][b];
        ap[k - 1][i][j] = acc;
      }
  }
  typename F::Elem inv = K.inv(det4);
  Section<F> out(sec.base, K);
  for (const Triple& t : all_triples()) {
    BinaryForm<F> acc = BinaryForm<F>::zero(K);
    for (int l = 1; l <= 4; ++l) {
      const auto& gl = g.g4[t.k - 1][l - 1];
      const auto& v = ap[l - 1][t.i - 1][t.j - 1];
      if (!gl.is_zero() && !v.is_zero()) acc = acc + gl * v;
    }
    acc = acc.scaled(inv);
    if (!acc.is_zero() && acc.deg() != sec.base.d(t)) throw GroupElementError("degree overflow in group action");
    out.set(t.k, t.i, t.j, acc);
  }
  return out;
}

template <class F>
FormMatrix<F> form_inverse(const FormMatrix<F>& m, const F& K) {
  int n = static_cast<int>(m.size());
  BinaryForm<F> d = form_det(m, K);
  if (d.is_zero() || d.deg() != 0) throw GroupElementError("matrix is not invertible over the polynomial ring");
  typename F::Elem dinv = K.inv(d.coeff(0));
  FormMatrix<F> r(n, std::vector<BinaryForm<F>>(n, BinaryForm<F>::zero(K)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      // cofactor C_ji
      FormMatrix<F> minor;
      for (int a = 0; a < n; ++a) {
        if (a == j) continue;
        std::vector<BinaryForm<F>> row;
        for (int b = 0; b < n; ++b)
          if (b != i) row.push_back(m[a][b]);
        minor.push_back(row);
      }
      BinaryForm<F> c = n == 1 ? BinaryForm<F>::constant(K, K.one()) : form_det(minor, K);
      if ((i + j) % 2) c = -c;
      r[i][j] = c.scaled(dinv);
    }
  return r;
}

template <class F>
GroupElement<F> inverse(const GroupElement<F>& g) {
  return GroupElement<F>{g.base, g.field, form_inverse(g.g4, g.field), form_inverse(g.g5, g.field)};
}

// Lower unipotent random element; every factor a polynomial matrix of the right degrees.
template <class F>
GroupElement<F> random_unipotent(const BundlePair& bp, const F& K, std::mt19937_64& rng, long bound = 5) {
  GroupElement<F> g = GroupElement<F>::identity(bp, K);
  for (int k = 0; k < 4; ++k)
    for (int l = 0; l < k; ++l) g.g4[k][l] = sample_form(K, bp.e[k] - bp.e[l], rng, bound);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < i; ++j) g.g5[i][j] = sample_form(K, bp.f[i] - bp.f[j], rng, bound);
  return g;
}

// Random element of G: block lower triangular with invertible constant blocks on
// the equal-degree diagonal blocks, row 1 of g5 rescaled to meet the determinant relation.
template <class F>
GroupElement<F> random_group_element(const BundlePair& bp, const F& K, std::mt19937_64& rng, long bound = 5) {
  for (;;) {
    GroupElement<F> g = GroupElement<F>::identity(bp, K);
    for (int k = 0; k < 4; ++k)
      for (int l = 0; l < 4; ++l)
        g.g4[k][l] = bp.e[k] >= bp.e[l] ? sample_form(K, bp.e[k] - bp.e[l], rng, bound) : BinaryForm<F>::zero(K);
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j)
        g.g5[i][j] = bp.f[i] >= bp.f[j] ? sample_form(K, bp.f[i] - bp.f[j], rng, bound) : BinaryForm<F>::zero(K);
    auto d4 = form_det(g.g4, K), d5 = form_det(g.g5, K);
    if (d4.is_zero() || d5.is_zero()) continue;
    typename F::Elem c = d4.coeff(0) * d4.coeff(0) / d5.coeff(0);
    for (int j = 0; j < 5; ++j) g.g5[0][j] = g.g5[0][j].scaled(c);
    return g;
  }
}

// A fiber point x of sec above p maps to (g4(p)^t)^{-1} x on act(g, sec).
template <class F>
std::vector<typename F::Elem> transform_point(const GroupElement<F>& g, const P1Point<F>& p,
                                              const std::vector<typename F::Elem>& x) {
  Matrix<F> m = inverse(eval_matrix(g.g4, p).transpose());
  std::vector<typename F::Elem> y(4, p.field.zero());
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) y[i] = y[i] + m(i, j) * x[j];
  return y;
}

// Section over an extension of its prime field.
inline Section<GfField> embed(const Section<GfField>& sec, const GfField& into) {
  Section<GfField> out(sec.base, into);
  for (size_t n = 0; n < sec.entries.size(); ++n) {
    std::vector<Gf> c;
    for (const Gf& v : sec.entries[n].coeffs()) c.push_back(embed(v, into));
    out.entries[n] = BinaryForm<GfField>(into, c);
  }
  return out;
}

}  // namespace quintic
