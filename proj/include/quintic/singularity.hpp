#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "quintic/fiber.hpp"

namespace quintic {

template <class F>
struct FiberPoint {
  P1Point<F> p;
  Vec4<F> x;
  bool operator==(const FiberPoint& o) const { return p == o.p && x == o.x; }
};

struct NotOnCurve : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

template <class F>
int jacobian_rank_at(const Section<F>& sec, const FiberPoint<F>& fp) {
  require_same_field(sec.field, fp.p.field);
  const F& K = sec.field;
  if (chart_index(K, fp.x) < 0) throw InvalidInput("fiber coordinates are all zero");
  auto [A0, A1] = specialize_with_slope(sec, fp.p);
  auto q = fiber_quadrics(A0);
  for (const auto& row : q)
    if (!K.is_zero(eval_quadric(K, row, fp.x))) throw NotOnCurve("point does not lie on the curve");
  return jacobian_rank(K, q, quadrics_u_derivative(A0, A1), fp.x);
}

enum class ScanStatus { SmoothScanned, SingularAt, Degenerate };

inline const char* to_string(ScanStatus s) {
  switch (s) {
    case ScanStatus::SmoothScanned: return "SmoothScanned";
    case ScanStatus::SingularAt: return "SingularAt";
    case ScanStatus::Degenerate: return "Degenerate";
  }
  return "?";
}

struct ScannedPoint {
  FiberPoint<GfField> point;
  int rank = 3;
  int multiplicity = 1;  // length of the fiber scheme at the point
  int degree = 1;        // degree of the smallest field of definition
};

struct ScanOptions {
  int m_max = 2;
  bool keep_smooth_points = true;
};

struct SingularityReport {
  ScanStatus status = ScanStatus::SmoothScanned;
  uint32_t p = 0;
  int m_max = 1;
  std::vector<ScannedPoint> points;    // every curve point found (smooth ones only when kept)
  std::vector<ScannedPoint> singular;  // rank <= 2
  std::optional<P1Point<GfField>> degenerate_fiber;
  long fibers = 0, curve_points = 0;
};

namespace detail {

inline P1Point<GfField> frobenius(const P1Point<GfField>& p) {
  return P1Point<GfField>{p.field, gf_frobenius(p.s), gf_frobenius(p.t)};
}

inline Vec4<GfField> frobenius(const Vec4<GfField>& x) {
  return {gf_frobenius(x[0]), gf_frobenius(x[1]), gf_frobenius(x[2]), gf_frobenius(x[3])};
}

inline int point_degree(const P1Point<GfField>& p) { return std::lcm(definition_degree(p.s), definition_degree(p.t)); }

inline int point_degree(const Vec4<GfField>& x) {
  int d = 1;
  for (const Gf& v : x) d = std::lcm(d, definition_degree(v));
  return d;
}

}  // namespace detail

// Degrees m <= m_max not dividing a larger one in range; their fields cover every smaller field.
inline std::vector<int> maximal_extension_degrees(int m_max) {
  std::vector<int> out;
  for (int m = 1; m <= m_max; ++m)
    if (2 * m > m_max) out.push_back(m);
  return out;
}

// Exhaustive search of curve points over F_{q^m}, m <= m_max, one fiber solve per Frobenius orbit of base points.
inline SingularityReport singular_scan(const Section<GfField>& sec, ScanOptions opt = {}) {
  const GfField& K0 = sec.field;
  if (K0.degree() != 1) throw InvalidInput("singular_scan expects a section over a prime field");
  if (opt.m_max < 1 || opt.m_max > 4) throw InvalidInput("m_max must lie in 1..4");
  SingularityReport rep;
  rep.p = K0.characteristic();
  rep.m_max = opt.m_max;
  auto degrees = maximal_extension_degrees(opt.m_max);

  for (int m : degrees) {
    GfField K(rep.p, m);
    Section<GfField> ext = m == 1 ? sec : embed(sec, K);
    auto first_scan_for = [&](int d) {
      for (int mm : degrees)
        if (mm % d == 0) return mm == m;
      return false;
    };

    auto handle = [&](const P1Point<GfField>& p) -> bool {
      ++rep.fibers;
      auto [A0, A1] = specialize_with_slope(ext, p);
      auto q = fiber_quadrics(A0);
      auto sol = solve_fiber_quadrics(K, q);
      if (sol.degenerate) {
        rep.status = ScanStatus::Degenerate;
        rep.degenerate_fiber = p;
        return false;
      }
      if (sol.points.empty()) return true;
      auto dq = quadrics_u_derivative(A0, A1);
      int pd = detail::point_degree(p);
      for (const auto& pt : sol.points) {
        int rk = jacobian_rank(K, q, dq, pt.x);
        P1Point<GfField> pp = p;
        Vec4<GfField> xx = pt.x;
        int deg = std::lcm(pd, detail::point_degree(pt.x));
        bool record = first_scan_for(deg);
        for (int k = 0; k < pd; ++k) {
          if (record) {
            ScannedPoint sp{{pp, xx}, rk, pt.multiplicity, deg};
            ++rep.curve_points;
            if (rk <= 2) rep.singular.push_back(sp);
            if (rk <= 2 || opt.keep_smooth_points) rep.points.push_back(sp);
          }
          pp = detail::frobenius(pp);
          xx = detail::frobenius(xx);
        }
      }
      return true;
    };

    if (!handle(P1Point<GfField>::infinity(K))) return rep;
    for (uint64_t code = 0; code < K.size(); ++code) {
      Gf t = K.from_code(code);
      if (m > 1) {
        // orbit representative: smallest code among the conjugates
        bool rep_ok = true;
        Gf y = gf_frobenius(t);
        for (int k = 1; k < m && rep_ok; ++k, y = gf_frobenius(y))
          if (y.code() < code) rep_ok = false;
        if (!rep_ok) continue;
      }
      if (!handle(P1Point<GfField>::affine(K, t))) return rep;
    }
  }
  rep.status = rep.singular.empty() ? ScanStatus::SmoothScanned : ScanStatus::SingularAt;
  return rep;
}

inline SingularityReport singular_scan(const Section<QField>&, ScanOptions = {}) {
  throw InvalidInput("singular_scan requires a finite field section");
}

// The congruence hypotheses for the (I,J,K) singular shape at p.
template <class F>
bool shape_singular_check(const Section<F>& sec, const P1Point<F>& p, const Triple& t) {
  if (!valid_triple(t)) throw InvalidInput("triple out of range");
  int I = t.i, J = t.j, K = t.k;
  if (order_at(sec.a(K, I, J), p) < 2) return false;
  for (int k = 1; k <= 4; ++k)
    if (order_at(sec.a(k, I, J), p) < 1) return false;
  for (int j = 1; j <= 5; ++j)
    if (j != I && order_at(sec.a(K, I, j), p) < 1) return false;
  for (int i = 1; i <= 5; ++i)
    if (i != J && order_at(sec.a(K, i, J), p) < 1) return false;
  return true;
}

inline bool fin_active(const BundlePair& bp) { return theorem15_check(bp).fin_active; }

// Roots of a^(1)_25 on a pair where d15^(1), d24^(1), d12^(4) < 0; each is a (1,2,1)-shaped singular base point.
template <class F>
std::vector<P1Point<F>> fin_witnesses(const Section<F>& sec) {
  if (!fin_active(sec.base)) throw InvalidInput("fin witnesses need d15^(1), d24^(1), d12^(4) all negative");
  const auto& a25 = sec.a(1, 2, 5);
  if (a25.is_zero()) throw DegenerateInput("a^(1)_25 vanishes identically; every base point is a witness");
  std::vector<P1Point<F>> out;
  for (const auto& r : roots_in_field(a25)) out.push_back(r.point);
  return out;
}

template <class F>
Matrix<F> section_matrix_at(const ConstQuad<F>& A, const Vec4<F>& x) {
  return A.combine(std::vector<typename F::Elem>(x.begin(), x.end()));
}

// 2x2 minors of rows (1,2) x columns (3,4,5) of A(x) at curve points, and the x1 coefficient of A(x)_25.
template <class F>
bool fin_minor_check(const Section<F>& sec, const std::vector<FiberPoint<F>>& points) {
  auto v = theorem15_check(sec.base);
  if (!v.fin_active || !v.satisfied()) throw InvalidInput("fin_minor_check needs a pair on the fin");
  const auto& a25 = sec.a(1, 2, 5);
  if (a25.is_zero() || a25.deg() != 0) return false;
  const F& K = sec.field;
  for (const auto& fp : points) {
    require_same_field(K, fp.p.field);
    Matrix<F> M = section_matrix_at(specialize_fiber(sec, fp.p), fp.x);
    for (int c1 = 2; c1 < 5; ++c1)
      for (int c2 = c1 + 1; c2 < 5; ++c2)
        if (!K.is_zero(M(0, c1) * M(1, c2) - M(0, c2) * M(1, c1))) return false;
  }
  return true;
}

}  // namespace quintic
