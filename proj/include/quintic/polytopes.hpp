#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "quintic/bundles.hpp"
#include "quintic/linalg.hpp"

namespace quintic {

using Rat = mpq_class;
using RationalPoint = std::vector<Rat>;

enum class Rel { Le, Eq, Lt };

struct Constraint {
  std::vector<Rat> a;
  Rel rel = Rel::Le;
  Rat b = 0;
  Rat lhs(const RationalPoint& x) const {
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i)
      if (sgn(a[i]) != 0) s += a[i] * x[i];
    return s;
  }
  bool holds(const RationalPoint& x) const {
    Rat v = lhs(x);
    switch (rel) {
      case Rel::Le: return v <= b;
      case Rel::Eq: return v == b;
      case Rel::Lt: return v < b;
    }
    return false;
  }
};

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct UnboundedRegion : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct LinearRegion {
  int dim = 0;
  std::vector<Constraint> cons;

  explicit LinearRegion(int n = 0) : dim(n) {}

  LinearRegion& add(std::vector<Rat> a, Rel rel, Rat b) {
    if (static_cast<int>(a.size()) != dim) throw DimensionMismatch("constraint length differs from ambient dimension");
    cons.push_back({std::move(a), rel, std::move(b)});
    return *this;
  }

  bool contains(const RationalPoint& x) const {
    if (static_cast<int>(x.size()) != dim) throw DimensionMismatch("point dimension differs from region dimension");
    for (const auto& c : cons)
      if (!c.holds(x)) return false;
    return true;
  }

  LinearRegion closure() const {
    LinearRegion r = *this;
    for (auto& c : r.cons)
      if (c.rel == Rel::Lt) c.rel = Rel::Le;
    return r;
  }

  bool has_strict() const {
    return std::any_of(cons.begin(), cons.end(), [](const Constraint& c) { return c.rel == Rel::Lt; });
  }

  // Substitute fixed values for the first m coordinates.
  LinearRegion restrict_prefix(const RationalPoint& head) const {
    int m = static_cast<int>(head.size());
    if (m > dim) throw DimensionMismatch("prefix longer than the ambient dimension");
    LinearRegion r(dim - m);
    for (const auto& c : cons) {
      Rat b = c.b;
      for (int i = 0; i < m; ++i) b -= c.a[i] * head[i];
      r.cons.push_back({std::vector<Rat>(c.a.begin() + m, c.a.end()), c.rel, b});
    }
    return r;
  }
};

namespace detail {

inline std::vector<Rat> unit(int n, std::initializer_list<std::pair<int, int>> terms) {
  std::vector<Rat> a(n, Rat(0));
  for (auto [i, c] : terms) a[i] += c;
  return a;
}

// Solve the square-or-tall system rows * x = rhs; empty when singular or inconsistent.
inline std::optional<RationalPoint> unique_solution(const std::vector<const Constraint*>& rows, int n) {
  QField Q;
  Matrix<QField> m(Q, static_cast<int>(rows.size()), n + 1);
  for (size_t r = 0; r < rows.size(); ++r) {
    for (int c = 0; c < n; ++c) m(static_cast<int>(r), c) = rows[r]->a[c];
    m(static_cast<int>(r), n) = rows[r]->b;
  }
  auto piv = rref(m);
  if (static_cast<int>(piv.size()) != n) return std::nullopt;  // rank deficient or pivot in rhs column
  for (int c : piv)
    if (c == n) return std::nullopt;
  RationalPoint x(n);
  for (int r = 0; r < n; ++r) x[piv[r]] = m(r, n);
  return x;
}

template <class Fn>
void for_each_subset(int m, int k, Fn&& fn) {
  if (k < 0 || k > m) return;
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  for (;;) {
    fn(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == m - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace detail

// Recession cone {d : equalities give 0, inequalities give <= 0} is trivial.
inline bool is_bounded(const LinearRegion& region) {
  const int n = region.dim;
  QField Q;
  Matrix<QField> all(Q, static_cast<int>(region.cons.size()), n);
  for (size_t r = 0; r < region.cons.size(); ++r)
    for (int c = 0; c < n; ++c) all(static_cast<int>(r), c) = region.cons[r].a[c];
  if (rank(all) < n) return false;  // a line in the cone
  std::vector<const Constraint*> eqs, ineqs;
  for (const auto& c : region.cons) (c.rel == Rel::Eq ? eqs : ineqs).push_back(&c);
  auto in_cone = [&](const RationalPoint& d) {
    for (const auto& c : region.cons) {
      Rat v = c.lhs(d);
      if (c.rel == Rel::Eq ? v != 0 : v > 0) return false;
    }
    return true;
  };
  bool bounded = true;
  int k = n - 1 - static_cast<int>(eqs.size());
  if (k < 0) k = 0;
  // Extreme rays of a pointed cone are cut out by n-1 independent tight rows.
  detail::for_each_subset(static_cast<int>(ineqs.size()), k, [&](const std::vector<int>& s) {
    if (!bounded) return;
    Matrix<QField> m(Q, static_cast<int>(eqs.size() + s.size()), n);
    int r = 0;
    for (auto* c : eqs) { for (int j = 0; j < n; ++j) m(r, j) = c->a[j]; ++r; }
    for (int i : s) { for (int j = 0; j < n; ++j) m(r, j) = ineqs[i]->a[j]; ++r; }
    auto ns = nullspace(m);
    if (ns.size() != 1) return;
    RationalPoint d(ns[0].begin(), ns[0].end());
    RationalPoint neg = d;
    for (auto& v : neg) v = -v;
    if (in_cone(d) || in_cone(neg)) bounded = false;
  });
  return bounded;
}

// Vertices of the closure of a bounded region, by basis enumeration over tight constraint sets.
inline std::vector<RationalPoint> vertices(const LinearRegion& region) {
  LinearRegion closed = region.closure();
  if (!is_bounded(closed)) throw UnboundedRegion("vertex enumeration needs a bounded region");
  const int n = closed.dim;
  std::vector<const Constraint*> eqs, ineqs;
  for (const auto& c : closed.cons) (c.rel == Rel::Eq ? eqs : ineqs).push_back(&c);
  QField Q;
  Matrix<QField> em(Q, static_cast<int>(eqs.size()), n);
  for (size_t r = 0; r < eqs.size(); ++r)
    for (int c = 0; c < n; ++c) em(static_cast<int>(r), c) = eqs[r]->a[c];
  int k = n - (eqs.empty() ? 0 : rank(em));
  std::set<RationalPoint> found;
  detail::for_each_subset(static_cast<int>(ineqs.size()), k, [&](const std::vector<int>& s) {
    std::vector<const Constraint*> rows = eqs;
    for (int i : s) rows.push_back(ineqs[i]);
    auto x = detail::unique_solution(rows, n);
    if (x && closed.contains(*x)) found.insert(*x);
  });
  return {found.begin(), found.end()};
}

// ---- the regions ----

// Coordinates: e1..e4 at 0..3, f1..f5 at 4..8. Rhs scale by `level` (1 = the normalized region).
inline int ecoord(int k) { return k - 1; }
inline int fcoord(int i) { return 3 + i; }

// d_ij^(k) >= 0 written as -(f_i + f_j + e_k) <= -level.
inline Constraint d_constraint(int i, int j, int k, Rel rel, const Rat& level, bool negative = false) {
  auto a = detail::unit(9, {{fcoord(i), 1}, {fcoord(j), 1}, {ecoord(k), 1}});
  if (rel == Rel::Eq) return {a, Rel::Eq, level};
  if (negative) return {a, rel, level};  // d < 0
  for (auto& v : a) v = -v;
  return {a, rel, -level};
}

inline LinearRegion p_region(const Rat& level = 1) {
  LinearRegion r(4);
  for (int k = 1; k < 4; ++k) r.add(detail::unit(4, {{k - 1, 1}, {k, -1}}), Rel::Le, 0);
  for (int k = 1; k <= 4; ++k)
    for (int l = k; k + l <= 4; ++l) r.add(detail::unit(4, {{k + l - 1, 1}, {k - 1, -1}, {l - 1, -1}}), Rel::Le, 0);
  r.add(detail::unit(4, {{0, -1}}), Rel::Le, 0);
  r.add(detail::unit(4, {{0, 1}, {1, 1}, {2, 1}, {3, 1}}), Rel::Eq, level);
  return r;
}

inline LinearRegion q_base_region(const Rat& level = 1) {
  LinearRegion r(9);
  for (int k = 1; k < 4; ++k) r.add(detail::unit(9, {{ecoord(k), 1}, {ecoord(k + 1), -1}}), Rel::Le, 0);
  for (int i = 1; i < 5; ++i) r.add(detail::unit(9, {{fcoord(i), 1}, {fcoord(i + 1), -1}}), Rel::Le, 0);
  r.add(detail::unit(9, {{0, 1}, {1, 1}, {2, 1}, {3, 1}}), Rel::Eq, level);
  r.add(detail::unit(9, {{4, 1}, {5, 1}, {6, 1}, {7, 1}, {8, 1}}), Rel::Eq, 2 * level);
  for (const Triple& t : linear_condition_triples()) r.cons.push_back(d_constraint(t.i, t.j, t.k, Rel::Le, level));
  return r;
}

// Piece t in 1..4; piece 4 is the fin.
inline LinearRegion q_piece(int t, const Rat& level = 1) {
  LinearRegion r = q_base_region(level);
  switch (t) {
    case 1: r.cons.push_back(d_constraint(1, 5, 1, Rel::Le, level)); break;
    case 2: r.cons.push_back(d_constraint(2, 4, 1, Rel::Le, level)); break;
    case 3: r.cons.push_back(d_constraint(1, 2, 4, Rel::Le, level)); break;
    case 4:
      r.cons.push_back(d_constraint(1, 5, 1, Rel::Lt, level, true));
      r.cons.push_back(d_constraint(2, 4, 1, Rel::Lt, level, true));
      r.cons.push_back(d_constraint(1, 2, 4, Rel::Lt, level, true));
      r.cons.push_back(d_constraint(2, 5, 1, Rel::Eq, level));
      break;
    default: throw InvalidInput("Q piece index must lie in 1..4");
  }
  return r;
}

// f2 + f5 + e1 = sum(e), i.e. d_25^(1) = 0, on top of the base conditions.
inline LinearRegion q_prime_region(const Rat& level = 1) {
  LinearRegion r = q_base_region(level);
  r.cons.push_back(d_constraint(2, 5, 1, Rel::Eq, level));
  return r;
}

struct ConditionalRegion {
  std::array<LinearRegion, 4> pieces;
  LinearRegion base;
};

inline ConditionalRegion q_region(const Rat& level = 1) {
  return {{q_piece(1, level), q_piece(2, level), q_piece(3, level), q_piece(4, level)}, p_region(level)};
}

struct QMembership {
  std::array<bool, 4> pieces{};
  bool in() const { return pieces[0] || pieces[1] || pieces[2] || pieces[3]; }
};

inline QMembership membership(const RationalPoint& x, const ConditionalRegion& q) {
  if (x.size() != 9) throw DimensionMismatch("Q lives in R^9");
  QMembership m;
  for (int t = 0; t < 4; ++t) m.pieces[t] = q.pieces[t].contains(x);
  return m;
}

inline const ConditionalRegion& q_normalized() {
  static const ConditionalRegion q = q_region(1);
  return q;
}

inline RationalPoint scaled_point(const BundlePair& bp) {
  RationalPoint x;
  Rat L = bp.level();
  for (int v : bp.e) x.push_back(Rat(v) / L);
  for (int v : bp.f) x.push_back(Rat(v) / L);
  for (auto& v : x) v.canonicalize();
  return x;
}

inline QMembership scaled_membership(const BundlePair& bp) { return membership(scaled_point(bp), q_normalized()); }

// ---- lattice points ----

// Sorted n-tuples with entries >= lo summing to total.
template <size_t N, class Fn>
void for_each_sorted(int total, int lo, Fn&& fn) {
  std::array<int, N> v{};
  std::function<void(size_t, int, int)> rec = [&](size_t pos, int min, int rest) {
    if (pos == N - 1) {
      if (rest >= min) {
        v[pos] = rest;
        fn(v);
      }
      return;
    }
    int slots = static_cast<int>(N - pos);
    for (int x = min; x * slots <= rest; ++x) {
      v[pos] = x;
      rec(pos + 1, x, rest - x);
    }
  };
  rec(0, lo, total);
}

inline RationalPoint to_point(const std::array<int, 4>& e) { return {Rat(e[0]), Rat(e[1]), Rat(e[2]), Rat(e[3])}; }

inline RationalPoint to_point(const std::array<int, 4>& e, const std::array<int, 5>& f) {
  RationalPoint x = to_point(e);
  for (int v : f) x.push_back(Rat(v));
  return x;
}

// Sorted tuples summing to the level; P forces e1 >= 0.
inline std::vector<std::array<int, 4>> p_integer_points(int level) {
  if (level < 1) throw InvalidInput("level must be at least 1");
  LinearRegion P = p_region(level);
  std::vector<std::array<int, 4>> out;
  for_each_sorted<4>(level, 0, [&](const std::array<int, 4>& e) {
    if (P.contains(to_point(e))) out.push_back(e);
  });
  return out;
}

struct QPoint {
  std::array<int, 4> e;
  std::array<int, 5> f;
  QMembership where;
  bool operator<(const QPoint& o) const { return std::tie(e, f) < std::tie(o.e, o.f); }
};

// The conditions force e1 >= 0 and f1 >= e1 (sum d_34^(1), d_25^(1) and d_13^(4), d_14^(3), d_15^(2)),
// so the box e1 >= lo_e, f1 >= lo_f with lo = 0 already covers Q; lower bounds are exposed for audits.
inline std::vector<QPoint> q_integer_points(int level, std::array<bool, 4> use = {true, true, true, true}, int lo_e = 0,
                                            int lo_f = 0) {
  if (level < 1) throw InvalidInput("level must be at least 1");
  ConditionalRegion Q = q_region(level);
  std::vector<QPoint> out;
  for_each_sorted<4>(level, lo_e, [&](const std::array<int, 4>& e) {
    for_each_sorted<5>(2 * level, lo_f, [&](const std::array<int, 5>& f) {
      QMembership m = membership(to_point(e, f), Q);
      for (int t = 0; t < 4; ++t) m.pieces[t] = m.pieces[t] && use[t];
      if (m.in()) out.push_back({e, f, m});
    });
  });
  return out;
}

struct ProjectionLevel {
  int level = 0;
  size_t p_points = 0, q_points = 0, projected = 0;
  std::vector<std::array<int, 4>> p_only, q_only;
  bool ok() const { return p_only.empty() && q_only.empty(); }
};

struct ProjectionReport {
  int g_max = 0;
  std::vector<ProjectionLevel> levels;
  bool ok() const {
    return std::all_of(levels.begin(), levels.end(), [](const ProjectionLevel& l) { return l.ok(); });
  }
};

inline ProjectionReport verify_projection(int g_max, std::array<bool, 4> use = {true, true, true, true}) {
  if (g_max < 0) throw InvalidInput("g_max must be nonnegative");
  ProjectionReport rep;
  rep.g_max = g_max;
  for (int g = 0; g <= g_max; ++g) {
    ProjectionLevel lv;
    lv.level = g + 4;
    auto P = p_integer_points(lv.level);
    auto Qp = q_integer_points(lv.level, use);
    std::set<std::array<int, 4>> ps(P.begin(), P.end()), qs;
    for (const auto& q : Qp) qs.insert(q.e);
    lv.p_points = ps.size();
    lv.q_points = Qp.size();
    lv.projected = qs.size();
    std::set_difference(ps.begin(), ps.end(), qs.begin(), qs.end(), std::back_inserter(lv.p_only));
    std::set_difference(qs.begin(), qs.end(), ps.begin(), ps.end(), std::back_inserter(lv.q_only));
    rep.levels.push_back(std::move(lv));
  }
  return rep;
}

// ---- monoid generators and lifts ----

inline bool in_monoid(const std::array<int, 4>& e) {
  if (e[0] < 0 || !std::is_sorted(e.begin(), e.end())) return false;
  return subadditive(e);
}

inline constexpr int kGeneratorBound = 4;
inline constexpr int kGeneratorAuditBound = 8;

namespace detail {

inline std::vector<std::array<int, 4>> monoid_box(int bound) {
  std::vector<std::array<int, 4>> out;
  for (int a = 0; a <= bound; ++a)
    for (int b = a; b <= bound; ++b)
      for (int c = b; c <= bound; ++c)
        for (int d = c; d <= bound; ++d) {
          std::array<int, 4> e{a, b, c, d};
          if (d > 0 && in_monoid(e)) out.push_back(e);
        }
  return out;
}

inline std::array<int, 4> minus(const std::array<int, 4>& a, const std::array<int, 4>& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]};
}

inline bool is_zero4(const std::array<int, 4>& a) { return a == std::array<int, 4>{}; }

}  // namespace detail

struct GeneratorAuditFailure : std::logic_error {
  using std::logic_error::logic_error;
};

// Decomposition into the given generators, trying them in order (first success wins).
inline std::optional<std::vector<int>> decompose(const std::array<int, 4>& e, const std::vector<std::array<int, 4>>& gens) {
  std::map<std::array<int, 4>, std::optional<std::vector<int>>> memo;
  std::function<std::optional<std::vector<int>>(const std::array<int, 4>&)> rec =
      [&](const std::array<int, 4>& x) -> std::optional<std::vector<int>> {
    if (detail::is_zero4(x)) return std::vector<int>{};
    if (auto it = memo.find(x); it != memo.end()) return it->second;
    std::optional<std::vector<int>> res;
    for (size_t i = 0; i < gens.size() && !res; ++i) {
      auto rest = detail::minus(x, gens[i]);
      if (!detail::is_zero4(rest) && !in_monoid(rest)) continue;
      if (auto sub = rec(rest)) {
        sub->insert(sub->begin(), static_cast<int>(i));
        res = std::move(sub);
      }
    }
    memo[x] = res;
    return res;
  };
  return rec(e);
}

// Irreducible elements of P ∩ Z^4 with entries <= 4; every monoid element with entries <= 8 is checked to decompose.
inline std::vector<std::array<int, 4>> irreducible_generators() {
  auto box = detail::monoid_box(kGeneratorBound);
  std::vector<std::array<int, 4>> gens;
  for (const auto& e : box) {
    bool reducible = false;
    for (const auto& a : box) {
      auto b = detail::minus(e, a);
      if (!detail::is_zero4(b) && !detail::is_zero4(a) && std::all_of(b.begin(), b.end(), [](int v) { return v >= 0; }) &&
          in_monoid(b) && b[3] > 0) {
        reducible = true;
        break;
      }
    }
    if (!reducible) gens.push_back(e);
  }
  for (const auto& e : detail::monoid_box(kGeneratorAuditBound))
    if (!decompose(e, gens)) throw GeneratorAuditFailure("monoid element outside the span of the bounded generators");
  return gens;
}

struct GeneratorLift {
  std::array<int, 4> e;
  std::array<int, 5> f;
};

inline const std::vector<GeneratorLift>& generator_lifts() {
  static const std::vector<GeneratorLift> table = {
      {{1, 1, 1, 1}, {1, 1, 2, 2, 2}}, {{1, 1, 1, 2}, {2, 2, 2, 2, 2}}, {{1, 1, 2, 2}, {2, 2, 2, 3, 3}},
      {{1, 2, 2, 2}, {2, 3, 3, 3, 3}}, {{1, 2, 2, 3}, {2, 3, 3, 4, 4}}, {{1, 2, 3, 3}, {2, 3, 4, 4, 5}},
      {{1, 2, 3, 4}, {2, 3, 4, 5, 6}},
  };
  return table;
}

struct NotInMonoid : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline bool in_q_prime(const std::array<int, 4>& e, const std::array<int, 5>& f) {
  int L = std::accumulate(e.begin(), e.end(), 0);
  return q_prime_region(L).contains(to_point(e, f));
}

inline bool in_q(const std::array<int, 4>& e, const std::array<int, 5>& f) {
  int L = std::accumulate(e.begin(), e.end(), 0);
  return membership(to_point(e, f), q_region(L)).in();
}

struct LiftResult {
  std::array<int, 5> f{};
  std::vector<int> decomposition;  // indices into generator_lifts()
};

inline LiftResult lift_scrollar_detailed(const std::array<int, 4>& e) {
  if (!in_monoid(e)) throw NotInMonoid("e is not in the scrollar monoid (sorted, e1 >= 0, subadditive)");
  const auto& table = generator_lifts();
  std::vector<std::array<int, 4>> gens;
  for (const auto& g : table) gens.push_back(g.e);
  auto dec = decompose(e, gens);
  if (!dec) throw NotInMonoid("e does not decompose into generators");
  LiftResult r;
  r.decomposition = *dec;
  for (int i : *dec)
    for (int c = 0; c < 5; ++c) r.f[c] += table[i].f[c];
  std::sort(r.f.begin(), r.f.end());
  if (!detail::is_zero4(e) && (!in_q(e, r.f) || !in_q_prime(e, r.f))) throw std::logic_error("lift left Q'");
  return r;
}

inline std::array<int, 5> lift_scrollar(const std::array<int, 4>& e) { return lift_scrollar_detailed(e).f; }

// ---- densities ----

inline Rat density_objective(const RationalPoint& x) {
  Rat v = 1, pos = 0, spread = 0;
  for (int i = 1; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j) {
      for (int k = 1; k <= 4; ++k) {
        Rat t = 1 - x[fcoord(i)] - x[fcoord(j)] - x[ecoord(k)];
        if (t > 0) pos += t;
      }
      spread += x[fcoord(j)] - x[fcoord(i)];
    }
  for (int k = 1; k <= 4; ++k)
    for (int l = k + 1; l <= 4; ++l) spread += x[ecoord(l)] - x[ecoord(k)];
  v += pos / 2 - spread / 2;
  v.canonicalize();
  return v;
}

inline bool in_v5(const RationalPoint& eb) { return p_region(1).contains(eb); }

struct DensityResult {
  Rat value = 0;
  bool in_support = false;
  RationalPoint argmax;  // full 9-vector of the maximizing vertex
  int piece = 0;
};

inline DensityResult rho_geo_detailed(const RationalPoint& eb) {
  if (eb.size() != 4) throw DimensionMismatch("rho_geo takes a point of R^4");
  if (!std::is_sorted(eb.begin(), eb.end())) throw InvalidInput("e-bar must be sorted");
  if (std::accumulate(eb.begin(), eb.end(), Rat(0)) != 1) throw InvalidInput("e-bar must sum to 1");
  DensityResult r;
  if (!in_v5(eb)) return r;
  r.in_support = true;
  bool any = false;
  for (int t = 1; t <= 4; ++t) {
    LinearRegion fiber = q_piece(t, 1).closure().restrict_prefix(eb);
    for (const auto& fv : vertices(fiber)) {
      RationalPoint x = eb;
      x.insert(x.end(), fv.begin(), fv.end());
      Rat v = density_objective(x);
      if (!any || v > r.value) {
        r.value = v;
        r.argmax = x;
        r.piece = t;
        any = true;
      }
    }
  }
  if (!any) throw std::logic_error("empty Q fiber over a point of the support");
  return r;
}

inline Rat rho_geo(const RationalPoint& eb) { return rho_geo_detailed(eb).value; }

struct Window {
  std::array<Rat, 4> lo, hi;  // closed box
  bool contains(const RationalPoint& x) const {
    for (int i = 0; i < 4; ++i)
      if (x[i] < lo[i] || x[i] > hi[i]) return false;
    return true;
  }
  static Window full() {
    Window w;
    for (int i = 0; i < 4; ++i) w.lo[i] = 0, w.hi[i] = 1;
    return w;
  }
  static Window point(const RationalPoint& x) {
    Window w;
    for (int i = 0; i < 4; ++i) w.lo[i] = w.hi[i] = x[i];
    return w;
  }
};

// Sorted f with sum 2L satisfying the realizability criterion, enumerated with the bounds e1 <= f1 <= 2 e1.
template <class Fn>
void for_each_realizable_f(const std::array<int, 4>& e, Fn&& fn) {
  const int L = std::accumulate(e.begin(), e.end(), 0);
  BundlePair bp{L - 4, e, {}};
  std::array<int, 5>& f = bp.f;
  for (f[0] = e[0]; f[0] <= 2 * e[0]; ++f[0])
    for (f[1] = f[0]; 4 * f[1] <= 2 * L - f[0]; ++f[1])
      for (f[2] = std::max(f[1], L - e[3] - f[0]); 3 * f[2] <= 2 * L - f[0] - f[1]; ++f[2])
        for (f[3] = std::max(f[2], L - e[2] - f[0]); 2 * f[3] <= 2 * L - f[0] - f[1] - f[2]; ++f[3]) {
          f[4] = 2 * L - f[0] - f[1] - f[2] - f[3];
          if (theorem15_check(bp).satisfied()) fn(bp);
        }
}

struct PiGeoResult {
  Rat value;
  std::optional<BundlePair> argmax;
};

// Largest normalized stratum dimension with e/(g+4) in the window; -1/(2g+8) when there is none.
inline PiGeoResult pi_geo_finite_detailed(const Window& w, int g) {
  if (g < 0) throw InvalidInput("genus must be nonnegative");
  const int L = g + 4;
  long best = -1;
  std::optional<BundlePair> arg;
  for_each_sorted<4>(L, 1, [&](const std::array<int, 4>& e) {
    RationalPoint eb;
    for (int v : e) eb.push_back(Rat(v, L));
    for (auto& v : eb) v.canonicalize();
    if (!w.contains(eb)) return;
    for_each_realizable_f(e, [&](const BundlePair& bp) {
      long dim = 2L * L - codim_HEF_unchecked(bp);
      if (dim > best) {
        best = dim;
        arg = bp;
      }
    });
  });
  Rat v(best, 2 * L);
  v.canonicalize();
  return {v, arg};
}

inline Rat pi_geo_finite(const Window& w, int g) { return pi_geo_finite_detailed(w, g).value; }

}  // namespace quintic
