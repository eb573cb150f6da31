#pragma once

#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "quintic/field.hpp"
#include "quintic/upoly.hpp"

namespace quintic {

inline constexpr int kInfiniteOrder = std::numeric_limits<int>::max();

struct DegenerateInput : std::domain_error {
  using std::domain_error::domain_error;
};

// A point of the projective line, stored as (1, t0) or (0, 1).
template <class F>
struct P1Point {
  using E = typename F::Elem;
  F field;
  E s, t;

  static P1Point make(const F& K, const E& s0, const E& t0) {
    if (K.is_zero(s0) && K.is_zero(t0)) throw InvalidInput("(0,0) is not a point of the projective line");
    if (K.is_zero(s0)) return P1Point{K, K.zero(), K.one()};
    return P1Point{K, K.one(), t0 / s0};
  }
  static P1Point affine(const F& K, const E& t0) { return P1Point{K, K.one(), t0}; }
  static P1Point infinity(const F& K) { return P1Point{K, K.zero(), K.one()}; }

  bool at_infinity() const { return field.is_zero(s); }
  bool operator==(const P1Point& o) const { return field == o.field && s == o.s && t == o.t; }
  bool operator!=(const P1Point& o) const { return !(*this == o); }
};

// Homogeneous form sum_m coeffs[m] s^(deg-m) t^m. The zero form has deg = -1 and
// no coefficients; every constructor normalizes an all-zero vector to it.
template <class F>
class BinaryForm {
 public:
  using E = typename F::Elem;

  BinaryForm() = default;
  explicit BinaryForm(const F& K) : field_(K) {}
  BinaryForm(const F& K, std::vector<E> coeffs) : field_(K), c_(std::move(coeffs)) { normalize(); }

  static BinaryForm zero(const F& K) { return BinaryForm(K); }
  static BinaryForm constant(const F& K, const E& a) { return BinaryForm(K, {a}); }
  static BinaryForm s_form(const F& K) { return BinaryForm(K, {K.one(), K.zero()}); }
  static BinaryForm t_form(const F& K) { return BinaryForm(K, {K.zero(), K.one()}); }
  // a*s + b*t
  static BinaryForm linear(const F& K, const E& a, const E& b) { return BinaryForm(K, {a, b}); }

  const F& field() const { return field_; }
  int deg() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<E>& coeffs() const { return c_; }
  E coeff(int m) const { return m >= 0 && m <= deg() ? c_[m] : field_.zero(); }

  bool operator==(const BinaryForm& o) const { return c_ == o.c_; }
  bool operator!=(const BinaryForm& o) const { return !(*this == o); }

  friend BinaryForm operator+(const BinaryForm& a, const BinaryForm& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.deg() != b.deg()) throw std::invalid_argument("adding forms of different degrees");
    std::vector<E> r(a.c_.size(), a.field_.zero());
    for (size_t i = 0; i < r.size(); ++i) r[i] = a.c_[i] + b.c_[i];
    return BinaryForm(a.field_, std::move(r));
  }
  friend BinaryForm operator-(const BinaryForm& a) {
    std::vector<E> r;
    r.reserve(a.c_.size());
    for (const auto& v : a.c_) r.push_back(-v);
    return BinaryForm(a.field_, std::move(r));
  }
  friend BinaryForm operator-(const BinaryForm& a, const BinaryForm& b) { return a + (-b); }
  friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
    if (a.is_zero() || b.is_zero()) return zero(a.field_);
    std::vector<E> r(a.c_.size() + b.c_.size() - 1, a.field_.zero());
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (a.field_.is_zero(a.c_[i])) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    }
    return BinaryForm(a.field_, std::move(r));
  }
  BinaryForm scaled(const E& k) const {
    std::vector<E> r;
    r.reserve(c_.size());
    for (const auto& v : c_) r.push_back(v * k);
    return BinaryForm(field_, std::move(r));
  }
  BinaryForm pow(int e) const {
    BinaryForm r = constant(field_, field_.one());
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
  }
  // The dehomogenization at s = 1 as a polynomial in t.
  UPoly<F> affine_part() const { return UPoly<F>(field_, c_); }

 private:
  void normalize() {
    for (const auto& v : c_)
      if (!field_.is_zero(v)) return;
    c_.clear();
  }
  F field_;
  std::vector<E> c_;
};

template <class F>
void require_same_field(const F& a, const F& b) {
  if (a != b) throw FieldMismatch("operands live over different fields");
}

template <class F>
typename F::Elem eval_form(const BinaryForm<F>& f, const P1Point<F>& pt) {
  if (f.is_zero()) return pt.field.zero();
  require_same_field(f.field(), pt.field);
  const F& K = pt.field;
  if (pt.at_infinity()) return f.coeff(f.deg());
  typename F::Elem r = K.zero();
  for (int m = f.deg(); m >= 0; --m) r = r * pt.t + f.coeffs()[m];
  return r;
}

// The uniformizer u (t - t0 s, or s at infinity) and the unit form w (s, or t at
// infinity); every form of degree d equals sum_k c_k u^k w^(d-k) with c_k the
// local expansion coefficients.
template <class F>
BinaryForm<F> uniformizer_form(const P1Point<F>& p) {
  const F& K = p.field;
  if (p.at_infinity()) return BinaryForm<F>::s_form(K);
  return BinaryForm<F>::linear(K, -p.t, K.one());
}

template <class F>
BinaryForm<F> unit_form(const P1Point<F>& p) {
  const F& K = p.field;
  if (p.at_infinity()) return BinaryForm<F>::t_form(K);
  return BinaryForm<F>::s_form(K);
}

// Taylor coefficients of f in the uniformizer at p, length deg+1.
template <class F>
std::vector<typename F::Elem> local_expansion(const BinaryForm<F>& f, const P1Point<F>& p) {
  if (f.is_zero()) return {};
  require_same_field(f.field(), p.field);
  int d = f.deg();
  std::vector<typename F::Elem> out;
  if (p.at_infinity()) {
    for (int k = 0; k <= d; ++k) out.push_back(f.coeffs()[d - k]);
    return out;
  }
  std::vector<typename F::Elem> a = f.coeffs();
  for (int k = 0; k <= d; ++k) {
    // synthetic division of a[k..d] by (t - t0); remainder is the k-th coefficient
    for (int m = d - 1; m >= k; --m) a[m] = a[m] + a[m + 1] * p.t;
    out.push_back(a[k]);
  }
  return out;
}

template <class F>
int order_at(const BinaryForm<F>& f, const P1Point<F>& p) {
  if (f.is_zero()) return kInfiniteOrder;
  auto ex = local_expansion(f, p);
  int k = 0;
  while (k < static_cast<int>(ex.size()) && p.field.is_zero(ex[k])) ++k;
  return k;
}

// Local coefficient of u^k at p (zero beyond the degree).
template <class F>
typename F::Elem local_coeff(const BinaryForm<F>& f, const P1Point<F>& p, int k) {
  if (f.is_zero() || k > f.deg()) return p.field.zero();
  return local_expansion(f, p)[k];
}

// Exact quotient f / u; throws if u does not divide f.
template <class F>
BinaryForm<F> divide_by_uniformizer(const BinaryForm<F>& f, const P1Point<F>& p) {
  if (f.is_zero()) return f;
  require_same_field(f.field(), p.field);
  const F& K = p.field;
  int d = f.deg();
  if (d == 0) throw std::domain_error("uniformizer does not divide the form");
  std::vector<typename F::Elem> q(d, K.zero());
  if (p.at_infinity()) {
    if (!K.is_zero(f.coeffs()[d])) throw std::domain_error("uniformizer does not divide the form");
    for (int m = 0; m < d; ++m) q[m] = f.coeffs()[m];
    return BinaryForm<F>(K, std::move(q));
  }
  // f(1,t) = (t - t0) q(t)
  typename F::Elem carry = K.zero();
  for (int m = d; m >= 1; --m) {
    carry = f.coeffs()[m] + carry * p.t;
    q[m - 1] = carry;
  }
  if (!K.is_zero(f.coeffs()[0] + carry * p.t)) throw std::domain_error("uniformizer does not divide the form");
  return BinaryForm<F>(K, std::move(q));
}

// Forms of the given degree built from local coefficients: sum_k c_k u^k w^(d-k).
template <class F>
BinaryForm<F> from_local_expansion(const P1Point<F>& p, int d, const std::vector<typename F::Elem>& c) {
  const F& K = p.field;
  if (d < 0) return BinaryForm<F>::zero(K);
  BinaryForm<F> u = uniformizer_form(p), w = unit_form(p);
  BinaryForm<F> r = BinaryForm<F>::zero(K);
  for (int k = 0; k <= d && k < static_cast<int>(c.size()); ++k) {
    if (K.is_zero(c[k])) continue;
    r = r + (u.pow(k) * w.pow(d - k)).scaled(c[k]);
  }
  return r;
}

template <class F>
struct RootMult {
  P1Point<F> point;
  int multiplicity;
};

inline std::vector<RootMult<GfField>> roots_in_field(const BinaryForm<GfField>& f) {
  if (f.is_zero()) throw DegenerateInput("the zero form vanishes everywhere");
  const GfField& K = f.field();
  std::vector<RootMult<GfField>> out;
  for (uint64_t code = 0; code < K.size(); ++code) {
    auto pt = P1Point<GfField>::affine(K, K.from_code(code));
    if (eval_form(f, pt).is_zero()) out.push_back({pt, order_at(f, pt)});
  }
  auto inf = P1Point<GfField>::infinity(K);
  if (eval_form(f, inf).is_zero()) out.push_back({inf, order_at(f, inf)});
  return out;
}

inline std::vector<RootMult<QField>> roots_in_field(const BinaryForm<QField>& f) {
  if (f.is_zero()) throw DegenerateInput("the zero form vanishes everywhere");
  QField K;
  std::vector<RootMult<QField>> out;
  UPoly<QField> a = f.affine_part();
  for (const auto& [r, m] : roots(a)) out.push_back({P1Point<QField>::affine(K, r), m});
  int at_inf = f.deg() - a.deg();
  if (at_inf > 0) out.push_back({P1Point<QField>::infinity(K), at_inf});
  return out;
}

}  // namespace quintic
