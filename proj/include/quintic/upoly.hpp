#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "quintic/field.hpp"

namespace quintic {

// Dense univariate polynomial, coefficients low -> high, no trailing zeros.
template <class F>
struct UPoly {
  using E = typename F::Elem;
  F field;
  std::vector<E> c;

  UPoly() = default;
  explicit UPoly(const F& K) : field(K) {}
  UPoly(const F& K, std::vector<E> coeffs) : field(K), c(std::move(coeffs)) { trim(); }

  static UPoly constant(const F& K, const E& a) { return UPoly(K, {a}); }
  static UPoly x(const F& K) { return UPoly(K, {K.zero(), K.one()}); }

  void trim() {
    while (!c.empty() && field.is_zero(c.back())) c.pop_back();
  }
  int deg() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  E lead() const { return c.back(); }
  E coeff(int i) const { return i >= 0 && i < static_cast<int>(c.size()) ? c[i] : field.zero(); }

  E eval(const E& a) const {
    E r = field.zero();
    for (int i = deg(); i >= 0; --i) r = r * a + c[i];
    return r;
  }

  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    UPoly r(a.field);
    size_t n = std::max(a.c.size(), b.c.size());
    r.c.assign(n, a.field.zero());
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = r.c[i] + a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] = r.c[i] + b.c[i];
    r.trim();
    return r;
  }
  friend UPoly operator-(const UPoly& a, const UPoly& b) {
    UPoly r(a.field);
    size_t n = std::max(a.c.size(), b.c.size());
    r.c.assign(n, a.field.zero());
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = r.c[i] + a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] = r.c[i] - b.c[i];
    r.trim();
    return r;
  }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    UPoly r(a.field);
    if (a.is_zero() || b.is_zero()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, a.field.zero());
    for (size_t i = 0; i < a.c.size(); ++i) {
      if (a.field.is_zero(a.c[i])) continue;
      for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
    }
    r.trim();
    return r;
  }
  UPoly scaled(const E& s) const {
    UPoly r(field);
    r.c.reserve(c.size());
    for (const auto& v : c) r.c.push_back(v * s);
    r.trim();
    return r;
  }
  UPoly monic() const {
    if (is_zero()) return *this;
    return scaled(field.inv(lead()));
  }
  UPoly derivative() const {
    UPoly r(field);
    for (int i = 1; i <= deg(); ++i) r.c.push_back(c[i] * field.from_int(i));
    r.trim();
    return r;
  }
  bool operator==(const UPoly& o) const { return c == o.c; }
};

template <class F>
std::pair<UPoly<F>, UPoly<F>> divmod(const UPoly<F>& a, const UPoly<F>& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  const F& K = a.field;
  UPoly<F> q(K), r = a;
  if (a.deg() < b.deg()) return {q, r};
  q.c.assign(a.deg() - b.deg() + 1, K.zero());
  typename F::Elem li = K.inv(b.lead());
  while (!r.is_zero() && r.deg() >= b.deg()) {
    int shift = r.deg() - b.deg();
    typename F::Elem f = r.lead() * li;
    q.c[shift] = f;
    for (int i = 0; i <= b.deg(); ++i) r.c[shift + i] = r.c[shift + i] - f * b.c[i];
    r.c.pop_back();
    r.trim();
  }
  q.trim();
  return {q, r};
}

template <class F>
UPoly<F> poly_mod(const UPoly<F>& a, const UPoly<F>& b) {
  return divmod(a, b).second;
}

template <class F>
UPoly<F> poly_gcd(UPoly<F> a, UPoly<F> b) {
  while (!b.is_zero()) {
    UPoly<F> r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

template <class F>
UPoly<F> poly_powmod(UPoly<F> b, uint64_t e, const UPoly<F>& m) {
  UPoly<F> r = UPoly<F>::constant(b.field, b.field.one());
  r = poly_mod(r, m);
  b = poly_mod(b, m);
  while (e) {
    if (e & 1) r = poly_mod(r * b, m);
    b = poly_mod(b * b, m);
    e >>= 1;
  }
  return r;
}

// Roots with multiplicity, sorted by canonical code.
inline std::vector<std::pair<Gf, int>> roots(const UPoly<GfField>& f) {
  if (f.is_zero()) throw std::domain_error("roots of the zero polynomial");
  const GfField& K = f.field;
  std::vector<Gf> simple;
  if (f.deg() >= 1) {
    UPoly<GfField> X = UPoly<GfField>::x(K);
    UPoly<GfField> g = f.monic();
    UPoly<GfField> xq = poly_powmod(X, K.size(), g);
    UPoly<GfField> split = poly_gcd(g, xq - X);
    std::mt19937_64 rng(0x5eed);
    std::vector<UPoly<GfField>> stack{split};
    uint64_t half = (K.size() - 1) / 2;
    while (!stack.empty()) {
      UPoly<GfField> h = stack.back();
      stack.pop_back();
      if (h.deg() <= 0) continue;
      if (h.deg() == 1) {
        simple.push_back(-(h.c[0] / h.c[1]));
        continue;
      }
      for (;;) {
        Gf a = K.from_code(rng() % K.size());
        UPoly<GfField> t = poly_powmod(X + UPoly<GfField>::constant(K, a), half, h);
        UPoly<GfField> d = poly_gcd(h, t - UPoly<GfField>::constant(K, K.one()));
        if (d.deg() > 0 && d.deg() < h.deg()) {
          stack.push_back(d);
          stack.push_back(divmod(h, d).first);
          break;
        }
      }
    }
  }
  std::vector<std::pair<Gf, int>> out;
  for (const Gf& r : simple) {
    int mult = 0;
    UPoly<GfField> q = f;
    UPoly<GfField> lin(K, {-r, K.one()});
    for (;;) {
      auto [qq, rem] = divmod(q, lin);
      if (!rem.is_zero()) break;
      q = qq;
      ++mult;
    }
    out.emplace_back(r, mult);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first.code() < b.first.code(); });
  return out;
}

namespace detail {

inline mpz_class mod_pos(const mpz_class& a, const mpz_class& m) {
  mpz_class r = a % m;
  if (r < 0) r += m;
  return r;
}

// a/b with |a| <= A, 0 < b <= B and a = b*r mod m, when 2AB < m.
inline bool rational_reconstruct(const mpz_class& r, const mpz_class& m, const mpz_class& A, const mpz_class& B, mpq_class& out) {
  mpz_class r0 = m, r1 = mod_pos(r, m), t0 = 0, t1 = 1;
  while (r1 > A) {
    mpz_class q = r0 / r1;
    mpz_class r2 = r0 - q * r1, t2 = t0 - q * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  if (t1 == 0 || abs(t1) > B) return false;
  out = mpq_class(r1, t1);
  out.canonicalize();
  return true;
}

}  // namespace detail

// Rational roots with multiplicity, sorted ascending. Roots of the squarefree
// part are found modulo a prime, lifted p-adically and reconstructed, then
// verified exactly.
inline std::vector<std::pair<mpq_class, int>> roots(const UPoly<QField>& f) {
  if (f.is_zero()) throw std::domain_error("roots of the zero polynomial");
  const QField K;
  std::vector<std::pair<mpq_class, int>> out;
  if (f.deg() <= 0) return out;
  UPoly<QField> g = f.monic();
  int zero_mult = 0;
  while (!g.is_zero() && sgn(g.c[0]) == 0) {
    g.c.erase(g.c.begin());
    ++zero_mult;
  }
  if (zero_mult) out.emplace_back(mpq_class(0), zero_mult);
  if (g.deg() >= 1) {
    UPoly<QField> sq = divmod(g, poly_gcd(g, g.derivative())).first.monic();
    // integer model: clear denominators
    mpz_class den = 1;
    for (const auto& v : sq.c) den = lcm(den, mpz_class(v.get_den()));
    std::vector<mpz_class> z;
    for (const auto& v : sq.c) {
      mpq_class w = v * den;
      w.canonicalize();
      z.push_back(w.get_num());
    }
    mpz_class content = 0;
    for (const auto& v : z) content = gcd(content, v);
    for (auto& v : z) v /= content;
    mpz_class A = abs(z.front()), B = abs(z.back());
    if (sq.deg() == 1) {
      mpq_class r(-z[0], z[1]);
      r.canonicalize();
      out.emplace_back(r, 0);
    } else {
      uint32_t p = 1000003;
      std::vector<Gf> modroots;
      for (;; p += 2) {
        if (!is_prime_u64(p)) continue;
        if (mpz_class(z.back() % p) == 0) continue;
        GfField Fp(p);
        std::vector<Gf> cs;
        for (const auto& v : z) cs.push_back(Fp.from_int(mpz_class(detail::mod_pos(v, p)).get_si()));
        UPoly<GfField> fp(Fp, cs);
        if (poly_gcd(fp, fp.derivative()).deg() != 0) continue;
        for (const auto& rt : roots(fp)) modroots.push_back(rt.first);
        break;
      }
      mpz_class bound = 2 * A * B + 1;
      for (const Gf& r0 : modroots) {
        mpz_class m = p, r = r0.c[0];
        auto evalz = [&](const std::vector<mpz_class>& co, const mpz_class& x, const mpz_class& mod) {
          mpz_class acc = 0;
          for (int i = static_cast<int>(co.size()) - 1; i >= 0; --i) acc = detail::mod_pos(acc * x + co[i], mod);
          return acc;
        };
        std::vector<mpz_class> dz;
        for (size_t i = 1; i < z.size(); ++i) dz.push_back(z[i] * static_cast<unsigned long>(i));
        while (m <= bound) {
          mpz_class m2 = m * m;
          mpz_class fv = evalz(z, r, m2), dv = evalz(dz, r, m2);
          mpz_class inv;
          mpz_invert(inv.get_mpz_t(), dv.get_mpz_t(), m2.get_mpz_t());
          r = detail::mod_pos(r - fv * inv, m2);
          m = m2;
        }
        mpq_class cand;
        if (!detail::rational_reconstruct(r, m, A, B, cand)) continue;
        if (sgn(sq.eval(cand)) == 0) out.emplace_back(cand, 0);
      }
    }
    for (auto& [r, mult] : out) {
      if (mult) continue;
      UPoly<QField> q = g;
      UPoly<QField> lin(K, {-r, K.one()});
      for (;;) {
        auto [qq, rem] = divmod(q, lin);
        if (!rem.is_zero()) break;
        q = qq;
        ++mult;
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

}  // namespace quintic
