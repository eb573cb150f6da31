#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace quintic {

struct FieldMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct InvalidInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline constexpr int kMaxExtDegree = 4;

inline bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Primes below this value trigger a warning in the CLI: small characteristic can
// produce pathologies the classification does not cover.
inline constexpr uint32_t kSmallPrimeWarning = 101;
inline constexpr uint32_t kDefaultPrime = 10007;

inline uint32_t default_prime() {
  if (const char* env = std::getenv("QUINTIC_PRIME")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 2 && v < (1UL << 31) && is_prime_u64(v))
      return static_cast<uint32_t>(v);
    throw InvalidInput("QUINTIC_PRIME must be an odd prime below 2^31");
  }
  return kDefaultPrime;
}

// ---------------------------------------------------------------------------
// Rationals

struct QField {
  using Elem = mpq_class;
  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_int(long long v) const { return Elem(mpz_class(std::to_string(v))); }
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  Elem inv(const Elem& a) const {
    if (sgn(a) == 0) throw std::domain_error("division by zero");
    return Elem(1) / a;
  }
  std::string name() const { return "Q"; }
  bool finite() const { return false; }
  bool operator==(const QField&) const { return true; }
  bool operator!=(const QField&) const { return false; }
};

inline std::string to_string(const mpq_class& a) {
  mpq_class c(a);
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

inline mpq_class parse_rational(const std::string& s) {
  auto ok_int = [](const std::string& t) {
    if (t.empty()) return false;
    size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!num.empty() && num[0] == '+') num = num.substr(1);
  if (!ok_int(num) || !ok_int(den) || den[0] == '-')
    throw InvalidInput("malformed rational: " + s);
  mpz_class n(num), d(den);
  if (d == 0) throw InvalidInput("zero denominator: " + s);
  mpq_class q(n, d);
  q.canonicalize();
  return q;
}

// ---------------------------------------------------------------------------
// Finite fields F_{p^m}, m <= kMaxExtDegree, as F_p[x]/(modulus).

namespace detail {

using RawPoly = std::vector<uint64_t>;  // low -> high, entries reduced mod p

inline void raw_trim(RawPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline uint64_t raw_pow(uint64_t b, uint64_t e, uint64_t p) {
  uint64_t r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

inline RawPoly raw_mod(RawPoly a, const RawPoly& m, uint64_t p) {
  raw_trim(a);
  uint64_t lead_inv = raw_pow(m.back(), p - 2, p);
  while (a.size() >= m.size()) {
    uint64_t c = a.back() * lead_inv % p;
    size_t shift = a.size() - m.size();
    for (size_t i = 0; i < m.size(); ++i)
      a[shift + i] = (a[shift + i] + (p - c) * m[i]) % p;
    raw_trim(a);
  }
  return a;
}

inline RawPoly raw_mulmod(const RawPoly& a, const RawPoly& b, const RawPoly& m, uint64_t p) {
  if (a.empty() || b.empty()) return {};
  RawPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return raw_mod(std::move(r), m, p);
}

inline RawPoly raw_powmod(RawPoly b, uint64_t e, const RawPoly& m, uint64_t p) {
  RawPoly r{1};
  b = raw_mod(std::move(b), m, p);
  while (e) {
    if (e & 1) r = raw_mulmod(r, b, m, p);
    b = raw_mulmod(b, b, m, p);
    e >>= 1;
  }
  return r;
}

inline RawPoly raw_gcd(RawPoly a, RawPoly b, uint64_t p) {
  raw_trim(a);
  raw_trim(b);
  while (!b.empty()) {
    RawPoly r = raw_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Rabin's test for a monic polynomial of degree m.
inline bool raw_irreducible(const RawPoly& f, uint64_t p) {
  size_t m = f.size() - 1;
  RawPoly x{0, 1};
  auto frob_iter = [&](size_t k) {
    RawPoly y = x;
    for (size_t i = 0; i < k; ++i) y = raw_powmod(y, p, f, p);
    return y;
  };
  auto minus_x = [&](RawPoly y) {
    if (y.size() < 2) y.resize(2, 0);
    y[1] = (y[1] + p - 1) % p;
    raw_trim(y);
    return y;
  };
  if (!minus_x(frob_iter(m)).empty()) return false;
  for (size_t r = 2; r <= m; ++r) {
    if (m % r != 0 || !is_prime_u64(r)) continue;
    RawPoly g = raw_gcd(f, minus_x(frob_iter(m / r)), p);
    if (g.size() != 1) return false;
  }
  return true;
}

}  // namespace detail

struct GfContext {
  uint32_t p = 0;
  int m = 1;
  std::array<uint32_t, kMaxExtDegree + 1> modulus{};  // monic, low -> high
  uint64_t order = 0;                                 // p^m
  uint64_t fast_M = 0;                                // Lemire constant for p
  bool small = false;                                 // p < 2^15: 3p^2 fits in 32 bits
  // frob[i] = image of x^i under a -> a^p, as coefficient vector
  std::array<std::array<uint32_t, kMaxExtDegree>, kMaxExtDegree> frob{};

  uint32_t reduce(uint64_t v) const {
    if (small) {
      uint32_t a = static_cast<uint32_t>(v);
      uint64_t low = fast_M * a;
      return static_cast<uint32_t>((static_cast<__uint128_t>(low) * p) >> 64);
    }
    return static_cast<uint32_t>(v % p);
  }
};

// Contexts are interned for the life of the process so elements can hold a raw
// pointer and compare contexts by address.
inline const GfContext* gf_context(uint32_t p, int m = 1) {
  static std::mutex mu;
  static std::map<std::pair<uint32_t, int>, std::unique_ptr<GfContext>> registry;
  if (p <= 2 || !is_prime_u64(p)) throw InvalidInput("modulus must be an odd prime: " + std::to_string(p));
  if (p >= (1U << 31)) throw InvalidInput("modulus must be below 2^31");
  if (m < 1 || m > kMaxExtDegree) throw InvalidInput("extension degree must be in 1..4");
  if (m > 1 && p >= (1U << 15)) throw InvalidInput("extension fields need p < 2^15");
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = registry[{p, m}];
  if (slot) return slot.get();
  auto ctx = std::make_unique<GfContext>();
  ctx->p = p;
  ctx->m = m;
  ctx->order = 1;
  for (int i = 0; i < m; ++i) ctx->order *= p;
  ctx->small = p < (1U << 15);
  ctx->fast_M = UINT64_C(0xFFFFFFFFFFFFFFFF) / p + 1;
  if (m == 1) {
    ctx->modulus[0] = 0;
    ctx->modulus[1] = 1;
    ctx->frob[0][0] = 1;
  } else {
    // first irreducible monic polynomial in the order of sum_i a_i p^i
    detail::RawPoly f(m + 1, 0);
    f[m] = 1;
    uint64_t count = ctx->order;
    bool found = false;
    for (uint64_t idx = 0; idx < count; ++idx) {
      uint64_t v = idx;
      for (int i = 0; i < m; ++i) {
        f[i] = v % p;
        v /= p;
      }
      if (f[0] == 0) continue;
      if (detail::raw_irreducible(f, p)) {
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("no irreducible polynomial found");
    for (int i = 0; i <= m; ++i) ctx->modulus[i] = static_cast<uint32_t>(f[i]);
    for (int i = 0; i < m; ++i) {
      detail::RawPoly xi(i + 1, 0);
      xi[i] = 1;
      detail::RawPoly img = detail::raw_powmod(xi, p, f, p);
      for (int j = 0; j < m; ++j) ctx->frob[i][j] = j < static_cast<int>(img.size()) ? static_cast<uint32_t>(img[j]) : 0;
    }
  }
  slot = std::move(ctx);
  return slot.get();
}

struct Gf {
  const GfContext* ctx = nullptr;
  std::array<uint32_t, kMaxExtDegree> c{};

  bool is_zero() const { return c[0] == 0 && c[1] == 0 && c[2] == 0 && c[3] == 0; }
  // canonical integer code sum c_i p^i
  uint64_t code() const {
    uint64_t v = 0;
    for (int i = ctx->m - 1; i >= 0; --i) v = v * ctx->p + c[i];
    return v;
  }
};

inline Gf operator+(const Gf& a, const Gf& b) {
  Gf r{a.ctx, {}};
  uint32_t p = a.ctx->p;
  for (int i = 0; i < a.ctx->m; ++i) {
    uint32_t s = a.c[i] + b.c[i];
    r.c[i] = s >= p ? s - p : s;
  }
  return r;
}

inline Gf operator-(const Gf& a, const Gf& b) {
  Gf r{a.ctx, {}};
  uint32_t p = a.ctx->p;
  for (int i = 0; i < a.ctx->m; ++i) r.c[i] = a.c[i] >= b.c[i] ? a.c[i] - b.c[i] : a.c[i] + p - b.c[i];
  return r;
}

inline Gf operator-(const Gf& a) {
  Gf r{a.ctx, {}};
  for (int i = 0; i < a.ctx->m; ++i) r.c[i] = a.c[i] ? a.ctx->p - a.c[i] : 0;
  return r;
}

inline Gf operator*(const Gf& a, const Gf& b) {
  const GfContext& K = *a.ctx;
  Gf r{a.ctx, {}};
  const uint64_t p = K.p;
  if (K.m == 1) {
    r.c[0] = K.reduce(static_cast<uint64_t>(a.c[0]) * b.c[0]);
    return r;
  }
  if (K.m == 2) {
    uint64_t h = K.reduce(static_cast<uint64_t>(a.c[1]) * b.c[1]);
    uint64_t r0 = static_cast<uint64_t>(a.c[0]) * b.c[0] + (p - K.modulus[0]) * h;
    uint64_t r1 = K.reduce(static_cast<uint64_t>(a.c[0]) * b.c[1]) + K.reduce(static_cast<uint64_t>(a.c[1]) * b.c[0]) +
                  (K.modulus[1] ? (p - K.modulus[1]) * h : 0);
    r.c[0] = K.reduce(r0);
    r.c[1] = K.reduce(r1);
    return r;
  }
  const int m = K.m;
  std::array<uint64_t, 2 * kMaxExtDegree - 1> t{};
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) t[i + j] = (t[i + j] + static_cast<uint64_t>(a.c[i]) * b.c[j]) % p;
  for (int d = 2 * m - 2; d >= m; --d) {
    uint64_t co = t[d];
    if (!co) continue;
    for (int j = 0; j < m; ++j) t[d - m + j] = (t[d - m + j] + (p - co) * K.modulus[j]) % p;
    t[d] = 0;
  }
  for (int i = 0; i < m; ++i) r.c[i] = static_cast<uint32_t>(t[i]);
  return r;
}

inline bool operator==(const Gf& a, const Gf& b) { return a.c == b.c && (a.ctx == b.ctx || !a.ctx || !b.ctx); }
inline bool operator!=(const Gf& a, const Gf& b) { return !(a == b); }

inline Gf& operator+=(Gf& a, const Gf& b) { return a = a + b; }
inline Gf& operator-=(Gf& a, const Gf& b) { return a = a - b; }
inline Gf& operator*=(Gf& a, const Gf& b) { return a = a * b; }

inline Gf gf_pow(Gf b, uint64_t e) {
  Gf r{b.ctx, {}};
  r.c[0] = 1;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

inline Gf gf_inv(const Gf& a) {
  if (a.is_zero()) throw std::domain_error("division by zero");
  const GfContext& K = *a.ctx;
  if (K.m == 1) return gf_pow(a, K.p - 2);
  if (K.m == 2) {
    // conjugate of x is -c1 - x; norm lies in F_p
    const uint64_t p = K.p;
    uint64_t a0 = a.c[0], a1 = a.c[1], c0 = K.modulus[0], c1 = K.modulus[1];
    uint64_t n = (a0 * a0 % p + (p - c1) * (a0 * a1 % p) % p + c0 * (a1 * a1 % p)) % p;
    uint64_t ni = detail::raw_pow(n, p - 2, p);
    Gf r{a.ctx, {}};
    uint64_t b0 = (a0 + (p - c1) * a1 % p) % p;
    uint64_t b1 = (p - a1) % p;
    r.c[0] = static_cast<uint32_t>(b0 * ni % p);
    r.c[1] = static_cast<uint32_t>(b1 * ni % p);
    return r;
  }
  return gf_pow(a, K.order - 2);
}

inline Gf operator/(const Gf& a, const Gf& b) { return a * gf_inv(b); }
inline Gf& operator/=(Gf& a, const Gf& b) { return a = a / b; }

inline Gf gf_frobenius(const Gf& a) {
  const GfContext& K = *a.ctx;
  if (K.m == 1) return a;
  std::array<uint64_t, kMaxExtDegree> acc{};
  for (int i = 0; i < K.m; ++i)
    for (int j = 0; j < K.m; ++j) acc[j] = (acc[j] + static_cast<uint64_t>(a.c[i]) * K.frob[i][j]) % K.p;
  Gf r{a.ctx, {}};
  for (int j = 0; j < K.m; ++j) r.c[j] = static_cast<uint32_t>(acc[j]);
  return r;
}

struct GfField {
  using Elem = Gf;
  const GfContext* ctx = nullptr;

  GfField() = default;
  explicit GfField(const GfContext* c) : ctx(c) {}
  explicit GfField(uint32_t p, int m = 1) : ctx(gf_context(p, m)) {}

  Elem zero() const { return Elem{ctx, {}}; }
  Elem one() const {
    Elem r{ctx, {}};
    r.c[0] = 1;
    return r;
  }
  Elem from_int(long long v) const {
    long long p = ctx->p;
    long long r = v % p;
    if (r < 0) r += p;
    Elem e{ctx, {}};
    e.c[0] = static_cast<uint32_t>(r);
    return e;
  }
  Elem from_code(uint64_t code) const {
    Elem e{ctx, {}};
    for (int i = 0; i < ctx->m; ++i) {
      e.c[i] = static_cast<uint32_t>(code % ctx->p);
      code /= ctx->p;
    }
    return e;
  }
  // the class of x in F_p[x]/(modulus); generates the extension
  Elem generator() const {
    Elem e{ctx, {}};
    if (ctx->m == 1) return from_int(0);
    e.c[1] = 1;
    return e;
  }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
  Elem inv(const Elem& a) const { return gf_inv(a); }
  uint32_t characteristic() const { return ctx->p; }
  int degree() const { return ctx->m; }
  uint64_t size() const { return ctx->order; }
  std::string name() const {
    return ctx->m == 1 ? "F_" + std::to_string(ctx->p) : "F_" + std::to_string(ctx->p) + "^" + std::to_string(ctx->m);
  }
  bool finite() const { return true; }
  bool operator==(const GfField& o) const { return ctx == o.ctx; }
  bool operator!=(const GfField& o) const { return ctx != o.ctx; }
};

// Embedding of a prime-field element into an extension.
inline Gf embed(const Gf& a, const GfField& into) {
  if (a.ctx->m != 1 || a.ctx->p != into.ctx->p) throw FieldMismatch("embedding needs a prime-field element of the same characteristic");
  Gf r{into.ctx, {}};
  r.c[0] = a.c[0];
  return r;
}

// Degree over F_p of the smallest subfield containing a.
inline int definition_degree(const Gf& a) {
  Gf y = a;
  for (int k = 1; k <= a.ctx->m; ++k) {
    y = gf_frobenius(y);
    if (y == a) return k;
  }
  return a.ctx->m;
}

inline std::string to_string(const Gf& a) {
  if (a.ctx->m == 1) return std::to_string(a.c[0]);
  std::string s = "[";
  for (int i = 0; i < a.ctx->m; ++i) {
    if (i) s += ",";
    s += std::to_string(a.c[i]);
  }
  return s + "]";
}

template <class F>
inline typename F::Elem field_pow(const F& K, typename F::Elem b, unsigned long e) {
  typename F::Elem r = K.one();
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

}  // namespace quintic
