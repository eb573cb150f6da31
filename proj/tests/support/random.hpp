#pragma once

#include <random>

#include "quintic/binary_form.hpp"

namespace quintic::testing {

inline Gf rand_elem(const GfField& K, std::mt19937_64& rng) { return K.from_code(rng() % K.size()); }

inline mpq_class rand_elem(const QField&, std::mt19937_64& rng) {
  long num = static_cast<long>(rng() % 41) - 20;
  long den = static_cast<long>(rng() % 5) + 1;
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

template <class F>
typename F::Elem rand_nonzero(const F& K, std::mt19937_64& rng) {
  for (;;) {
    auto v = rand_elem(K, rng);
    if (!K.is_zero(v)) return v;
  }
}

template <class F>
BinaryForm<F> rand_form(const F& K, int deg, std::mt19937_64& rng) {
  if (deg < 0) return BinaryForm<F>::zero(K);
  std::vector<typename F::Elem> c;
  for (int i = 0; i <= deg; ++i) c.push_back(rand_elem(K, rng));
  c[0] = rand_nonzero(K, rng);
  return BinaryForm<F>(K, c);
}

template <class F>
P1Point<F> rand_point(const F& K, std::mt19937_64& rng) {
  if (rng() % 10 == 0) return P1Point<F>::infinity(K);
  return P1Point<F>::affine(K, rand_elem(K, rng));
}

}  // namespace quintic::testing
