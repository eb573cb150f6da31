#include <gtest/gtest.h>

#include <random>
#include <set>

#include "quintic/binary_form.hpp"
#include "quintic/linalg.hpp"
#include "support/random.hpp"

using namespace quintic;
using quintic::testing::rand_elem;
using quintic::testing::rand_form;
using quintic::testing::rand_nonzero;
using quintic::testing::rand_point;

namespace {

// term-by-term evaluation with explicit powers
template <class F>
typename F::Elem naive_eval(const BinaryForm<F>& f, const P1Point<F>& p) {
  const F& K = p.field;
  typename F::Elem acc = K.zero();
  for (int m = 0; m <= f.deg(); ++m)
    acc = acc + f.coeffs()[m] * field_pow(K, p.s, f.deg() - m) * field_pow(K, p.t, m);
  return acc;
}

template <class F>
int order_by_division(BinaryForm<F> f, const P1Point<F>& p) {
  int k = 0;
  for (;;) {
    try {
      f = divide_by_uniformizer(f, p);
    } catch (const std::domain_error&) {
      return k;
    }
    ++k;
  }
}

}  // namespace

TEST(Field, PrimeFieldArithmetic) {
  GfField K(101);
  std::mt19937_64 rng(1);
  for (int it = 0; it < 2000; ++it) {
    uint64_t a = rng() % 101, b = rng() % 101;
    Gf x = K.from_int(a), y = K.from_int(b);
    EXPECT_EQ((x * y).c[0], a * b % 101);
    EXPECT_EQ((x + y).c[0], (a + b) % 101);
    EXPECT_EQ((x - y).c[0], (a + 101 - b) % 101);
    if (b) {
      EXPECT_EQ((x / y * y), x);
    }
  }
}

TEST(Field, ExtensionFieldLaws) {
  for (int m : {2, 3, 4}) {
    GfField K(101, m);
    std::mt19937_64 rng(m);
    for (int it = 0; it < 300; ++it) {
      Gf a = rand_elem(K, rng), b = rand_elem(K, rng), c = rand_elem(K, rng);
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ((a * b) * c, a * (b * c));
      if (!a.is_zero()) {
        EXPECT_EQ(a * K.inv(a), K.one());
      }
      EXPECT_EQ(gf_frobenius(a), gf_pow(a, 101));
      EXPECT_EQ(gf_frobenius(a * b), gf_frobenius(a) * gf_frobenius(b));
    }
    // the multiplicative group is cyclic of order p^m - 1, so a^(p^m) = a
    Gf g = K.generator();
    EXPECT_EQ(gf_pow(g, K.size()), g);
    EXPECT_EQ(definition_degree(g), m);
    EXPECT_EQ(definition_degree(K.from_int(7)), 1);
  }
}

TEST(Field, RejectsBadModulus) {
  EXPECT_THROW(gf_context(2), InvalidInput);
  EXPECT_THROW(gf_context(91), InvalidInput);
  EXPECT_THROW(gf_context(101, 5), InvalidInput);
}

TEST(Field, RationalParsing) {
  EXPECT_EQ(parse_rational("6/4"), mpq_class(3, 2));
  EXPECT_EQ(parse_rational("-7"), mpq_class(-7));
  EXPECT_EQ(to_string(mpq_class(-6, 4)), "-3/2");
  EXPECT_THROW(parse_rational("1/0"), InvalidInput);
  EXPECT_THROW(parse_rational("x"), InvalidInput);
}

TEST(BinaryFormOps, EvalExamples) {
  QField Q;
  auto st = BinaryForm<QField>(Q, {0, 1, 0});
  EXPECT_EQ(eval_form(st, P1Point<QField>::make(Q, 1, 0)), 0);
  auto s2t2 = BinaryForm<QField>(Q, {1, 0, 1});
  EXPECT_EQ(eval_form(s2t2, P1Point<QField>::make(Q, 1, 1)), 2);
}

TEST(BinaryFormOps, EvalMatchesNaiveSum) {
  std::mt19937_64 rng(7);
  GfField K(10007);
  QField Q;
  for (int it = 0; it < 200; ++it) {
    auto f = rand_form(K, 6, rng);
    auto p = rand_point(K, rng);
    EXPECT_EQ(eval_form(f, p), naive_eval(f, p));
    auto g = rand_form(Q, 6, rng);
    auto q = rand_point(Q, rng);
    EXPECT_EQ(eval_form(g, q), naive_eval(g, q));
  }
}

TEST(BinaryFormOps, OrderExamples) {
  QField Q;
  auto u = BinaryForm<QField>(Q, {-1, 1});  // t - s
  EXPECT_EQ(order_at(u * u, P1Point<QField>::make(Q, 1, 1)), 2);
  auto s3 = BinaryForm<QField>(Q, {1, 0, 0, 0});
  EXPECT_EQ(order_at(s3, P1Point<QField>::infinity(Q)), 3);
  EXPECT_EQ(order_at(BinaryForm<QField>::zero(Q), P1Point<QField>::infinity(Q)), kInfiniteOrder);
}

TEST(BinaryFormOps, PlantedOrder) {
  std::mt19937_64 rng(11);
  GfField K(101);
  for (int it = 0; it < 300; ++it) {
    auto p = rand_point(K, rng);
    int k = static_cast<int>(rng() % 5);
    auto g = rand_form(K, static_cast<int>(rng() % 4), rng);
    while (eval_form(g, p).is_zero()) g = rand_form(K, g.deg(), rng);
    auto f = uniformizer_form(p).pow(k) * g;
    EXPECT_EQ(order_at(f, p), k);
    EXPECT_EQ(order_by_division(f, p), k);
  }
}

TEST(BinaryFormOps, RingLaws) {
  std::mt19937_64 rng(3);
  GfField K(101);
  QField Q;
  for (int it = 0; it < 200; ++it) {
    int d = static_cast<int>(rng() % 5);
    auto a = rand_form(K, d, rng), b = rand_form(K, d, rng), c = rand_form(K, d, rng);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a * b).deg(), a.deg() + b.deg());
    auto p = rand_point(K, rng);
    int oa = order_at(a, p), ob = order_at(b, p);
    EXPECT_EQ(order_at(a * b, p), oa + ob);
    EXPECT_EQ(eval_form(a, p).is_zero(), oa >= 1);
    auto qa = rand_form(Q, d, rng), qb = rand_form(Q, d + 1, rng), qc = rand_form(Q, d + 1, rng);
    EXPECT_EQ(qa * (qb + qc), qa * qb + qa * qc);
  }
}

TEST(BinaryFormOps, ZeroFormEquality) {
  GfField K(101);
  EXPECT_EQ(BinaryForm<GfField>(K, {K.zero(), K.zero()}), BinaryForm<GfField>::zero(K));
  EXPECT_EQ(BinaryForm<GfField>::zero(K).deg(), -1);
}

TEST(BinaryFormOps, LocalExpansionRoundTrip) {
  std::mt19937_64 rng(5);
  GfField K(101);
  for (int it = 0; it < 200; ++it) {
    auto f = rand_form(K, static_cast<int>(rng() % 7), rng);
    auto p = rand_point(K, rng);
    EXPECT_EQ(from_local_expansion(p, f.deg(), local_expansion(f, p)), f);
  }
}

TEST(RootsInField, Examples) {
  QField Q;
  auto st = BinaryForm<QField>(Q, {0, 1, 0});
  auto r = roots_in_field(st);
  ASSERT_EQ(r.size(), 2u);
  std::set<std::pair<std::string, std::string>> pts;
  for (auto& x : r) {
    EXPECT_EQ(x.multiplicity, 1);
    pts.insert({to_string(x.point.s), to_string(x.point.t)});
  }
  EXPECT_TRUE(pts.count({"1", "0"}));
  EXPECT_TRUE(pts.count({"0", "1"}));
  EXPECT_TRUE(roots_in_field(BinaryForm<QField>(Q, {-2, 0, 1})).empty());
  EXPECT_THROW(roots_in_field(BinaryForm<QField>::zero(Q)), DegenerateInput);
}

TEST(RootsInField, PlantedLinearFactorsOverF101) {
  std::mt19937_64 rng(13);
  GfField K(101);
  for (int it = 0; it < 30; ++it) {
    int k = 1 + static_cast<int>(rng() % 6);
    std::set<std::pair<uint64_t, uint64_t>> planted;
    auto f = BinaryForm<GfField>::constant(K, rand_nonzero(K, rng));
    while (static_cast<int>(planted.size()) < k) {
      auto p = rand_point(K, rng);
      if (!planted.insert({p.s.code(), p.t.code()}).second) continue;
      f = f * uniformizer_form(p);
    }
    auto r = roots_in_field(f);
    std::set<std::pair<uint64_t, uint64_t>> found;
    for (auto& x : r) {
      EXPECT_EQ(x.multiplicity, 1);
      found.insert({x.point.s.code(), x.point.t.code()});
    }
    EXPECT_EQ(found, planted);
    // evaluation at all 102 points agrees
    int zeros = 0;
    for (uint64_t c = 0; c < 101; ++c) zeros += eval_form(f, P1Point<GfField>::affine(K, K.from_int(c))).is_zero();
    zeros += eval_form(f, P1Point<GfField>::infinity(K)).is_zero();
    EXPECT_EQ(zeros, k);
  }
}

TEST(RootsInField, PlantedRationalRoots) {
  std::mt19937_64 rng(17);
  QField Q;
  for (int it = 0; it < 40; ++it) {
    auto f = BinaryForm<QField>(Q, {1, 0, 1});  // s^2 + t^2, no rational roots
    std::vector<mpq_class> planted;
    int k = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < k; ++i) {
      mpq_class r(static_cast<long>(rng() % 2001) - 1000, static_cast<long>(rng() % 97) + 1);
      r.canonicalize();
      planted.push_back(r);
      f = f * BinaryForm<QField>(Q, {-r, 1});
    }
    std::sort(planted.begin(), planted.end());
    std::vector<mpq_class> found;
    for (auto& x : roots_in_field(f))
      for (int m = 0; m < x.multiplicity; ++m) found.push_back(x.point.t);
    std::sort(found.begin(), found.end());
    EXPECT_EQ(found, planted);
  }
}

TEST(UPolyRoots, ExtensionFieldMatchesBruteForce) {
  std::mt19937_64 rng(19);
  GfField K(31, 2);
  for (int it = 0; it < 30; ++it) {
    std::vector<Gf> c;
    for (int i = 0; i < 6; ++i) c.push_back(rand_elem(K, rng));
    c.push_back(K.one());
    UPoly<GfField> f(K, c);
    for (int i = 0; i < 2; ++i) f = f * UPoly<GfField>(K, {-rand_elem(K, rng), K.one()});
    std::map<uint64_t, int> expect;
    for (uint64_t code = 0; code < K.size(); ++code) {
      Gf a = K.from_code(code);
      UPoly<GfField> q = f;
      int mult = 0;
      for (;;) {
        auto [qq, rem] = divmod(q, UPoly<GfField>(K, {-a, K.one()}));
        if (!rem.is_zero()) break;
        q = qq;
        ++mult;
      }
      if (mult) expect[code] = mult;
    }
    std::map<uint64_t, int> got;
    for (auto& [r, m] : roots(f)) got[r.code()] = m;
    EXPECT_EQ(got, expect);
  }
}

TEST(LinearAlgebra, CharpolyMatchesDeterminant) {
  std::mt19937_64 rng(23);
  GfField K(10007);
  for (int it = 0; it < 50; ++it) {
    int n = 1 + static_cast<int>(rng() % 7);
    Matrix<GfField> m(K, n, n);
    for (auto& v : m.a) v = rng() % 3 ? rand_elem(K, rng) : K.zero();
    auto cp = charpoly(m);
    EXPECT_EQ(cp.deg(), n);
    for (int probe = 0; probe < 5; ++probe) {
      Gf lam = rand_elem(K, rng);
      EXPECT_EQ(cp.eval(lam), det(Matrix<GfField>::identity(K, n).scaled(lam) - m));
    }
  }
}

TEST(LinearAlgebra, InverseAndNullspace) {
  std::mt19937_64 rng(29);
  QField Q;
  for (int it = 0; it < 30; ++it) {
    int n = 2 + static_cast<int>(rng() % 4);
    Matrix<QField> m(Q, n, n);
    for (auto& v : m.a) v = rand_elem(Q, rng);
    if (sgn(det(m)) != 0) {
      EXPECT_EQ(m * inverse(m), Matrix<QField>::identity(Q, n));
    }
    Matrix<QField> w(Q, n, n + 2);
    for (auto& v : w.a) v = rand_elem(Q, rng);
    for (auto& vec : nullspace(w)) {
      for (int i = 0; i < n; ++i) {
        mpq_class acc = 0;
        for (int j = 0; j < n + 2; ++j) acc += w(i, j) * vec[j];
        EXPECT_EQ(acc, 0);
      }
    }
  }
}
