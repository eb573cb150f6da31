#include <gtest/gtest.h>

#include <random>

#include "quintic/minimize.hpp"
#include "quintic/singularity.hpp"

using namespace quintic;

namespace {

const BundlePair kFin{6, {1, 2, 3, 4}, {2, 3, 4, 5, 6}};
const BundlePair kBalanced0{0, {1, 1, 1, 1}, {1, 1, 2, 2, 2}};
const BundlePair kBalanced2{2, {1, 1, 2, 2}, {2, 2, 2, 3, 3}};
const BundlePair kFinLike{6, {1, 2, 3, 4}, {1, 3, 4, 5, 7}};  // fin active, d25^(1) = 1

Vec4<GfField> coordinate_point(const GfField& K, int k) {
  Vec4<GfField> x{K.zero(), K.zero(), K.zero(), K.zero()};
  x[k - 1] = K.one();
  return x;
}

bool lists_point(const SingularityReport& rep, const P1Point<GfField>& p, const Vec4<GfField>& x) {
  for (const auto& sp : rep.singular)
    if (sp.point.p == p && sp.point.x == x) return true;
  return false;
}

}  // namespace

TEST(ExtensionDegrees, MaximalOnly) {
  EXPECT_EQ(maximal_extension_degrees(1), (std::vector<int>{1}));
  EXPECT_EQ(maximal_extension_degrees(2), (std::vector<int>{2}));
  EXPECT_EQ(maximal_extension_degrees(3), (std::vector<int>{2, 3}));
  EXPECT_EQ(maximal_extension_degrees(4), (std::vector<int>{3, 4}));
}

TEST(JacobianRank, PlantedShapeHasRankAtMostTwo) {
  GfField K(101);
  std::mt19937_64 rng(1);
  for (int n = 0; n < 20; ++n) {
    Triple t{1 + static_cast<int>(rng() % 4), 0, 1 + static_cast<int>(rng() % 4)};
    t.j = t.i + 1 + static_cast<int>(rng() % (5 - t.i));
    auto p = P1Point<GfField>::affine(K, K.from_code(rng() % 101));
    auto sec = plant_normal_form(sample_section(kFin, K, n), p, NormalForm::type_ijk(t.i, t.j, t.k), 100 + n);
    ASSERT_TRUE(shape_singular_check(sec, p, t));
    EXPECT_LE(jacobian_rank_at(sec, FiberPoint<GfField>{p, coordinate_point(K, t.k)}), 2);
  }
}

TEST(JacobianRank, ZeroSectionIsRankZero) {
  GfField K(101);
  Section<GfField> zero(kFin, K);
  auto p = P1Point<GfField>::affine(K, K.from_int(4));
  EXPECT_EQ(jacobian_rank_at(zero, FiberPoint<GfField>{p, coordinate_point(K, 2)}), 0);
}

TEST(JacobianRank, RejectsPointsOffTheCurve) {
  GfField K(101);
  auto sec = sample_section(kBalanced0, K, 1);
  auto p = P1Point<GfField>::affine(K, K.from_int(0));
  auto sol = solve_fiber_quadrics(K, fiber_quadrics(specialize_fiber(sec, p)));
  Vec4<GfField> x{K.one(), K.from_int(2), K.from_int(3), K.from_int(5)};
  bool on = false;
  for (const auto& pt : sol.points) on = on || pt.x == normalize_point(K, x);
  if (!on) { EXPECT_THROW(jacobian_rank_at(sec, FiberPoint<GfField>{p, x}), NotOnCurve); }
}

TEST(Scan, SmoothSectionHasRankThreeEverywhere) {
  GfField K(101);
  for (uint64_t s = 0; s < 6; ++s) {
    auto rep = singular_scan(sample_section(kBalanced0, K, s), {1, true});
    if (rep.status != ScanStatus::SmoothScanned) continue;
    ASSERT_FALSE(rep.points.empty());
    auto sec = sample_section(kBalanced0, K, s);
    for (size_t n = 0; n < rep.points.size(); n += 17) EXPECT_EQ(jacobian_rank_at(sec, rep.points[n].point), 3);
    return;
  }
  FAIL() << "no smooth section among six seeds";
}

TEST(Scan, GenusZeroCurveHasQSquaredPlusOnePoints) {
  GfField K(101);
  auto sec = sample_section(kBalanced0, K, 2);
  auto r1 = singular_scan(sec, {1, false});
  ASSERT_EQ(r1.status, ScanStatus::SmoothScanned);
  EXPECT_EQ(r1.curve_points, 102);
  auto r2 = singular_scan(sec, {2, false});
  ASSERT_EQ(r2.status, ScanStatus::SmoothScanned);
  EXPECT_EQ(r2.curve_points, 101 * 101 + 1);
}

TEST(Scan, FindsPlantedSingularity) {
  GfField K(101);
  std::mt19937_64 rng(2);
  int found = 0, degenerate = 0;
  for (int n = 0; n < 10; ++n) {
    const BundlePair& bp = n % 2 ? kBalanced2 : kBalanced0;
    Triple t{1 + static_cast<int>(rng() % 4), 0, 1 + static_cast<int>(rng() % 4)};
    t.j = t.i + 1 + static_cast<int>(rng() % (5 - t.i));
    auto p = P1Point<GfField>::affine(K, K.from_code(rng() % 101));
    auto sec = plant_normal_form(sample_section(bp, K, n), p, NormalForm::type_ijk(t.i, t.j, t.k), 50 + n);
    auto rep = singular_scan(sec, {1, false});
    ASSERT_NE(rep.status, ScanStatus::SmoothScanned);
    if (rep.status == ScanStatus::Degenerate) {
      ++degenerate;
      continue;
    }
    EXPECT_TRUE(lists_point(rep, p, coordinate_point(K, t.k)));
    ++found;
  }
  EXPECT_GT(found, 5);
}

TEST(Scan, ZeroSectionIsDegenerate) {
  Section<GfField> zero(kBalanced0, GfField(101));
  EXPECT_EQ(singular_scan(zero, {1, false}).status, ScanStatus::Degenerate);
}

TEST(Scan, RationalSectionRejected) {
  EXPECT_THROW(singular_scan(sample_section(kBalanced0, QField{}, 1)), InvalidInput);
}

TEST(Scan, MostGenusZeroSeedsAreSmooth) {
  GfField K(101);
  int smooth = 0;
  for (uint64_t s = 0; s < 4; ++s)
    smooth += singular_scan(sample_section(kBalanced0, K, 1000 + s), {2, false}).status == ScanStatus::SmoothScanned;
  EXPECT_GE(smooth, 3);
}

TEST(ShapeCheck, ConstructedGenericAndZero) {
  GfField K(101);
  auto p = P1Point<GfField>::affine(K, K.from_int(9));
  auto sec = plant_normal_form(sample_section(kFin, K, 3), p, NormalForm::type_ijk(4, 5, 4), 7);
  EXPECT_TRUE(shape_singular_check(sec, p, {4, 5, 4}));
  EXPECT_LE(jacobian_rank_at(sec, FiberPoint<GfField>{p, coordinate_point(K, 4)}), 2);
  auto generic = sample_section(kFin, K, 4);
  EXPECT_FALSE(shape_singular_check(generic, P1Point<GfField>::affine(K, K.from_int(31)), {4, 5, 4}));
  Section<GfField> zero(kFin, K);
  for (const Triple& t : all_triples()) EXPECT_TRUE(shape_singular_check(zero, p, t));
}

TEST(FinWitnesses, ConstantA25HasNoWitness) {
  GfField K(101);
  auto sec = sample_section(kFin, K, 5);
  ASSERT_EQ(sec.a(1, 2, 5).deg(), 0);
  EXPECT_TRUE(fin_witnesses(sec).empty());
}

TEST(FinWitnesses, LinearA25GivesSingularRoot) {
  GfField K(101);
  for (uint64_t s = 0; s < 5; ++s) {
    auto sec = sample_section(kFinLike, K, s);
    auto w = fin_witnesses(sec);
    ASSERT_EQ(w.size(), 1u);
    EXPECT_TRUE(shape_singular_check(sec, w[0], {1, 2, 1}));
    EXPECT_LE(jacobian_rank_at(sec, FiberPoint<GfField>{w[0], coordinate_point(K, 1)}), 2);
    auto rep = singular_scan(sec, {1, false});
    if (rep.status == ScanStatus::SingularAt) { EXPECT_TRUE(lists_point(rep, w[0], coordinate_point(K, 1))); }
    EXPECT_NE(rep.status, ScanStatus::SmoothScanned);
  }
}

TEST(FinWitnesses, Errors) {
  GfField K(101);
  auto sec = sample_section(kFin, K, 6);
  sec.set(1, 2, 5, BinaryForm<GfField>::zero(K));
  EXPECT_THROW(fin_witnesses(sec), DegenerateInput);
  EXPECT_THROW(fin_witnesses(sample_section(kBalanced0, K, 1)), InvalidInput);
}

TEST(FinMinors, HoldOnSmoothFinSection) {
  GfField K(101);
  for (uint64_t s = 0; s < 10; ++s) {
    auto sec = sample_section(kFin, K, s);
    auto rep = singular_scan(sec, {1, true});
    if (rep.status != ScanStatus::SmoothScanned) continue;
    std::vector<FiberPoint<GfField>> pts;
    for (const auto& sp : rep.points) pts.push_back(sp.point);
    ASSERT_FALSE(pts.empty());
    EXPECT_TRUE(fin_minor_check(sec, pts));
    EXPECT_TRUE(fin_minor_check(sec, {}));
    auto tampered = sec;
    tampered.set(1, 2, 5, BinaryForm<GfField>::zero(K));
    EXPECT_FALSE(fin_minor_check(tampered, {}));
    return;
  }
  FAIL() << "no smooth fin section among ten seeds";
}

TEST(FinMinors, RejectsNonFinPair) {
  GfField K(101);
  EXPECT_THROW(fin_minor_check(sample_section(kBalanced0, K, 1), {}), InvalidInput);
}
