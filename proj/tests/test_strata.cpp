#include <gtest/gtest.h>

#include <set>

#include "quintic/minimize.hpp"
#include "quintic/polytopes.hpp"
#include "quintic/strata.hpp"

using namespace quintic;

namespace {

const BundlePair kFin{6, {1, 2, 3, 4}, {2, 3, 4, 5, 6}};
const BundlePair kBalanced0{0, {1, 1, 1, 1}, {1, 1, 2, 2, 2}};

std::vector<BundlePair> satisfied_pairs(int g_max) {
  std::vector<BundlePair> out;
  for (int g = 0; g <= g_max; ++g) {
    int L = g + 4;
    for_each_sorted<4>(L, 1, [&](const std::array<int, 4>& e) {
      for_each_sorted<5>(2 * L, 0, [&](const std::array<int, 5>& f) {
        BundlePair bp{g, e, f};
        if (theorem15_check(bp).satisfied()) out.push_back(bp);
      });
    });
  }
  return out;
}

// Entries the normal form constrains, read off the planting rule rather than the strata code.
std::vector<Triple> constrained_entries(const BundlePair& bp, const Triple& t) {
  auto nf = NormalForm::type_ijk(t.i, t.j, t.k);
  std::vector<Triple> out;
  for (const Triple& x : all_triples())
    if (required_order(nf, x.k, x.i, x.j) >= 1 && bp.d(x) >= 0) out.push_back(x);
  std::sort(out.begin(), out.end());
  return out;
}

// Linear conditions on H^0 imposed at one point: min(order, h^0) per entry.
int imposed_conditions(const BundlePair& bp, const Triple& t) {
  auto nf = NormalForm::type_ijk(t.i, t.j, t.k);
  int n = 0;
  for (const Triple& x : all_triples()) n += std::min(required_order(nf, x.k, x.i, x.j), std::max(0, bp.d(x) + 1));
  return n;
}

}  // namespace

TEST(Maximal, BalancedGenusZeroExample) {
  auto m = maximal_triples(kBalanced0);
  std::set<Triple> got(m.begin(), m.end());
  EXPECT_EQ(got, (std::set<Triple>{{1, 2, 4}, {2, 5, 4}, {4, 5, 4}}));
}

TEST(Maximal, DistinctDegreesMakeEveryTripleMaximal) { EXPECT_EQ(maximal_triples(kFin).size(), 40u); }

TEST(Maximal, RepresentativeIsMaximalAndIdempotent) {
  for (const auto& bp : satisfied_pairs(6))
    for (const Triple& t : all_triples()) {
      Triple m = maximal_representative(bp, t);
      ASSERT_TRUE(valid_triple(m));
      EXPECT_TRUE(is_maximal(bp, m));
      if (is_maximal(bp, t)) { EXPECT_EQ(m, t); }
      EXPECT_EQ(maximal_representative(bp, m), m);
    }
}

TEST(CodimG, FormulaMatchesDirectCountOnMaximalTriples) {
  long checked = 0;
  for (const auto& bp : satisfied_pairs(8))
    for (const Triple& t : maximal_triples(bp)) {
      EXPECT_EQ(codim_G(bp, t), codim_G_direct(bp, t));
      ++checked;
    }
  EXPECT_GT(checked, 100);
}

TEST(CodimG, RejectsNonMaximal) {
  EXPECT_THROW(codim_G(kBalanced0, {1, 2, 1}), NotMaximal);
  EXPECT_THROW(codim_G(kBalanced0, {1, 5, 4}), NotMaximal);
  EXPECT_NO_THROW(codim_G(kBalanced0, {4, 5, 4}));
}

TEST(CodimG, DirectCountInvariantUnderRepresentative) {
  // moving within a block of equal degrees does not change the stabilizer count
  for (const auto& bp : satisfied_pairs(6))
    for (const Triple& t : all_triples()) EXPECT_EQ(codim_G_direct(bp, t), codim_G_direct(bp, maximal_representative(bp, t)));
}

TEST(Nu, Examples) {
  EXPECT_EQ(nu_offset(kFin, {4, 5, 4}), 1);
  // every twist next to (1,2,1) is negative
  EXPECT_EQ(kFin.d(1, 2, 1), -4);
  EXPECT_EQ(nu_offset(kFin, {1, 2, 1}), 0);
  EXPECT_EQ(nu_offset(kBalanced0, {4, 5, 4}), 1);
}

TEST(Accessory, FinPairExamples) {
  EXPECT_EQ(accessory_triples(kFin, {1, 2, 1}), (std::vector<Triple>{{2, 5, 1}}));
  auto a = accessory_triples(kFin, {4, 5, 4});
  EXPECT_EQ(a.size(), 10u);
  EXPECT_EQ(codim_U_exact(kFin, {4, 5, 4}), 11);
  // the (4,5,4) stratum then has codimension codimU - codimG - nu = 1
  EXPECT_EQ(codim_U_exact(kFin, {4, 5, 4}) - codim_G(kFin, {4, 5, 4}) - nu_offset(kFin, {4, 5, 4}), 1);
}

TEST(Accessory, AgreesWithPlantingRule) {
  for (const auto& bp : satisfied_pairs(6))
    for (const Triple& t : all_triples()) {
      EXPECT_EQ(accessory_triples(bp, t), constrained_entries(bp, t));
      EXPECT_EQ(codim_U_exact(bp, t), imposed_conditions(bp, t));
    }
}

TEST(DimH, Values) {
  EXPECT_EQ(dimH(1), 4);
  EXPECT_EQ(dimH(2), 6);
  EXPECT_EQ(dimH(3), 8);
  EXPECT_EQ(dimH(4), 9);
}

TEST(Verdict, FinPairPasses) {
  auto r = counting_verdict(kFin);
  EXPECT_EQ(r.triples.size(), 40u);
  EXPECT_TRUE(r.surjective);
  EXPECT_TRUE(r.all_pass());
}

TEST(Verdict, EveryRealizablePairUpToGenus12Passes) {
  auto pairs = satisfied_pairs(12);
  ASSERT_FALSE(pairs.empty());
  for (const auto& bp : pairs) {
    auto r = counting_verdict(bp);
    EXPECT_TRUE(r.all_pass()) << "g=" << bp.g;
    for (const auto& c : r.triples) EXPECT_TRUE(c.route_ok());
  }
}

TEST(Verdict, RejectsUnrealizable) {
  EXPECT_THROW(counting_verdict(BundlePair{6, {1, 2, 3, 4}, {1, 2, 4, 6, 7}}), InvalidInput);
  EXPECT_THROW(counting_verdict(BundlePair{15, {3, 4, 6, 6}, {5, 7, 8, 8, 10}}), InvalidInput);
}
