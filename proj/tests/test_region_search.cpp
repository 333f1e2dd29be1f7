#include "catalysis/errors.hpp"
#include "catalysis/region_search.hpp"
#include "support/test_support.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace catalysis;
using catalysis::fixtures::q;
using catalysis::fixtures::state;

namespace {

std::size_t count_kind(const HyperplaneSet& set, PlaneKind kind) {
  return static_cast<std::size_t>(
      std::count_if(set.planes.begin(), set.planes.end(), [&](const Hyperplane& h) { return h.kind == kind; }));
}

LinearConstraint constraint1(Rational coefficient, Rational constant) {
  LinearConstraint c;
  c.coefficients = {std::move(coefficient)};
  c.constant = std::move(constant);
  return c;
}

bool brute_catalyst(const SchmidtVector& a, const SchmidtVector& b, const std::vector<Rational>& phi) {
  std::vector<Rational> pa, pb;
  for (const auto& x : a)
    for (const auto& y : phi) pa.push_back(x * y);
  for (const auto& x : b)
    for (const auto& y : phi) pb.push_back(x * y);
  return fixtures::brute_majorized(pa, pb);
}

}  // namespace

TEST(BuildHyperplanes, ProductPlaneCountsForFourLevelStates) {
  const auto a = state({"0.4", "0.3", "0.2", "0.1"});
  const auto b = state({"0.5", "0.2", "0.2", "0.1"});
  EXPECT_EQ(build_hyperplanes(a, b, 2).product_planes_generated, 12u);
  EXPECT_EQ(build_hyperplanes(a, b, 3).product_planes_generated, 36u);
}

TEST(BuildHyperplanes, SimplexFacetsPresent) {
  const auto set = build_hyperplanes(fixtures::sample_a_psi1(), fixtures::sample_a_psi2(), 3);
  EXPECT_EQ(set.k, 3u);
  EXPECT_EQ(count_kind(set, PlaneKind::Ordering), 2u);
  EXPECT_EQ(count_kind(set, PlaneKind::Boundary), 1u);
  EXPECT_EQ(count_kind(set, PlaneKind::Product), set.product_planes);
  for (const auto& h : set.planes) {
    const auto first = std::find_if(h.coefficients.begin(), h.coefficients.end(), [](const Rational& r) { return r != 0; });
    ASSERT_NE(first, h.coefficients.end());
    EXPECT_EQ(*first, 1);
  }
}

TEST(BuildHyperplanes, TwoLevelPlanesMatchBreakpoints) {
  // On the line x1 + x2 = 1 each product plane crosses at one breakpoint.
  const auto a = fixtures::sample_a_psi1();
  const auto b = fixtures::sample_a_psi2();
  const auto set = build_hyperplanes(a, b, 2);
  std::set<Rational> crossings;
  for (const auto& h : set.planes) {
    if (h.kind != PlaneKind::Product) continue;
    // h0 x + h1 (1 - x) = 0
    const Rational den = h.coefficients[0] - h.coefficients[1];
    ASSERT_NE(den, 0);
    const Rational x = -h.coefficients[1] / den;
    if (x > q(1, 2) && x < 1) crossings.insert(x);
  }
  const auto bp = breakpoints(a, b);
  const std::set<Rational> interior(bp.values.begin() + 1, bp.values.end() - 1);
  EXPECT_EQ(crossings, interior);
}

TEST(CellRepresentatives, NoProductPlanesGivesSingleCell) {
  const auto set = build_hyperplanes(state({"1/2", "1/2"}), state({"1/2", "1/2"}), 2);
  EXPECT_EQ(set.product_planes, 0u);
  const auto reps = cell_representatives(set);
  ASSERT_EQ(reps.size(), 1u);
  EXPECT_EQ(reps[0].point, (std::vector<Rational>{q(3, 4), q(1, 4)}));
}

TEST(CellRepresentatives, PointsStrictlyInsideAndSignaturesDistinct) {
  const auto set = build_hyperplanes(fixtures::sample_a_psi1(), fixtures::sample_a_psi2(), 3);
  const auto reps = cell_representatives(set);
  std::set<SignVector> seen;
  for (const auto& rep : reps) {
    ASSERT_EQ(rep.point.size(), 3u);
    EXPECT_EQ(rep.point[0] + rep.point[1] + rep.point[2], 1);
    EXPECT_GT(rep.point[0], rep.point[1]);
    EXPECT_GT(rep.point[1], rep.point[2]);
    EXPECT_GT(rep.point[2], 0);
    EXPECT_EQ(rep.signature, sign_vector(set, rep.point));
    for (auto s : rep.signature) EXPECT_NE(s, 0);
    EXPECT_TRUE(seen.insert(rep.signature).second);
  }
}

TEST(CellRepresentatives, CoverEveryCellHitByAFineScan) {
  const auto set = build_hyperplanes(fixtures::sample_b_psi1(), fixtures::sample_b_psi2(), 3);
  std::set<SignVector> found;
  for (const auto& rep : cell_representatives(set)) found.insert(rep.signature);
  const long d = 60;
  for (long m1 = 1; m1 < d; ++m1) {
    for (long m2 = 1; m2 < m1; ++m2) {
      const long m3 = d - m1 - m2;
      if (!(m3 > 0 && m3 < m2)) continue;
      const std::vector<Rational> p{q(m1, d), q(m2, d), q(m3, d)};
      const auto sig = sign_vector(set, p);
      if (std::find(sig.begin(), sig.end(), 0) != sig.end()) continue;
      ASSERT_TRUE(found.count(sig)) << m1 << "," << m2 << "," << m3;
    }
  }
}

TEST(CellSystem, ShapeAndTieDetection) {
  const auto a = fixtures::sample_a_psi1();
  const auto b = fixtures::sample_a_psi2();
  const auto set = build_hyperplanes(a, b, 2);
  const auto reps = cell_representatives(set);
  ASSERT_FALSE(reps.empty());
  const auto sys = cell_system(reps[0], a, b);
  EXPECT_EQ(sys.variables, 1u);
  const auto prefixes = std::count_if(sys.constraints.begin(), sys.constraints.end(), [](const LinearConstraint& c) {
    return c.origin == ConstraintOrigin::MajorizationPrefix;
  });
  EXPECT_EQ(prefixes, 8);

  CellRepresentative on_plane{{q(4, 5), q(1, 5)}, {}};
  try {
    cell_system(on_plane, a, b);
    FAIL();
  } catch (const CatalysisError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::TieAtRepresentative);
  }
}

TEST(SolveFeasibility, Interval) {
  LinearSystem sys{1, {constraint1(q(-1), q(3, 5)), constraint1(q(1), q(-5, 8))}};
  const auto fp = solve_feasibility(sys);
  ASSERT_TRUE(fp);
  EXPECT_EQ(fp->point, (std::vector<Rational>{q(3, 5)}));
  EXPECT_EQ(fp->first_lo, q(3, 5));
  EXPECT_EQ(fp->first_hi, q(5, 8));
}

TEST(SolveFeasibility, Infeasible) {
  LinearSystem sys{1, {constraint1(q(-1), q(1)), constraint1(q(1), q(0))}};
  EXPECT_FALSE(solve_feasibility(sys));
}

TEST(SolveFeasibility, TwoVariables) {
  // y1 + y2 <= 1, y1 >= 1/2, y2 >= y1 / 2
  LinearSystem sys{2, {}};
  LinearConstraint c;
  c.coefficients = {q(1), q(1)};
  c.constant = q(-1);
  sys.constraints.push_back(c);
  c.coefficients = {q(-1), q(0)};
  c.constant = q(1, 2);
  sys.constraints.push_back(c);
  c.coefficients = {q(1, 2), q(-1)};
  c.constant = q(0);
  sys.constraints.push_back(c);
  const auto fp = solve_feasibility(sys);
  ASSERT_TRUE(fp);
  EXPECT_EQ(fp->point, (std::vector<Rational>{q(1, 2), q(1, 4)}));
  EXPECT_EQ(fp->first_hi, q(2, 3));
}

TEST(FindCatalysts, ExamplesAtTwoLevels) {
  const auto r1 = find_catalysts(fixtures::sample_a_psi1(), fixtures::sample_a_psi2(), 2);
  EXPECT_EQ(r1.verdict, CatalystVerdict::Exists);
  const auto u1 = feasible_union_k2(r1);
  ASSERT_EQ(u1.intervals.size(), 1u);
  EXPECT_EQ(u1.intervals[0], ClosedInterval(q(3, 5), q(5, 8)));

  const auto u2 = feasible_union_k2(find_catalysts(fixtures::sample_b_psi1(), fixtures::sample_b_psi2(), 2));
  ASSERT_EQ(u2.intervals.size(), 1u);
  EXPECT_EQ(u2.intervals[0], ClosedInterval(q(13, 25), q(25, 38)));
}

TEST(FindCatalysts, ShortCircuitVerdicts) {
  const auto a = state({"0.5", "0.3", "0.2"});
  const auto b = state({"0.6", "0.3", "0.1"});
  EXPECT_EQ(find_catalysts(a, b, 3).verdict, CatalystVerdict::AlreadyTransformable);
  EXPECT_EQ(find_catalysts(b, a, 3).verdict, CatalystVerdict::ReverseOnly);
  EXPECT_EQ(find_catalysts(a, a, 3).verdict, CatalystVerdict::Equivalent);
}

TEST(FindCatalysts, UnsupportedK) {
  for (std::size_t k : {0u, 1u, 5u}) {
    try {
      find_catalysts(fixtures::sample_a_psi1(), fixtures::sample_a_psi2(), k);
      FAIL() << k;
    } catch (const CatalysisError& e) {
      EXPECT_EQ(e.kind(), ErrorKind::UnsupportedK);
    }
  }
}

TEST(FindCatalysts, WitnessesVerifyIndependently) {
  const auto a = fixtures::sample_a_psi1();
  const auto b = fixtures::sample_a_psi2();
  for (std::size_t k : {2u, 3u}) {
    const auto r = find_catalysts(a, b, k);
    ASSERT_EQ(r.verdict, CatalystVerdict::Exists);
    for (const auto& w : r.witnesses) {
      ASSERT_EQ(w.catalyst.size(), k);
      std::vector<Rational> phi(w.catalyst.begin(), w.catalyst.end());
      EXPECT_TRUE(brute_catalyst(a, b, phi));
      EXPECT_EQ(w.lower_dimensional, phi.back() == 0);
    }
  }
}

TEST(FindCatalysts, Deterministic) {
  const auto a = fixtures::sample_b_psi1();
  const auto b = fixtures::sample_b_psi2();
  const auto r1 = find_catalysts(a, b, 3);
  const auto r2 = find_catalysts(a, b, 3, Execution::Serial);
  EXPECT_EQ(r1.stats, r2.stats);
  ASSERT_EQ(r1.witnesses.size(), r2.witnesses.size());
  for (std::size_t i = 0; i < r1.witnesses.size(); ++i) {
    EXPECT_EQ(r1.witnesses[i].cell_signature, r2.witnesses[i].cell_signature);
    EXPECT_EQ(r1.witnesses[i].catalyst, r2.witnesses[i].catalyst);
  }
}

// ---------------------------------------------------------------------------
// Properties

TEST(RegionSearchProperty, TwoLevelMatchesSweep) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 100; ++trial) {
    const auto [a, b] = fixtures::random_incomparable_pair(rng, 4 + trial % 3, trial % 2 == 0);
    const auto r = find_catalysts(a, b, 2);
    const auto swept = find_catalysts_k2(a, b);
    ASSERT_EQ(feasible_union_k2(r), swept);
    ASSERT_EQ(r.verdict == CatalystVerdict::Exists, !swept.empty());
  }
}

TEST(RegionSearchProperty, LargerCatalystsNeverLoseExistence) {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 25; ++trial) {
    const auto [a, b] = fixtures::random_incomparable_pair(rng, 4, true);
    const bool k2 = find_catalysts(a, b, 2).verdict == CatalystVerdict::Exists;
    const bool k3 = find_catalysts(a, b, 3).verdict == CatalystVerdict::Exists;
    if (k2) ASSERT_TRUE(k3);
  }
}

TEST(RegionSearchProperty, ThreeLevelAgreesWithGridScan) {
  // Any grid catalyst must be found; any found catalyst is independently verified above.
  std::mt19937_64 rng(61);
  const long d = 40;
  for (int trial = 0; trial < 20; ++trial) {
    const auto [a, b] = fixtures::random_incomparable_pair(rng, 4, true);
    bool grid_hit = false;
    for (long m1 = 0; m1 <= d && !grid_hit; ++m1)
      for (long m2 = 0; m2 <= m1 && !grid_hit; ++m2) {
        const long m3 = d - m1 - m2;
        if (m3 < 0 || m3 > m2) continue;
        grid_hit = brute_catalyst(a, b, {q(m1, d), q(m2, d), q(m3, d)});
      }
    if (grid_hit) ASSERT_EQ(find_catalysts(a, b, 3).verdict, CatalystVerdict::Exists);
  }
}
