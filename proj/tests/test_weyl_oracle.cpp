#include "fec/counting.hpp"
#include "fec/weyl_oracle.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace fec;

namespace {

// Counts n-tuples of reflections with product w by direct enumeration.
Natural brute_force_factorizations(const RootSystem& rs, const GroupElement& w) {
  std::vector<GroupElement> refl;
  for (int beta : rs.positive_roots) refl.push_back(rs.reflection(beta));
  const int n = rs.rank;
  std::uint64_t count = 0;
  std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
  while (true) {
    GroupElement p = rs.identity();
    for (auto k : idx) p = p * refl[k];
    if (p == w) ++count;
    int pos = n - 1;
    while (pos >= 0 && ++idx[pos] == refl.size()) idx[pos--] = 0;
    if (pos < 0) break;
  }
  return Natural(count);
}

// Rank by Gaussian elimination over the rationals.
int rational_rank(const std::vector<std::vector<long long>>& m) {
  std::vector<std::vector<Ratio>> a;
  for (const auto& row : m) {
    std::vector<Ratio> r;
    for (long long x : row) r.emplace_back(x);
    a.push_back(std::move(r));
  }
  std::size_t rank = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t p = rank;
    while (p < a.size() && a[p][c].is_zero()) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == rank || a[r][c].is_zero()) continue;
      Ratio f = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < cols; ++k) a[r][k] = a[r][k] - f * a[rank][k];
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

}  // namespace

TEST(RootSystem, RootCounts) {
  auto roots = [](Family f, int n) { return build_root_system({f, n}).roots.size(); };
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(roots(Family::A, n), static_cast<std::size_t>(n * (n + 1)));
  for (int n = 4; n <= 8; ++n) EXPECT_EQ(roots(Family::D, n), static_cast<std::size_t>(2 * n * (n - 1)));
  EXPECT_EQ(roots(Family::E, 6), 72U);
  EXPECT_EQ(roots(Family::E, 7), 126U);
  EXPECT_EQ(roots(Family::E, 8), 240U);
}

TEST(RootSystem, RootsHaveNormTwoAndNegatives) {
  for (DynkinType t : {DynkinType(Family::A, 5), DynkinType(Family::D, 6), DynkinType(Family::E, 7)}) {
    auto rs = build_root_system(t);
    EXPECT_EQ(rs.positive_roots.size() * 2, rs.roots.size());
    for (std::size_t k = 0; k < rs.roots.size(); ++k) {
      EXPECT_EQ(rs.form(rs.roots[k], rs.roots[k]), 2);
      EXPECT_EQ(rs.negation[rs.negation[k]], static_cast<int>(k));
    }
  }
  EXPECT_THROW((void)build_root_system({Family::A, 13}), std::invalid_argument);
}

TEST(RootSystem, ReflectionsAreInvolutionsFixingAHyperplane) {
  auto rs = build_root_system({Family::D, 5});
  for (int beta : rs.positive_roots) {
    auto s = rs.reflection(beta);
    EXPECT_TRUE((s * s).is_identity());
    EXPECT_EQ(s.perm[beta], rs.negation[beta]);
    EXPECT_EQ(absolute_length(rs, s), 1);
    // commutes with negation
    for (std::size_t x = 0; x < rs.roots.size(); ++x) {
      EXPECT_EQ(s.perm[rs.negation[x]], rs.negation[s.perm[x]]);
    }
  }
}

TEST(Coxeter, OrdersEqualCoxeterNumber) {
  for (int n = 1; n <= 9; ++n) {
    auto rs = build_root_system({Family::A, n});
    EXPECT_EQ(element_order(coxeter_element(rs)), n + 1) << "A" << n;
  }
  for (int n = 4; n <= 9; ++n) {
    auto rs = build_root_system({Family::D, n});
    EXPECT_EQ(element_order(coxeter_element(rs)), 2 * (n - 1)) << "D" << n;
  }
  EXPECT_EQ(element_order(coxeter_element(build_root_system({Family::E, 6}))), 12);
  EXPECT_EQ(element_order(coxeter_element(build_root_system({Family::E, 7}))), 18);
  EXPECT_EQ(element_order(coxeter_element(build_root_system({Family::E, 8}))), 30);
}

TEST(Coxeter, AbsoluteLengthIsRank) {
  for (DynkinType t : {DynkinType(Family::A, 6), DynkinType(Family::D, 7), DynkinType(Family::E, 8)}) {
    auto rs = build_root_system(t);
    EXPECT_EQ(absolute_length(rs, coxeter_element(rs)), t.rank());
    EXPECT_EQ(absolute_length(rs, coxeter_element(rs, true)), t.rank());
    EXPECT_EQ(absolute_length(rs, rs.identity()), 0);
  }
}

TEST(AbsoluteLength, ChangesByOneUnderReflection) {
  auto rs = build_root_system({Family::E, 6});
  std::mt19937 rng(3);
  std::uniform_int_distribution<std::size_t> pick(0, rs.positive_roots.size() - 1);
  for (int trial = 0; trial < 200; ++trial) {
    GroupElement w = rs.identity();
    int steps = static_cast<int>(rng() % 8);
    for (int k = 0; k < steps; ++k) w = w * rs.reflection(rs.positive_roots[pick(rng)]);
    int l = absolute_length(rs, w);
    auto t = rs.reflection(rs.positive_roots[pick(rng)]);
    int d = absolute_length(rs, t * w) - l;
    EXPECT_TRUE(d == 1 || d == -1) << "delta " << d;
  }
}

TEST(IntegerRank, AgreesWithRationalElimination) {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> dim(1, 8);
  std::uniform_int_distribution<int> entry(-3, 3);
  for (int trial = 0; trial < 300; ++trial) {
    int rows = dim(rng);
    int cols = dim(rng);
    std::vector<std::vector<long long>> m(static_cast<std::size_t>(rows), std::vector<long long>(cols));
    for (auto& row : m) {
      for (auto& x : row) x = entry(rng);
    }
    // force some rank deficiency
    if (rows > 2 && trial % 3 == 0) {
      for (int c = 0; c < cols; ++c) m[0][c] = m[1][c] * 2 - m[2][c];
    }
    EXPECT_EQ(integer_rank(m), rational_rank(m));
  }
}

TEST(Oracle, SmallCasesMatchBruteForce) {
  for (DynkinType t : {DynkinType(Family::A, 1), DynkinType(Family::A, 2), DynkinType(Family::A, 3),
                       DynkinType(Family::A, 4), DynkinType(Family::D, 4)}) {
    auto rs = build_root_system(t);
    auto c = coxeter_element(rs);
    auto brute = brute_force_factorizations(rs, c);
    EXPECT_EQ(count_reflection_factorizations(rs).count, brute) << t.str();
  }
  auto a2 = build_root_system({Family::A, 2});
  EXPECT_EQ(brute_force_factorizations(a2, coxeter_element(a2)), Natural(3));
  auto a3 = build_root_system({Family::A, 3});
  EXPECT_EQ(brute_force_factorizations(a3, coxeter_element(a3)), Natural(16));
}

TEST(Oracle, MatchesClosedForm) {
  for (DynkinType t : {DynkinType(Family::A, 1), DynkinType(Family::A, 5), DynkinType(Family::D, 4),
                       DynkinType(Family::D, 5), DynkinType(Family::E, 6)}) {
    auto rs = build_root_system(t);
    EXPECT_EQ(count_reflection_factorizations(rs).count, e_dynkin_closed(t)) << t.str();
  }
}

TEST(Oracle, IndependentOfCoxeterElementChoice) {
  for (DynkinType t : {DynkinType(Family::A, 4), DynkinType(Family::D, 4)}) {
    auto rs = build_root_system(t);
    auto forward = count_reflection_factorizations(rs, coxeter_element(rs));
    auto reversed = count_reflection_factorizations(rs, coxeter_element(rs, true));
    EXPECT_EQ(forward.count, reversed.count) << t.str();
    EXPECT_EQ(forward.interval_size, reversed.interval_size) << t.str();
  }
}

TEST(Oracle, IntervalSizeIsCatalanNumber) {
  // elements below c in absolute order, the identity excluded from the memo
  auto a4 = build_root_system({Family::A, 4});
  EXPECT_EQ(count_reflection_factorizations(a4).interval_size, 42U - 1U);
  auto d4 = build_root_system({Family::D, 4});
  EXPECT_EQ(count_reflection_factorizations(d4).interval_size, 50U - 1U);
}

TEST(Oracle, BudgetExceededThrows) {
  auto rs = build_root_system({Family::E, 7});
  EXPECT_THROW((void)count_reflection_factorizations(rs, std::chrono::milliseconds(0)), OracleBudgetExceeded);
}

TEST(GroupElement, CompositionAppliesRightFactorFirst) {
  auto rs = build_root_system({Family::A, 2});
  auto s1 = rs.reflection(rs.simple_roots[0]);
  auto s2 = rs.reflection(rs.simple_roots[1]);
  auto p = s1 * s2;
  for (std::size_t x = 0; x < rs.roots.size(); ++x) EXPECT_EQ(p.perm[x], s1.perm[s2.perm[x]]);
  EXPECT_FALSE((s1 * s2) == (s2 * s1));
}
