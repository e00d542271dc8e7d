#include "fec/verify.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace fec;

namespace {

const TableRow& row(const TableReport& t, TableRow::Kind kind, const std::string& label) {
  auto it = std::find_if(t.rows.begin(), t.rows.end(),
                         [&](const TableRow& r) { return r.kind == kind && r.label == label; });
  if (it == t.rows.end()) throw std::out_of_range("no row " + label);
  return *it;
}

}  // namespace

TEST(Hurwitz1, Examples) {
  auto r = check_hurwitz1(1, 1);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.lhs, Ratio(1));
  auto s = check_hurwitz1(2, 3);
  EXPECT_TRUE(s.holds);
  // 4!/(1! 2!) 2^2 3^3
  EXPECT_EQ(s.lhs, Ratio(12 * 4 * 27));
  EXPECT_THROW((void)check_hurwitz1(0, 1), std::invalid_argument);
}

TEST(Hurwitz1, HoldsOnGrid) {
  for (int p = 1; p <= 15; ++p) {
    for (int q = 1; q <= 15; ++q) {
      auto r = check_hurwitz1(p, q);
      EXPECT_TRUE(r.holds) << "p=" << p << " q=" << q << " lhs=" << r.lhs << " rhs=" << r.rhs;
      EXPECT_TRUE(r.lhs.is_integer());
    }
  }
}

TEST(Hurwitz1, IsSymmetric) {
  for (int p = 1; p <= 8; ++p) {
    for (int q = 1; q <= 8; ++q) EXPECT_EQ(check_hurwitz1(p, q).lhs, check_hurwitz1(q, p).lhs);
  }
}

TEST(Hurwitz2, HoldsInRange) {
  for (int r = 1; r <= 15; ++r) {
    auto rep = check_hurwitz2(r);
    EXPECT_TRUE(rep.holds) << "r=" << r << " lhs=" << rep.lhs << " rhs=" << rep.rhs;
  }
  EXPECT_EQ(check_hurwitz2(1).lhs, Ratio(24));
  EXPECT_THROW((void)check_hurwitz2(0), std::invalid_argument);
}

TEST(Hurwitz2, LeftSideIsQuarterOfTwoTwoRCount) {
  for (int r = 1; r <= 12; ++r) {
    EXPECT_EQ(check_hurwitz2(r).lhs * Ratio(4), Ratio(e_affine_closed(OrbifoldTriple(2, 2, r)))) << "r=" << r;
  }
}

TEST(Hurwitz2, PublishedCoefficientsOnlyHoldAtOne) {
  EXPECT_TRUE(check_hurwitz2_as_printed(1).holds);
  auto r2 = check_hurwitz2_as_printed(2);
  EXPECT_FALSE(r2.holds);
  EXPECT_EQ(r2.lhs, Ratio(480));
  EXPECT_EQ(r2.rhs, Ratio(462));
  for (int r = 2; r <= 15; ++r) EXPECT_FALSE(check_hurwitz2_as_printed(r).holds) << "r=" << r;
}

TEST(EvalProduct, ParsesPowersAndProducts) {
  EXPECT_EQ(eval_product("2^9 * 3^4"), Natural(41472));
  EXPECT_EQ(eval_product("2 * 3^12"), Natural(1062882));
  EXPECT_EQ(eval_product("2 * 3^5 * 5^7"), Natural(37968750));
  EXPECT_EQ(eval_product("90 * 3 * 3 * 3"), Natural(2430));
  EXPECT_EQ(eval_product("38880"), Natural(38880));
  EXPECT_THROW((void)eval_product("2^"), std::invalid_argument);
  EXPECT_THROW((void)eval_product("x"), std::invalid_argument);
  EXPECT_THROW((void)eval_product("2 * "), std::invalid_argument);
}

TEST(PublishedDynkin, MatchesClosedForm) {
  for (int n = 1; n <= 12; ++n) EXPECT_EQ(published_dynkin_count({Family::A, n}), e_dynkin_closed({Family::A, n}));
  for (int n = 4; n <= 12; ++n) EXPECT_EQ(published_dynkin_count({Family::D, n}), e_dynkin_closed({Family::D, n}));
  for (int n = 6; n <= 8; ++n) {
    EXPECT_EQ(published_dynkin_count({Family::E, n}), e_dynkin_closed({Family::E, n}));
    EXPECT_EQ(published_coxeter_number({Family::E, n}), dynkin_data({Family::E, n}).coxeter_number);
  }
}

TEST(NormalizeStructure, DTwoAndDThree) {
  EXPECT_EQ(detail::normalize_structure("D2 x D6"), "A1 x A1 x D6");
  EXPECT_EQ(detail::normalize_structure("D3 x D5"), "A3 x D5");
  EXPECT_EQ(detail::normalize_structure("A5 x A1"), "A1 x A5");
  EXPECT_EQ(detail::normalize_structure("P(2,3,1) x A1"), "P(1,2,3) x A1");
  EXPECT_EQ(detail::normalize_structure("P(1,3,3)"), "P(1,3,3)");
}

TEST(Tables, ExceptionalRowsMatch) {
  CountCache cache;
  for (int a3 : {3, 4, 5}) {
    auto t = reproduce_table(OrbifoldTriple(2, 3, a3), cache);
    for (const auto& r : t.rows) {
      EXPECT_TRUE(r.matches()) << t.A.str() << " " << r.label << ": " << r.expected_structure << " "
                               << r.expected << " vs " << r.computed_structure << " " << r.computed;
    }
    EXPECT_TRUE(t.reassembles()) << t.A.str() << " " << t.reassembled << " vs " << t.closed;
  }
}

TEST(Tables, SelectedRows) {
  auto e6 = reproduce_table(OrbifoldTriple(2, 3, 3));
  EXPECT_EQ(row(e6, TableRow::Kind::tube, "v = (1,1)").computed, Natural(21870));
  EXPECT_EQ(row(e6, TableRow::Kind::vertex, "v = 5").computed_structure, "A2 x A2 x A2");
  auto e8 = reproduce_table(OrbifoldTriple(2, 3, 5));
  EXPECT_EQ(row(e8, TableRow::Kind::tube, "v = (3,4)").computed, Natural(46448640));
  EXPECT_EQ(row(e8, TableRow::Kind::vertex, "v = 1").computed, pow(Natural(9), 7));
  auto e7 = reproduce_table(OrbifoldTriple(2, 3, 4));
  EXPECT_EQ(row(e7, TableRow::Kind::tube, "v = (3,3)").computed, Natural(1224720));
  EXPECT_EQ(row(e7, TableRow::Kind::tube, "v = (3,3)").multiplier, 4);
}

TEST(Tables, DFamilyRowsMatch) {
  CountCache cache;
  for (int r = 2; r <= 10; ++r) {
    auto t = reproduce_table(OrbifoldTriple(2, 2, r), cache);
    EXPECT_EQ(t.rows.size(), static_cast<std::size_t>(r + 3 + 1 + 1 + r - 1));
    for (const auto& x : t.rows) {
      EXPECT_TRUE(x.matches()) << t.A.str() << " " << x.label << ": " << x.expected_structure << " " << x.expected
                               << " vs " << x.computed_structure << " " << x.computed;
    }
    EXPECT_TRUE(t.reassembles()) << t.A.str();
  }
}

TEST(Tables, UnsupportedTripleThrows) {
  EXPECT_THROW((void)reproduce_table(OrbifoldTriple(1, 2, 3)), std::invalid_argument);
  EXPECT_THROW((void)reproduce_table(OrbifoldTriple(1, 1, 1)), std::invalid_argument);
}

TEST(DisplayedTotals, TyposAreFlagged) {
  auto e6 = displayed_total(3);
  EXPECT_TRUE(e6.discrepancies.empty());
  EXPECT_EQ(e6.printed_total, Natural(1224720));

  auto e7 = displayed_total(4);
  ASSERT_EQ(e7.discrepancies.size(), 2U);
  EXPECT_EQ(e7.table_total, Natural(46448640));
  EXPECT_EQ(e7.printed_total, Natural(54050720));
  bool saw_38840 = false;
  for (const auto& d : e7.discrepancies) {
    if (d.printed == "7 * 38840") {
      saw_38840 = true;
      EXPECT_EQ(d.table, "7 * 38880");
      EXPECT_EQ(d.table_value, Natural(7 * 38880));
    }
  }
  EXPECT_TRUE(saw_38840);

  auto e8 = displayed_total(5);
  ASSERT_EQ(e8.discrepancies.size(), 1U);
  EXPECT_EQ(e8.discrepancies[0].printed, "105 * 3^5 * 5^7");
  EXPECT_EQ(e8.table_total, Natural(2551500000ULL));
  EXPECT_EQ(e8.printed_total, Natural(6520500000ULL));
}

TEST(Cross, AllAgreeUpToFourteen) {
  auto cs = check_cross(14);
  EXPECT_EQ(cs.size(), admissible_triples(14).size());
  for (const auto& c : cs) EXPECT_TRUE(c.agree()) << c.A.str();
}
