#include "fec/cli.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <sstream>

using namespace fec;
using namespace fec::cli;

namespace {

std::vector<nlohmann::json> json_lines(const std::string& text) {
  std::vector<nlohmann::json> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) out.push_back(nlohmann::json::parse(line));
  }
  return out;
}

}  // namespace

TEST(Cli, ParseMethodAndFormat) {
  EXPECT_EQ(parse_method("both"), Method::both);
  EXPECT_EQ(method_name(Method::all), "all");
  EXPECT_THROW((void)parse_method("fast"), std::invalid_argument);
  EXPECT_EQ(parse_format("csv"), Format::csv);
  EXPECT_THROW((void)parse_format("xml"), std::invalid_argument);
}

TEST(Cli, DynkinBoth) {
  auto rec = cmd_dynkin({Family::E, 7}, Method::both, std::chrono::milliseconds(1000));
  EXPECT_EQ(rec.values.at("closed"), Natural(1062882));
  EXPECT_EQ(rec.values.at("recursive"), Natural(1062882));
  EXPECT_EQ(rec.agreement(), std::optional<bool>(true));
  auto j = rec.to_json();
  EXPECT_EQ(j["query"], "E7");
  EXPECT_EQ(j["values"]["closed"], "1062882");
  EXPECT_EQ(j["agreement"], true);
}

TEST(Cli, DynkinAllIncludesOracle) {
  auto rec = cmd_dynkin({Family::D, 4}, Method::all, std::chrono::milliseconds(60000));
  EXPECT_EQ(rec.values.size(), 4U);
  EXPECT_EQ(rec.values.at("oracle"), Natural(162));
  EXPECT_EQ(rec.agreement(), std::optional<bool>(true));
}

TEST(Cli, OracleBudgetReportedAsError) {
  auto rec = cmd_dynkin({Family::E, 8}, Method::oracle, std::chrono::milliseconds(0));
  EXPECT_TRUE(rec.values.empty());
  EXPECT_EQ(rec.errors.count("oracle"), 1U);
  EXPECT_FALSE(rec.agreement().has_value());
}

TEST(Cli, SingleMethodHasNoAgreementField) {
  auto rec = cmd_dynkin({Family::A, 3}, Method::closed, std::chrono::milliseconds(0));
  EXPECT_FALSE(rec.to_json().contains("agreement"));
  EXPECT_EQ(rec.values.at("closed"), Natural(16));
}

TEST(Cli, AffineMethods) {
  CountCache cache;
  auto rec = cmd_affine(OrbifoldTriple(2, 3, 5), Method::all, cache);
  EXPECT_EQ(rec.values.at("recursive"), Natural(2551500000ULL));
  EXPECT_EQ(rec.values.at("closed"), Natural(2551500000ULL));
  EXPECT_EQ(rec.values.at("deg_ll"), Natural(2551500000ULL));
  EXPECT_EQ(rec.to_json()["values"]["closed"], "2551500000");
  EXPECT_EQ(cache.find(OrbifoldTriple(2, 3, 5)), std::optional<Natural>(Natural(2551500000ULL)));

  auto again = cmd_affine(OrbifoldTriple(5, 2, 3), Method::recursive, cache);
  EXPECT_EQ(again.values.at("recursive"), Natural(2551500000ULL));
  EXPECT_EQ(again.query, "(2,3,5)");

  EXPECT_THROW((void)cmd_affine(OrbifoldTriple(1, 1, 1), Method::oracle, cache), std::invalid_argument);
}

TEST(Cli, AffineFirstTermIntegralNoNote) {
  // (1,1,2): first sum 3 * 3 over chi = 3/2 is 6
  CountCache cache;
  auto rec = cmd_affine(OrbifoldTriple(1, 1, 2), Method::recursive, cache);
  for (const auto& n : rec.notes) EXPECT_EQ(n.find("not integral"), std::string::npos) << n;
  EXPECT_EQ(rec.values.at("recursive"), e_affine_closed(OrbifoldTriple(1, 1, 2)));
  EXPECT_EQ(affine_breakdown(OrbifoldTriple(1, 1, 2), cache).vertex_part, Ratio(6));
}

TEST(Cli, Forest) {
  auto rec = cmd_forest(DynkinForest({{Family::A, 1}, {Family::A, 3}, {Family::A, 3}}));
  EXPECT_EQ(rec.query, "A1 x A3 x A3");
  EXPECT_EQ(rec.values.at("closed"), Natural(140 * 16 * 16));
  EXPECT_EQ(rec.agreement(), std::optional<bool>(true));
  EXPECT_EQ(cmd_forest(DynkinForest()).values.at("closed"), Natural(1));
}

TEST(Cli, OracleCommand) {
  auto rec = cmd_oracle({Family::E, 6}, std::chrono::milliseconds(60000));
  EXPECT_EQ(rec.values.at("oracle"), Natural(41472));
  EXPECT_EQ(rec.agreement(), std::optional<bool>(true));
  bool saw_order = false;
  for (const auto& n : rec.notes) saw_order = saw_order || n == "coxeter element order 12";
  EXPECT_TRUE(saw_order);
}

TEST(Cli, VerifyHurwitzJson) {
  std::ostringstream os;
  EXPECT_EQ(cmd_verify("hurwitz", VerifyOptions{}, os), 0);
  auto lines = json_lines(os.str());
  std::size_t identities = 0;
  std::size_t discrepancies = 0;
  for (const auto& j : lines) {
    if (j["kind"] == "identity") {
      ++identities;
      EXPECT_TRUE(j["holds"].get<bool>());
      EXPECT_TRUE(j["lhs"].is_string());
    }
    if (j["kind"] == "discrepancy") {
      ++discrepancies;
      EXPECT_EQ(j["holds_for"], nlohmann::json::array({1}));
    }
  }
  EXPECT_EQ(identities, 15U * 15U + 15U);
  EXPECT_EQ(discrepancies, 1U);
}

TEST(Cli, VerifyTablesJson) {
  std::ostringstream os;
  VerifyOptions opt;
  opt.max_r = 4;
  EXPECT_EQ(cmd_verify("tables", opt, os), 0);
  auto lines = json_lines(os.str());
  bool flagged = false;
  for (const auto& j : lines) {
    if (j["kind"] == "table_row" || j["kind"] == "table_total") {
      EXPECT_TRUE(j["match"].get<bool>()) << j.dump();
    }
    if (j["kind"] == "discrepancy" && j["printed"] == "7 * 38840") flagged = true;
  }
  EXPECT_TRUE(flagged);
  EXPECT_NE(os.str().find("\"2551500000\""), std::string::npos);
}

TEST(Cli, VerifyCrossMarkdown) {
  std::ostringstream os;
  VerifyOptions opt;
  opt.max_mu = 6;
  opt.format = Format::md;
  EXPECT_EQ(cmd_verify("cross", opt, os), 0);
  EXPECT_NE(os.str().find("| (1,1,1) | 2 | 1 | 1 | 1 | yes |"), std::string::npos);
}

TEST(Cli, VerifyRejectsUnknownSuiteAndCsv) {
  std::ostringstream os;
  EXPECT_THROW((void)cmd_verify("everything", VerifyOptions{}, os), std::invalid_argument);
  VerifyOptions csv;
  csv.format = Format::csv;
  EXPECT_THROW((void)cmd_verify("cross", csv, os), std::invalid_argument);
}

TEST(Cli, TableAffineCsv) {
  std::ostringstream os;
  TableOptions opt;
  opt.affine = true;
  opt.max_mu = 2;
  opt.format = Format::csv;
  cmd_table(opt, os);
  EXPECT_EQ(os.str(), "a1,a2,a3,mu,chi,e,deg_ll\n1,1,1,2,2,1,1\n");
}

TEST(Cli, TableJsonIsDeterministic) {
  TableOptions opt;
  opt.dynkin = true;
  opt.affine = true;
  opt.format = Format::json;
  std::ostringstream a;
  std::ostringstream b;
  cmd_table(opt, a);
  cmd_table(opt, b);
  EXPECT_EQ(a.str(), b.str());
  auto j = nlohmann::json::parse(a.str());
  EXPECT_EQ(j["dynkin"].size(), dynkin_sweep(8).size());
  EXPECT_NE(a.str().find("\"2551500000\""), std::string::npos);
  EXPECT_NE(a.str().find("\"37968750\""), std::string::npos);
}

TEST(Cli, TableNeedsASelection) {
  std::ostringstream os;
  EXPECT_THROW(cmd_table(TableOptions{}, os), std::invalid_argument);
}

TEST(Cli, CacheFileSurvivesRestart) {
  std::string path = ::testing::TempDir() + "fec_cache_test.txt";
  std::remove(path.c_str());
  {
    CountCache cache;
    cache.load_file(path);
    (void)cmd_affine(OrbifoldTriple(2, 3, 4), Method::recursive, cache);
    cache.save_file(path);
  }
  CountCache reloaded;
  reloaded.load_file(path);
  auto rec = cmd_affine(OrbifoldTriple(2, 3, 4), Method::recursive, reloaded);
  EXPECT_EQ(rec.values.at("recursive"), Natural(46448640));
  bool hit = false;
  for (const auto& n : rec.notes) hit = hit || n.find("cache hit") != std::string::npos;
  EXPECT_TRUE(hit);
  std::remove(path.c_str());
}
