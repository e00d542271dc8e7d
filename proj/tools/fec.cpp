// fec: count full exceptional collections for Dynkin quivers and orbifold
// projective lines, run the Weyl group oracle and the verification suites.

#include "fec/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

namespace {

fec::DynkinType type_from_tokens(const std::vector<std::string>& tokens) {
  std::string joined;
  for (const auto& t : tokens) joined += t;
  return fec::DynkinType::parse(joined);
}

}  // namespace

int main(int argc, char** argv) {
  using namespace fec;
  using namespace fec::cli;

  CLI::App app{"Exact counts of full exceptional collections"};
  app.require_subcommand(1);

  std::vector<std::string> type_tokens;
  std::string method = "closed";
  std::string format = "json";
  std::string cache_path;

  auto* dynkin = app.add_subcommand("dynkin", "count for a Dynkin quiver, e.g. `dynkin E 7` or `dynkin A5`");
  dynkin->add_option("type", type_tokens, "family and rank")->required()->expected(1, 2);
  dynkin->add_option("--method", method, "closed | recursive | oracle | both | all");

  std::vector<int> weights;
  auto* affine = app.add_subcommand("affine", "count for an orbifold projective line, e.g. `affine 2 3 5`");
  affine->add_option("weights", weights, "a1 a2 a3")->required()->expected(3);
  affine->add_option("--method", method, "closed | recursive | both | all");
  affine->add_option("--cache", cache_path, "persistent cache file (a1,a2,a3 -> count)");

  std::vector<std::string> forest_tokens;
  auto* forest = app.add_subcommand("forest", "count for a disjoint union, e.g. `forest A1 A3 A3`");
  forest->add_option("types", forest_tokens, "Dynkin types");

  auto* oracle = app.add_subcommand("oracle", "reflection factorizations of a Coxeter element");
  oracle->add_option("type", type_tokens, "family and rank")->required()->expected(1, 2);

  std::string suite;
  VerifyOptions vopt;
  auto* verify = app.add_subcommand("verify", "run a verification suite; exit status 0 iff all checks hold");
  verify->add_option("suite", suite, "hurwitz | tables | cross")->required();
  verify->add_option("--max", vopt.max, "hurwitz parameter bound");
  verify->add_option("--max-mu", vopt.max_mu, "cross: bound on mu_A");
  verify->add_option("--max-r", vopt.max_r, "tables: (2,2,r) for 2 <= r <= bound");
  verify->add_option("--format", format, "json | md");

  TableOptions topt;
  std::string table_format = "md";
  auto* table = app.add_subcommand("table", "sweep of counts");
  table->add_flag("--dynkin", topt.dynkin, "Dynkin types up to --max-rank");
  table->add_flag("--affine", topt.affine, "admissible triples up to --max-mu");
  table->add_option("--max-rank", topt.max_rank, "rank bound for --dynkin");
  table->add_option("--max-mu", topt.max_mu, "mu bound for --affine");
  table->add_option("--format", table_format, "json | csv | md");

  CLI11_PARSE(app, argc, argv);

  try {
    if (dynkin->parsed()) {
      auto rec = cmd_dynkin(type_from_tokens(type_tokens), parse_method(method), oracle_budget_from_env());
      std::cout << rec.to_json().dump() << '\n';
      auto agree = rec.agreement();
      return agree.value_or(true) ? 0 : 1;
    }
    if (affine->parsed()) {
      OrbifoldTriple A(weights[0], weights[1], weights[2]);
      CountCache cache;
      if (!cache_path.empty()) cache.load_file(cache_path);
      auto rec = cmd_affine(A, parse_method(method), cache);
      if (!cache_path.empty()) cache.save_file(cache_path);
      std::cout << rec.to_json().dump() << '\n';
      return rec.agreement().value_or(true) ? 0 : 1;
    }
    if (forest->parsed()) {
      std::vector<DynkinType> types;
      for (const auto& t : forest_tokens) types.push_back(DynkinType::parse(t));
      std::cout << cmd_forest(DynkinForest(std::move(types))).to_json().dump() << '\n';
      return 0;
    }
    if (oracle->parsed()) {
      auto rec = cmd_oracle(type_from_tokens(type_tokens), oracle_budget_from_env());
      std::cout << rec.to_json().dump() << '\n';
      if (!rec.errors.empty()) return 2;
      return rec.agreement().value_or(true) ? 0 : 1;
    }
    if (verify->parsed()) {
      vopt.format = parse_format(format);
      return cmd_verify(suite, vopt, std::cout);
    }
    if (table->parsed()) {
      topt.format = parse_format(table_format);
      cmd_table(topt, std::cout);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
