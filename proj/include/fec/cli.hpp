#pragma once

// Command implementations behind the `fec` executable. Each command returns
// a value or writes to a stream so it can be exercised without a process.

#include "fec/counting.hpp"
#include "fec/report.hpp"
#include "fec/verify.hpp"
#include "fec/weyl_oracle.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fec::cli {

enum class Method { closed, recursive, oracle, both, all };
enum class Format { json, csv, md };

inline Method parse_method(std::string_view s) {
  if (s == "closed") return Method::closed;
  if (s == "recursive") return Method::recursive;
  if (s == "oracle") return Method::oracle;
  if (s == "both") return Method::both;
  if (s == "all") return Method::all;
  throw std::invalid_argument("unknown method '" + std::string(s) + "' (closed, recursive, oracle, both, all)");
}

inline std::string method_name(Method m) {
  switch (m) {
    case Method::closed: return "closed";
    case Method::recursive: return "recursive";
    case Method::oracle: return "oracle";
    case Method::both: return "both";
    case Method::all: return "all";
  }
  return "?";
}

inline Format parse_format(std::string_view s) {
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  if (s == "md") return Format::md;
  throw std::invalid_argument("unknown format '" + std::string(s) + "' (json, csv, md)");
}

/// FEC_ORACLE_BUDGET_MS, default 60000.
inline std::chrono::milliseconds oracle_budget_from_env() {
  const char* env = std::getenv("FEC_ORACLE_BUDGET_MS");
  if (env == nullptr || *env == '\0') return std::chrono::milliseconds(60000);
  char* end = nullptr;
  long long v = std::strtoll(env, &end, 10);
  if (*end != '\0' || v < 0) throw std::invalid_argument("FEC_ORACLE_BUDGET_MS must be a non-negative integer");
  return std::chrono::milliseconds(v);
}

struct OutputRecord {
  std::string query;
  std::string method;
  std::map<std::string, Natural> values;
  std::map<std::string, std::string> errors;  // methods that ran but produced no value
  std::vector<std::string> notes;
  double elapsed_ms = 0;

  /// Set only when at least two methods produced values.
  [[nodiscard]] std::optional<bool> agreement() const {
    if (values.size() < 2) return std::nullopt;
    for (const auto& [name, v] : values) {
      if (v != values.begin()->second) return false;
    }
    return true;
  }

  [[nodiscard]] nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["query"] = query;
    j["method"] = method;
    nlohmann::ordered_json vs = nlohmann::ordered_json::object();
    for (const auto& [name, v] : values) vs[name] = v.str();
    j["values"] = vs;
    if (auto a = agreement()) j["agreement"] = *a;
    if (!errors.empty()) j["errors"] = errors;
    if (!notes.empty()) j["notes"] = notes;
    j["elapsed_ms"] = elapsed_ms;
    return j;
  }
};

namespace detail {

class Stopwatch {
 public:
  [[nodiscard]] double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline void run_oracle(const DynkinType& t, std::chrono::milliseconds budget, OutputRecord& rec) {
  try {
    auto rs = build_root_system(t);
    auto r = count_reflection_factorizations(rs, budget);
    rec.values["oracle"] = r.count;
    rec.notes.push_back("oracle interval size " + std::to_string(r.interval_size));
  } catch (const OracleBudgetExceeded& e) {
    rec.errors["oracle"] = e.what();
  } catch (const std::invalid_argument& e) {
    rec.errors["oracle"] = e.what();
  }
}

}  // namespace detail

inline OutputRecord cmd_dynkin(const DynkinType& t, Method m, std::chrono::milliseconds oracle_budget) {
  detail::Stopwatch sw;
  OutputRecord rec{t.str(), method_name(m), {}, {}, {}, 0};
  const bool closed = m == Method::closed || m == Method::both || m == Method::all;
  const bool recursive = m == Method::recursive || m == Method::both || m == Method::all;
  const bool oracle = m == Method::oracle || m == Method::all;
  if (closed) rec.values["closed"] = e_dynkin_closed(t);
  if (recursive) rec.values["recursive"] = e_dynkin_recursive(t);
  if (m == Method::all) rec.values["deg_ll"] = deg_ll_dynkin(t);
  if (oracle) detail::run_oracle(t, oracle_budget, rec);
  rec.elapsed_ms = sw.ms();
  return rec;
}

inline OutputRecord cmd_affine(const OrbifoldTriple& A, Method m, CountCache& cache) {
  if (m == Method::oracle) throw std::invalid_argument("no oracle for orbifold triples; use closed, recursive, both or all");
  detail::Stopwatch sw;
  OutputRecord rec{A.str(), method_name(m), {}, {}, {}, 0};
  const bool closed = m == Method::closed || m == Method::both || m == Method::all;
  const bool recursive = m == Method::recursive || m == Method::both || m == Method::all;
  if (recursive) {
    const auto hits_before = cache.hits();
    if (auto cached = cache.find(A)) {
      rec.values["recursive"] = *cached;
      rec.notes.push_back("cache hit for " + A.str());
    } else {
      auto b = affine_breakdown(A, cache);
      if (!b.vertex_part_integral()) {
        rec.notes.push_back("first term alone is not integral: " + b.vertex_part.str());
      }
      Natural value = b.total.to_natural();
      cache.store(A, value);
      rec.values["recursive"] = value;
      if (cache.hits() > hits_before) {
        rec.notes.push_back("cache hits " + std::to_string(cache.hits() - hits_before));
      }
    }
  }
  if (closed) rec.values["closed"] = e_affine_closed(A);
  if (m == Method::all) rec.values["deg_ll"] = deg_ll_affine(A);
  rec.elapsed_ms = sw.ms();
  return rec;
}

inline OutputRecord cmd_forest(const DynkinForest& f) {
  detail::Stopwatch sw;
  OutputRecord rec{f.str(), "closed", {}, {}, {}, 0};
  rec.values["closed"] = e_forest(f);
  rec.values["recursive"] = e_forest(f, [](const DynkinType& t) { return e_dynkin_recursive(t); });
  rec.elapsed_ms = sw.ms();
  return rec;
}

inline OutputRecord cmd_oracle(const DynkinType& t, std::chrono::milliseconds budget) {
  detail::Stopwatch sw;
  OutputRecord rec{t.str(), "oracle", {}, {}, {}, 0};
  auto rs = build_root_system(t);
  auto c = coxeter_element(rs);
  rec.notes.push_back("roots " + std::to_string(rs.roots.size()));
  rec.notes.push_back("coxeter element order " + std::to_string(element_order(c)));
  detail::run_oracle(t, budget, rec);
  rec.values["closed"] = e_dynkin_closed(t);
  rec.elapsed_ms = sw.ms();
  return rec;
}

struct VerifyOptions {
  int max = 15;      // hurwitz: 1 <= p, q, r <= max
  int max_mu = 14;   // cross
  int max_r = 10;    // tables: (2,2,r) for 2 <= r <= max_r
  Format format = Format::json;
};

/// Streams the report; returns 0 iff every check holds.
inline int cmd_verify(std::string_view suite, const VerifyOptions& opt, std::ostream& os) {
  if (opt.format == Format::csv) throw std::invalid_argument("verify supports --format json or md");
  const bool md = opt.format == Format::md;
  bool ok = true;
  if (suite == "hurwitz") {
    std::vector<IdentityReport> reps;
    for (int p = 1; p <= opt.max; ++p) {
      for (int q = 1; q <= opt.max; ++q) reps.push_back(check_hurwitz1(p, q));
    }
    for (int r = 1; r <= opt.max; ++r) reps.push_back(check_hurwitz2(r));
    for (const auto& r : reps) ok = ok && r.holds;
    std::vector<int> printed_holds;
    std::vector<int> printed_fails;
    for (int r = 1; r <= opt.max; ++r) {
      (check_hurwitz2_as_printed(r).holds ? printed_holds : printed_fails).push_back(r);
    }
    if (md) {
      write_markdown(os, reps);
      os << "Hurwitz2 with the published coefficients holds for r in {";
      for (std::size_t k = 0; k < printed_holds.size(); ++k) os << (k ? "," : "") << printed_holds[k];
      os << "} and fails for " << printed_fails.size() << " values; the corrected form is checked above.\n";
    } else {
      for (const auto& r : reps) os << to_json(r).dump() << '\n';
      nlohmann::ordered_json d{{"kind", "discrepancy"},
                               {"location", "Hurwitz2 as printed"},
                               {"holds_for", printed_holds},
                               {"fails_for", printed_fails},
                               {"resolution", "corrected identity checked"}};
      os << d.dump() << '\n';
    }
  } else if (suite == "tables") {
    CountCache cache;
    std::vector<TableReport> tables;
    for (int r = 2; r <= opt.max_r; ++r) tables.push_back(reproduce_table(OrbifoldTriple(2, 2, r), cache));
    for (int a3 : {3, 4, 5}) tables.push_back(reproduce_table(OrbifoldTriple(2, 3, a3), cache));
    std::vector<DisplayedTotal> displayed;
    for (int a3 : {3, 4, 5}) displayed.push_back(displayed_total(a3));
    for (const auto& t : tables) ok = ok && t.all_rows_match() && t.reassembles();
    for (const auto& d : displayed) ok = ok && d.table_total == e_affine_closed(d.A);
    if (md) {
      for (const auto& t : tables) write_markdown(os, t);
      std::vector<Discrepancy> all;
      for (const auto& d : displayed) all.insert(all.end(), d.discrepancies.begin(), d.discrepancies.end());
      write_markdown(os, all);
    } else {
      for (const auto& t : tables) {
        for (const auto& row : t.rows) os << to_json(row, t.A).dump() << '\n';
        os << table_total_json(t).dump() << '\n';
      }
      for (const auto& d : displayed) {
        os << to_json(d).dump() << '\n';
        for (const auto& x : d.discrepancies) os << to_json(x).dump() << '\n';
      }
    }
  } else if (suite == "cross") {
    auto cs = check_cross(opt.max_mu);
    for (const auto& c : cs) ok = ok && c.agree();
    if (md) {
      write_markdown(os, cs);
    } else {
      for (const auto& c : cs) os << to_json(c).dump() << '\n';
    }
  } else {
    throw std::invalid_argument("unknown verify suite '" + std::string(suite) + "' (hurwitz, tables, cross)");
  }
  return ok ? 0 : 1;
}

struct TableOptions {
  bool dynkin = false;
  bool affine = false;
  int max_rank = 8;
  int max_mu = 9;
  Format format = Format::md;
};

/// Dynkin types A1..A_n, D4..D_n, E6..E8 up to the rank bound.
inline std::vector<DynkinType> dynkin_sweep(int max_rank) {
  std::vector<DynkinType> out;
  for (int n = 1; n <= max_rank; ++n) out.emplace_back(Family::A, n);
  for (int n = 4; n <= max_rank; ++n) out.emplace_back(Family::D, n);
  for (int n = 6; n <= std::min(max_rank, 8); ++n) out.emplace_back(Family::E, n);
  return out;
}

inline std::string published_formula(const DynkinType& t) {
  switch (t.family()) {
    case Family::A: return "(mu+1)^(mu-1)";
    case Family::D: return "2(mu-1)^mu";
    case Family::E: break;
  }
  return t.rank() == 6 ? "2^9 * 3^4" : t.rank() == 7 ? "2 * 3^12" : "2 * 3^5 * 5^7";
}

inline void cmd_table(const TableOptions& opt, std::ostream& os) {
  if (!opt.dynkin && !opt.affine) throw std::invalid_argument("table: pass --dynkin and/or --affine");
  nlohmann::ordered_json out = nlohmann::ordered_json::object();
  if (opt.dynkin) {
    const auto types = dynkin_sweep(opt.max_rank);
    if (opt.format == Format::md) {
      os << "| type | mu | h | e | published formula | deg LL |\n|---|---|---|---|---|---|\n";
      for (const auto& t : types) {
        os << "| " << t.str() << " | " << t.rank() << " | " << dynkin_data(t).coxeter_number << " | "
           << e_dynkin_closed(t) << " | " << published_formula(t) << " | " << deg_ll_dynkin(t) << " |\n";
      }
      if (opt.affine) os << '\n';
    } else if (opt.format == Format::csv) {
      os << "type,mu,h,e,deg_ll\n";
      for (const auto& t : types) {
        os << t.str() << ',' << t.rank() << ',' << dynkin_data(t).coxeter_number << ',' << e_dynkin_closed(t) << ','
           << deg_ll_dynkin(t) << '\n';
      }
    } else {
      auto arr = nlohmann::ordered_json::array();
      for (const auto& t : types) {
        arr.push_back({{"type", t.str()},
                       {"mu", t.rank()},
                       {"h", dynkin_data(t).coxeter_number},
                       {"e", e_dynkin_closed(t).str()},
                       {"deg_ll", deg_ll_dynkin(t).str()}});
      }
      out["dynkin"] = arr;
    }
  }
  if (opt.affine) {
    CountCache cache;
    const auto triples = admissible_triples(opt.max_mu);
    if (opt.format == Format::md) {
      os << "| A | mu | chi | e (recursion) | e (closed) | deg LL |\n|---|---|---|---|---|---|\n";
      for (const auto& A : triples) {
        os << "| " << A.str() << " | " << A.mu() << " | " << A.chi() << " | " << e_affine(A, cache) << " | "
           << e_affine_closed(A) << " | " << deg_ll_affine(A) << " |\n";
      }
    } else if (opt.format == Format::csv) {
      if (opt.dynkin) os << '\n';
      os << "a1,a2,a3,mu,chi,e,deg_ll\n";
      for (const auto& A : triples) {
        os << A.a(1) << ',' << A.a(2) << ',' << A.a(3) << ',' << A.mu() << ',' << A.chi() << ','
           << e_affine(A, cache) << ',' << deg_ll_affine(A) << '\n';
      }
    } else {
      auto arr = nlohmann::ordered_json::array();
      for (const auto& A : triples) {
        arr.push_back({{"A", A.str()},
                       {"mu", A.mu()},
                       {"chi", A.chi().str()},
                       {"e", e_affine(A, cache).str()},
                       {"closed", e_affine_closed(A).str()},
                       {"deg_ll", deg_ll_affine(A).str()}});
      }
      out["affine"] = arr;
    }
  }
  if (opt.format == Format::json) os << out.dump(2) << '\n';
}

}  // namespace fec::cli
