#pragma once

// JSON and Markdown renderings of the verification records. Counts are
// always emitted as decimal strings.

#include "fec/verify.hpp"

#include <json.hpp>

#include <ostream>
#include <string>
#include <vector>

namespace fec {

inline nlohmann::ordered_json to_json(const IdentityReport& r) {
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [name, value] : r.params) params[name] = value;
  return {{"kind", "identity"}, {"identity", r.identity}, {"params", params},
          {"lhs", r.lhs.str()},  {"rhs", r.rhs.str()},     {"holds", r.holds}};
}

inline nlohmann::ordered_json to_json(const TableRow& row, const OrbifoldTriple& A) {
  return {{"kind", "table_row"},
          {"A", A.str()},
          {"section", row.kind == TableRow::Kind::vertex ? "vertex" : "tube"},
          {"label", row.label},
          {"expected_structure", row.expected_structure},
          {"computed_structure", row.computed_structure},
          {"printed", row.printed},
          {"expected", row.expected.str()},
          {"computed", row.computed.str()},
          {"multiplier", row.multiplier},
          {"match", row.matches()}};
}

inline nlohmann::ordered_json table_total_json(const TableReport& t) {
  return {{"kind", "table_total"},
          {"A", t.A.str()},
          {"reassembled", t.reassembled.str()},
          {"closed", t.closed.str()},
          {"rows_match", t.all_rows_match()},
          {"match", t.reassembles()}};
}

inline nlohmann::ordered_json to_json(const Discrepancy& d) {
  return {{"kind", "discrepancy"},
          {"location", d.location},
          {"printed", d.printed},
          {"table", d.table},
          {"printed_value", d.printed_value.str()},
          {"table_value", d.table_value.str()},
          {"resolution", "table value used"}};
}

inline nlohmann::ordered_json to_json(const DisplayedTotal& d) {
  return {{"kind", "displayed_total"},
          {"A", d.A.str()},
          {"printed_total", d.printed_total.str()},
          {"table_total", d.table_total.str()},
          {"consistent", d.printed_total == d.table_total},
          {"flagged_terms", d.discrepancies.size()}};
}

inline nlohmann::ordered_json to_json(const CrossReport& c) {
  return {{"kind", "cross"},
          {"A", c.A.str()},
          {"mu", c.A.mu()},
          {"recursive", c.recursive.str()},
          {"closed", c.closed.str()},
          {"deg_ll", c.deg_ll.str()},
          {"vertex_part_integral", c.vertex_part_integral},
          {"agree", c.agree()}};
}

namespace detail {

inline std::string md_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '|') out += "\\|";
    else out += ch;
  }
  return out;
}

}  // namespace detail

/// Two tables per case, laid out like the published ones.
inline void write_markdown(std::ostream& os, const TableReport& t) {
  os << "### Case A = " << t.A.str() << "\n\n";
  os << "| v | category | published | expected | computed | match |\n";
  os << "|---|---|---|---|---|---|\n";
  for (const auto& row : t.rows) {
    if (row.kind != TableRow::Kind::vertex) continue;
    os << "| " << row.label << " | " << row.computed_structure << " | " << detail::md_escape(row.printed) << " | "
       << row.expected << " | " << row.computed << " | " << (row.matches() ? "yes" : "NO") << " |\n";
  }
  os << "\n| v | category | a_i | published | expected | computed | match |\n";
  os << "|---|---|---|---|---|---|---|\n";
  for (const auto& row : t.rows) {
    if (row.kind != TableRow::Kind::tube) continue;
    os << "| " << row.label << " | " << row.computed_structure << " | " << row.multiplier << " | "
       << detail::md_escape(row.printed) << " | " << row.expected << " | " << row.computed << " | "
       << (row.matches() ? "yes" : "NO") << " |\n";
  }
  os << "\nReassembled total: " << t.reassembled << " (closed form " << t.closed << ", "
     << (t.reassembles() ? "match" : "MISMATCH") << ")\n\n";
}

inline void write_markdown(std::ostream& os, const std::vector<IdentityReport>& reports) {
  os << "| identity | parameters | lhs | rhs | holds |\n|---|---|---|---|---|\n";
  for (const auto& r : reports) {
    std::string params;
    for (const auto& [name, value] : r.params) {
      if (!params.empty()) params += ", ";
      params += name + "=" + std::to_string(value);
    }
    os << "| " << r.identity << " | " << params << " | " << r.lhs << " | " << r.rhs << " | "
       << (r.holds ? "yes" : "NO") << " |\n";
  }
  os << "\n";
}

inline void write_markdown(std::ostream& os, const std::vector<Discrepancy>& ds) {
  if (ds.empty()) return;
  os << "| flagged location | printed | table | printed value | table value |\n|---|---|---|---|---|\n";
  for (const auto& d : ds) {
    os << "| " << d.location << " | " << d.printed << " | " << d.table << " | " << d.printed_value << " | "
       << d.table_value << " |\n";
  }
  os << "\n";
}

inline void write_markdown(std::ostream& os, const std::vector<CrossReport>& cs) {
  os << "| A | mu | recursive | closed | deg LL | agree |\n|---|---|---|---|---|---|\n";
  for (const auto& c : cs) {
    os << "| " << c.A.str() << " | " << c.A.mu() << " | " << c.recursive << " | " << c.closed << " | " << c.deg_ll
       << " | " << (c.agree() ? "yes" : "NO") << " |\n";
  }
  os << "\n";
}

}  // namespace fec
