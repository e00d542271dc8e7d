#pragma once

// Dynkin and extended Dynkin diagrams as plain undirected graphs.
//
// Orientation never matters for the counts, so only the underlying graph of
// a quiver is kept. Vertex labels follow the usual pictures of the extended
// Dynkin quivers:
//
//   A^(1)_{p,q}: 1 -> 2 -> ... -> p -> p+q and 1 -> p+1 -> ... -> p+q-1 -> p+q
//   D^(1)_n   : 1, 2 -> 3 -> ... -> n-1, and n-1 -> n, n-1 -> n+1
//   E^(1)_6   : 1 - 2 - 5 on a chain 3 - 4 - 5 - 6 - 7
//   E^(1)_7   : 1 - 5 on a chain 2 - ... - 8
//   E^(1)_8   : 1 - 4 on a chain 2 - ... - 9

#include "fec/arith.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <compare>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fec {

enum class Family : char { A = 'A', D = 'D', E = 'E' };

/// A connected simply-laced Dynkin diagram. D2 and D3 do not exist here:
/// they are A1 x A1 and A3.
class DynkinType {
 public:
  DynkinType(Family family, int rank) : family_(family), rank_(rank) {
    bool ok = false;
    switch (family) {
      case Family::A: ok = rank >= 1; break;
      case Family::D: ok = rank >= 4; break;
      case Family::E: ok = rank >= 6 && rank <= 8; break;
    }
    if (!ok) {
      throw std::invalid_argument("DynkinType: no diagram " + std::string(1, static_cast<char>(family)) +
                                  std::to_string(rank));
    }
  }

  /// Parses "A5", "d7", "E8" (optionally "A 5").
  static DynkinType parse(std::string_view token) {
    std::string t;
    for (char ch : token) {
      if (!std::isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
    }
    if (t.size() < 2) throw std::invalid_argument("cannot parse Dynkin type '" + std::string(token) + "'");
    char f = static_cast<char>(std::toupper(static_cast<unsigned char>(t[0])));
    if (f != 'A' && f != 'D' && f != 'E') {
      throw std::invalid_argument("unknown Dynkin family in '" + std::string(token) + "'");
    }
    int rank = 0;
    for (std::size_t i = 1; i < t.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(t[i])) || rank > 100000) {
        throw std::invalid_argument("bad rank in Dynkin type '" + std::string(token) + "'");
      }
      rank = rank * 10 + (t[i] - '0');
    }
    return {static_cast<Family>(f), rank};
  }

  [[nodiscard]] Family family() const { return family_; }
  [[nodiscard]] int rank() const { return rank_; }
  [[nodiscard]] std::string str() const { return std::string(1, static_cast<char>(family_)) + std::to_string(rank_); }

  friend bool operator==(const DynkinType&, const DynkinType&) = default;
  friend auto operator<=>(const DynkinType&, const DynkinType&) = default;

 private:
  Family family_;
  int rank_;
};

/// A disjoint union of Dynkin diagrams; empty means the zero category.
class DynkinForest {
 public:
  DynkinForest() = default;
  explicit DynkinForest(std::vector<DynkinType> components) : components_(std::move(components)) {
    std::sort(components_.begin(), components_.end());
  }

  [[nodiscard]] const std::vector<DynkinType>& components() const { return components_; }
  [[nodiscard]] bool empty() const { return components_.empty(); }
  [[nodiscard]] int total_rank() const {
    int n = 0;
    for (const auto& c : components_) n += c.rank();
    return n;
  }

  /// "A1 x A3 x A3"; the empty forest renders as "0".
  [[nodiscard]] std::string str() const {
    if (components_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < components_.size(); ++i) {
      if (i != 0) s += " x ";
      s += components_[i].str();
    }
    return s;
  }

  friend bool operator==(const DynkinForest&, const DynkinForest&) = default;

 private:
  std::vector<DynkinType> components_;
};

/// Orbifold weights A = (a1, a2, a3) with positive orbifold Euler characteristic,
/// stored sorted ascending.
class OrbifoldTriple {
 public:
  OrbifoldTriple(int a1, int a2, int a3) : a_{a1, a2, a3} {
    for (int x : a_) {
      if (x < 1) throw std::domain_error("orbifold weights must be positive integers");
    }
    std::sort(a_.begin(), a_.end());
    if (euler_characteristic(a_[0], a_[1], a_[2]).sign() <= 0) {
      throw std::domain_error("chi_A <= 0 for A = (" + std::to_string(a_[0]) + "," + std::to_string(a_[1]) + "," +
                              std::to_string(a_[2]) +
                              "); admissible triples are (1,p,q), (2,2,r), (2,3,3), (2,3,4), (2,3,5)");
    }
  }

  /// 1/a1 + 1/a2 + 1/a3 - 1 without any admissibility check.
  static Ratio euler_characteristic(int a1, int a2, int a3) {
    return Ratio(1) / Ratio(a1) + Ratio(1) / Ratio(a2) + Ratio(1) / Ratio(a3) - Ratio(1);
  }

  static bool admissible(int a1, int a2, int a3) {
    return a1 >= 1 && a2 >= 1 && a3 >= 1 && euler_characteristic(a1, a2, a3).sign() > 0;
  }

  [[nodiscard]] const std::array<int, 3>& weights() const { return a_; }
  /// 1-based, in canonical (sorted) order.
  [[nodiscard]] int a(int i) const { return a_.at(static_cast<std::size_t>(i - 1)); }
  [[nodiscard]] Ratio chi() const { return euler_characteristic(a_[0], a_[1], a_[2]); }
  [[nodiscard]] int mu() const { return a_[0] + a_[1] + a_[2] - 1; }

  /// A_(i,j): a_i replaced by j, then re-sorted. i is 1-based in canonical order.
  [[nodiscard]] OrbifoldTriple with_weight(int i, int j) const {
    auto b = a_;
    b.at(static_cast<std::size_t>(i - 1)) = j;
    return {b[0], b[1], b[2]};
  }

  [[nodiscard]] std::string str() const {
    return "(" + std::to_string(a_[0]) + "," + std::to_string(a_[1]) + "," + std::to_string(a_[2]) + ")";
  }

  friend bool operator==(const OrbifoldTriple&, const OrbifoldTriple&) = default;
  friend auto operator<=>(const OrbifoldTriple&, const OrbifoldTriple&) = default;

 private:
  std::array<int, 3> a_;
};

/// Every canonical admissible triple with mu_A <= max_mu, ordered by (mu, a).
inline std::vector<OrbifoldTriple> admissible_triples(int max_mu) {
  std::vector<OrbifoldTriple> out;
  for (int mu = 2; mu <= max_mu; ++mu) {
    // a1 + a2 + a3 = mu + 1, a1 <= a2 <= a3
    for (int a1 = 1; 3 * a1 <= mu + 1; ++a1) {
      for (int a2 = a1; a1 + 2 * a2 <= mu + 1; ++a2) {
        int a3 = mu + 1 - a1 - a2;
        if (OrbifoldTriple::admissible(a1, a2, a3)) out.emplace_back(a1, a2, a3);
      }
    }
  }
  return out;
}

/// Undirected graph on integer labels. Edges are stored with u < v and may
/// repeat only for the Kronecker diagram A^(1)_{1,1}.
class MarkedGraph {
 public:
  using Edge = std::pair<int, int>;

  MarkedGraph() = default;
  MarkedGraph(std::vector<int> vertices, std::vector<Edge> edges) : vertices_(std::move(vertices)) {
    std::sort(vertices_.begin(), vertices_.end());
    if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
      throw std::invalid_argument("MarkedGraph: duplicate vertex label");
    }
    for (auto [u, v] : edges) {
      if (u == v) throw std::invalid_argument("MarkedGraph: loop at vertex " + std::to_string(u));
      if (!has_vertex(u) || !has_vertex(v)) throw std::invalid_argument("MarkedGraph: edge to unknown vertex");
      edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(edges_.begin(), edges_.end());
  }

  [[nodiscard]] const std::vector<int>& vertices() const { return vertices_; }
  [[nodiscard]] const std::vector<Edge>& edges() const { return edges_; }
  [[nodiscard]] std::size_t vertex_count() const { return vertices_.size(); }
  [[nodiscard]] std::size_t edge_count() const { return edges_.size(); }
  [[nodiscard]] bool has_vertex(int v) const { return std::binary_search(vertices_.begin(), vertices_.end(), v); }
  [[nodiscard]] bool is_simple() const { return std::adjacent_find(edges_.begin(), edges_.end()) == edges_.end(); }

  [[nodiscard]] std::vector<int> neighbours(int v) const {
    std::vector<int> out;
    for (auto [a, b] : edges_) {
      if (a == v) out.push_back(b);
      if (b == v) out.push_back(a);
    }
    return out;
  }

  /// Connected components as induced subgraphs, ordered by smallest label.
  [[nodiscard]] std::vector<MarkedGraph> components() const {
    std::map<int, int> root;
    for (int v : vertices_) root[v] = v;
    auto find = [&](int v) {
      while (root[v] != v) v = root[v] = root[root[v]];
      return v;
    };
    for (auto [a, b] : edges_) {
      int ra = find(a);
      int rb = find(b);
      if (ra != rb) root[std::max(ra, rb)] = std::min(ra, rb);
    }
    std::map<int, std::pair<std::vector<int>, std::vector<Edge>>> parts;
    for (int v : vertices_) parts[find(v)].first.push_back(v);
    for (const auto& e : edges_) parts[find(e.first)].second.push_back(e);
    std::vector<MarkedGraph> out;
    for (auto& [r, part] : parts) out.emplace_back(std::move(part.first), std::move(part.second));
    return out;
  }

  friend bool operator==(const MarkedGraph&, const MarkedGraph&) = default;

 private:
  std::vector<int> vertices_;
  std::vector<Edge> edges_;
};

/// Raised when a graph component is not a simply-laced Dynkin tree.
class ClassificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Underlying graph of the extended Dynkin quiver Q_A; it has mu_A vertices.
inline MarkedGraph extended_diagram(const OrbifoldTriple& A) {
  const int a1 = A.a(1);
  const int a2 = A.a(2);
  const int a3 = A.a(3);
  std::vector<int> vs;
  std::vector<MarkedGraph::Edge> es;
  auto chain = [&](const std::vector<int>& path) {
    for (std::size_t i = 1; i < path.size(); ++i) es.emplace_back(path[i - 1], path[i]);
  };
  if (a1 == 1) {
    // A^(1)_{p,q}
    const int p = a2;
    const int q = a3;
    for (int v = 1; v <= p + q; ++v) vs.push_back(v);
    std::vector<int> top{1};
    for (int v = 2; v <= p; ++v) top.push_back(v);
    top.push_back(p + q);
    std::vector<int> bottom{1};
    for (int v = p + 1; v <= p + q - 1; ++v) bottom.push_back(v);
    bottom.push_back(p + q);
    chain(top);
    chain(bottom);
  } else if (a1 == 2 && a2 == 2) {
    // D^(1)_{r+2}, vertices 1..r+3
    const int r = a3;
    for (int v = 1; v <= r + 3; ++v) vs.push_back(v);
    es.emplace_back(1, 3);
    es.emplace_back(2, 3);
    for (int v = 3; v < r + 1; ++v) es.emplace_back(v, v + 1);
    es.emplace_back(r + 1, r + 2);
    es.emplace_back(r + 1, r + 3);
  } else {
    // E^(1)_6, E^(1)_7, E^(1)_8
    switch (a3) {
      case 3:
        vs = {1, 2, 3, 4, 5, 6, 7};
        es = {{1, 2}, {2, 5}};
        chain({3, 4, 5, 6, 7});
        break;
      case 4:
        vs = {1, 2, 3, 4, 5, 6, 7, 8};
        es = {{1, 5}};
        chain({2, 3, 4, 5, 6, 7, 8});
        break;
      default:
        vs = {1, 2, 3, 4, 5, 6, 7, 8, 9};
        es = {{1, 4}};
        chain({2, 3, 4, 5, 6, 7, 8, 9});
        break;
    }
  }
  return {std::move(vs), std::move(es)};
}

/// A Dynkin diagram on labels 1..n: A_n is the path; D_n is the path
/// 1..n-1 with n attached to n-2; E_n is the path 1..n-1 with n attached to 3.
inline MarkedGraph dynkin_diagram(const DynkinType& t) {
  const int n = t.rank();
  std::vector<int> vs;
  std::vector<MarkedGraph::Edge> es;
  for (int v = 1; v <= n; ++v) vs.push_back(v);
  switch (t.family()) {
    case Family::A:
      for (int v = 1; v < n; ++v) es.emplace_back(v, v + 1);
      break;
    case Family::D:
      for (int v = 1; v < n - 1; ++v) es.emplace_back(v, v + 1);
      es.emplace_back(n - 2, n);
      break;
    case Family::E:
      for (int v = 1; v < n - 1; ++v) es.emplace_back(v, v + 1);
      es.emplace_back(3, n);
      break;
  }
  return {std::move(vs), std::move(es)};
}

/// Induced subgraph on all vertices except v.
inline MarkedGraph delete_vertex(const MarkedGraph& g, int v) {
  if (!g.has_vertex(v)) throw std::out_of_range("delete_vertex: unknown vertex " + std::to_string(v));
  std::vector<int> vs;
  for (int u : g.vertices()) {
    if (u != v) vs.push_back(u);
  }
  std::vector<MarkedGraph::Edge> es;
  for (const auto& e : g.edges()) {
    if (e.first != v && e.second != v) es.push_back(e);
  }
  return {std::move(vs), std::move(es)};
}

namespace detail {

inline DynkinType classify_component(const MarkedGraph& c) {
  const int n = static_cast<int>(c.vertex_count());
  if (!c.is_simple() || static_cast<int>(c.edge_count()) != n - 1) {
    throw ClassificationError("component is not a tree");
  }
  std::vector<int> branch_points;
  for (int v : c.vertices()) {
    auto deg = c.neighbours(v).size();
    if (deg > 3) throw ClassificationError("vertex " + std::to_string(v) + " has degree " + std::to_string(deg));
    if (deg == 3) branch_points.push_back(v);
  }
  if (branch_points.empty()) return {Family::A, n};
  if (branch_points.size() > 1) throw ClassificationError("more than one branch point");

  const int centre = branch_points.front();
  std::array<int, 3> arms{};
  std::size_t k = 0;
  for (int start : c.neighbours(centre)) {
    int prev = centre;
    int cur = start;
    int len = 1;
    for (;;) {
      auto nb = c.neighbours(cur);
      if (nb.size() == 1) break;
      int next = nb[0] == prev ? nb[1] : nb[0];
      prev = cur;
      cur = next;
      ++len;
    }
    arms[k++] = len;
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return {Family::D, n};
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return {Family::E, n};
  throw ClassificationError("branch profile (" + std::to_string(arms[0]) + "," + std::to_string(arms[1]) + "," +
                            std::to_string(arms[2]) + ") is not of type D or E");
}

}  // namespace detail

/// Classifies every connected component as a Dynkin diagram.
inline DynkinForest classify_forest(const MarkedGraph& g) {
  std::vector<DynkinType> types;
  for (const auto& c : g.components()) types.push_back(detail::classify_component(c));
  return DynkinForest(std::move(types));
}

}  // namespace fec
