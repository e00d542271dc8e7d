#pragma once

// Brute-force check of the Dynkin counts: the number of ways to write a
// Coxeter element c of the Weyl group as a product of rank-many reflections.
// These factorizations are the maximal chains of the noncrossing partition
// lattice [1, c], which correspond to complete exceptional sequences.
//
// Roots are integer vectors in the basis of simple roots; the bilinear form is
// the Cartan matrix. Group elements act on the root list by permutation.

#include "fec/arith.hpp"
#include "fec/counting.hpp"
#include "fec/diagrams.hpp"

#include <chrono>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace fec {

/// A Weyl group element as the permutation it induces on the root list.
struct GroupElement {
  std::vector<std::uint16_t> perm;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;

  /// (a * b)(x) = a(b(x))
  friend GroupElement operator*(const GroupElement& a, const GroupElement& b) {
    GroupElement out;
    out.perm.resize(b.perm.size());
    for (std::size_t x = 0; x < b.perm.size(); ++x) out.perm[x] = a.perm[b.perm[x]];
    return out;
  }

  [[nodiscard]] bool is_identity() const {
    for (std::size_t x = 0; x < perm.size(); ++x) {
      if (perm[x] != x) return false;
    }
    return true;
  }
};

struct GroupElementHash {
  std::size_t operator()(const GroupElement& g) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto x : g.perm) {
      h ^= x;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

struct RootSystem {
  DynkinType type;
  int rank;
  std::vector<std::vector<int>> cartan;
  std::vector<std::vector<int>> roots;  // coordinates in the simple-root basis
  std::vector<int> simple_roots;        // indices into roots
  std::vector<int> positive_roots;      // indices into roots
  std::vector<int> negation;            // index of -roots[k]
  std::map<std::vector<int>, int> index;

  /// (x, y) = x^T C y
  [[nodiscard]] int form(const std::vector<int>& x, const std::vector<int>& y) const {
    int s = 0;
    for (int i = 0; i < rank; ++i) {
      if (x[i] == 0) continue;
      for (int j = 0; j < rank; ++j) s += x[i] * cartan[i][j] * y[j];
    }
    return s;
  }

  [[nodiscard]] int find(const std::vector<int>& v) const {
    auto it = index.find(v);
    if (it == index.end()) throw std::logic_error("vector is not a root");
    return it->second;
  }

  [[nodiscard]] GroupElement identity() const {
    GroupElement g;
    g.perm.resize(roots.size());
    for (std::size_t x = 0; x < roots.size(); ++x) g.perm[x] = static_cast<std::uint16_t>(x);
    return g;
  }

  /// The reflection s_beta(x) = x - (x, beta) beta.
  [[nodiscard]] GroupElement reflection(int beta) const {
    const auto& b = roots[static_cast<std::size_t>(beta)];
    GroupElement g;
    g.perm.resize(roots.size());
    std::vector<int> y(static_cast<std::size_t>(rank));
    for (std::size_t x = 0; x < roots.size(); ++x) {
      int c = form(roots[x], b);
      for (int i = 0; i < rank; ++i) y[i] = roots[x][i] - c * b[i];
      g.perm[x] = static_cast<std::uint16_t>(find(y));
    }
    return g;
  }

  /// Matrix of g in the simple-root basis: column k is g(alpha_k).
  [[nodiscard]] std::vector<std::vector<long long>> matrix(const GroupElement& g) const {
    std::vector<std::vector<long long>> m(static_cast<std::size_t>(rank), std::vector<long long>(rank));
    for (int k = 0; k < rank; ++k) {
      const auto& col = roots[g.perm[simple_roots[k]]];
      for (int i = 0; i < rank; ++i) m[i][k] = col[i];
    }
    return m;
  }
};

/// Rank of an integer matrix by fraction-free (Bareiss) elimination.
/// Every intermediate entry is a minor of the input, so divisions are exact.
inline int integer_rank(std::vector<std::vector<long long>> a) {
  const std::size_t rows = a.size();
  if (rows == 0) return 0;
  const std::size_t cols = a[0].size();
  std::size_t r = 0;
  long long prev = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        __int128 v = static_cast<__int128>(a[r][c]) * a[i][j] - static_cast<__int128>(a[i][c]) * a[r][j];
        a[i][j] = static_cast<long long>(v / prev);
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return static_cast<int>(r);
}

inline RootSystem build_root_system(const DynkinType& t) {
  if (t.rank() > 12) throw std::invalid_argument("root system of rank " + std::to_string(t.rank()) + " not supported");
  RootSystem rs{t, t.rank(), {}, {}, {}, {}, {}, {}};
  const int n = t.rank();
  const auto g = dynkin_diagram(t);
  rs.cartan.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) rs.cartan[i][i] = 2;
  for (auto [u, v] : g.edges()) {
    rs.cartan[u - 1][v - 1] = -1;
    rs.cartan[v - 1][u - 1] = -1;
  }

  std::deque<int> queue;
  auto add = [&](std::vector<int> v) {
    auto [it, inserted] = rs.index.emplace(v, static_cast<int>(rs.roots.size()));
    if (inserted) {
      rs.roots.push_back(std::move(v));
      queue.push_back(it->second);
    }
    return it->second;
  };
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    e[i] = 1;
    rs.simple_roots.push_back(add(std::move(e)));
  }
  while (!queue.empty()) {
    int k = queue.front();
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      std::vector<int> beta = rs.roots[static_cast<std::size_t>(k)];
      int c = 0;
      for (int j = 0; j < n; ++j) c += beta[j] * rs.cartan[j][i];
      beta[i] -= c;
      add(std::move(beta));
    }
  }
  if (rs.roots.size() > 65535) throw std::invalid_argument("root system too large");

  rs.negation.resize(rs.roots.size());
  for (std::size_t k = 0; k < rs.roots.size(); ++k) {
    std::vector<int> neg = rs.roots[k];
    for (int& x : neg) x = -x;
    rs.negation[k] = rs.find(neg);
    bool positive = true;
    for (int x : rs.roots[k]) positive = positive && x >= 0;
    if (positive) rs.positive_roots.push_back(static_cast<int>(k));
  }
  return rs;
}

/// n - dim Fix(g) = rank(M_g - I)
inline int absolute_length(const RootSystem& rs, const GroupElement& g) {
  auto m = rs.matrix(g);
  for (int i = 0; i < rs.rank; ++i) m[i][i] -= 1;
  return integer_rank(std::move(m));
}

/// s_1 s_2 ... s_n, or s_n ... s_1 when reversed.
inline GroupElement coxeter_element(const RootSystem& rs, bool reversed = false) {
  GroupElement c = rs.identity();
  for (int k = 0; k < rs.rank; ++k) {
    int i = reversed ? rs.rank - 1 - k : k;
    c = c * rs.reflection(rs.simple_roots[i]);
  }
  return c;
}

inline int element_order(const GroupElement& g) {
  GroupElement p = g;
  int order = 1;
  while (!p.is_identity()) {
    p = p * g;
    ++order;
  }
  return order;
}

class OracleBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OracleResult {
  Natural count;
  std::size_t interval_size = 0;  // memoized elements below c in absolute order
  std::size_t rank_evaluations = 0;
};

namespace detail {

class FactorizationCounter {
 public:
  FactorizationCounter(const RootSystem& rs, std::optional<std::chrono::steady_clock::time_point> deadline)
      : rs_(rs), deadline_(deadline) {
    for (int beta : rs.positive_roots) reflections_.push_back(rs.reflection(beta));
  }

  Natural count(const GroupElement& w, int length) {
    if (length == 0) return Natural(1);
    if (auto it = memo_.find(w); it != memo_.end()) return it->second;
    if (deadline_ && (++expansions_ & 63U) == 0 && std::chrono::steady_clock::now() > *deadline_) {
      throw OracleBudgetExceeded("oracle budget exceeded for " + rs_.type.str());
    }

    const int n = rs_.rank;
    std::vector<std::vector<long long>> m(static_cast<std::size_t>(n), std::vector<long long>(n));
    Natural total = 0;
    for (const auto& t : reflections_) {
      // t*w only on the simple roots first; most reflections do not shorten w.
      for (int k = 0; k < n; ++k) {
        const auto& col = rs_.roots[t.perm[w.perm[rs_.simple_roots[k]]]];
        for (int i = 0; i < n; ++i) m[i][k] = col[i] - (i == k ? 1 : 0);
      }
      ++rank_evaluations_;
      if (integer_rank(m) != length - 1) continue;
      total += count(t * w, length - 1);
    }
    memo_.emplace(w, total);
    return total;
  }

  [[nodiscard]] std::size_t memo_size() const { return memo_.size(); }
  [[nodiscard]] std::size_t rank_evaluations() const { return rank_evaluations_; }

 private:
  const RootSystem& rs_;
  std::optional<std::chrono::steady_clock::time_point> deadline_;
  std::vector<GroupElement> reflections_;
  std::unordered_map<GroupElement, Natural, GroupElementHash> memo_;
  std::size_t expansions_ = 0;
  std::size_t rank_evaluations_ = 0;
};

}  // namespace detail

/// Number of factorizations of w into absolute_length(w) reflections:
/// F(1) = 1, F(w) = sum of F(t w) over reflections t with l(t w) = l(w) - 1.
inline OracleResult count_reflection_factorizations(const RootSystem& rs, const GroupElement& w,
                                                    std::optional<std::chrono::milliseconds> budget = std::nullopt) {
  std::optional<std::chrono::steady_clock::time_point> deadline;
  if (budget) deadline = std::chrono::steady_clock::now() + *budget;
  detail::FactorizationCounter counter(rs, deadline);
  OracleResult r;
  r.count = counter.count(w, absolute_length(rs, w));
  r.interval_size = counter.memo_size();
  r.rank_evaluations = counter.rank_evaluations();
  return r;
}

inline OracleResult count_reflection_factorizations(const RootSystem& rs,
                                                    std::optional<std::chrono::milliseconds> budget = std::nullopt) {
  return count_reflection_factorizations(rs, coxeter_element(rs), budget);
}

}  // namespace fec
