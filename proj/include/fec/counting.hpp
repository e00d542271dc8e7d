#pragma once

// Counting full exceptional collections, exactly.
//
// Dynkin quivers:   closed form mu!/(d1...d_mu) h^mu and the (h/2)-recursion
//                   over vertex deletions.
// Affine / orbifold: the recursion over exceptional vector bundles (vertices
//                   of Q_A) and exceptional torsion sheaves (pairs (i,j)),
//                   the closed form mu!/(a1!a2!a3! chi) a1^a1 a2^a2 a3^a3 and
//                   the Lyashko-Looijenga degree in product form.

#include "fec/arith.hpp"
#include "fec/diagrams.hpp"

#include <atomic>
#include <fstream>
#include <istream>
#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <shared_mutex>
#include <sstream>
#include <string>
#include <vector>

namespace fec {

/// Coxeter number and degrees of the basic invariants of the Weyl group.
struct DynkinData {
  int coxeter_number;
  std::vector<int> degrees;  // ascending, last == coxeter_number
};

inline DynkinData dynkin_data(const DynkinType& t) {
  const int n = t.rank();
  DynkinData d{};
  switch (t.family()) {
    case Family::A:
      d.coxeter_number = n + 1;
      for (int k = 2; k <= n + 1; ++k) d.degrees.push_back(k);
      break;
    case Family::D:
      d.coxeter_number = 2 * (n - 1);
      for (int k = 1; k <= n - 1; ++k) d.degrees.push_back(2 * k);
      d.degrees.push_back(n);
      std::sort(d.degrees.begin(), d.degrees.end());
      break;
    case Family::E:
      if (n == 6) {
        d = {12, {2, 5, 6, 8, 9, 12}};
      } else if (n == 7) {
        d = {18, {2, 6, 8, 10, 12, 14, 18}};
      } else {
        d = {30, {2, 8, 12, 14, 18, 20, 24, 30}};
      }
      break;
  }
  return d;
}

/// Memo tables for the recursions. Safe for concurrent use: lookups take a
/// shared lock, insertions an exclusive one.
class CountCache {
 public:
  CountCache() = default;
  CountCache(const CountCache&) = delete;
  CountCache& operator=(const CountCache&) = delete;

  std::optional<Natural> find(const OrbifoldTriple& A) const {
    std::shared_lock lock(mutex_);
    auto it = affine_.find(A);
    if (it == affine_.end()) {
      ++misses_;
      return std::nullopt;
    }
    ++hits_;
    return it->second;
  }

  std::optional<Natural> find(const DynkinType& t) const {
    std::shared_lock lock(mutex_);
    auto it = dynkin_.find(t);
    if (it == dynkin_.end()) {
      ++misses_;
      return std::nullopt;
    }
    ++hits_;
    return it->second;
  }

  void store(const OrbifoldTriple& A, const Natural& value) {
    std::unique_lock lock(mutex_);
    affine_.insert_or_assign(A, value);
  }

  void store(const DynkinType& t, const Natural& value) {
    std::unique_lock lock(mutex_);
    dynkin_.insert_or_assign(t, value);
  }

  [[nodiscard]] std::size_t affine_size() const {
    std::shared_lock lock(mutex_);
    return affine_.size();
  }
  [[nodiscard]] std::size_t hits() const { return hits_; }
  [[nodiscard]] std::size_t misses() const { return misses_; }

  /// Text format, one affine entry per line: "a1,a2,a3 -> count".
  /// Blank lines and lines starting with '#' are ignored.
  void load(std::istream& in) {
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      auto arrow = line.find("->");
      if (arrow == std::string::npos) throw std::runtime_error("cache line " + std::to_string(lineno) + ": missing '->'");
      std::string key = line.substr(0, arrow);
      std::string value = line.substr(arrow + 2);
      auto trim = [](std::string s) {
        auto b = s.find_first_not_of(" \t\r");
        auto e = s.find_last_not_of(" \t\r");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
      };
      key = trim(key);
      value = trim(value);
      int a1 = 0;
      int a2 = 0;
      int a3 = 0;
      char c1 = 0;
      char c2 = 0;
      std::istringstream ks(key);
      if (!(ks >> a1 >> c1 >> a2 >> c2 >> a3) || c1 != ',' || c2 != ',' || !(ks >> std::ws).eof()) {
        throw std::runtime_error("cache line " + std::to_string(lineno) + ": bad key '" + key + "'");
      }
      store(OrbifoldTriple(a1, a2, a3), Natural::parse(value));
    }
  }

  void save(std::ostream& out) const {
    std::shared_lock lock(mutex_);
    for (const auto& [A, value] : affine_) {
      out << A.a(1) << ',' << A.a(2) << ',' << A.a(3) << " -> " << value << '\n';
    }
  }

  void load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) return;  // a missing cache file is an empty cache
    load(in);
  }

  void save_file(const std::string& path) const {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache file " + path);
    save(out);
  }

 private:
  mutable std::shared_mutex mutex_;
  std::map<OrbifoldTriple, Natural> affine_;
  std::map<DynkinType, Natural> dynkin_;
  mutable std::atomic<std::size_t> hits_{0};
  mutable std::atomic<std::size_t> misses_{0};
};

/// mu!/(d1...d_mu) h^mu
inline Natural e_dynkin_closed(const DynkinType& t) {
  const auto data = dynkin_data(t);
  Natural den = 1;
  for (int d : data.degrees) den *= Natural(d);
  return exact_div(factorial(static_cast<unsigned>(t.rank())) * pow(Natural(data.coxeter_number),
                                                                    static_cast<unsigned>(t.rank())),
                   den);
}

/// Degree of the Lyashko-Looijenga map of the simple singularity of type t.
/// Same number as e_dynkin_closed, assembled in Ratio arithmetic from the
/// degree list.
inline Natural deg_ll_dynkin(const DynkinType& t) {
  const auto data = dynkin_data(t);
  Ratio r = factorial(static_cast<unsigned>(t.rank()));
  for (int d : data.degrees) r /= Ratio(d);
  r *= pow(Ratio(data.coxeter_number), t.rank());
  return r.to_natural();
}

/// Shuffle lemma: (sum n_i)!/prod(n_i!) * prod e(component_i).
/// `component` evaluates a single Dynkin type.
template <typename ComponentCount>
Natural e_forest(const DynkinForest& f, ComponentCount&& component) {
  Natural value = factorial(static_cast<unsigned>(f.total_rank()));
  Natural den = 1;
  for (const auto& c : f.components()) {
    den *= factorial(static_cast<unsigned>(c.rank()));
  }
  value = exact_div(value, den);
  for (const auto& c : f.components()) value *= component(c);
  return value;
}

inline Natural e_forest(const DynkinForest& f) {
  return e_forest(f, [](const DynkinType& t) { return e_dynkin_closed(t); });
}

/// (h/2) * sum over vertices v of e(forest left after deleting v), with the
/// components of each forest evaluated by the same recursion.
inline Natural e_dynkin_recursive(const DynkinType& t, CountCache& cache) {
  if (auto hit = cache.find(t)) return *hit;
  const auto g = dynkin_diagram(t);
  Natural sum = 0;
  for (int v : g.vertices()) {
    sum += e_forest(classify_forest(delete_vertex(g, v)),
                    [&cache](const DynkinType& c) { return e_dynkin_recursive(c, cache); });
  }
  Ratio value = Ratio(dynkin_data(t).coxeter_number) / Ratio(2) * Ratio(sum);
  if (!value.is_integer()) {
    throw ArithmeticError("Dynkin recursion for " + t.str() + " is not integral: " + value.str());
  }
  Natural result = value.to_natural();
  cache.store(t, result);
  return result;
}

inline Natural e_dynkin_recursive(const DynkinType& t) {
  CountCache cache;
  return e_dynkin_recursive(t, cache);
}

/// e of the type-A quiver with n vertices; n = 0 is the zero category.
inline Natural e_type_a(int n) {
  if (n == 0) return Natural(1);
  return e_dynkin_closed(DynkinType(Family::A, n));
}

/// One term of the first (vector bundle) sum.
struct VertexTerm {
  int vertex;
  DynkinForest forest;
  Natural count;
};

/// One term of the second (torsion sheaf) sum, before the a_i multiplier.
struct TubeTerm {
  int i;
  int j;
  OrbifoldTriple reduced;   // A_(i,j), canonical
  int type_a_rank;          // a_i - j - 1
  Natural binom;            // C(mu_A - 1, a_i - j - 1)
  Natural reduced_count;    // e(P^1_{A_(i,j)})
  Natural type_a_count;     // e(A_{a_i - j - 1})
  Natural count;            // product of the three
  int multiplier;           // a_i
};

/// All pieces of one application of the affine recursion.
struct AffineBreakdown {
  OrbifoldTriple A;
  std::vector<VertexTerm> vertex_terms;
  std::vector<TubeTerm> tube_terms;
  Natural vertex_sum;
  Ratio vertex_part;  // vertex_sum / chi_A
  Natural tube_part;  // sum of a_i * count
  Ratio total;

  /// Whether the first sum divided by chi_A is an integer by itself.
  [[nodiscard]] bool vertex_part_integral() const { return vertex_part.is_integer(); }
};

inline Natural e_affine(const OrbifoldTriple& A, CountCache& cache);

/// Evaluates every term of the recursion for A; the smaller affine counts
/// come from e_affine (memoized through cache).
inline AffineBreakdown affine_breakdown(const OrbifoldTriple& A, CountCache& cache) {
  AffineBreakdown b{A, {}, {}, Natural(0), Ratio(0), Natural(0), Ratio(0)};
  const auto g = extended_diagram(A);
  for (int v : g.vertices()) {
    auto forest = classify_forest(delete_vertex(g, v));
    Natural count = e_forest(forest);
    b.vertex_sum += count;
    b.vertex_terms.push_back({v, std::move(forest), std::move(count)});
  }
  b.vertex_part = Ratio(b.vertex_sum) / A.chi();

  const int mu = A.mu();
  for (int i = 1; i <= 3; ++i) {
    const int ai = A.a(i);
    for (int j = 1; j <= ai - 1; ++j) {
      const int k = ai - j - 1;
      auto reduced = A.with_weight(i, j);
      TubeTerm t{i, j, reduced, k, binomial(mu - 1, k), e_affine(reduced, cache), e_type_a(k), Natural(0), ai};
      t.count = t.binom * t.reduced_count * t.type_a_count;
      b.tube_part += Natural(ai) * t.count;
      b.tube_terms.push_back(std::move(t));
    }
  }
  b.total = b.vertex_part + Ratio(b.tube_part);
  return b;
}

/// Affine recursion; the total must come out integral.
inline Natural e_affine(const OrbifoldTriple& A, CountCache& cache) {
  if (auto hit = cache.find(A)) return *hit;
  auto b = affine_breakdown(A, cache);
  if (!b.total.is_integer()) {
    throw ArithmeticError("affine recursion for " + A.str() + " is not integral: " + b.total.str());
  }
  Natural result = b.total.to_natural();
  cache.store(A, result);
  return result;
}

inline Natural e_affine(const OrbifoldTriple& A) {
  CountCache cache;
  return e_affine(A, cache);
}

/// mu_A!/(a1! a2! a3! chi_A) * a1^a1 a2^a2 a3^a3
inline Natural e_affine_closed(const OrbifoldTriple& A) {
  Ratio r = factorial(static_cast<unsigned>(A.mu()));
  for (int a : A.weights()) {
    r /= Ratio(factorial(static_cast<unsigned>(a)));
    r *= Ratio(pow(Natural(a), static_cast<unsigned>(a)));
  }
  r /= A.chi();
  return r.to_natural();
}

/// mu_A! / (chi_A * prod_i prod_{j<a_i} (a_i - j)/a_i): the degree of the
/// Lyashko-Looijenga map from the weights of the flat coordinates.
inline Natural deg_ll_affine(const OrbifoldTriple& A) {
  Ratio weights = A.chi();
  for (int a : A.weights()) {
    for (int j = 1; j <= a - 1; ++j) weights *= Ratio(BigInt(a - j), BigInt(a));
  }
  return (Ratio(factorial(static_cast<unsigned>(A.mu()))) / weights).to_natural();
}

}  // namespace fec
