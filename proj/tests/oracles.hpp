#pragma once

// Brute-force references used only by tests. Nothing here calls the code
// paths it is used to check.

#include "mnrule/partition.hpp"
#include "mnrule/permutation.hpp"
#include "mnrule/sparse_poly.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace mnrule::oracle {

// Every partition of `total` with at most `rows` rows, generated as sorted
// compositions rather than through partitions_of.
inline std::vector<Partition> all_partitions(int total, int rows) {
  std::set<std::vector<int>> seen;
  std::vector<int> comp(static_cast<std::size_t>(std::max(rows, 0)), 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == rows) {
      if (left == 0) {
        auto s = comp;
        std::sort(s.rbegin(), s.rend());
        seen.insert(s);
      }
      return;
    }
    for (int v = 0; v <= left; ++v) {
      comp[static_cast<std::size_t>(i)] = v;
      rec(i + 1, left - v);
    }
  };
  if (total >= 0) rec(0, total);
  std::vector<Partition> out;
  for (const auto& s : seen) out.emplace_back(s);
  return out;
}

// Cells of outer/inner as (row, col), 0-based.
inline std::vector<std::pair<int, int>> skew_cells(const Partition& inner, const Partition& outer) {
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < outer.length(); ++i) {
    for (int c = inner[i]; c < outer[i]; ++c) cells.emplace_back(i, c);
  }
  return cells;
}

// Rim hook = edge-connected skew shape with no 2x2 square (the border-strip
// definition, independent of the diagonal criterion). Returns the height.
inline int border_strip_height(const Partition& inner, const Partition& outer) {
  if (!leq(inner, outer)) return 0;
  auto cells = skew_cells(inner, outer);
  if (cells.empty()) return 0;
  std::set<std::pair<int, int>> s(cells.begin(), cells.end());
  for (auto [r, c] : cells) {
    if (s.count({r + 1, c}) && s.count({r, c + 1}) && s.count({r + 1, c + 1})) return 0;
  }
  std::set<std::pair<int, int>> seen{cells.front()};
  std::vector<std::pair<int, int>> stack{cells.front()};
  while (!stack.empty()) {
    auto [r, c] = stack.back();
    stack.pop_back();
    for (auto nb : {std::pair{r + 1, c}, std::pair{r - 1, c}, std::pair{r, c + 1}, std::pair{r, c - 1}}) {
      if (s.count(nb) && seen.insert(nb).second) stack.push_back(nb);
    }
  }
  if (seen.size() != cells.size()) return 0;
  std::set<int> rows;
  for (auto [r, c] : cells) rows.insert(r);
  return static_cast<int>(rows.size());
}

struct Hook {
  Partition other;
  int height;
  bool operator==(const Hook&) const = default;
};

inline std::vector<Hook> brute_add(const Partition& lambda, int r, int rows) {
  std::vector<Hook> out;
  for (const auto& mu : all_partitions(lambda.size() + r, rows)) {
    if (int h = border_strip_height(lambda, mu)) out.push_back({mu, h});
  }
  std::sort(out.begin(), out.end(), [](const Hook& a, const Hook& b) { return a.other > b.other; });
  return out;
}

// A border strip lambda/nu has no 2x2 square, so nu_i >= lambda_(i+1) - 1;
// every nu in that per-row window is tried.
inline std::vector<Hook> brute_remove(const Partition& lambda, int r) {
  std::vector<Hook> out;
  const int rows = lambda.length();
  std::vector<int> nu(static_cast<std::size_t>(rows), 0);
  std::function<void(int, int)> rec = [&](int i, int removed) {
    if (i == rows) {
      if (removed != r) return;
      Partition candidate(nu);
      if (int h = border_strip_height(candidate, lambda)) out.push_back({candidate, h});
      return;
    }
    const int hi = i == 0 ? lambda[0] : std::min(lambda[i], nu[static_cast<std::size_t>(i - 1)]);
    for (int v = std::max(0, lambda[i + 1] - 1); v <= hi; ++v) {
      if (removed + lambda[i] - v > r) continue;
      nu[static_cast<std::size_t>(i)] = v;
      rec(i + 1, removed + lambda[i] - v);
    }
  };
  rec(0, 0);
  std::sort(out.begin(), out.end(), [](const Hook& a, const Hook& b) { return a.other > b.other; });
  return out;
}

// Brute-force strips: every mu of the right size whose skew cells have
// distinct columns (horizontal) or distinct rows (vertical).
inline std::vector<Partition> brute_strips(const Partition& lambda, int size, bool horizontal, int rows) {
  std::vector<Partition> out;
  for (const auto& mu : all_partitions(lambda.size() + size, rows)) {
    if (!leq(lambda, mu)) continue;
    std::set<int> keys;
    bool ok = true;
    for (auto [r, c] : skew_cells(lambda, mu)) ok = ok && keys.insert(horizontal ? c : r).second;
    if (ok) out.push_back(mu);
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

// Reachable (partition, parity of summed heights) states under all removal
// sequences of n-rim hooks; returns the terminal states.
inline std::set<std::pair<Partition, int>> all_removal_ends(const Partition& lambda, int n) {
  std::set<std::pair<Partition, int>> visited, ends;
  std::vector<std::pair<Partition, int>> stack{{lambda, 0}};
  visited.insert(stack.front());
  while (!stack.empty()) {
    auto [p, parity] = stack.back();
    stack.pop_back();
    auto next = brute_remove(p, n);
    if (next.empty()) ends.insert({p, parity});
    for (const auto& h : next) {
      std::pair<Partition, int> state{h.other, (parity + h.height) % 2};
      if (visited.insert(state).second) stack.push_back(state);
    }
  }
  return ends;
}

// Inversions counted via the definition on a padded word.
inline int brute_length(const Permutation& w) {
  auto a = w.word(w.size());
  int n = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) n += a[i] > a[j];
  return n;
}

inline std::vector<Permutation> all_permutations(int n) {
  std::vector<int> a(static_cast<std::size_t>(n));
  std::iota(a.begin(), a.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(a);
  } while (std::next_permutation(a.begin(), a.end()));
  return out;
}

inline Partition random_partition(std::mt19937& rng, int max_rows, int max_part) {
  std::uniform_int_distribution<int> part(0, max_part);
  std::vector<int> v(static_cast<std::size_t>(max_rows));
  for (auto& x : v) x = part(rng);
  std::sort(v.rbegin(), v.rend());
  return Partition(v);
}

inline Permutation random_permutation(std::mt19937& rng, int n) {
  std::vector<int> a(static_cast<std::size_t>(n));
  std::iota(a.begin(), a.end(), 1);
  std::shuffle(a.begin(), a.end(), rng);
  return Permutation(a);
}

inline SparsePoly random_poly(std::mt19937& rng, int vars, int max_degree, int terms) {
  std::uniform_int_distribution<int> var(0, vars - 1), deg(0, max_degree), coeff(-5, 5);
  SparsePoly f;
  for (int t = 0; t < terms; ++t) {
    Monomial m(static_cast<std::size_t>(vars), 0);
    int d = deg(rng);
    for (int i = 0; i < d; ++i) ++m[static_cast<std::size_t>(var(rng))];
    f.add_term(m, coeff(rng));
  }
  return f;
}

// Evaluates a polynomial at integer points; used as an arithmetic cross-check.
inline long long evaluate(const SparsePoly& f, const std::vector<long long>& x) {
  long long total = 0;
  for (const auto& [m, c] : f.terms()) {
    long long v = static_cast<long long>(c);
    for (std::size_t i = 0; i < m.size(); ++i)
      for (int e = 0; e < m[i]; ++e) v *= x[i];
    total += v;
  }
  return total;
}

}  // namespace mnrule::oracle
