#include "mnrule/schubert.hpp"

#include "mnrule/error.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

namespace mnrule {

SparsePoly staircase(int n) {
  Monomial m;
  for (int i = 1; i < n; ++i) m.push_back(n - i);
  return SparsePoly::monomial(std::move(m));
}

SparsePoly apply_divided_differences(const SparsePoly& f, const Permutation& v) {
  // d_v = d_(v s_i) o d_i whenever v(i) > v(i+1).
  SparsePoly g = f;
  Permutation rest = v;
  while (!rest.is_identity() && !g.is_zero()) {
    int i = 1;
    while (rest(i) < rest(i + 1)) ++i;
    g = divided_difference(g, i);
    rest = rest.times_transposition(i, i + 1);
  }
  return rest.is_identity() ? g : SparsePoly();
}

SparsePoly schubert_poly_in(const Permutation& w, int n) {
  if (n < std::max(w.size(), 1)) throw InvalidArgument("schubert_poly_in: w does not lie in S_n");
  return apply_divided_differences(staircase(n), w.inverse() * Permutation::longest(n));
}

namespace {

class SchubertCache {
 public:
  std::optional<SparsePoly> find(const Permutation& w) {
    std::lock_guard lock(mutex_);
    auto it = cache_.find(w);
    if (it == cache_.end()) return std::nullopt;
    return it->second;
  }
  void store(const Permutation& w, const SparsePoly& p) {
    std::lock_guard lock(mutex_);
    cache_.emplace(w, p);
  }

 private:
  std::mutex mutex_;
  std::map<Permutation, SparsePoly> cache_;
};

SchubertCache& cache() {
  static SchubertCache instance;
  return instance;
}

}  // namespace

SparsePoly schubert_poly(const Permutation& w) {
  if (auto hit = cache().find(w)) return *hit;
  const int n = std::max(w.size(), 1);
  const Permutation top = Permutation::longest(n);

  // Climb by ascents towards w0 until a cached polynomial is found, then
  // descend with S_v = d_i S_(v s_i) for each ascent i of v.
  std::vector<std::pair<Permutation, int>> path;
  Permutation v = w;
  SparsePoly poly;
  for (;;) {
    if (auto hit = cache().find(v)) {
      poly = *hit;
      break;
    }
    if (v == top) {
      poly = staircase(n);
      cache().store(v, poly);
      break;
    }
    int i = 1;
    while (v(i) > v(i + 1)) ++i;
    path.emplace_back(v, i);
    v = v.times_transposition(i, i + 1);
  }
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    poly = divided_difference(poly, it->second);
    cache().store(it->first, poly);
  }
  return poly;
}

SparsePoly to_polynomial(const SchubertExpansion& f) {
  SparsePoly out;
  for (const auto& [w, c] : f) out += schubert_poly(w) * c;
  return out;
}

namespace {

// Largest b with b+1 appearing before b in the one-line word of v, i.e. the
// largest left descent.
int max_left_descent(const Permutation& v) {
  const Permutation inv = v.inverse();
  for (int b = v.size() - 1; b >= 1; --b) {
    if (inv(b) > inv(b + 1)) return b;
  }
  return 0;
}

// Visits every v with d_v g != 0 exactly once. Each v is reached from
// s_b v where b is its largest left descent.
void expand_component(const SparsePoly& g, const Permutation& v, int remaining, SchubertExpansion& out) {
  if (remaining == 0) {
    out.add(v, g.constant_term());
    return;
  }
  const Permutation inv = v.inverse();
  const int vars = g.num_variables();
  for (int b = 1; b <= vars; ++b) {
    if (inv(b) > inv(b + 1)) continue;  // d_b would not extend v to a longer word
    const Permutation next = Permutation::transposition(b, b + 1) * v;
    if (max_left_descent(next) != b) continue;
    SparsePoly h = divided_difference(g, b);
    if (h.is_zero()) continue;
    expand_component(h, next, remaining - 1, out);
  }
}

}  // namespace

SchubertExpansion expand_in_schubert(const SparsePoly& f) {
  SchubertExpansion out;
  for (const auto& [d, component] : f.homogeneous_components()) {
    expand_component(component, Permutation(), d, out);
  }
  if (to_polynomial(out) != f) {
    throw std::logic_error("expand_in_schubert: reconstruction does not match the input");
  }
  return out;
}

namespace {

// l(w (p,q)) = l(w) + 1 for p < q.
bool raises_by_one(const Permutation& w, int p, int q) {
  const int wp = w(p);
  const int wq = w(q);
  if (wp > wq) return false;
  for (int t = p + 1; t < q; ++t) {
    if (w(t) > wp && w(t) < wq) return false;
  }
  return true;
}

}  // namespace

SchubertExpansion monk(const Permutation& w, int k) {
  SchubertExpansion out;
  for (const auto& cover : k_bruhat_covers(w, k, default_support_bound(w, k, 1))) out.add(cover.to, 1);
  return out;
}

SchubertExpansion transition_xi(const Permutation& w, int i) {
  if (i < 1) throw InvalidArgument("variable index must be positive");
  SchubertExpansion out;
  const int bound = std::max(w.size(), i) + 1;
  for (int b = i + 1; b <= bound; ++b) {
    if (raises_by_one(w, i, b)) out.add(w.times_transposition(i, b), 1);
  }
  for (int a = 1; a < i; ++a) {
    if (raises_by_one(w, a, i)) out.add(w.times_transposition(a, i), -1);
  }
  return out;
}

std::vector<MnSchubertTerm> mn_schubert_terms(const Permutation& w, int k, int r, std::optional<int> max_support) {
  if (k < 1 || r < 1) throw InvalidArgument("mn_schubert requires k, r >= 1");
  const int bound = max_support.value_or(default_support_bound(w, k, r));
  // Endpoints of all saturated chains of length r, one layer at a time.
  std::set<Permutation, ByLengthThenLex> layer{w};
  for (int step = 0; step < r; ++step) {
    std::set<Permutation, ByLengthThenLex> next;
    for (const auto& v : layer) {
      for (const auto& cover : k_bruhat_covers(v, k, bound)) next.insert(cover.to);
    }
    layer = std::move(next);
  }
  const Permutation w_inv = w.inverse();
  std::vector<MnSchubertTerm> out;
  for (const auto& u : layer) {
    Permutation eta = w_inv * u;
    if (!cycle_type_check(eta, r + 1)) continue;
    const int h = het(eta, k);
    out.push_back({u, std::move(eta), h, h % 2 == 1 ? 1 : -1});
  }
  return out;
}

SchubertExpansion mn_schubert(const Permutation& w, int k, int r, std::optional<int> max_support) {
  SchubertExpansion out;
  for (const auto& term : mn_schubert_terms(w, k, r, max_support)) out.add(term.u, term.sign);
  return out;
}

SchubertExpansion hook_times_schubert(const Permutation& w, int k, int a, int b, std::optional<int> max_support) {
  const int bound = max_support.value_or(default_support_bound(w, k, a + b - 1));
  SchubertExpansion out;
  for (const auto& [u, mult] : peakless_endpoints(w, k, a, b, bound)) out.add(u, mult);
  return out;
}

}  // namespace mnrule
