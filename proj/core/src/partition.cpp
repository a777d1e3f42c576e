#include "mnrule/partition.hpp"

#include "mnrule/error.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace mnrule {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw InvalidArgument("partition has a negative part");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw InvalidArgument("partition parts must be weakly decreasing");
    }
  }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::conjugate() const {
  std::vector<int> cols(parts_.empty() ? 0 : static_cast<std::size_t>(parts_.front()), 0);
  for (int row : parts_) {
    for (int c = 0; c < row; ++c) ++cols[static_cast<std::size_t>(c)];
  }
  return Partition(std::move(cols));
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  os << ')';
  return os.str();
}

bool leq(const Partition& a, const Partition& b) {
  if (a.length() > b.length()) return false;
  for (int i = 0; i < a.length(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

Partition box_partition(int k, int n) {
  if (k <= 0 || n <= k) throw InvalidArgument("box_partition requires 0 < k < n");
  return Partition(std::vector<int>(static_cast<std::size_t>(k), n - k));
}

bool fits_in_box(const Partition& p, int k, int n) {
  return p.length() <= k && p[0] <= n - k;
}

std::optional<int> rim_hook_height(const Partition& inner, const Partition& outer) {
  if (!leq(inner, outer) || inner.size() == outer.size()) return std::nullopt;
  std::set<int> diagonals;
  int rows = 0;
  for (int i = 0; i < outer.length(); ++i) {
    if (outer[i] == inner[i]) continue;
    ++rows;
    for (int c = inner[i]; c < outer[i]; ++c) {
      if (!diagonals.insert(c - i).second) return std::nullopt;
    }
  }
  if (*diagonals.rbegin() - *diagonals.begin() + 1 != static_cast<int>(diagonals.size())) {
    return std::nullopt;
  }
  return rows;
}

void validate(const RimHookRecord& hook) {
  if (!leq(hook.inner, hook.outer)) throw std::logic_error("rim hook: inner not contained in outer");
  if (hook.size != hook.outer.size() - hook.inner.size()) throw std::logic_error("rim hook: size mismatch");
  auto height = rim_hook_height(hook.inner, hook.outer);
  if (!height) throw std::logic_error("rim hook: skew shape is not a rim hook");
  if (*height != hook.height) throw std::logic_error("rim hook: height mismatch");
  if (hook.height < 1 || hook.height > hook.size) throw std::logic_error("rim hook: height out of range");
}

namespace {

// Beta-set (abacus) encoding with a fixed number of beads: row i of a
// partition with `beads` rows sits at position parts[i] + beads - 1 - i.
// Sliding a bead by r along the abacus adds or removes an r-rim hook whose
// NE-most box is at the end of that bead's row; the hook's height is one more
// than the number of beads jumped over.
std::vector<int> beta_set(const Partition& p, int beads) {
  std::vector<int> beta(static_cast<std::size_t>(beads));
  for (int i = 0; i < beads; ++i) beta[static_cast<std::size_t>(i)] = p[i] + beads - 1 - i;
  return beta;
}

Partition from_beta_set(std::vector<int> beta) {
  std::sort(beta.begin(), beta.end(), std::greater<>());
  const int beads = static_cast<int>(beta.size());
  std::vector<int> parts(beta.size());
  for (int i = 0; i < beads; ++i) {
    parts[static_cast<std::size_t>(i)] = beta[static_cast<std::size_t>(i)] - (beads - 1 - i);
  }
  return Partition(std::move(parts));
}

int beads_between(const std::vector<int>& beta, int lo, int hi) {
  return static_cast<int>(std::count_if(beta.begin(), beta.end(), [&](int b) { return lo < b && b < hi; }));
}

bool occupied(const std::vector<int>& beta, int pos) {
  return std::find(beta.begin(), beta.end(), pos) != beta.end();
}

}  // namespace

std::vector<RimHookRecord> add_rim_hooks(const Partition& lambda, int r, int max_rows) {
  if (r < 1) throw InvalidArgument("rim hook size must be positive");
  std::vector<RimHookRecord> out;
  if (lambda.length() > max_rows || max_rows < 1) return out;
  const auto beta = beta_set(lambda, max_rows);
  for (std::size_t i = 0; i < beta.size(); ++i) {
    const int target = beta[i] + r;
    if (occupied(beta, target)) continue;
    auto moved = beta;
    moved[i] = target;
    out.push_back({lambda, from_beta_set(std::move(moved)), r, 1 + beads_between(beta, beta[i], target)});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.outer > b.outer; });
  return out;
}

std::vector<RimHookRecord> remove_rim_hooks(const Partition& lambda, int r) {
  if (r < 1) throw InvalidArgument("rim hook size must be positive");
  std::vector<RimHookRecord> out;
  const auto beta = beta_set(lambda, lambda.length());
  for (std::size_t i = 0; i < beta.size(); ++i) {
    const int target = beta[i] - r;
    if (target < 0 || occupied(beta, target)) continue;
    auto moved = beta;
    moved[i] = target;
    out.push_back({from_beta_set(std::move(moved)), lambda, r, 1 + beads_between(beta, target, beta[i])});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.inner > b.inner; });
  return out;
}

CoreResult n_core(const Partition& lambda, int n) {
  if (n < 2) throw InvalidArgument("n_core requires n >= 2");
  CoreResult result{lambda, 0, 0, {}};
  for (;;) {
    const auto& current = result.core;
    const auto beta = beta_set(current, current.length());
    // Beads are stored in decreasing order, so the first movable bead is the
    // topmost row.
    std::optional<std::size_t> pick;
    for (std::size_t i = 0; i < beta.size(); ++i) {
      const int target = beta[i] - n;
      if (target >= 0 && !occupied(beta, target)) {
        pick = i;
        break;
      }
    }
    if (!pick) break;
    auto moved = beta;
    moved[*pick] = beta[*pick] - n;
    RimHookRecord hook{from_beta_set(std::move(moved)), current, n,
                       1 + beads_between(beta, beta[*pick] - n, beta[*pick])};
    result.height_sum += hook.height;
    ++result.hooks_removed;
    result.core = hook.inner;
    result.removed.push_back(std::move(hook));
  }
  return result;
}

std::vector<Partition> strips(const Partition& lambda, int size, StripKind kind, int max_rows) {
  if (size < 1) throw InvalidArgument("strip size must be positive");
  std::vector<Partition> out;
  if (lambda.length() > max_rows) return out;
  std::vector<int> mu(static_cast<std::size_t>(max_rows), 0);

  std::function<void(int, int)> place = [&](int row, int remaining) {
    if (row == max_rows) {
      if (remaining == 0) out.emplace_back(mu);
      return;
    }
    const int base = lambda[row];
    int hi = 0;
    if (kind == StripKind::horizontal) {
      // A horizontal strip may not overhang the previous row of lambda.
      const int cap = row == 0 ? base + remaining : lambda[row - 1];
      hi = std::min(cap, base + remaining);
    } else {
      hi = base + std::min(remaining, 1);
      if (row > 0) hi = std::min(hi, mu[static_cast<std::size_t>(row - 1)]);
    }
    for (int v = hi; v >= base; --v) {
      mu[static_cast<std::size_t>(row)] = v;
      place(row + 1, remaining - (v - base));
    }
  };
  place(0, size);
  std::sort(out.begin(), out.end(), DescendingLex{});
  return out;
}

std::vector<Partition> partitions_of(int total, int max_rows, int max_part) {
  std::vector<Partition> out;
  std::vector<int> parts;
  std::function<void(int, int)> rec = [&](int remaining, int cap) {
    if (remaining == 0) {
      out.emplace_back(parts);
      return;
    }
    if (static_cast<int>(parts.size()) == max_rows) return;
    for (int v = std::min(remaining, cap); v >= 1; --v) {
      parts.push_back(v);
      rec(remaining - v, v);
      parts.pop_back();
    }
  };
  if (total >= 0) rec(total, max_part);
  return out;
}

std::vector<Partition> partitions_in_box(int rows, int cols) {
  std::vector<Partition> out;
  for (int total = 0; total <= rows * cols; ++total) {
    auto layer = partitions_of(total, rows, cols);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

Partition hook_partition(int a, int b) {
  if (a < 1 || b < 1) throw InvalidArgument("hook requires a, b >= 1");
  std::vector<int> parts(static_cast<std::size_t>(a), 1);
  parts[0] = b;
  return Partition(std::move(parts));
}

}  // namespace mnrule
