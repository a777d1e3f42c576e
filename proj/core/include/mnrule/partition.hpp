#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace mnrule {

/// An integer partition stored as its positive parts, weakly decreasing.
///
/// Trailing zeros are stripped on construction, so the empty vector is the
/// only representation of the empty partition. Partitions are immutable.
class Partition {
 public:
  Partition() = default;
  /// Throws InvalidArgument if `parts` has a negative entry or increases.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  /// Number of nonzero rows.
  int length() const { return static_cast<int>(parts_.size()); }
  /// Number of boxes.
  int size() const;
  bool empty() const { return parts_.empty(); }
  /// Row `i` (0-based); rows past the end read as 0.
  int operator[](int i) const {
    return i < length() ? parts_[static_cast<std::size_t>(i)] : 0;
  }

  Partition conjugate() const;
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// Output order used everywhere: lexicographically largest partition first,
/// so (3) precedes (2,1) precedes (1,1,1).
struct DescendingLex {
  bool operator()(const Partition& a, const Partition& b) const { return a > b; }
};

/// Containment of Young diagrams: a_i <= b_i for every row.
bool leq(const Partition& a, const Partition& b);

/// The k x (n-k) rectangle; requires 0 < k < n.
Partition box_partition(int k, int n);

/// True when `p` has at most k rows and first row at most n-k.
bool fits_in_box(const Partition& p, int k, int n);

/// A rim hook outer/inner with its size and number of rows.
struct RimHookRecord {
  Partition inner;
  Partition outer;
  int size = 0;
  int height = 0;

  friend bool operator==(const RimHookRecord&, const RimHookRecord&) = default;
};

/// Height of outer/inner when it is a nonempty rim hook, i.e. its cells lie
/// on a connected run of NW-SE diagonals with one cell per diagonal.
/// Returns nullopt otherwise (including when inner is not contained in outer).
std::optional<int> rim_hook_height(const Partition& inner, const Partition& outer);

/// Re-checks every RimHookRecord invariant; throws std::logic_error on failure.
void validate(const RimHookRecord& hook);

/// All mu with at most `max_rows` rows such that mu/lambda is a rim hook of
/// size r, in descending lexicographic order of mu.
std::vector<RimHookRecord> add_rim_hooks(const Partition& lambda, int r, int max_rows);

/// All nu such that lambda/nu is a rim hook of size r, in descending
/// lexicographic order of nu.
std::vector<RimHookRecord> remove_rim_hooks(const Partition& lambda, int r);

struct CoreResult {
  Partition core;
  int hooks_removed = 0;
  int height_sum = 0;
  /// The removal sequence actually used, in order.
  std::vector<RimHookRecord> removed;
};

/// Strips rim hooks of size n until none remains. Each step removes the hook
/// whose NE-most box lies in the topmost possible row. Requires n >= 2.
CoreResult n_core(const Partition& lambda, int n);

enum class StripKind { horizontal, vertical };

/// All mu with at most `max_rows` rows such that mu/lambda is a strip of the
/// given kind with `size` boxes, in descending lexicographic order.
std::vector<Partition> strips(const Partition& lambda, int size, StripKind kind, int max_rows);

/// Partitions of `total` with at most `max_rows` rows and parts at most
/// `max_part`, in descending lexicographic order.
std::vector<Partition> partitions_of(int total, int max_rows, int max_part);

/// Every partition contained in the `rows` x `cols` rectangle, grouped by size
/// (ascending) and descending lexicographic within a size.
std::vector<Partition> partitions_in_box(int rows, int cols);

/// The hook (b, 1^(a-1)) with a rows and b columns.
Partition hook_partition(int a, int b);

}  // namespace mnrule
