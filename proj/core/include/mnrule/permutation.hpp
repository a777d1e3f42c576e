#pragma once

#include "mnrule/partition.hpp"

#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mnrule {

/// A permutation of {1, 2, ...} fixing all but finitely many points.
///
/// Stored as the shortest one-line word w(1)..w(m) with w(m) != m, so the
/// identity is the empty word and equality is structural.
class Permutation {
 public:
  Permutation() = default;
  /// Throws InvalidArgument unless `one_line` is a permutation of 1..m.
  explicit Permutation(std::vector<int> one_line);

  /// The transposition exchanging i and j.
  static Permutation transposition(int i, int j);
  /// Cycle notation: points[0] -> points[1] -> ... -> points[0].
  static Permutation cycle(const std::vector<int>& points);
  /// The permutation with the given Lehmer code.
  static Permutation from_code(const std::vector<int>& code);
  /// The longest element of S_n.
  static Permutation longest(int n);
  /// "34165278" (digit per entry) or "3,4,1,6,5,2,7,8"; "" and "1" are the identity.
  static Permutation parse(std::string_view text);

  int operator()(int i) const {
    return i >= 1 && i <= size() ? one_line_[static_cast<std::size_t>(i - 1)] : i;
  }
  /// Length of the canonical one-line word (0 for the identity).
  int size() const { return static_cast<int>(one_line_.size()); }
  bool is_identity() const { return one_line_.empty(); }
  const std::vector<int>& one_line() const { return one_line_; }
  /// One-line word padded with fixed points to length n >= size().
  std::vector<int> word(int n) const;

  Permutation inverse() const;
  /// w * (i,j): the one-line word with positions i and j exchanged.
  Permutation times_transposition(int i, int j) const;
  /// Lehmer code: c_i = #{j > i : w(j) < w(i)}, trailing zeros trimmed.
  std::vector<int> code() const;
  /// Digit string when every entry is at most 9, else comma separated.
  std::string to_string() const;

  friend Permutation operator*(const Permutation& u, const Permutation& v);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> one_line_;
};

/// Number of inversions.
int length(const Permutation& w);

/// Order by length, then lexicographically by one-line word.
struct ByLengthThenLex {
  bool operator()(const Permutation& a, const Permutation& b) const;
};

/// A k-Bruhat cover from -> to = from * (i,j), labelled by from(i).
struct LabeledCover {
  Permutation from;
  Permutation to;
  int label = 0;
  int i = 0;
  int j = 0;

  friend bool operator==(const LabeledCover&, const LabeledCover&) = default;
};

using Chain = std::vector<LabeledCover>;

/// Default cap on materialised chains.
inline constexpr std::size_t kDefaultChainCap = 2'000'000;

/// Re-checks a cover against its definition; throws std::logic_error.
void validate(const LabeledCover& cover, int k);

/// Sufficient support for every permutation reached from w by r k-Bruhat
/// covers: max(size(w), k) + r.
int default_support_bound(const Permutation& w, int k, int r);

/// Covers w -> w(i,j) with i <= k < j <= max_support and length rising by
/// one, ordered by (i, j).
std::vector<LabeledCover> k_bruhat_covers(const Permutation& w, int k, int max_support);

/// Every saturated k-Bruhat chain of r covers from w. r = 0 yields the single
/// empty chain. Throws ResourceLimit if more than `cap` chains would be built.
std::vector<Chain> saturated_chains(const Permutation& w, int k, int r, int max_support,
                                    std::size_t cap = kDefaultChainCap);

/// Chains of length(u) - length(w) covers from w that end at u.
std::vector<Chain> chains_between(const Permutation& w, const Permutation& u, int k, int max_support,
                                  std::size_t cap = kDefaultChainCap);

/// Labels of a chain, in order.
std::vector<int> labels(const Chain& chain);

/// If labels fall strictly then rise strictly (a1 > ... > aa < ... < ar),
/// returns the length a of the falling run; a is unique when it exists.
std::optional<int> peakless_shape(const std::vector<int>& labels);

/// Endpoints, with multiplicity, of chains of a+b-1 covers whose labels
/// strictly fall for the first a steps then strictly rise. Requires
/// 1 <= a <= k and b >= 1.
std::vector<std::pair<Permutation, int>> peakless_endpoints(const Permutation& w, int k, int a, int b,
                                                            int max_support);

/// True iff eta is a single cycle moving exactly c points.
bool cycle_type_check(const Permutation& eta, int c);

/// Number of points i <= k that eta moves.
int het(const Permutation& eta, int k);

/// {a : a < zeta(a)}.
std::set<int> up_set(const Permutation& zeta);

/// The Grassmannian permutation with descent at k (or none) whose Schubert
/// polynomial is s_lambda(x1..xk); lambda must have at most k parts.
Permutation grassmannian_permutation(const Partition& lambda, int k);

/// For w with no descent other than at k, the partition
/// (w(k)-k, ..., w(1)-1); nullopt otherwise.
std::optional<Partition> grassmannian_shape(const Permutation& w, int k);

}  // namespace mnrule
