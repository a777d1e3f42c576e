#pragma once

#include "mnrule/linear_combination.hpp"
#include "mnrule/partition.hpp"
#include "mnrule/symfun.hpp"

#include <string>
#include <utility>
#include <vector>

namespace mnrule {

/// The Grassmannian Gr(k, n) of k-planes in n-space; 0 < k < n.
class GrContext {
 public:
  GrContext(int k, int n);
  int k() const { return k_; }
  int n() const { return n_; }
  Partition box() const { return box_partition(k_, n_); }
  bool contains(const Partition& p) const { return fits_in_box(p, k_, n_); }

 private:
  int k_;
  int n_;
};

/// Basis element q^d sigma_lambda.
struct QuantumBasis {
  int q_power = 0;
  Partition partition;

  friend bool operator==(const QuantumBasis&, const QuantumBasis&) = default;
};

/// Ascending power of q, then descending lexicographic partition.
struct QuantumOrder {
  bool operator()(const QuantumBasis& a, const QuantumBasis& b) const {
    if (a.q_power != b.q_power) return a.q_power < b.q_power;
    return a.partition > b.partition;
  }
};

/// Element of qH*(Gr(k,n)), a combination of q^d sigma_lambda with lambda in
/// the box. q is carried as an exponent, never as a polynomial variable.
class QuantumClass {
 public:
  explicit QuantumClass(GrContext ctx) : ctx_(ctx) {}

  const GrContext& context() const { return ctx_; }
  /// Throws InvalidArgument when lambda is outside the box or d < 0.
  void add(int q_power, const Partition& lambda, const Integer& coeff);
  Integer coefficient(int q_power, const Partition& lambda) const;
  const LinearCombination<QuantumBasis, QuantumOrder>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  QuantumClass& operator+=(const QuantumClass& o);
  /// Multiplies by sign * q^shift.
  QuantumClass shifted(int shift, const Integer& sign) const;
  /// The q = 0 part as a Schur expansion.
  SchurExpansion classical_part() const;

  friend bool operator==(const QuantumClass& a, const QuantumClass& b) {
    return a.ctx_.k() == b.ctx_.k() && a.ctx_.n() == b.ctx_.n() && a.terms_ == b.terms_;
  }

 private:
  GrContext ctx_;
  LinearCombination<QuantumBasis, QuantumOrder> terms_;
};

/// Image of s_lambda under the rim-hook reduction Lambda_k -> qH*:
/// (-1)^(k s - sum of heights) q^s sigma_core when the n-core fits the box,
/// zero otherwise. lambda must have at most k rows.
QuantumClass psi_reduce(const Partition& lambda, const GrContext& ctx);

/// psi applied termwise to an expansion in Lambda_k.
QuantumClass psi_reduce(const SchurExpansion& f, const GrContext& ctx);

/// p_r * sigma_lambda for 1 <= r < n and lambda in the box: rim hooks of
/// size r added inside the box, minus (-1)^k q times rim hooks of size n-r
/// removed from lambda, each signed (-1)^(height+1).
QuantumClass quantum_mn(const Partition& lambda, int r, const GrContext& ctx);

/// Extends quantum_mn to r > n with psi(p_r) = (-1)^(k+1) q psi(p_(r-n)).
/// Throws UnsupportedArgument when n divides r.
QuantumClass quantum_mn_extended(const Partition& lambda, int r, const GrContext& ctx);

/// psi(mn_classical(lambda, r, k)): the classical rule in Lambda_k with rows
/// bounded by k only, reduced termwise.
QuantumClass oracle_quantum_mn(const Partition& lambda, int r, const GrContext& ctx);

struct CheckLine {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct CheckReport {
  std::vector<CheckLine> lines;
  bool all_pass() const;
};

/// Partitions with at most k rows and lambda_1 - lambda_k = n - k + 1, in
/// order of size then descending lexicographic; the first `count` are returned.
std::vector<Partition> goodman_wenzl_generators(const GrContext& ctx, int count);

/// Checks through psi that h_j vanishes for n-k < j < n, that
/// psi(h_n) = (-1)^(k+1) q, and that s_lambda vanishes for `samples`
/// partitions with lambda_1 - lambda_k = n-k+1.
CheckReport ideal_vanishing_check(const GrContext& ctx, int samples = 20);

/// Per-term facts behind the quantum rule, for lambda in the box and 1 <= r < n:
/// for each mu outside the box with mu/lambda an r-rim hook and n-core nu in
/// the box, mu/nu is an n-rim hook, lambda/nu an (n-r)-rim hook, and
/// het(lambda/nu) + het(mu/lambda) = het(mu/nu) + 1; every nu with lambda/nu
/// an (n-r)-rim hook arises this way. Also compares the signs term by term.
CheckReport quantum_term_claims(const Partition& lambda, int r, const GrContext& ctx);

}  // namespace mnrule
