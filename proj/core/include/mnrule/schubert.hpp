#pragma once

#include "mnrule/linear_combination.hpp"
#include "mnrule/permutation.hpp"
#include "mnrule/sparse_poly.hpp"

#include <optional>
#include <vector>

namespace mnrule {

/// Integer combination of Schubert polynomials S_w.
using SchubertExpansion = LinearCombination<Permutation, ByLengthThenLex>;

/// x1^(n-1) x2^(n-2) ... x_(n-1).
SparsePoly staircase(int n);

/// Applies d_v = d_(a1) o ... o d_(am) for a reduced word v = s_(a1)...s_(am).
SparsePoly apply_divided_differences(const SparsePoly& f, const Permutation& v);

/// S_w computed from the staircase of S_n, n the smallest symmetric group
/// containing w. Results are cached process-wide; the cache is thread safe.
SparsePoly schubert_poly(const Permutation& w);

/// S_w = d_(w^-1 w0)(staircase(n)) evaluated directly inside S_n, n >= size(w).
SparsePoly schubert_poly_in(const Permutation& w, int n);

/// Sum of c_w * S_w as a polynomial.
SparsePoly to_polynomial(const SchubertExpansion& f);

/// The unique expansion f = sum c_w S_w. Each homogeneous component of
/// degree d is expanded with c_w = constant term of d_w f over l(w) = d,
/// walking words of divided differences and pruning at zero. The result is
/// checked against f before returning (std::logic_error on mismatch).
SchubertExpansion expand_in_schubert(const SparsePoly& f);

/// (x1 + ... + xk) * S_w: the sum of S_u over k-Bruhat covers u of w.
SchubertExpansion monk(const Permutation& w, int k);

/// x_i * S_w = sum_{i<b} S_(w(i,b)) - sum_{a<i} S_(w(a,i)), over
/// transpositions raising the length by one.
SchubertExpansion transition_xi(const Permutation& w, int i);

/// One term of p_r(x1..xk) * S_w.
struct MnSchubertTerm {
  Permutation u;    // w * eta
  Permutation eta;  // the (r+1)-cycle w^-1 u
  int height = 0;   // het(eta, k)
  int sign = 0;     // (-1)^(height+1)
};

/// Terms of p_r(x1..xk) * S_w: endpoints u of saturated k-Bruhat chains of
/// length r from w for which w^-1 u is an (r+1)-cycle. `max_support` defaults
/// to default_support_bound(w, k, r). Ordered as in SchubertExpansion.
std::vector<MnSchubertTerm> mn_schubert_terms(const Permutation& w, int k, int r,
                                              std::optional<int> max_support = std::nullopt);

/// p_r(x1..xk) * S_w in the Schubert basis.
SchubertExpansion mn_schubert(const Permutation& w, int k, int r, std::optional<int> max_support = std::nullopt);

/// s_(b,1^(a-1))(x1..xk) * S_w as the sum over endpoints of peakless chains.
SchubertExpansion hook_times_schubert(const Permutation& w, int k, int a, int b,
                                      std::optional<int> max_support = std::nullopt);

}  // namespace mnrule
