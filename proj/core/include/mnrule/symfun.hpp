#pragma once

#include "mnrule/linear_combination.hpp"
#include "mnrule/partition.hpp"
#include "mnrule/sparse_poly.hpp"

namespace mnrule {

/// Integer combination of Schur functions s_lambda.
using SchurExpansion = LinearCombination<Partition, DescendingLex>;

/// Polynomial in x1..xk; shares the representation of SparsePoly.
using SparsePolyK = SparsePoly;

/// e_a * s_lambda in Lambda_k: vertical a-strips added to lambda.
SchurExpansion pieri_e(const Partition& lambda, int a, int k);

/// h_b * s_lambda in Lambda_k: horizontal b-strips added to lambda.
SchurExpansion pieri_h(const Partition& lambda, int b, int k);

/// e_a applied termwise to an expansion; e_0 is the identity.
SchurExpansion multiply_e(const SchurExpansion& f, int a, int k);
/// h_b applied termwise to an expansion; h_0 is the identity.
SchurExpansion multiply_h(const SchurExpansion& f, int b, int k);

/// Murnaghan-Nakayama rule in Lambda_k: p_r * s_lambda is the signed sum of
/// s_mu over rim hooks mu/lambda of size r, sign (-1)^(height+1), with mu
/// restricted to at most k rows.
SchurExpansion mn_classical(const Partition& lambda, int r, int k);

/// p_r as the alternating sum of its hooks, sum_i (-1)^i s_(r-i, 1^i).
SchurExpansion p_as_hooks(int r);

/// s_(b,1^(a-1)) * s_lambda via the alternating e/h expansion of a hook,
/// s_(b,1^(a-1)) = e_(a-1) h_b - e_(a-2) h_(b+1) + ... + (-1)^(a-1) h_(a+b-1).
SchurExpansion hook_times_schur(const Partition& lambda, int a, int b, int k);

/// s_lambda(x1..xk), by enumerating semistandard tableaux with entries <= k.
SparsePolyK schur_to_monomials(const Partition& lambda, int k);

/// Evaluates an expansion termwise with schur_to_monomials.
SparsePolyK to_polynomial(const SchurExpansion& f, int k);

/// x1^r + ... + xk^r.
SparsePolyK power_sum_poly(int r, int k);

/// Drops every term whose partition does not fit in the k x (n-k) box.
SchurExpansion grassmannian_project(const SchurExpansion& f, int k, int n);

}  // namespace mnrule
