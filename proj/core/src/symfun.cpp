#include "mnrule/symfun.hpp"

#include "mnrule/error.hpp"

#include <functional>

namespace mnrule {

namespace {

void require_rows(const Partition& lambda, int k) {
  if (k < 1) throw InvalidArgument("k must be positive");
  if (lambda.length() > k) {
    throw InvalidArgument("partition " + lambda.to_string() + " has more than k=" + std::to_string(k) + " rows");
  }
}

SchurExpansion strip_sum(const Partition& lambda, int size, StripKind kind, int k) {
  require_rows(lambda, k);
  if (size < 1) throw InvalidArgument("Pieri degree must be positive");
  SchurExpansion out;
  for (const auto& mu : strips(lambda, size, kind, k)) out.add(mu, 1);
  return out;
}

SchurExpansion multiply_strip(const SchurExpansion& f, int size, StripKind kind, int k) {
  if (size < 0) throw InvalidArgument("Pieri degree must be nonnegative");
  if (size == 0) return f;
  SchurExpansion out;
  for (const auto& [lambda, coeff] : f) {
    for (const auto& mu : strips(lambda, size, kind, k)) out.add(mu, coeff);
  }
  return out;
}

}  // namespace

SchurExpansion pieri_e(const Partition& lambda, int a, int k) {
  return strip_sum(lambda, a, StripKind::vertical, k);
}

SchurExpansion pieri_h(const Partition& lambda, int b, int k) {
  return strip_sum(lambda, b, StripKind::horizontal, k);
}

SchurExpansion multiply_e(const SchurExpansion& f, int a, int k) {
  return multiply_strip(f, a, StripKind::vertical, k);
}

SchurExpansion multiply_h(const SchurExpansion& f, int b, int k) {
  return multiply_strip(f, b, StripKind::horizontal, k);
}

SchurExpansion mn_classical(const Partition& lambda, int r, int k) {
  require_rows(lambda, k);
  if (r < 1) throw InvalidArgument("power sum degree must be positive");
  SchurExpansion out;
  for (const auto& hook : add_rim_hooks(lambda, r, k)) {
    out.add(hook.outer, hook.height % 2 == 1 ? 1 : -1);
  }
  return out;
}

SchurExpansion p_as_hooks(int r) {
  if (r < 1) throw InvalidArgument("power sum degree must be positive");
  SchurExpansion out;
  for (int i = 0; i < r; ++i) out.add(hook_partition(i + 1, r - i), i % 2 == 0 ? 1 : -1);
  return out;
}

SchurExpansion hook_times_schur(const Partition& lambda, int a, int b, int k) {
  require_rows(lambda, k);
  if (a < 1 || b < 1) throw InvalidArgument("hook requires a, b >= 1");
  const SchurExpansion start{{lambda, 1}};
  SchurExpansion out;
  for (int j = 0; j < a; ++j) {
    auto term = multiply_e(multiply_h(start, b + j, k), a - 1 - j, k);
    if (j % 2 == 0) {
      out += term;
    } else {
      out -= term;
    }
  }
  return out;
}

SparsePolyK schur_to_monomials(const Partition& lambda, int k) {
  require_rows(lambda, k);
  SparsePolyK out;
  const int rows = lambda.length();
  if (rows == 0) return SparsePolyK(1);
  // Fill cells row by row, left to right: weakly increasing along rows,
  // strictly increasing down columns.
  std::vector<std::vector<int>> tableau(static_cast<std::size_t>(rows));
  for (int i = 0; i < rows; ++i) tableau[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(lambda[i]), 0);
  Monomial weight(static_cast<std::size_t>(k), 0);

  std::function<void(int, int)> fill = [&](int row, int col) {
    if (row == rows) {
      out.add_term(weight, 1);
      return;
    }
    if (col == lambda[row]) {
      fill(row + 1, 0);
      return;
    }
    const auto r = static_cast<std::size_t>(row);
    const auto c = static_cast<std::size_t>(col);
    int lo = 1;
    if (col > 0) lo = std::max(lo, tableau[r][c - 1]);
    if (row > 0) lo = std::max(lo, tableau[r - 1][c] + 1);
    for (int v = lo; v <= k; ++v) {
      tableau[r][c] = v;
      ++weight[static_cast<std::size_t>(v - 1)];
      fill(row, col + 1);
      --weight[static_cast<std::size_t>(v - 1)];
    }
  };
  fill(0, 0);
  return out;
}

SparsePolyK to_polynomial(const SchurExpansion& f, int k) {
  SparsePolyK out;
  for (const auto& [lambda, coeff] : f) out += schur_to_monomials(lambda, k) * coeff;
  return out;
}

SparsePolyK power_sum_poly(int r, int k) {
  if (r < 1 || k < 1) throw InvalidArgument("power_sum_poly requires r, k >= 1");
  SparsePolyK out;
  for (int i = 0; i < k; ++i) {
    Monomial m(static_cast<std::size_t>(i + 1), 0);
    m.back() = r;
    out.add_term(m, 1);
  }
  return out;
}

SchurExpansion grassmannian_project(const SchurExpansion& f, int k, int n) {
  if (k <= 0 || n <= k) throw InvalidArgument("grassmannian_project requires 0 < k < n");
  SchurExpansion out;
  for (const auto& [lambda, coeff] : f) {
    if (fits_in_box(lambda, k, n)) out.add(lambda, coeff);
  }
  return out;
}

}  // namespace mnrule
