#include "mnrule/quantum.hpp"

#include "mnrule/error.hpp"

#include <algorithm>
#include <set>

namespace mnrule {

GrContext::GrContext(int k, int n) : k_(k), n_(n) {
  if (k <= 0 || n <= k) throw InvalidArgument("Gr(k,n) requires 0 < k < n");
}

void QuantumClass::add(int q_power, const Partition& lambda, const Integer& coeff) {
  if (q_power < 0) throw InvalidArgument("negative power of q");
  if (!ctx_.contains(lambda)) {
    throw InvalidArgument("partition " + lambda.to_string() + " does not fit in the box of Gr(" +
                          std::to_string(ctx_.k()) + "," + std::to_string(ctx_.n()) + ")");
  }
  terms_.add({q_power, lambda}, coeff);
}

Integer QuantumClass::coefficient(int q_power, const Partition& lambda) const {
  return terms_.coefficient({q_power, lambda});
}

QuantumClass& QuantumClass::operator+=(const QuantumClass& o) {
  if (o.ctx_.k() != ctx_.k() || o.ctx_.n() != ctx_.n()) throw InvalidArgument("mixing Grassmannians");
  terms_ += o.terms_;
  return *this;
}

QuantumClass QuantumClass::shifted(int shift, const Integer& sign) const {
  QuantumClass out(ctx_);
  for (const auto& [basis, coeff] : terms_) out.add(basis.q_power + shift, basis.partition, coeff * sign);
  return out;
}

SchurExpansion QuantumClass::classical_part() const {
  SchurExpansion out;
  for (const auto& [basis, coeff] : terms_) {
    if (basis.q_power == 0) out.add(basis.partition, coeff);
  }
  return out;
}

namespace {

int sign_of(int exponent) { return exponent % 2 == 0 ? 1 : -1; }

void require_in_box(const Partition& lambda, const GrContext& ctx) {
  if (!ctx.contains(lambda)) {
    throw InvalidArgument("partition " + lambda.to_string() + " does not fit in the " + std::to_string(ctx.k()) +
                          " x " + std::to_string(ctx.n() - ctx.k()) + " box");
  }
}

void require_r(int r, const GrContext& ctx) {
  if (r < 1 || r >= ctx.n()) throw InvalidArgument("quantum rule requires 1 <= r < n");
}

}  // namespace

QuantumClass psi_reduce(const Partition& lambda, const GrContext& ctx) {
  if (lambda.length() > ctx.k()) throw InvalidArgument("psi_reduce: partition has more than k rows");
  QuantumClass out(ctx);
  const auto core = n_core(lambda, ctx.n());
  if (ctx.contains(core.core)) {
    // (-1)^(k s - sum het) has the parity of k s + sum het.
    out.add(core.hooks_removed, core.core, sign_of(ctx.k() * core.hooks_removed + core.height_sum));
  }
  return out;
}

QuantumClass psi_reduce(const SchurExpansion& f, const GrContext& ctx) {
  QuantumClass out(ctx);
  for (const auto& [lambda, coeff] : f) out += psi_reduce(lambda, ctx).shifted(0, coeff);
  return out;
}

QuantumClass quantum_mn(const Partition& lambda, int r, const GrContext& ctx) {
  require_in_box(lambda, ctx);
  require_r(r, ctx);
  QuantumClass out(ctx);
  for (const auto& hook : add_rim_hooks(lambda, r, ctx.k())) {
    if (ctx.contains(hook.outer)) out.add(0, hook.outer, sign_of(hook.height + 1));
  }
  // -(-1)^k q (-1)^(het+1) = (-1)^(k + het) q
  for (const auto& hook : remove_rim_hooks(lambda, ctx.n() - r)) {
    out.add(1, hook.inner, sign_of(ctx.k() + hook.height));
  }
  return out;
}

QuantumClass quantum_mn_extended(const Partition& lambda, int r, const GrContext& ctx) {
  require_in_box(lambda, ctx);
  if (r < 1) throw InvalidArgument("power sum degree must be positive");
  if (r % ctx.n() == 0) {
    throw UnsupportedArgument("p_r with n dividing r reduces to p_0, whose image is not defined");
  }
  if (r < ctx.n()) return quantum_mn(lambda, r, ctx);
  return quantum_mn_extended(lambda, r - ctx.n(), ctx).shifted(1, sign_of(ctx.k() + 1));
}

QuantumClass oracle_quantum_mn(const Partition& lambda, int r, const GrContext& ctx) {
  require_in_box(lambda, ctx);
  require_r(r, ctx);
  return psi_reduce(mn_classical(lambda, r, ctx.k()), ctx);
}

bool CheckReport::all_pass() const {
  return std::all_of(lines.begin(), lines.end(), [](const CheckLine& l) { return l.pass; });
}

std::vector<Partition> goodman_wenzl_generators(const GrContext& ctx, int count) {
  const int k = ctx.k();
  const int spread = ctx.n() - k + 1;
  std::vector<Partition> out;
  // lambda_1 = lambda_k + spread, middle rows anywhere in between.
  for (int total = spread; static_cast<int>(out.size()) < count; ++total) {
    for (const auto& p : partitions_of(total, k, total)) {
      if (p[0] - p[k - 1] == spread) out.push_back(p);
      if (static_cast<int>(out.size()) == count) break;
    }
  }
  return out;
}

CheckReport ideal_vanishing_check(const GrContext& ctx, int samples) {
  CheckReport report;
  const int k = ctx.k();
  const int n = ctx.n();
  for (int j = n - k + 1; j <= n - 1; ++j) {
    const auto image = psi_reduce(Partition({j}), ctx);
    report.lines.push_back({"psi(h_" + std::to_string(j) + ") = 0", image.empty(),
                            image.empty() ? "" : "nonzero image"});
  }
  {
    QuantumClass expected(ctx);
    expected.add(1, Partition(), sign_of(k + 1));
    const auto image = psi_reduce(Partition({n}), ctx);
    report.lines.push_back({"psi(h_" + std::to_string(n) + ") = (-1)^(k+1) q", image == expected, ""});
  }
  int bad = 0;
  std::string first_bad;
  const auto gens = goodman_wenzl_generators(ctx, samples);
  for (const auto& lambda : gens) {
    if (!psi_reduce(lambda, ctx).empty()) {
      if (bad++ == 0) first_bad = lambda.to_string();
    }
  }
  report.lines.push_back({"psi(s_lambda) = 0 for " + std::to_string(gens.size()) +
                              " lambda with lambda_1 - lambda_k = n-k+1",
                          bad == 0, bad == 0 ? "" : "first failure " + first_bad});
  return report;
}

CheckReport quantum_term_claims(const Partition& lambda, int r, const GrContext& ctx) {
  require_in_box(lambda, ctx);
  require_r(r, ctx);
  CheckReport report;
  const int n = ctx.n();
  bool concatenation = true;
  bool removal = true;
  bool additivity = true;
  bool signs = true;
  std::set<Partition> reached;
  int checked = 0;
  for (const auto& add : add_rim_hooks(lambda, r, ctx.k())) {
    if (ctx.contains(add.outer)) continue;
    const auto core = n_core(add.outer, n);
    if (!ctx.contains(core.core)) continue;
    ++checked;
    const Partition& nu = core.core;
    const auto whole = rim_hook_height(nu, add.outer);
    const auto lower = rim_hook_height(nu, lambda);
    if (!whole || add.outer.size() - nu.size() != n) {
      concatenation = false;
      continue;
    }
    if (!leq(nu, lambda) || !lower || lambda.size() - nu.size() != n - r) {
      removal = false;
      continue;
    }
    if (*lower + add.height != *whole + 1) additivity = false;
    // psi((-1)^(het(mu/lambda)+1) s_mu) against -(-1)^k q (-1)^(het(lambda/nu)+1) sigma_nu.
    const int lhs = sign_of(add.height + 1) * sign_of(ctx.k() * core.hooks_removed + core.height_sum);
    const int rhs = -sign_of(ctx.k()) * sign_of(*lower + 1);
    if (lhs != rhs || core.hooks_removed != 1) signs = false;
    reached.insert(nu);
  }
  bool surjective = true;
  for (const auto& hook : remove_rim_hooks(lambda, n - r)) {
    if (!reached.count(hook.inner)) surjective = false;
  }
  report.lines.push_back({"mu/nu is an n-rim hook", concatenation, std::to_string(checked) + " quantum terms"});
  report.lines.push_back({"nu <= lambda with lambda/nu an (n-r)-rim hook", removal, ""});
  report.lines.push_back({"het(lambda/nu) + het(mu/lambda) = het(mu/nu) + 1", additivity, ""});
  report.lines.push_back({"term signs agree after reduction", signs, ""});
  report.lines.push_back({"every (n-r)-rim hook removal arises", surjective, ""});
  return report;
}

}  // namespace mnrule
