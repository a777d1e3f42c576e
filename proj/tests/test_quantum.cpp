#include "mnrule/error.hpp"
#include "mnrule/quantum.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace mnrule;

namespace {

QuantumClass qc(const GrContext& ctx, std::initializer_list<std::tuple<int, int, std::vector<int>>> terms) {
  QuantumClass f(ctx);
  for (const auto& [c, d, parts] : terms) f.add(d, Partition(parts), c);
  return f;
}

const std::vector<std::pair<int, int>> kSweepContexts = {{2, 4}, {2, 5}, {3, 6}, {4, 8}};

}  // namespace

TEST(GrContext, Validation) {
  EXPECT_THROW(GrContext(0, 3), InvalidArgument);
  EXPECT_THROW(GrContext(3, 3), InvalidArgument);
  GrContext ctx(2, 5);
  EXPECT_EQ(ctx.box(), Partition({3, 3}));
  EXPECT_TRUE(ctx.contains(Partition({3, 1})));
  EXPECT_FALSE(ctx.contains(Partition({4})));
  EXPECT_FALSE(ctx.contains(Partition({1, 1, 1})));
}

TEST(QuantumClass, Arithmetic) {
  GrContext ctx(2, 4);
  QuantumClass f(ctx);
  EXPECT_THROW(f.add(0, Partition({3}), 1), InvalidArgument);
  EXPECT_THROW(f.add(-1, Partition({1}), 1), InvalidArgument);
  f.add(0, Partition({1}), 2);
  f.add(1, Partition(), -1);
  EXPECT_EQ(f.coefficient(0, Partition({1})), 2);
  auto g = f.shifted(2, -1);
  EXPECT_EQ(g.coefficient(2, Partition({1})), -2);
  EXPECT_EQ(g.coefficient(3, Partition()), 1);
  EXPECT_TRUE(g.classical_part().empty());
  f += f.shifted(0, -1);
  EXPECT_TRUE(f.empty());
}

TEST(Psi, Examples) {
  GrContext ctx(4, 8);
  EXPECT_EQ(psi_reduce(Partition({12, 10, 7, 3}), ctx), qc(ctx, {{1, 3, {4, 2, 2}}}));
  EXPECT_TRUE(psi_reduce(Partition({9, 8, 5, 2}), ctx).empty());
  for (const auto& lambda : partitions_in_box(4, 4)) EXPECT_EQ(psi_reduce(lambda, ctx), qc(ctx, {{1, 0, lambda.parts()}}));
  EXPECT_THROW(psi_reduce(Partition({1, 1, 1, 1, 1}), ctx), InvalidArgument);
}

TEST(Psi, IdealGenerators) {
  GrContext ctx(4, 8);
  for (int j = 5; j <= 7; ++j) EXPECT_TRUE(psi_reduce(Partition({j}), ctx).empty());
  EXPECT_EQ(psi_reduce(Partition({8}), ctx), qc(ctx, {{-1, 1, {}}}));
  EXPECT_TRUE(psi_reduce(Partition({3}), GrContext(2, 4)).empty());
  for (const auto& [k, n] : kSweepContexts) {
    const auto report = ideal_vanishing_check(GrContext(k, n));
    EXPECT_TRUE(report.all_pass());
    EXPECT_FALSE(report.lines.empty());
  }
  for (const auto& lambda : goodman_wenzl_generators(ctx, 10)) {
    EXPECT_EQ(lambda[0] - lambda[3], 5);
    EXPECT_TRUE(psi_reduce(lambda, ctx).empty());
  }
}

TEST(QuantumMn, Examples) {
  GrContext ctx(4, 8);
  const auto expected = qc(ctx, {{1, 0, {3, 3, 3, 2}}, {1, 0, {4, 4, 3}}, {1, 1, {3}}, {1, 1, {1, 1, 1}}});
  EXPECT_EQ(quantum_mn(Partition({3, 2, 1}), 5, ctx), expected);
  EXPECT_EQ(oracle_quantum_mn(Partition({3, 2, 1}), 5, ctx), expected);
  EXPECT_EQ(quantum_mn(ctx.box(), 1, ctx), qc(ctx, {{1, 1, {3, 3, 3}}}));
  EXPECT_EQ(quantum_mn(Partition({1}), 2, ctx), qc(ctx, {{1, 0, {3}}, {-1, 0, {1, 1, 1}}}));
  for (const auto& [k, n] : kSweepContexts) {
    EXPECT_EQ(quantum_mn(Partition(), 1, GrContext(k, n)), qc(GrContext(k, n), {{1, 0, {1}}}));
  }
}

TEST(QuantumMn, Validation) {
  GrContext ctx(2, 4);
  EXPECT_THROW(quantum_mn(Partition({3}), 1, ctx), InvalidArgument);
  EXPECT_THROW(quantum_mn(Partition({1}), 4, ctx), InvalidArgument);
  EXPECT_THROW(quantum_mn(Partition({1}), 0, ctx), InvalidArgument);
}

TEST(QuantumMn, ExhaustiveOracleSweep) {
  for (const auto& [k, n] : kSweepContexts) {
    GrContext ctx(k, n);
    for (const auto& lambda : partitions_in_box(k, n - k)) {
      for (int r = 1; r < n; ++r) {
        const auto f = quantum_mn(lambda, r, ctx);
        EXPECT_EQ(f, oracle_quantum_mn(lambda, r, ctx)) << lambda.to_string() << " r=" << r;
        for (const auto& [basis, c] : f.terms()) {
          EXPECT_TRUE(c == 1 || c == -1);
          EXPECT_EQ(basis.partition.size() + n * basis.q_power, lambda.size() + r);
        }
        EXPECT_EQ(f.classical_part(), grassmannian_project(mn_classical(lambda, r, k), k, n));
        EXPECT_TRUE(quantum_term_claims(lambda, r, ctx).all_pass()) << lambda.to_string() << " r=" << r;
      }
    }
  }
}

TEST(QuantumMnExtended, Delegation) {
  GrContext ctx(4, 8);
  for (int r = 1; r < 8; ++r) EXPECT_EQ(quantum_mn_extended(Partition({2, 1}), r, ctx), quantum_mn(Partition({2, 1}), r, ctx));
  EXPECT_THROW(quantum_mn_extended(Partition({1}), 8, ctx), UnsupportedArgument);
  EXPECT_THROW(quantum_mn_extended(Partition({1}), 16, ctx), UnsupportedArgument);
}

TEST(QuantumMnExtended, Example) {
  GrContext ctx(4, 8);
  EXPECT_EQ(quantum_mn_extended(Partition({1}), 10, ctx), qc(ctx, {{-1, 1, {3}}, {1, 1, {1, 1, 1}}}));
}

TEST(QuantumMnExtended, MatchesReductionOfClassicalRule) {
  for (const auto& [k, n] : std::vector<std::pair<int, int>>{{2, 4}, {2, 5}, {3, 5}, {3, 6}}) {
    GrContext ctx(k, n);
    for (const auto& lambda : partitions_in_box(k, n - k)) {
      for (int r = n + 1; r < 3 * n; ++r) {
        if (r % n == 0) continue;
        EXPECT_EQ(quantum_mn_extended(lambda, r, ctx), psi_reduce(mn_classical(lambda, r, k), ctx))
            << "k=" << k << " n=" << n << " " << lambda.to_string() << " r=" << r;
      }
    }
  }
}
