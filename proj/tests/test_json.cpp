#include "mnrule/error.hpp"
#include "mnrule/format.hpp"
#include "mnrule/json_codec.hpp"
#include "mnrule/schubert.hpp"

#include <gtest/gtest.h>

using namespace mnrule;

TEST(Json, Coefficients) {
  EXPECT_EQ(coeff_to_json(Integer(-3)), Json(-3));
  const Integer big("112186277816662845432");
  EXPECT_EQ(coeff_to_json(big), Json("112186277816662845432"));
  EXPECT_EQ(coeff_from_json(coeff_to_json(big)), big);
  EXPECT_EQ(coeff_from_json(Json(7)), 7);
  EXPECT_THROW(coeff_from_json(Json("x1")), InvalidArgument);
}

TEST(Json, RoundTrips) {
  const Partition p({3, 2, 1});
  EXPECT_EQ(to_json(p), Json::parse("[3,2,1]"));
  EXPECT_EQ(partition_from_json(to_json(p)), p);
  EXPECT_THROW(partition_from_json(Json::parse("[1,2]")), InvalidArgument);

  const auto w = Permutation::parse("34165278");
  EXPECT_EQ(to_json(w), Json::parse("[3,4,1,6,5,2]"));
  EXPECT_EQ(permutation_from_json(Json::parse("[3,4,1,6,5,2,7,8]")), w);

  const auto f = mn_classical(Partition({3, 2, 1}), 5, 4);
  EXPECT_EQ(schur_expansion_from_json(to_json(f)), f);
  EXPECT_EQ(to_json(mn_classical(Partition({1}), 2, 3)),
            Json::parse(R"([{"coeff":1,"partition":[3]},{"coeff":-1,"partition":[1,1,1]}])"));

  const auto g = mn_schubert(w, 4, 4);
  EXPECT_EQ(schubert_expansion_from_json(to_json(g)), g);

  GrContext ctx(4, 8);
  const auto h = quantum_mn(Partition({3, 2, 1}), 5, ctx);
  EXPECT_EQ(quantum_class_from_json(to_json(h), ctx), h);
  EXPECT_EQ(to_json(h)[2], Json::parse(R"({"coeff":1,"q":1,"partition":[3]})"));

  const auto hooks = add_rim_hooks(p, 5, 4);
  EXPECT_EQ(rim_hook_from_json(to_json(hooks[0])).outer, hooks[0].outer);
}

TEST(Format, Text) {
  EXPECT_EQ(format(mn_classical(Partition({1}), 2, 3)), "s[3] - s[1,1,1]");
  EXPECT_EQ(format(SchurExpansion()), "0");
  EXPECT_EQ(format(quantum_mn(Partition({3, 2, 1}), 5, GrContext(4, 8))),
            "σ[4,4,3] + σ[3,3,3,2] + q σ[3] + q σ[1,1,1]");
  EXPECT_EQ(format(mn_schubert(Permutation(), 1, 1)), "S[21]");
  EXPECT_EQ(parse_partition("3,2,1"), Partition({3, 2, 1}));
  EXPECT_EQ(parse_partition(""), Partition());
  EXPECT_THROW(parse_partition("2,3"), InvalidArgument);
  EXPECT_THROW(parse_partition("2,,1"), InvalidArgument);
}
