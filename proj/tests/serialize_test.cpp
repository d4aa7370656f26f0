#include <gtest/gtest.h>

#include "rigged/error.hpp"
#include "rigged/serialize.hpp"

namespace {

using rigged::Configuration;
using rigged::QPolynomial;
using rigged::RiggedPartition;

TEST(ConfigurationText, RoundTrip) {
  const Configuration a(-2, {1, 0, 2});
  EXPECT_EQ(rigged::to_text(a), "-2:1,0,2");
  EXPECT_EQ(rigged::parse_configuration("-2:1,0,2"), a);
  EXPECT_EQ(rigged::parse_configuration(" 3,0,0,1 "), Configuration(0, {3, 0, 0, 1}));
  EXPECT_EQ(rigged::parse_configuration("0,0,1"), Configuration(2, {1}));
  EXPECT_EQ(rigged::to_text(Configuration()), "0:");
  EXPECT_EQ(rigged::parse_configuration("0:"), Configuration());
  EXPECT_EQ(rigged::parse_configuration(""), Configuration());
}

TEST(ConfigurationText, Rejects) {
  EXPECT_THROW(rigged::parse_configuration("1,x"), rigged::InputError);
  EXPECT_THROW(rigged::parse_configuration("1,-1"), rigged::InputError);
  EXPECT_THROW(rigged::parse_configuration("a:1"), rigged::InputError);
  EXPECT_THROW(rigged::parse_configuration("1,,2"), rigged::InputError);
}

TEST(ConfigurationJson, RoundTrip) {
  EXPECT_EQ(rigged::to_json(Configuration()), nlohmann::json::parse(R"({"offset":0,"counts":[]})"));
  const Configuration a(5, {2, 1});
  EXPECT_EQ(rigged::to_json(a), nlohmann::json::parse(R"({"offset":5,"counts":[2,1]})"));
  EXPECT_EQ(rigged::configuration_from_json(rigged::to_json(a)), a);
  EXPECT_EQ(rigged::configuration_from_json(nlohmann::json::parse(R"({"counts":[1]})")), Configuration(0, {1}));
  EXPECT_THROW(rigged::configuration_from_json(nlohmann::json::parse(R"({"offset":1})")), rigged::InputError);
  EXPECT_THROW(rigged::configuration_from_json(nlohmann::json::parse(R"({"counts":["a"]})")), rigged::InputError);
}

TEST(RiggedPartitionText, RoundTrip) {
  const RiggedPartition rp({{3, 1}, {1, 0}});
  EXPECT_EQ(rigged::to_text(rp), "((3,1),(1,0))");
  EXPECT_EQ(rigged::parse_rigged_partition("((3, 1), (1, 0))"), rp);
  EXPECT_EQ(rigged::to_text(RiggedPartition()), "((),())");
  EXPECT_EQ(rigged::parse_rigged_partition("((),())"), RiggedPartition());
  EXPECT_EQ(rigged::parse_rigged_partition(rigged::to_json(rp).dump()), rp);
  EXPECT_EQ(rigged::parse_rigged_partition("((2),(-3))"), RiggedPartition({{2, -3}}));
}

TEST(RiggedPartitionText, Rejects) {
  EXPECT_THROW(rigged::parse_rigged_partition("((3,1),(0))"), rigged::InputError);
  EXPECT_THROW(rigged::parse_rigged_partition("(3,1)"), rigged::InputError);
  EXPECT_THROW(rigged::parse_rigged_partition("((a),(0))"), rigged::InputError);
  EXPECT_THROW(rigged::parse_rigged_partition("{\"parts\":"), rigged::InputError);
  EXPECT_THROW(rigged::parse_rigged_partition(R"({"parts":[{"weight":1}]})"), rigged::InputError);
}

TEST(RiggedPartitionJson, Shape) {
  const RiggedPartition rp({{2, 6}, {1, 2}});
  EXPECT_EQ(rigged::to_json(rp),
            nlohmann::json::parse(R"({"parts":[{"weight":2,"rigging":6},{"weight":1,"rigging":2}]})"));
  EXPECT_EQ(rigged::rigged_partition_from_json(rigged::to_json(rp)), rp);
  EXPECT_EQ(rigged::to_json(RiggedPartition()), nlohmann::json::parse(R"({"parts":[]})"));
}

TEST(PolynomialJson, RoundTrip) {
  QPolynomial p;
  p.add_term(0, 2);
  p.add_term(3, -1);
  p.add_term(40, mpz_class("123456789012345678901234567890"));
  const auto j = rigged::to_json(p);
  EXPECT_EQ(j.at("coeffs").at("40"), "123456789012345678901234567890");
  EXPECT_TRUE(j.at("order").is_null());
  EXPECT_EQ(rigged::qpolynomial_from_json(j), p);

  const QPolynomial series = p.truncated(5);
  const auto js = rigged::to_json(series);
  EXPECT_EQ(js.at("order"), 5);
  EXPECT_FALSE(js.at("coeffs").contains("40"));
  EXPECT_EQ(rigged::qpolynomial_from_json(js), series);
  EXPECT_THROW(rigged::qpolynomial_from_json(nlohmann::json::parse(R"({"coeffs":{"1":"x"}})")), rigged::InputError);
}

}  // namespace
