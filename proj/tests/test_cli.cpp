#include <cmath>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <json.hpp>

#include "cyl/cli.hpp"
#include "cyl/errors.hpp"
#include "cyl/serialize.hpp"
#include "cyl/theorems.hpp"
#include "cyl/wronskian.hpp"
#include "cyl/zeros.hpp"

namespace {

using namespace cyl;
constexpr double kPi = std::numbers::pi;

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation call(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, ZerosJson) {
  const Invocation r = call({"zeros", "--nu", "0", "--n", "3", "--format", "json"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j.size(), 3u);
  EXPECT_NEAR(j[0].get<double>(), 2.404825557695773, 1e-12);
  EXPECT_NEAR(j[2].get<double>(), 8.653727912911013, 1e-12);
}

TEST(Cli, ZerosCsvHasOneLinePerZero) {
  const Invocation r = call({"zeros", "--nu", "0.5", "--n", "4", "--format", "csv"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  std::istringstream in(r.out);
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) lines.push_back(line);
  ASSERT_GE(lines.size(), 4u);
}

TEST(Cli, Theorem3SummaryOnStderr) {
  const Invocation r = call({"verify", "theorem3", "--nu", "1", "--mu", "3", "--family", "cylinder",
                      "--delta", "pi/4", "--n", "20"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_NE(r.err.find("interlaced; predicate true; agree"), std::string::npos) << r.err;
}

TEST(Cli, NegativeOrderIsAUsageError) {
  const Invocation r = call({"zeros", "--nu", "-2", "--n", "3"});
  EXPECT_EQ(r.code, cli::kUsage);
  EXPECT_TRUE(r.out.empty());
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, UnknownSubcommandIsAUsageError) {
  EXPECT_EQ(call({"frobnicate"}).code, cli::kUsage);
  EXPECT_EQ(call({}).code, cli::kUsage);
}

TEST(Cli, PremiseFailureExitsThree) {
  const Invocation r = call({"verify", "transitivity", "--nu", "1", "--kind", "derivative", "--lo", "1",
                      "--hi", "60"});
  EXPECT_EQ(r.code, cli::kVerifyFailed);
  const VerificationReport rep = report_from_json(nlohmann::ordered_json::parse(r.out));
  EXPECT_FALSE(rep.passed);
  EXPECT_EQ((*rep.counterexample)["failure"], "premise");
}

TEST(Cli, SweepCsvHeader) {
  const Invocation r = call({"sweep", "--family", "cylinder", "--nu", "1", "--gaps", "0", "1", "3",
                      "--n", "20", "--format", "csv"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  std::istringstream in(r.out);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, kSweepHeader);
  std::string row;
  std::getline(in, row);
  EXPECT_NE(row.find("excluded"), std::string::npos) << row;
}

TEST(Cli, VerifyAllIsDeterministic) {
  const Invocation a = call({"verify", "all", "--threads", "1"});
  const Invocation b = call({"verify", "all", "--threads", "4"});
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(nlohmann::json::parse(a.out).size(), 7u);
}

TEST(ParseAngle, Forms) {
  EXPECT_DOUBLE_EQ(cli::parse_angle("0.5"), 0.5);
  EXPECT_DOUBLE_EQ(cli::parse_angle("pi"), kPi);
  EXPECT_DOUBLE_EQ(cli::parse_angle("pi/4"), kPi / 4);
  EXPECT_DOUBLE_EQ(cli::parse_angle("-3pi/4"), -3 * kPi / 4);
  EXPECT_DOUBLE_EQ(cli::parse_angle("2*pi/3"), 2 * kPi / 3);
  EXPECT_ANY_THROW(cli::parse_angle("banana"));
}

TEST(RoundTrip, Report) {
  const VerificationReport r =
      verify_theorem1(Order{1.0}, 2.0, 1.0, 1.0, 5);
  EXPECT_EQ(report_from_json(to_json(r)), r);
}

TEST(RoundTrip, ZerosAndInterlace) {
  const CylinderSpec s{Order{1.5}, MixingAngle{0.3}};
  const ZeroSequence z = find_zeros(s, EvalKind::Function, 6);
  const ZeroSequence back = zeros_from_json(to_json(z));
  EXPECT_EQ(back, z);
  const ZeroSequence w = find_zeros({Order{4.0}, MixingAngle{0.3}}, EvalKind::Function, 6);
  const InterlaceReport rep = check_interlaced(z, w);
  EXPECT_EQ(interlace_from_json(to_json(rep)), rep);
}

TEST(RoundTrip, ProfileAndMap) {
  const WronskianProfile p = wronskian_profile({Order{1.0}, MixingAngle{0.0}},
                                               {Order{2.0}, MixingAngle{0.0}}, 10,
                                               EvalKind::Function);
  EXPECT_EQ(profile_from_json(to_json(p)), p);
  const std::vector<double> gaps = {0.0, 1.0, 2.5};
  const BreakdownMap m = breakdown_scan(Family::jvsy(), Order{3.0}, gaps, 15, 1);
  EXPECT_EQ(map_from_json(to_json(m)), m);
}

}  // namespace
