#include <gtest/gtest.h>

#include "uvball/verify.hpp"

namespace {

void expect_all_pass(const uvball::verify::SuiteReport& report) {
  ASSERT_FALSE(report.checks.empty());
  for (const auto& c : report.checks) EXPECT_TRUE(c.passed) << report.suite << ": " << c.name << " error " << c.error;
}

TEST(VerifySuite, Jacobi) { expect_all_pass(uvball::verify::jacobi_suite()); }
TEST(VerifySuite, Uvarov) { expect_all_pass(uvball::verify::uvarov_suite()); }
TEST(VerifySuite, Ball) { expect_all_pass(uvball::verify::ball_suite()); }
TEST(VerifySuite, Asymptotics) { expect_all_pass(uvball::verify::asymptotics_suite()); }

TEST(VerifySuite, ToleranceOverrideApplies) {
  uvball::verify::Options opt;
  opt.tolerance = 1e-30;
  const auto report = uvball::verify::uvarov_suite(opt);
  EXPECT_FALSE(report.passed());
  for (const auto& c : report.checks) EXPECT_EQ(c.tolerance, 1e-30);
}

TEST(VerifySuite, UnknownSuiteRejected) {
  EXPECT_THROW(uvball::verify::run_suites("bogus"), uvball::parameter_error);
  EXPECT_EQ(uvball::verify::run_suites("jacobi").size(), 1u);
}

}  // namespace
