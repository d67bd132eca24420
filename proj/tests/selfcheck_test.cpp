#include <gtest/gtest.h>

#include "lexcone/selfcheck.hpp"

namespace lexcone {
namespace {

selfcheck::RunConfig small(std::uint64_t seed) {
  selfcheck::RunConfig cfg;
  cfg.seed = seed;
  cfg.trials = 20;
  return cfg;
}

TEST(Selfcheck, AllSuitesPassWithSmallBudget) {
  const auto report = selfcheck::run(small(7));
  ASSERT_EQ(report.suites.size(), 11u);
  for (std::size_t i = 0; i < report.suites.size(); ++i) {
    EXPECT_EQ(report.suites[i].criterion, static_cast<int>(i + 1));
    EXPECT_TRUE(report.suites[i].passed()) << report.suites[i].name << ": " << report.suites[i].first_failure;
  }
}

TEST(Selfcheck, Deterministic) {
  auto a = small(99), b = small(99);
  b.parallel = false;
  const auto ra = selfcheck::run(a), rb = selfcheck::run(b);
  ASSERT_EQ(ra.suites.size(), rb.suites.size());
  for (std::size_t i = 0; i < ra.suites.size(); ++i) {
    EXPECT_EQ(ra.suites[i].checks, rb.suites[i].checks);
    EXPECT_EQ(ra.suites[i].instances, rb.suites[i].instances);
  }
}

TEST(Selfcheck, SuiteSelection) {
  auto cfg = small(1);
  cfg.suite = "dual-cone";
  EXPECT_EQ(selfcheck::run(cfg).suites.size(), 1u);
  cfg.suite = "9";
  EXPECT_EQ(selfcheck::run(cfg).suites.at(0).criterion, 9);
  cfg.suite = "nope";
  EXPECT_THROW(selfcheck::run(cfg), ParseError);
}

}  // namespace
}  // namespace lexcone
