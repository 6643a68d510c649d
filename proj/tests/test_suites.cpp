#include <gtest/gtest.h>

#include "dhga/dhga.hpp"

using namespace dhga;

namespace {

SuiteConfig cfg(std::string suite, int n, std::optional<SpinorKind> kind, int trials = 3) {
  SuiteConfig c;
  c.suite = std::move(suite);
  c.n = n;
  c.kind = kind;
  c.trials = trials;
  return c;
}

}  // namespace

TEST(Suites, EverySuiteRunsAtN3) {
  for (const auto& name : suite_names()) {
    if (name == "tensor-invariance") continue;
    auto kind = suite_needs_kind(name) ? std::optional(SpinorKind::Spinor) : std::nullopt;
    auto r = run_suite(cfg(name, 3, kind));
    EXPECT_TRUE(r.passed()) << name << " " << r.to_json().dump();
  }
}

TEST(Suites, ReportsAreDeterministic) {
  auto a = run_suite(cfg("spinor-invariance", 5, SpinorKind::Spinor, 2)).to_json();
  auto b = run_suite(cfg("spinor-invariance", 5, SpinorKind::Spinor, 2)).to_json();
  EXPECT_EQ(a.dump(), b.dump());
}

TEST(Suites, TensorSuiteMarksViolatingBoostNotApplicable) {
  auto r = run_suite(cfg("tensor-invariance", 3, SpinorKind::Spinor, 2));
  EXPECT_EQ(r.count(CheckStatus::NotApplicable), 1u);
  EXPECT_TRUE(r.passed());
}

TEST(Suites, ConfigurationErrors) {
  EXPECT_THROW(validate_config(cfg("nope", 3, SpinorKind::Spinor)), Error);
  EXPECT_THROW(validate_config(cfg("sum2", 3, std::nullopt)), Error);
  EXPECT_THROW(validate_config(cfg("sum2", 4, SpinorKind::Spinor)), Error);
  EXPECT_THROW(validate_config(cfg("sum2", 5, SpinorKind::Spinor), 4), Error);
  auto f = cfg("sum2", 3, SpinorKind::Spinor);
  f.backend = Backend::Float;
  EXPECT_THROW(validate_config(f), Error);
  auto dc = cfg("double-cover", 3, std::nullopt);
  dc.backend = Backend::Float;
  EXPECT_NO_THROW(validate_config(dc));
}

TEST(Suites, JsonReportShape) {
  auto j = run_suite(cfg("sum2", 4, SpinorKind::DoubleSpinor, 2)).to_json();
  for (const char* key : {"suite", "n", "kind", "trials", "seed", "backend", "status", "passed", "failed",
                          "not_applicable", "witnesses"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j.at("kind"), "doublespinor");
}
