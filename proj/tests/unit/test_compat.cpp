// Copyright 2026 The mhqmo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <memory>
#include <numbers>

#include "mhqmo/compat.hpp"
#include "mhqmo/error.hpp"
#include "mhqmo/scenarios.hpp"
#include "support/oracles.hpp"

using namespace mhqmo;
using namespace mhqmo::testing;

namespace {

FamilyBuilder builder_for(ScenarioKind kind) {
  auto b = std::make_shared<ScenarioBuild>(build_scenario(kind));
  return [b](double eta) { return scenario_family(*b, eta); };
}

const double kQutritRoot = std::sqrt(std::numbers::sqrt2 - 1);

// 1x1 family whose only element is diag(f(eta)); its complement keeps the sum at I.
FamilyBuilder scalar_family(double (*f)(double)) {
  return [f](double eta) {
    QmoFamily fam;
    fam.eta = eta;
    fam.space_dim = 1;
    fam.elements.push_back({{1.0}, CMatrix{{f(eta)}}});
    fam.elements.push_back({{-1.0}, CMatrix{{1.0 - f(eta)}}});
    return fam;
  };
}

}  // namespace

TEST(MinEigCurveTest, Endpoints) {
  const double grid[] = {0.0, 1.0};
  const auto qubit = min_eig_curve(builder_for(ScenarioKind::Qubit), grid);
  EXPECT_NEAR(qubit[0].min_eig, 0.25, 1e-14);
  EXPECT_NEAR(qubit[1].min_eig, (1 - std::numbers::sqrt2) / 4, 1e-14);
  EXPECT_NEAR(qubit[1].min_eig, -0.10355, 1e-5);
  const auto qutrit = min_eig_curve(builder_for(ScenarioKind::Qutrit), grid);
  EXPECT_NEAR(qutrit[1].min_eig, -0.125, 1e-12);
  EXPECT_NEAR(qutrit[0].min_eig, 1.0 / 16.0, 1e-14);
}

TEST(MinEigCurveTest, GridValidation) {
  EXPECT_EQ(uniform_grid(0, 1, 101).size(), 101u);
  EXPECT_EQ(uniform_grid(0, 1, 101)[100], 1.0);
  EXPECT_THROW(uniform_grid(0.5, 0.5, 2), Error);
  EXPECT_THROW(uniform_grid(0, 1, 1), Error);
  EXPECT_THROW(uniform_grid(0.6, 0.5, 3), Error);
  const auto b = builder_for(ScenarioKind::Qubit);
  const double unsorted[] = {0.5, 0.2};
  const double outside[] = {0.5, 1.2};
  EXPECT_THROW(min_eig_curve(b, std::span<const double>{}), Error);
  EXPECT_THROW(min_eig_curve(b, unsorted), Error);
  EXPECT_THROW(min_eig_curve(b, outside), Error);
}

TEST(MinEigCurveTest, Lipschitz) {
  const auto grid = uniform_grid(0, 1, 101);
  for (auto kind : {ScenarioKind::Qubit, ScenarioKind::Qutrit, ScenarioKind::TwoQubit}) {
    const auto curve = min_eig_curve(builder_for(kind), grid);
    for (std::size_t i = 1; i < curve.size(); ++i)
      EXPECT_LE(std::abs(curve[i].min_eig - curve[i - 1].min_eig), 10 * 0.01);
  }
}

TEST(ThresholdTest, PaperScenarios) {
  const auto q = threshold(builder_for(ScenarioKind::Qubit));
  ASSERT_TRUE(q.has_value());
  EXPECT_NEAR(*q, 1 / std::numbers::sqrt2, 1e-9);
  const auto t = threshold(builder_for(ScenarioKind::Qutrit));
  ASSERT_TRUE(t.has_value());
  EXPECT_NEAR(*t, kQutritRoot, 1e-9);
  const auto two = threshold(builder_for(ScenarioKind::TwoQubit));
  ASSERT_TRUE(two.has_value());
  EXPECT_NEAR(*two, *t, 1e-9);
}

TEST(ThresholdTest, ReportInvariants) {
  for (auto kind : {ScenarioKind::Qubit, ScenarioKind::Qutrit, ScenarioKind::TwoQubit}) {
    const auto b = builder_for(kind);
    const double t = *threshold(b);
    EXPECT_LE(std::abs(family_min_eigenvalue(b(t))), 1e-8);
    EXPECT_GT(family_min_eigenvalue(b(t - 1e-6)), -1e-10);
  }
}

TEST(ThresholdTest, BracketIndependent) {
  for (auto kind : {ScenarioKind::Qubit, ScenarioKind::Qutrit, ScenarioKind::TwoQubit}) {
    const auto b = builder_for(kind);
    ThresholdOptions half;
    half.lo = 0.5;
    EXPECT_NEAR(*threshold(b), *threshold(b, half), 1e-9);
  }
}

TEST(ThresholdTest, NoneInRange) {
  const auto always = scalar_family([](double eta) { return 0.5 - 0.1 * eta; });
  EXPECT_FALSE(threshold(always).has_value());
  const auto b = builder_for(ScenarioKind::Qubit);
  ThresholdOptions low;
  low.hi = 0.6;
  EXPECT_FALSE(threshold(b, low).has_value());
}

TEST(ThresholdTest, SyntheticRoot) {
  const auto f = scalar_family([](double eta) { return 0.3 - eta; });
  EXPECT_NEAR(*threshold(f), 0.3, 1e-10);
}

TEST(ThresholdTest, Errors) {
  const auto negative = scalar_family([](double eta) { return -0.1 + 0.0 * eta; });
  try {
    threshold(negative);
    FAIL() << "expected NotPositiveAtZero";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotPositiveAtZero);
  }
  // Dips below zero on (0.3, 0.5) and recovers.
  const auto dip = scalar_family([](double eta) { return std::abs(eta - 0.4) - 0.1; });
  try {
    threshold(dip);
    FAIL() << "expected SignChangeViolation";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SignChangeViolation);
  }
}

TEST(VerdictTest, Examples) {
  const auto b = builder_for(ScenarioKind::Qubit);
  EXPECT_EQ(verdict(b(0.5)), Verdict::CompatibleBySufficientCondition);
  EXPECT_EQ(verdict(b(0.8)), Verdict::NotCertified);
  EXPECT_EQ(to_string(Verdict::NotCertified), "not-certified");
  EXPECT_EQ(to_string(Verdict::CompatibleBySufficientCondition),
            "compatible-by-sufficient-condition");
  for (auto kind : {ScenarioKind::Qubit, ScenarioKind::Qutrit, ScenarioKind::TwoQubit})
    EXPECT_EQ(verdict(builder_for(kind)(0.0)), Verdict::CompatibleBySufficientCondition);
}

TEST(VerdictTest, MonotoneOnGrid) {
  for (auto kind : {ScenarioKind::Qubit, ScenarioKind::Qutrit, ScenarioKind::TwoQubit}) {
    const auto b = builder_for(kind);
    bool failed = false;
    for (double eta : uniform_grid(0, 1, 101)) {
      const bool ok = verdict(b(eta)) == Verdict::CompatibleBySufficientCondition;
      if (failed) EXPECT_FALSE(ok) << eta;
      if (!ok) failed = true;
    }
    EXPECT_TRUE(failed);
  }
}

TEST(AnalyzeTest, Report) {
  const auto grid = uniform_grid(0, 1, 11);
  const auto r = analyze("qubit", builder_for(ScenarioKind::Qubit), grid);
  EXPECT_EQ(r.scenario, "qubit");
  EXPECT_EQ(r.grid.size(), 11u);
  ASSERT_TRUE(r.threshold.has_value());
  EXPECT_NEAR(*r.threshold, 1 / std::numbers::sqrt2, 1e-9);
  for (const auto& p : r.grid)
    EXPECT_NEAR(p.min_eig, (1 - p.eta * std::numbers::sqrt2) / 4, 1e-12);
}
