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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>

#include "cli/commands.hpp"
#include "mhqmo/charfn.hpp"
#include "mhqmo/compat.hpp"
#include "mhqmo/eigen.hpp"
#include "mhqmo/error.hpp"
#include "mhqmo/fuzzing.hpp"
#include "mhqmo/qmo.hpp"
#include "mhqmo/scenarios.hpp"
#include "mhqmo/state.hpp"

namespace mhqmo::cli {

namespace {

struct CheckOutcome {
  bool ok;
  std::string detail;
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

CheckOutcome within(double worst, double tol) {
  return {worst <= tol, "max error " + sci(worst) + ", tol " + sci(tol)};
}

const std::vector<ScenarioKind> kAll = {ScenarioKind::Qubit, ScenarioKind::Qutrit,
                                        ScenarioKind::TwoQubit};

// Largest distance from any closed-form value to the nearest numerical
// eigenvalue of the same element.
double containment_error(ScenarioKind kind, const QmoFamily& fam, double eta) {
  double worst = 0.0;
  for (const auto& e : fam.elements) {
    std::vector<double> expected;
    try {
      expected = closed_form_eigenvalues(kind, e.outcome, eta);
    } catch (const Error&) {
      continue;
    }
    const auto numeric = eigvals_hermitian(e.matrix);
    for (double c : expected) {
      double best = INFINITY;
      for (double v : numeric) best = std::min(best, std::abs(v - c));
      worst = std::max(worst, best);
    }
  }
  return worst;
}

}  // namespace

std::vector<CheckResult> run_verification(double slack) {
  std::vector<CheckResult> results;
  auto check = [&](std::string name, const std::function<CheckOutcome()>& body) {
    try {
      const CheckOutcome o = body();
      results.push_back({std::move(name), o.ok, o.detail});
    } catch (const std::exception& e) {
      results.push_back({std::move(name), false, std::string("threw: ") + e.what()});
    }
  };

  std::vector<ScenarioBuild> builds;
  for (auto k : kAll) builds.push_back(build_scenario(k));
  const auto grid = uniform_grid(0.0, 1.0, 101);

  check("normalization", [&] {
    double worst = 0.0;
    for (const auto& b : builds)
      for (double eta : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        const auto fam = scenario_family(b, eta);
        worst = std::max(worst, max_abs_diff(fam.element_sum(), CMatrix::identity(fam.space_dim)));
      }
    return within(worst, 1e-11);
  });

  check("hermiticity", [&] {
    double worst = 0.0;
    for (const auto& b : builds)
      for (double eta : {0.0, 0.5, 1.0})
        for (const auto& e : scenario_family(b, eta).elements)
          worst = std::max(worst, e.matrix.hermiticity_defect());
    return within(worst, 1e-12);
  });

  check("marginal-chain", [&] {
    const auto fam = scenario_family(builds[2], 0.6);
    const std::size_t direct_keep[] = {0, 1};
    const auto direct = marginalize(fam, direct_keep);
    double worst = 0.0;
    for (std::size_t dropped_first : {std::size_t{2}, std::size_t{3}}) {
      std::vector<std::size_t> keep3;
      for (std::size_t k = 0; k < 4; ++k)
        if (k != dropped_first) keep3.push_back(k);
      const auto step = marginalize(fam, keep3);
      const std::size_t keep2[] = {0, 1};
      const auto chained = marginalize(step, keep2);
      for (std::size_t i = 0; i < direct.elements.size(); ++i)
        worst = std::max(worst, max_abs_diff(direct.elements[i].matrix, chained.elements[i].matrix));
    }
    return within(worst, 1e-12);
  });

  check("charfn-vs-jordan", [&] {
    double worst = 0.0;
    for (const auto& b : builds) {
      const auto dft = qmo_from_charfn(b.scenario.observables, b.scenario.grouping);
      for (std::size_t i = 0; i < dft.elements.size(); ++i)
        worst = std::max(worst, max_abs_diff(dft.elements[i].matrix, b.family.elements[i].matrix));
    }
    return within(worst, 1e-10);
  });

  check("qubit-closed-form", [&] {
    double worst = 0.0;
    for (double eta : grid)
      for (const auto& e : scenario_family(builds[0], eta).elements) {
        const auto v = eigvals_hermitian(e.matrix);
        worst = std::max({worst, std::abs(v[0] - qubit_lambda_plus(eta)),
                          std::abs(v[1] - qubit_lambda_minus(eta))});
      }
    return within(worst, 1e-12);
  });

  check("qutrit-closed-form", [&] {
    double worst = 0.0;
    for (double eta : grid)
      worst = std::max(worst, containment_error(ScenarioKind::Qutrit,
                                                scenario_family(builds[1], eta), eta));
    return within(worst, 1e-10);
  });

  check("two-qubit-closed-form", [&] {
    double worst = 0.0;
    for (double eta : grid)
      worst = std::max(worst, containment_error(ScenarioKind::TwoQubit,
                                                scenario_family(builds[2], eta), eta));
    return within(worst, 1e-10);
  });

  check("cg-orthogonal", [&] {
    const CMatrix u = cg_transform().matrix;
    return within(max_abs_diff(u * u.adjoint(), CMatrix::identity(4)), 1e-15);
  });

  check("cg-embedding", [&] {
    const CMatrix u = cg_transform().matrix;
    double worst = 0.0;
    const CMatrix targets[] = {spin1_x(), spin1_z()};
    for (std::size_t k = 0; k < 2; ++k) {
      CMatrix direct_sum(4);
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) direct_sum(i, j) = targets[k](i, j);
      worst = std::max(worst, max_abs_diff(u * builds[1].scenario.observables[k].matrix * u.adjoint(),
                                           direct_sum));
    }
    return within(worst, 1e-15);
  });

  check("fuzzify-identity-at-one", [&] {
    bool same = true;
    for (const auto& b : builds) {
      const auto f = fuzzify(b.family, FuzzParameter(1.0));
      for (std::size_t i = 0; i < f.elements.size(); ++i)
        same = same && f.elements[i].matrix == b.family.elements[i].matrix;
    }
    return CheckOutcome{same, same ? "bit-identical" : "elements changed"};
  });

  check("qubit-marginal-povms", [&] {
    using namespace pauli_matrices;
    double worst = 0.0;
    for (double eta : {0.0, 0.3, 0.7071, 1.0}) {
      const auto fam = scenario_family(builds[0], eta);
      const auto ex = extract_marginal_povm(fam, 0, slack);
      const auto fz = extract_marginal_povm(fam, 1, slack);
      for (const auto& e : ex.elements)
        worst = std::max(worst, max_abs_diff(e.matrix, (I() + X() * (eta * e.outcome)) * 0.5));
      for (const auto& e : fz.elements)
        worst = std::max(worst, max_abs_diff(e.matrix, (I() + Z() * (eta * e.outcome)) * 0.5));
    }
    return within(worst, 1e-13);
  });

  check("qutrit-marginal-positivity", [&] {
    double lowest = INFINITY;
    bool separated = false;
    for (double eta : grid) {
      const auto fam = scenario_family(builds[1], eta);
      for (std::size_t idx : {std::size_t{0}, std::size_t{1}})
        for (const auto& e : extract_marginal_povm(fam, idx, slack).elements)
          lowest = std::min(lowest, min_eigenvalue(e.matrix));
      if (verdict(fam, slack) == Verdict::NotCertified) separated = true;
    }
    return CheckOutcome{lowest >= -slack && separated,
                    "lowest marginal eigenvalue " + sci(lowest) +
                        (separated ? ", joint family fails at high eta" : ", no separation")};
  });

  check("expectation-reproduction", [&] {
    std::mt19937_64 rng(20261015);
    const auto& b = builds[0];
    const CMatrix& x = b.scenario.observables[0].matrix;
    const CMatrix& z = b.scenario.observables[1].matrix;
    const CMatrix jordan = (x * z + z * x) * 0.5;
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
      const auto rho = random_density_matrix(rng, 2);
      const auto table = quasiprob(b.family, rho);
      double sxz = 0.0, sx = 0.0, sz = 0.0;
      for (const auto& e : table.entries) {
        sxz += e.p * e.outcome[0] * e.outcome[1];
        sx += e.p * e.outcome[0];
        sz += e.p * e.outcome[1];
      }
      worst = std::max({worst, std::abs(sxz - trace_of_product(rho.matrix(), jordan).real()),
                        std::abs(sx - trace_of_product(rho.matrix(), x).real()),
                        std::abs(sz - trace_of_product(rho.matrix(), z).real())});
    }
    return within(worst, 1e-10);
  });

  check("negativity-witness", [&] {
    const double r = 1.0 / std::numbers::sqrt2;
    const auto rho = DensityMatrix::from_bloch(r, 0.0, r);
    const auto sharp = quasiprob(builds[0].family, rho);
    const double p = sharp.entries.back().p;  // (-1, -1) is last in canonical order
    const double err = std::abs(p - (1.0 - std::numbers::sqrt2) / 4.0);
    const auto fuzzy = quasiprob(scenario_family(builds[0], 0.5), rho);
    const bool none_negative = std::all_of(fuzzy.entries.begin(), fuzzy.entries.end(),
                                           [](const QuasiProbEntry& e) { return e.p >= 0.0; });
    return CheckOutcome{err <= 1e-12 && none_negative,
                    "P(-1,-1) error " + sci(err) + (none_negative ? "" : ", eta=0.5 negative")};
  });

  std::vector<double> thresholds(3, NAN);
  const double expected[] = {1.0 / std::numbers::sqrt2, std::sqrt(std::numbers::sqrt2 - 1.0),
                             std::sqrt(std::numbers::sqrt2 - 1.0)};
  const double tols[] = {1e-6, 1e-5, 1e-5};
  for (std::size_t k = 0; k < builds.size(); ++k) {
    check("threshold-" + std::string(scenario_name(kAll[k])), [&, k] {
      ThresholdOptions opts;
      opts.slack = slack;
      const auto& b = builds[k];
      const auto t = threshold([&](double eta) { return scenario_family(b, eta); }, opts);
      if (!t) return CheckOutcome{false, "no threshold in [0, 1]"};
      thresholds[k] = *t;
      return within(std::abs(*t - expected[k]), tols[k]);
    });
  }

  check("two-qubit-matches-qutrit", [&] {
    return within(std::abs(thresholds[2] - thresholds[1]), 1e-9);
  });

  check("two-qubit-pairwise", [&] {
    double lowest = INFINITY;
    for (double eta : uniform_grid(0.0, 1.0 / std::numbers::sqrt2, 51)) {
      const auto fam = scenario_family(builds[2], eta);
      for (auto keep : {std::vector<std::size_t>{0, 1}, std::vector<std::size_t>{2, 3}})
        lowest = std::min(lowest, family_min_eigenvalue(marginalize(fam, keep)));
    }
    return CheckOutcome{lowest >= -slack, "lowest eigenvalue " + sci(lowest)};
  });

  check("full-symmetrization-normalized", [&] {
    const auto& b = builds[2];
    const auto full = qmo_jordan(b.scenario.observables, singleton_grouping(4));
    double diff = 0.0;
    for (std::size_t i = 0; i < full.elements.size(); ++i)
      diff = std::max(diff, max_abs_diff(full.elements[i].matrix, b.family.elements[i].matrix));
    const double norm_err = max_abs_diff(full.element_sum(), CMatrix::identity(4));
    return CheckOutcome{norm_err <= 1e-11,
                    "normalization error " + sci(norm_err) + "; differs from grouped by " + sci(diff)};
  });

  return results;
}

}  // namespace mhqmo::cli
