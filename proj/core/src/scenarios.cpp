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

#include "mhqmo/scenarios.hpp"

#include <cmath>
#include <numbers>

#include "mhqmo/error.hpp"
#include "mhqmo/fuzzing.hpp"

namespace mhqmo {

using namespace pauli_matrices;

std::string_view scenario_name(ScenarioKind kind) noexcept {
  switch (kind) {
    case ScenarioKind::Qubit: return "qubit";
    case ScenarioKind::Qutrit: return "qutrit";
    case ScenarioKind::TwoQubit: return "two-qubit";
  }
  return "qubit";
}

ScenarioKind parse_scenario(std::string_view name) {
  if (name == "qubit") return ScenarioKind::Qubit;
  if (name == "qutrit") return ScenarioKind::Qutrit;
  if (name == "two-qubit") return ScenarioKind::TwoQubit;
  throw Error(ErrorKind::InvalidArgument,
              "unknown scenario '" + std::string(name) +
                  "' (expected qubit, qutrit or two-qubit)");
}

CgTransform cg_transform() {
  const double r = 1.0 / std::numbers::sqrt2;
  return {CMatrix{{1.0, 0.0, 0.0, 0.0},
                  {0.0, r, r, 0.0},
                  {0.0, 0.0, 0.0, 1.0},
                  {0.0, r, -r, 0.0}}};
}

CMatrix spin1_x() {
  const double r = 1.0 / std::numbers::sqrt2;
  return CMatrix{{0.0, r, 0.0}, {r, 0.0, r}, {0.0, r, 0.0}};
}

CMatrix spin1_z() { return CMatrix{{1.0, 0.0, 0.0}, {0.0, 0.0, 0.0}, {0.0, 0.0, -1.0}}; }

ScenarioBuild build_qubit() {
  Scenario s{ScenarioKind::Qubit, {spectral(X()), spectral(Z())}, {{0}, {1}},
             Embedding::Identity};
  QmoFamily fam = qmo_jordan(s.observables, s.grouping);
  return {std::move(s), std::move(fam)};
}

ScenarioBuild build_qutrit_embedded() {
  const CMatrix sx = (tensor(I(), X()) + tensor(X(), I())) * 0.5;
  const CMatrix sz = (tensor(I(), Z()) + tensor(Z(), I())) * 0.5;
  Scenario s{ScenarioKind::Qutrit, {spectral(sx), spectral(sz)}, {{0}, {1}},
             Embedding::CgBlock};
  QmoFamily fam = qmo_jordan(s.observables, s.grouping);
  return {std::move(s), std::move(fam)};
}

ScenarioBuild build_two_qubit() {
  Scenario s{ScenarioKind::TwoQubit,
             {spectral(tensor(X(), I())), spectral(tensor(Z(), I())),
              spectral(tensor(I(), X())), spectral(tensor(I(), Z()))},
             {{0, 2}, {1, 3}},
             Embedding::Identity};
  QmoFamily fam = qmo_jordan(s.observables, s.grouping);
  return {std::move(s), std::move(fam)};
}

ScenarioBuild build_scenario(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::Qubit: return build_qubit();
    case ScenarioKind::Qutrit: return build_qutrit_embedded();
    case ScenarioKind::TwoQubit: return build_two_qubit();
  }
  return build_qubit();
}

QmoFamily extract_qutrit_block(const QmoFamily& embedded, double tol) {
  if (embedded.space_dim != 4) {
    throw Error(ErrorKind::DimMismatch, "qutrit block extraction needs a 4-dim family");
  }
  const CMatrix u = cg_transform().matrix;
  const CMatrix ut = u.adjoint();

  auto to_block = [&](const CMatrix& m) {
    const CMatrix c = u * m * ut;
    for (std::size_t k = 0; k < 3; ++k) {
      const double leak = std::max(std::abs(c(k, 3)), std::abs(c(3, k)));
      if (leak > tol) {
        throw Error(ErrorKind::BlockLeakage,
                    "spin-1/singlet coupling " + std::to_string(leak) + " exceeds tolerance");
      }
    }
    return principal_block(c, 0, 3);
  };

  QmoFamily out;
  out.grouping = embedded.grouping;
  out.eta = embedded.eta;
  out.space_dim = 3;
  for (const auto& o : embedded.observables) out.observables.push_back(spectral(to_block(o.matrix)));
  for (const auto& e : embedded.elements) out.elements.push_back({e.outcome, to_block(e.matrix)});
  return out;
}

QmoFamily scenario_family(const ScenarioBuild& build, double eta) {
  QmoFamily fam = fuzzify(build.family, FuzzParameter(eta));
  if (build.scenario.embedding == Embedding::CgBlock) return extract_qutrit_block(fam);
  return fam;
}

double qubit_lambda_plus(double eta) { return (1.0 + eta * std::numbers::sqrt2) / 4.0; }
double qubit_lambda_minus(double eta) { return (1.0 - eta * std::numbers::sqrt2) / 4.0; }

double qutrit_lambda(double eta) {
  const double e2 = eta * eta;
  const double q = 1.0 + e2;
  return (q - eta * std::sqrt(4.0 + e2 * q * q)) / 8.0;
}

double qutrit_lambda1(double eta) {
  const double e2 = eta * eta;
  return (1.0 - 2.0 * e2 - e2 * e2) / 16.0;
}

double qutrit_lambda2(double eta) {
  const double e2 = eta * eta;
  return (1.0 + 2.0 * e2 - eta * std::sqrt(e2 * e2 * e2 + 8.0)) / 16.0;
}

namespace {

bool is_pm_one(double v) { return v == 1.0 || v == -1.0; }

[[noreturn]] void unknown_label(ScenarioKind kind) {
  throw Error(ErrorKind::UnknownLabel, "no closed form for this element of the " +
                                           std::string(scenario_name(kind)) + " scenario");
}

}  // namespace

std::vector<ClosedFormCurve> closed_form_curves(ScenarioKind kind, const Outcome& label) {
  switch (kind) {
    case ScenarioKind::Qubit:
      if (label.size() == 2 && is_pm_one(label[0]) && is_pm_one(label[1])) {
        return {{kind, label, "(1+eta*sqrt2)/4", &qubit_lambda_plus},
                {kind, label, "(1-eta*sqrt2)/4", &qubit_lambda_minus}};
      }
      break;
    case ScenarioKind::Qutrit:
      if (label.size() == 2) {
        const bool x_pm = is_pm_one(label[0]);
        const bool z_pm = is_pm_one(label[1]);
        if ((x_pm && label[1] == 0.0) || (label[0] == 0.0 && z_pm)) {
          return {{kind, label, "(1+eta^2-eta*sqrt(4+eta^2(1+eta^2)^2))/8", &qutrit_lambda}};
        }
        if (x_pm && z_pm) {
          return {{kind, label, "(1-2eta^2-eta^4)/16", &qutrit_lambda1},
                  {kind, label, "(1+2eta^2-eta*sqrt(eta^6+8))/16", &qutrit_lambda2}};
        }
      }
      break;
    case ScenarioKind::TwoQubit:
      if (label.size() == 4 && is_pm_one(label[0]) && is_pm_one(label[1]) &&
          is_pm_one(label[2]) && is_pm_one(label[3])) {
        return {{kind, label, "(1-2eta^2-eta^4)/16", &qutrit_lambda1},
                {kind, label, "(1+2eta^2-eta*sqrt(eta^6+8))/16", &qutrit_lambda2}};
      }
      break;
  }
  unknown_label(kind);
}

std::vector<double> closed_form_eigenvalues(ScenarioKind kind, const Outcome& label,
                                            double eta) {
  std::vector<double> out;
  for (const auto& c : closed_form_curves(kind, label)) out.push_back(c.eval(eta));
  return out;
}

}  // namespace mhqmo
