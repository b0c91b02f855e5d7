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

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mhqmo/matrix.hpp"
#include "mhqmo/qmo.hpp"

namespace mhqmo {

enum class ScenarioKind { Qubit, Qutrit, TwoQubit };

/// "qubit" | "qutrit" | "two-qubit"
std::string_view scenario_name(ScenarioKind kind) noexcept;
/// Throws InvalidArgument for anything outside the three names.
ScenarioKind parse_scenario(std::string_view name);

enum class Embedding {
  Identity,
  /// Operators live in the two-qubit space; the physical qutrit is the
  /// spin-1 block after the Clebsch-Gordan change of basis.
  CgBlock,
};

struct Scenario {
  ScenarioKind kind = ScenarioKind::Qubit;
  std::vector<Observable> observables;
  Grouping grouping;
  Embedding embedding = Embedding::Identity;
};

struct ScenarioBuild {
  Scenario scenario;
  /// Sharp (eta = 1) family in the scenario's working space.
  QmoFamily family;
};

/// Real orthogonal 4x4 change of basis from the product basis
/// {|00>, |01>, |10>, |11>} to the coupled basis {|1,+1>, |1,0>, |1,-1>, |0,0>}.
struct CgTransform {
  CMatrix matrix;
};
CgTransform cg_transform();

/// Spin-1 operators S_x and S_z in the basis {|+1>, |0>, |-1>}.
CMatrix spin1_x();
CMatrix spin1_z();

/// sigma_x and sigma_z, singleton groups.
ScenarioBuild build_qubit();
/// (I (x) sigma + sigma (x) I) / 2 for sigma in {sigma_x, sigma_z}, singleton
/// groups, in the 4-dim embedding.
ScenarioBuild build_qutrit_embedded();
/// sigma_x (x) I, sigma_z (x) I, I (x) sigma_x, I (x) sigma_z grouped as
/// {X1, X2}, {Z1, Z2}. Outcome tuples are ordered (x1, z1, x2, z2).
ScenarioBuild build_two_qubit();
ScenarioBuild build_scenario(ScenarioKind kind);

/// Conjugates every element by the CG transform and returns the spin-1
/// block. Throws DimMismatch for non-4-dim input and BlockLeakage if the
/// spin-1/singlet coupling exceeds `tol`.
QmoFamily extract_qutrit_block(const QmoFamily& embedded, double tol = 1e-12);

/// The family whose positivity decides compatibility at `eta`: the sharp
/// family fuzzified, then block-extracted for the qutrit.
QmoFamily scenario_family(const ScenarioBuild& build, double eta);

// Closed-form eigenvalues. These are independent of the numerical pipeline
// and are only used to cross-check it.
double qubit_lambda_plus(double eta);
double qubit_lambda_minus(double eta);
/// Lowest eigenvalue of the qutrit (x, 0) and (0, z) elements, x, z = +-1.
double qutrit_lambda(double eta);
/// Two of the eigenvalues of the qutrit (x, z) elements, x, z = +-1.
double qutrit_lambda1(double eta);
double qutrit_lambda2(double eta);

struct ClosedFormCurve {
  ScenarioKind scenario;
  Outcome label;
  std::string formula;
  double (*eval)(double eta);
};

/// Known closed-form eigenvalue curves for one element. Qubit: both
/// eigenvalues of any element. Qutrit: lambda for (+-1, 0) and (0, +-1),
/// lambda1 and lambda2 for (+-1, +-1). Two-qubit: lambda1 and lambda2 for any
/// element, the remaining two eigenvalues have no closed form here. Throws
/// UnknownLabel otherwise.
std::vector<ClosedFormCurve> closed_form_curves(ScenarioKind kind, const Outcome& label);
std::vector<double> closed_form_eigenvalues(ScenarioKind kind, const Outcome& label,
                                            double eta);

}  // namespace mhqmo
