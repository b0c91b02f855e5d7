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

#include "mhqmo/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "mhqmo/error.hpp"

namespace mhqmo {

using json = nlohmann::ordered_json;

double round_significant(double v, int digits) {
  if (!std::isfinite(v)) return v;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  const double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;
}

namespace {

json outcome_json(const Outcome& o) {
  json arr = json::array();
  for (double v : o) arr.push_back(round_significant(v));
  return arr;
}

json family_body(double eta, const std::vector<Outcome>& outcomes,
                 const std::vector<const CMatrix*>& matrices) {
  json j;
  j["eta"] = round_significant(eta);
  json outs = json::array();
  json elems = json::array();
  for (std::size_t k = 0; k < outcomes.size(); ++k) {
    outs.push_back(outcome_json(outcomes[k]));
    elems.push_back({{"outcome", outcome_json(outcomes[k])}, {"matrix", to_json(*matrices[k])}});
  }
  j["outcomes"] = std::move(outs);
  j["elements"] = std::move(elems);
  return j;
}

[[noreturn]] void parse_error(const std::string& what) {
  throw Error(ErrorKind::ParseError, what);
}

}  // namespace

json to_json(const CMatrix& m) {
  json entries = json::array();
  for (const auto& z : m.entries())
    entries.push_back(json::array({round_significant(z.real()), round_significant(z.imag())}));
  return {{"dim", m.dim()}, {"entries", std::move(entries)}};
}

CMatrix cmatrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("entries")) {
    parse_error("matrix must be an object with \"dim\" and \"entries\"");
  }
  const json& d = j.at("dim");
  if (!d.is_number_integer() || d.get<long long>() < 1 || d.get<long long>() > 16) {
    parse_error("\"dim\" must be an integer in [1, 16]");
  }
  const auto dim = static_cast<std::size_t>(d.get<long long>());
  const json& e = j.at("entries");
  if (!e.is_array() || e.size() != dim * dim) {
    parse_error("\"entries\" must hold dim^2 = " + std::to_string(dim * dim) + " values");
  }
  std::vector<Complex> data;
  data.reserve(dim * dim);
  for (const auto& z : e) {
    if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number()) {
      parse_error("each entry must be a [re, im] pair of numbers");
    }
    data.emplace_back(z[0].get<double>(), z[1].get<double>());
  }
  return CMatrix(dim, std::move(data));
}

json to_json(const QmoFamily& family) {
  std::vector<Outcome> outcomes;
  std::vector<const CMatrix*> mats;
  for (const auto& e : family.elements) {
    outcomes.push_back(e.outcome);
    mats.push_back(&e.matrix);
  }
  return family_body(family.eta, outcomes, mats);
}

json to_json(const MarginalPovm& povm) {
  std::vector<Outcome> outcomes;
  std::vector<const CMatrix*> mats;
  for (const auto& e : povm.elements) {
    outcomes.push_back({e.outcome});
    mats.push_back(&e.matrix);
  }
  json j = family_body(povm.eta, outcomes, mats);
  j["observable_index"] = povm.observable_index;
  return j;
}

json to_json(const QuasiProbTable& table) {
  json entries = json::array();
  for (const auto& e : table.entries) {
    json row{{"outcome", outcome_json(e.outcome)}, {"p", round_significant(e.p)}};
    if (e.p < -kNegativeFlagTol) row["negative"] = true;
    entries.push_back(std::move(row));
  }
  return {{"eta", round_significant(table.eta)}, {"entries", std::move(entries)}};
}

json to_json(const CompatReport& report) {
  json grid = json::array();
  for (const auto& p : report.grid)
    grid.push_back({{"eta", round_significant(p.eta)}, {"min_eig", round_significant(p.min_eig)}});
  json j{{"scenario", report.scenario}};
  j["threshold"] = report.threshold ? json(round_significant(*report.threshold)) : json(nullptr);
  j["grid"] = std::move(grid);
  return j;
}

std::string to_csv(const CompatReport& report) {
  std::string out = "eta,min_eig\n";
  char buf[96];
  for (const auto& p : report.grid) {
    std::snprintf(buf, sizeof buf, "%.9e,%.9e\n", p.eta, p.min_eig == 0.0 ? 0.0 : p.min_eig);
    out += buf;
  }
  return out;
}

ObservableSet observable_set_from_json(const json& j) {
  if (!j.is_object() || !j.contains("observables") || !j.at("observables").is_array()) {
    parse_error("observable file must contain an \"observables\" array");
  }
  ObservableSet set;
  for (const auto& m : j.at("observables")) set.matrices.push_back(cmatrix_from_json(m));
  if (set.matrices.empty()) parse_error("\"observables\" is empty");
  if (j.contains("grouping")) {
    const json& g = j.at("grouping");
    if (!g.is_array()) parse_error("\"grouping\" must be an array of index arrays");
    Grouping grouping;
    for (const auto& group : g) {
      if (!group.is_array()) parse_error("\"grouping\" must be an array of index arrays");
      std::vector<std::size_t> idx;
      for (const auto& v : group) {
        if (!v.is_number_unsigned()) parse_error("group indices must be non-negative integers");
        idx.push_back(v.get<std::size_t>());
      }
      grouping.push_back(std::move(idx));
    }
    set.grouping = std::move(grouping);
  }
  return set;
}

}  // namespace mhqmo
