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

#include "mhqmo/error.hpp"

namespace mhqmo {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::DimNotPowerOfTwo: return "DimNotPowerOfTwo";
    case ErrorKind::DimMismatch: return "DimMismatch";
    case ErrorKind::NonCommutingGroup: return "NonCommutingGroup";
    case ErrorKind::EmptyKeepSet: return "EmptyKeepSet";
    case ErrorKind::NonIntegerSpectrum: return "NonIntegerSpectrum";
    case ErrorKind::UnsupportedSpectrum: return "UnsupportedSpectrum";
    case ErrorKind::BlockLeakage: return "BlockLeakage";
    case ErrorKind::UnknownLabel: return "UnknownLabel";
    case ErrorKind::NotPositiveAtZero: return "NotPositiveAtZero";
    case ErrorKind::NotPositive: return "NotPositive";
    case ErrorKind::SignChangeViolation: return "SignChangeViolation";
    case ErrorKind::InvalidEta: return "InvalidEta";
    case ErrorKind::InvalidState: return "InvalidState";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind) {}

}  // namespace mhqmo
