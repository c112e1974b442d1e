// Copyright 2026 The qsat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qsat/errors.hpp"

namespace qsat {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::QubitPairInvalid: return "QubitPairInvalid";
        case ErrorCode::ZeroVector: return "ZeroVector";
        case ErrorCode::NotUnitary: return "NotUnitary";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::CertificationFailed: return "CertificationFailed";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::NotHermitian: return "NotHermitian";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::NonRealExpectation: return "NonRealExpectation";
        case ErrorCode::DegenerateSpectrum: return "DegenerateSpectrum";
        case ErrorCode::DegenerateBranch: return "DegenerateBranch";
        case ErrorCode::InvalidPromise: return "InvalidPromise";
        case ErrorCode::InvalidTarget: return "InvalidTarget";
        case ErrorCode::NumericalDrift: return "NumericalDrift";
        case ErrorCode::CapacityExceeded: return "CapacityExceeded";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string &what)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

}  // namespace qsat
