// Copyright 2026 The codeswitch Authors
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

#include "codeswitch/error.h"

namespace codeswitch {

const char *error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::LengthMismatch:
            return "LengthMismatch";
        case ErrorCode::SingularMatrix:
            return "SingularMatrix";
        case ErrorCode::Inconsistent:
            return "Inconsistent";
        case ErrorCode::NotInSpace:
            return "NotInSpace";
        case ErrorCode::NotIndependent:
            return "NotIndependent";
        case ErrorCode::NonHermitianProduct:
            return "NonHermitianProduct";
        case ErrorCode::BadCharacter:
            return "BadCharacter";
        case ErrorCode::AnticommutingGenerators:
            return "AnticommutingGenerators";
        case ErrorCode::DependentGenerators:
            return "DependentGenerators";
        case ErrorCode::WrongLength:
            return "WrongLength";
        case ErrorCode::MismatchedLogicalCount:
            return "MismatchedLogicalCount";
        case ErrorCode::SingularCommutativityMatrix:
            return "SingularCommutativityMatrix";
        case ErrorCode::AdjacencyViolation:
            return "AdjacencyViolation";
        case ErrorCode::EndpointMismatch:
            return "EndpointMismatch";
        case ErrorCode::FixtureInvalid:
            return "FixtureInvalid";
        case ErrorCode::ZeroLogicalQubits:
            return "ZeroLogicalQubits";
        case ErrorCode::DomainError:
            return "DomainError";
        case ErrorCode::Infeasible:
            return "Infeasible";
        case ErrorCode::InconsistentSpec:
            return "InconsistentSpec";
        case ErrorCode::StabilizationFailure:
            return "StabilizationFailure";
        case ErrorCode::TransportFailure:
            return "TransportFailure";
        case ErrorCode::IoError:
            return "IoError";
        case ErrorCode::ParseError:
            return "ParseError";
        case ErrorCode::Unsupported:
            return "Unsupported";
    }
    return "Unknown";
}

}  // namespace codeswitch
