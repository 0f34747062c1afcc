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

#ifndef CODESWITCH_ERROR_H
#define CODESWITCH_ERROR_H

#include <stdexcept>
#include <string>

namespace codeswitch {

enum class ErrorCode {
    LengthMismatch,
    SingularMatrix,
    Inconsistent,
    NotInSpace,
    NotIndependent,
    NonHermitianProduct,
    BadCharacter,
    AnticommutingGenerators,
    DependentGenerators,
    WrongLength,
    MismatchedLogicalCount,
    SingularCommutativityMatrix,
    AdjacencyViolation,
    EndpointMismatch,
    FixtureInvalid,
    ZeroLogicalQubits,
    DomainError,
    Infeasible,
    InconsistentSpec,
    StabilizationFailure,
    TransportFailure,
    ParseError,
    IoError,
    Unsupported,
};

const char *error_code_name(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map them onto exit statuses.
class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string &message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {
    }
    ErrorCode code() const noexcept {
        return code_;
    }

   private:
    ErrorCode code_;
};

}  // namespace codeswitch

#endif
