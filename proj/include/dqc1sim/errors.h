// Copyright 2026 The dqc1sim Authors
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

#ifndef DQC1SIM_ERRORS_H
#define DQC1SIM_ERRORS_H

#include <stdexcept>
#include <string>
#include <string_view>

namespace dqc1sim {

enum class ErrorKind {
    NotCoprime,
    DimTooLarge,
    DimMismatch,
    NotUnitary,
    NotDensityMatrix,
    BadT,
    BadFactorization,
    NotComposite,
    PrimePower,
    EvenInput,
    AttemptCapExceeded,
    StateBlowup,
    InvalidArgument,
    InputFormat,
};

std::string_view error_kind_name(ErrorKind kind);

/// Every failure raised by the library carries a machine-readable kind so the
/// CLI can map it onto an exit code.
class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string &message)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {
    }

    ErrorKind kind() const noexcept {
        return kind_;
    }

   private:
    ErrorKind kind_;
};

inline std::string_view error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NotCoprime:
            return "NotCoprime";
        case ErrorKind::DimTooLarge:
            return "DimTooLarge";
        case ErrorKind::DimMismatch:
            return "DimMismatch";
        case ErrorKind::NotUnitary:
            return "NotUnitary";
        case ErrorKind::NotDensityMatrix:
            return "NotDensityMatrix";
        case ErrorKind::BadT:
            return "BadT";
        case ErrorKind::BadFactorization:
            return "BadFactorization";
        case ErrorKind::NotComposite:
            return "NotComposite";
        case ErrorKind::PrimePower:
            return "PrimePower";
        case ErrorKind::EvenInput:
            return "EvenInput";
        case ErrorKind::AttemptCapExceeded:
            return "AttemptCapExceeded";
        case ErrorKind::StateBlowup:
            return "StateBlowup";
        case ErrorKind::InvalidArgument:
            return "InvalidArgument";
        case ErrorKind::InputFormat:
            return "InputFormat";
    }
    return "Unknown";
}

}  // namespace dqc1sim

#endif
