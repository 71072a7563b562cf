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

#ifndef DQC1SIM_MATRIX_IO_H
#define DQC1SIM_MATRIX_IO_H

#include <string>
#include <string_view>

#include "dqc1sim/qsim.h"

namespace dqc1sim {

/// Parses {"dim": d, "re": [[...]], "im": [[...]]} (row-major).
/// Throws InputFormat on malformed JSON or shapes, NotUnitary if the matrix
/// fails the unitarity check.
UnitarySpec parse_unitary_json(std::string_view text);
UnitarySpec load_unitary_json(const std::string &path);

std::string unitary_to_json(const Matrix &m);

}  // namespace dqc1sim

#endif
