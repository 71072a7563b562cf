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

#include "dqc1sim/matrix_io.h"

#include <gtest/gtest.h>

#include <random>

#include "dqc1sim/errors.h"

using namespace dqc1sim;

namespace {

ErrorKind parse_kind(std::string_view text) {
    try {
        parse_unitary_json(text);
    } catch (const Error &e) {
        return e.kind();
    }
    return ErrorKind::InvalidArgument;
}

}  // namespace

TEST(MatrixIo, ParsesPauliY) {
    auto u = parse_unitary_json(R"({"dim": 2, "re": [[0, 0], [0, 0]], "im": [[0, -1], [1, 0]]})");
    Matrix m = as_dense(u);
    EXPECT_EQ(m(0, 1), Complex(0, -1));
    EXPECT_EQ(m(1, 0), Complex(0, 1));
}

TEST(MatrixIo, RoundTrip) {
    std::mt19937_64 rng(13);
    Matrix m = random_unitary(5, rng);
    Matrix back = as_dense(parse_unitary_json(unitary_to_json(m)));
    EXPECT_LT(max_abs_diff(m, back), 1e-15);
}

TEST(MatrixIo, Errors) {
    EXPECT_EQ(parse_kind("{not json"), ErrorKind::InputFormat);
    EXPECT_EQ(parse_kind(R"({"dim": 2, "re": [[1, 0], [0, 1]]})"), ErrorKind::InputFormat);
    EXPECT_EQ(parse_kind(R"({"dim": 2, "re": [[1, 0]], "im": [[0, 0]]})"), ErrorKind::InputFormat);
    EXPECT_EQ(parse_kind(R"({"dim": 2, "re": [[1, "x"], [0, 1]], "im": [[0, 0], [0, 0]]})"), ErrorKind::InputFormat);
    EXPECT_EQ(parse_kind(R"({"dim": 2, "re": [[1, 1], [0, 1]], "im": [[0, 0], [0, 0]]})"), ErrorKind::NotUnitary);
    EXPECT_EQ(parse_kind(R"({"dim": 65, "re": [], "im": []})"), ErrorKind::DimTooLarge);
    EXPECT_THROW(load_unitary_json("/nonexistent/u.json"), Error);
}
