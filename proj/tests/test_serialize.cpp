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

#include <gtest/gtest.h>

#include <fstream>
#include <string>

#include "qsat/errors.hpp"
#include "qsat/serialize.hpp"

namespace qsat {
namespace {

std::string parse_error(const std::string &text, DeserializeOptions opt = {}) {
    try {
        deserialize(text, opt);
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::ParseError);
        return e.what();
    }
    ADD_FAILURE() << "accepted: " << text;
    return {};
}

TEST(Serialize, RoundTripIsExact) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Instance inst = generate_planted_extended(4, 6, 0.5, seed);
        inst.meta = {{"generator", "test"}, {"seed", std::to_string(seed)}};
        const Instance back = deserialize(serialize(inst));
        ASSERT_EQ(back.n, inst.n);
        ASSERT_EQ(back.num_clauses(), inst.num_clauses());
        for (int a = 0; a < inst.num_clauses(); ++a) {
            EXPECT_EQ(back.clauses[a].i, inst.clauses[a].i);
            EXPECT_EQ(back.clauses[a].j, inst.clauses[a].j);
            EXPECT_EQ(back.clauses[a].amps, inst.clauses[a].amps);
        }
        ASSERT_TRUE(back.planted_basis);
        for (int q = 0; q < inst.n; ++q) EXPECT_EQ((*back.planted_basis)[q], (*inst.planted_basis)[q]);
        EXPECT_EQ(back.promise->kind, inst.promise->kind);
        EXPECT_EQ(back.promise->c, inst.promise->c);
        EXPECT_EQ(back.meta, inst.meta);
        EXPECT_EQ(serialize(back), serialize(inst));
    }
}

TEST(Serialize, FieldErrorsNameTheField) {
    EXPECT_NE(parse_error("{\"clauses\": []}").find("missing field 'n'"), std::string::npos);
    EXPECT_NE(parse_error("not json").find("ParseError"), std::string::npos);
    EXPECT_NE(parse_error(R"({"n": 2, "clauses": [{"i": 0, "j": 1, "amps": [[0,0],[1,0]]}]})").find("amps"),
              std::string::npos);
    EXPECT_NE(parse_error(R"({"n": 2, "clauses": [{"i": 0, "j": 0, "amps": [[0,0],[1,0],[0,0],[0,0]]}]})").size(), 0U);
    EXPECT_NE(parse_error(R"({"n": 2, "clauses": [], "promise": {"kind": "maybe", "c": 1}})").size(), 0U);
}

TEST(Serialize, NormalizationCheckIsOptional) {
    std::ifstream f(QSAT_FIXTURES "/corrupted_norm.json");
    const std::string text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    EXPECT_NE(parse_error(text).find("normalization violated"), std::string::npos);
    const Instance lenient = deserialize(text, {.require_normalized = false});
    EXPECT_NEAR(lenient.clauses[0].amps.squaredNorm(), 0.98, 1e-12);
}

TEST(Serialize, FixturesLoad) {
    const Instance singlet = load_instance(QSAT_FIXTURES "/singlet.json");
    EXPECT_EQ(singlet.n, 2);
    EXPECT_EQ(singlet.promise->c, 1.0);
    const Instance bare = load_instance(QSAT_FIXTURES "/no_promise.json");
    EXPECT_FALSE(bare.promise);
    EXPECT_FALSE(bare.planted_basis);
    EXPECT_THROW(load_instance(QSAT_FIXTURES "/does_not_exist.json"), Error);
}

}  // namespace
}  // namespace qsat
