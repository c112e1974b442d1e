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

#pragma once

#include <string>
#include <string_view>

#include "qsat/instance.hpp"

namespace qsat {

/// JSON text: {"n", "clauses": [{"i", "j", "amps": [[re, im] x4]}], "planted_basis"?,
/// "promise"?, "meta"?}. Planted basis entries are row-major 2×2 matrices.
std::string serialize(const Instance &inst);

struct DeserializeOptions {
    bool require_normalized = true;
};

/// Throws ParseError naming the offending field.
Instance deserialize(std::string_view text, const DeserializeOptions &options = {});

Instance load_instance(const std::string &path, const DeserializeOptions &options = {});
void save_instance(const Instance &inst, const std::string &path);

}  // namespace qsat
