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

#include "qsat/serialize.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "qsat/errors.hpp"

namespace qsat {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string &where, const std::string &why) {
    throw Error(ErrorCode::ParseError, where + ": " + why);
}

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json &j, const std::string &where) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        fail(where, "expected [re, im]");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

const json &field(const json &obj, const char *name, const std::string &where) {
    const auto it = obj.find(name);
    if (it == obj.end()) fail(where, std::string("missing field '") + name + "'");
    return *it;
}

int int_field(const json &obj, const char *name, const std::string &where) {
    const json &v = field(obj, name, where);
    if (!v.is_number_integer()) fail(where + "." + name, "expected an integer");
    return v.get<int>();
}

}  // namespace

std::string serialize(const Instance &inst) {
    json out;
    out["n"] = inst.n;
    json clauses = json::array();
    for (const Clause &c : inst.clauses) {
        json amps = json::array();
        for (int k = 0; k < 4; ++k) amps.push_back(complex_to_json(c.amps(k)));
        clauses.push_back({{"i", c.i}, {"j", c.j}, {"amps", std::move(amps)}});
    }
    out["clauses"] = std::move(clauses);
    if (inst.planted_basis) {
        json basis = json::array();
        for (const Matrix2 &u : *inst.planted_basis) {
            basis.push_back({complex_to_json(u(0, 0)), complex_to_json(u(0, 1)), complex_to_json(u(1, 0)),
                             complex_to_json(u(1, 1))});
        }
        out["planted_basis"] = std::move(basis);
    }
    if (inst.promise) {
        out["promise"] = {{"kind", inst.promise->kind == PromiseKind::Yes ? "yes" : "no"}, {"c", inst.promise->c}};
    }
    if (!inst.meta.empty()) out["meta"] = inst.meta;
    return out.dump(2) + "\n";
}

Instance deserialize(std::string_view text, const DeserializeOptions &options) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        fail("document", e.what());
    }
    if (!doc.is_object()) fail("document", "expected a JSON object");

    Instance inst;
    inst.n = int_field(doc, "n", "document");
    const json &clauses = field(doc, "clauses", "document");
    if (!clauses.is_array()) fail("clauses", "expected an array");
    for (std::size_t a = 0; a < clauses.size(); ++a) {
        const std::string where = "clauses[" + std::to_string(a) + "]";
        const json &c = clauses[a];
        if (!c.is_object()) fail(where, "expected an object");
        Clause clause;
        clause.i = int_field(c, "i", where);
        clause.j = int_field(c, "j", where);
        const json &amps = field(c, "amps", where);
        if (!amps.is_array() || amps.size() != 4) fail(where + ".amps", "expected four amplitudes");
        for (int k = 0; k < 4; ++k) {
            clause.amps(k) = complex_from_json(amps[static_cast<std::size_t>(k)], where + ".amps[" + std::to_string(k) + "]");
        }
        if (options.require_normalized && std::abs(clause.amps.squaredNorm() - 1.0) > kNormTolerance) {
            fail(where + ".amps", "normalization violated (squared norm " + std::to_string(clause.amps.squaredNorm()) + ")");
        }
        inst.clauses.push_back(clause);
    }

    if (const auto it = doc.find("planted_basis"); it != doc.end()) {
        if (!it->is_array()) fail("planted_basis", "expected an array");
        std::vector<Matrix2> basis;
        for (std::size_t q = 0; q < it->size(); ++q) {
            const std::string where = "planted_basis[" + std::to_string(q) + "]";
            const json &entry = (*it)[q];
            if (!entry.is_array() || entry.size() != 4) fail(where, "expected four entries of a 2x2 matrix");
            Matrix2 u;
            u << complex_from_json(entry[0], where), complex_from_json(entry[1], where), complex_from_json(entry[2], where),
                complex_from_json(entry[3], where);
            basis.push_back(u);
        }
        inst.planted_basis = std::move(basis);
    }

    if (const auto it = doc.find("promise"); it != doc.end()) {
        const json &kind = field(*it, "kind", "promise");
        const json &c = field(*it, "c", "promise");
        if (!kind.is_string() || (kind != "yes" && kind != "no")) fail("promise.kind", "expected \"yes\" or \"no\"");
        if (!c.is_number()) fail("promise.c", "expected a number");
        inst.promise = Promise{kind == "yes" ? PromiseKind::Yes : PromiseKind::No, c.get<double>()};
    }

    if (const auto it = doc.find("meta"); it != doc.end()) {
        if (!it->is_object()) fail("meta", "expected an object");
        for (const auto &[key, value] : it->items()) {
            inst.meta[key] = value.is_string() ? value.get<std::string>() : value.dump();
        }
    }

    try {
        validate(inst, options.require_normalized);
    } catch (const Error &e) {
        fail("instance", e.what());
    }
    return inst;
}

Instance load_instance(const std::string &path, const DeserializeOptions &options) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return deserialize(buf.str(), options);
}

void save_instance(const Instance &inst, const std::string &path) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
    out << serialize(inst);
}

}  // namespace qsat
