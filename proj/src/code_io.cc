// Copyright 2026 The selfdual Authors.
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

#include "selfdual/code_io.h"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "selfdual/error.h"

namespace selfdual {
namespace {

using Json = nlohmann::ordered_json;

std::uint64_t RequireUnsigned(const Json& doc, const char* key) {
  if (!doc.contains(key)) {
    throw Error(ErrorCode::kParseError, std::string("missing key \"") + key +
                                            "\"");
  }
  const Json& v = doc.at(key);
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
    throw Error(ErrorCode::kParseError,
                std::string("\"") + key + "\" must be a non-negative integer");
  }
  return v.get<std::uint64_t>();
}

}  // namespace

std::string WriteCodeJson(const LinearCode& code) {
  Json doc;
  doc["p"] = code.field().p();
  doc["m"] = code.field().m();
  doc["n"] = code.length();
  doc["k"] = code.dimension();
  Json gen = Json::array();
  for (std::size_t r = 0; r < code.dimension(); ++r) {
    auto row = code.generator().Row(r);
    gen.push_back(Json(std::vector<Elt>(row.begin(), row.end())));
  }
  doc["gen"] = std::move(gen);
  return doc.dump();
}

LinearCode ReadCodeJson(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
  if (!doc.is_object()) {
    throw Error(ErrorCode::kParseError, "code file must hold a JSON object");
  }
  const auto p = RequireUnsigned(doc, "p");
  const auto m = RequireUnsigned(doc, "m");
  const auto n = RequireUnsigned(doc, "n");
  const auto k = RequireUnsigned(doc, "k");
  if (!doc.contains("gen") || !doc.at("gen").is_array()) {
    throw Error(ErrorCode::kParseError, "missing array \"gen\"");
  }
  const FiniteField field = FiniteField::Make(p, static_cast<std::uint32_t>(m));

  std::vector<Vector> rows;
  const Json& gen = doc.at("gen");
  for (std::size_t r = 0; r < gen.size(); ++r) {
    const Json& row = gen[r];
    const std::string where = "gen[" + std::to_string(r) + "]";
    if (!row.is_array() || row.size() != n) {
      throw Error(ErrorCode::kParseError,
                  where + " must be an array of length " + std::to_string(n));
    }
    Vector v;
    v.reserve(n);
    for (std::size_t c = 0; c < row.size(); ++c) {
      const std::string at = where + "[" + std::to_string(c) + "]";
      if (!row[c].is_number_integer()) {
        throw Error(ErrorCode::kParseError, at + " must be an integer");
      }
      const auto e = row[c].get<std::int64_t>();
      if (e < 0 || !field.Contains(static_cast<std::uint64_t>(e))) {
        throw Error(ErrorCode::kFieldMismatch,
                    at + " = " + std::to_string(e) + " is not in F_" +
                        std::to_string(field.q()));
      }
      v.push_back(static_cast<Elt>(e));
    }
    rows.push_back(std::move(v));
  }
  LinearCode code = LinearCode::FromRows(field, n, rows);
  if (code.dimension() != k) {
    throw Error(ErrorCode::kParseError,
                "\"k\" is " + std::to_string(k) + " but gen has rank " +
                    std::to_string(code.dimension()));
  }
  return code;
}

LinearCode ReadCodeFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kParseError, "cannot open " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return ReadCodeJson(buf.str());
}

void WriteCodeFile(const std::filesystem::path& path, const LinearCode& code) {
  std::ofstream out(path);
  out << WriteCodeJson(code) << '\n';
}

}  // namespace selfdual
