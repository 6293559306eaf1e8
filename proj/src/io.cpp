// Copyright 2026 The Echelon Authors
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

#include "echelon/io.hpp"

#include <sstream>
#include <vector>

#include "echelon/errors.hpp"

namespace echelon {
namespace {

std::vector<int> parse_csv_ints(const std::string& text, const char* what) {
  std::vector<int> out;
  std::string item;
  std::istringstream in(text);
  int field = 0;
  while (std::getline(in, item, ',')) {
    ++field;
    const auto first = item.find_first_not_of(" \t\r\n");
    const auto last = item.find_last_not_of(" \t\r\n");
    const std::string trimmed =
        first == std::string::npos ? "" : item.substr(first, last - first + 1);
    try {
      std::size_t used = 0;
      const int v = std::stoi(trimmed, &used);
      if (used != trimmed.size()) throw std::invalid_argument("trailing characters");
      out.push_back(v);
    } catch (const std::exception&) {
      throw ParseError(std::string(what) + ": field " + std::to_string(field) + " ('" + trimmed +
                       "') is not an integer");
    }
  }
  if (out.empty()) throw ParseError(std::string(what) + ": no values");
  return out;
}

}  // namespace

nlohmann::json poset_to_json(const Poset& p) {
  nlohmann::json covers = nlohmann::json::array();
  for (auto [x, y] : p.cover_pairs()) covers.push_back({x, y});
  nlohmann::json j{{"format", "poset-v1"}, {"n", p.size()}, {"covers", covers}};
  if (!p.names().empty()) j["names"] = p.names();
  return j;
}

Poset poset_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("poset-v1: top level must be an object");
  if (!j.contains("format") || j["format"] != "poset-v1")
    throw ParseError("poset-v1: field 'format' must be \"poset-v1\"");
  if (!j.contains("n") || !j["n"].is_number_integer() || j["n"].get<long long>() < 0)
    throw ParseError("poset-v1: field 'n' must be a non-negative integer");
  const int n = j["n"].get<int>();
  if (!j.contains("covers") || !j["covers"].is_array())
    throw ParseError("poset-v1: field 'covers' must be an array");
  std::vector<Cover> covers;
  int index = 0;
  for (const auto& c : j["covers"]) {
    if (!c.is_array() || c.size() != 2 || !c[0].is_number_integer() || !c[1].is_number_integer())
      throw ParseError("poset-v1: covers[" + std::to_string(index) +
                       "] must be a pair of integers");
    const int x = c[0].get<int>();
    const int y = c[1].get<int>();
    if (x < 0 || x >= n || y < 0 || y >= n)
      throw ParseError("poset-v1: covers[" + std::to_string(index) + "] index out of range");
    covers.emplace_back(x, y);
    ++index;
  }
  std::vector<std::string> names;
  if (j.contains("names")) {
    if (!j["names"].is_array() || static_cast<int>(j["names"].size()) != n)
      throw ParseError("poset-v1: field 'names' must be an array of n strings");
    for (const auto& s : j["names"]) {
      if (!s.is_string()) throw ParseError("poset-v1: field 'names' must contain strings");
      names.push_back(s.get<std::string>());
    }
  }
  try {
    return Poset::from_covers(n, covers, std::move(names));
  } catch (const CycleError& e) {
    throw ParseError(std::string("poset-v1: covers: ") + e.what());
  }
}

std::string write_poset(const Poset& p) { return poset_to_json(p).dump(); }

Poset read_poset(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("poset-v1: malformed JSON at byte " + std::to_string(e.byte) + ": " +
                     e.what());
  }
  return poset_from_json(j);
}

std::string format_extension(const LinearExtension& sigma) {
  std::string out;
  for (int pos : sigma.positions()) {
    if (!out.empty()) out += ",";
    out += std::to_string(pos);
  }
  return out;
}

LinearExtension parse_extension(const Poset& p, const std::string& text) {
  const std::vector<int> positions = parse_csv_ints(text, "extension");
  if (static_cast<int>(positions.size()) != p.size())
    throw ParseError("extension: expected " + std::to_string(p.size()) + " positions, got " +
                     std::to_string(positions.size()));
  try {
    return LinearExtension::from_positions(p, positions);
  } catch (const InputError& e) {
    throw ParseError(std::string("extension: ") + e.what());
  }
}

std::string format_bijection(const ElementBijection& f) {
  std::string out;
  for (int y : f.image()) {
    if (!out.empty()) out += ",";
    out += std::to_string(y + 1);
  }
  return out;
}

ElementBijection parse_bijection(const std::string& text) {
  std::vector<int> image = parse_csv_ints(text, "bijection");
  for (int& y : image) --y;
  try {
    return ElementBijection(std::move(image));
  } catch (const InputError& e) {
    throw ParseError(std::string("bijection: ") + e.what());
  }
}

}  // namespace echelon
