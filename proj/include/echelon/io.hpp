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

#ifndef ECHELON_IO_HPP
#define ECHELON_IO_HPP

#include <string>

#include <json.hpp>

#include "echelon/poset.hpp"

namespace echelon {

// poset-v1:
//   {"format":"poset-v1","n":5,"covers":[[0,1],...],"names":["1",...]}
// 0-based indices; covers may contain redundant pairs. "names" is optional.
nlohmann::json poset_to_json(const Poset& p);
Poset poset_from_json(const nlohmann::json& j);
std::string write_poset(const Poset& p);
/// Throws ParseError with the offending field or byte offset.
Poset read_poset(const std::string& text);

/// 1-based positions listed by element index, e.g. "1,2,3,4,5".
std::string format_extension(const LinearExtension& sigma);
LinearExtension parse_extension(const Poset& p, const std::string& text);

/// 1-based images listed by element index, e.g. "5,3,2,1,4".
std::string format_bijection(const ElementBijection& f);
ElementBijection parse_bijection(const std::string& text);

}  // namespace echelon

#endif  // ECHELON_IO_HPP
