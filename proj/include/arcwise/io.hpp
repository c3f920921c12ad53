// Copyright 2026 The Arcwise Authors
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

#ifndef ARCWISE_IO_HPP
#define ARCWISE_IO_HPP

// JSON documents. Every number is an exact rational string "p/q".
//
//   path:         {"kind":"polyline","dim":2,"vertices":[{"t":"0/1","p":["0/1","0/1"]},...]}
//                 {"kind":"discrete","labels":["a","b",...]}
//   cancellation: {"intervals":[["1/3","2/3"],...]}
//   map:          {"vertices":[["0/1","0/1"],...]}
//   pairs:        {"pairs":[["1/4","3/4"],...]}
//   reduction:    {"arc":<path>,"cancellation":<cancellation>,"collapsing_map":<map>|null}
//
// Parse failures throw Error{Parse} naming the JSON pointer of the offending
// value, e.g. `/vertices/1/t: zero denominator in "1/0"`.

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "arcwise/cancellation.hpp"
#include "arcwise/coincidence.hpp"
#include "arcwise/reduction.hpp"

namespace arcwise::io {

using json = nlohmann::json;

json parse_document(std::string_view text);

json to_json(const Path& path);
Path path_from_json(const json& doc);

json to_json(const IntervalFamily& family);
IntervalFamily family_from_json(const json& doc);

json to_json(const CollapsingMap& map);
CollapsingMap map_from_json(const json& doc, const IntervalFamily& family);

json pairs_to_json(const std::vector<ParamPair>& pairs);
std::vector<ParamPair> pairs_from_json(const json& doc);

json to_json(const CoincidenceSet& cs);
json to_json(const ArcExtraction& extraction);

} // namespace arcwise::io

#endif // ARCWISE_IO_HPP
