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

#include "arcwise/io.hpp"

namespace arcwise::io {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw Error(ErrorCode::Parse, (where.empty() ? "/" : where) + ": " + what);
}

const json& field(const json& obj, const char* key, const std::string& where) {
    if (!obj.is_object()) fail(where, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) fail(where, std::string("missing \"") + key + "\"");
    return *it;
}

const json& array_at(const json& obj, const char* key, const std::string& where) {
    const auto& a = field(obj, key, where);
    if (!a.is_array()) fail(where + "/" + key, "expected an array");
    return a;
}

Rational rational_at(const json& v, const std::string& where) {
    if (!v.is_string()) fail(where, "expected a rational string \"p/q\"");
    try {
        return parse_rational(v.get<std::string>());
    } catch (const Error& e) {
        fail(where, e.what());
    }
}

Param param_at(const json& v, const std::string& where) {
    try {
        return Param(rational_at(v, where));
    } catch (const Error& e) {
        if (e.code() == ErrorCode::Parse) throw;
        fail(where, e.what());
    }
}

std::vector<std::pair<Param, Param>> param_pairs(const json& list, const std::string& where) {
    std::vector<std::pair<Param, Param>> out;
    for (std::size_t i = 0; i < list.size(); ++i) {
        const std::string at = where + "/" + std::to_string(i);
        if (!list[i].is_array() || list[i].size() != 2) fail(at, "expected a pair [\"p/q\",\"p/q\"]");
        out.emplace_back(param_at(list[i][0], at + "/0"), param_at(list[i][1], at + "/1"));
    }
    return out;
}

bool optional_flag(const json& doc, const char* key, const std::string& where) {
    auto it = doc.find(key);
    if (it == doc.end()) return false;
    if (!it->is_boolean()) fail(where + "/" + key, "expected a boolean");
    return it->get<bool>();
}

} // namespace

json parse_document(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::Parse, std::string("malformed JSON: ") + e.what());
    }
}

json to_json(const Path& path) {
    if (!path.is_polyline()) {
        json doc{{"kind", "discrete"}, {"labels", path.discrete().labels()}};
        if (path.discrete().allows_repeats()) doc["allow_repeats"] = true;
        return doc;
    }
    const auto& poly = path.polyline();
    json vertices = json::array();
    for (const auto& v : poly.vertices()) {
        json p = json::array();
        for (const auto& c : v.p) p.push_back(format_rational(c));
        vertices.push_back({{"t", v.t.str()}, {"p", std::move(p)}});
    }
    json doc{{"kind", "polyline"}, {"dim", poly.dim()}, {"vertices", std::move(vertices)}};
    if (poly.allows_stalls()) doc["allow_stalls"] = true;
    return doc;
}

Path path_from_json(const json& doc) {
    const auto& kind = field(doc, "kind", "");
    if (kind == "discrete") {
        const auto& labels = array_at(doc, "labels", "");
        std::vector<std::string> out;
        for (std::size_t i = 0; i < labels.size(); ++i) {
            if (!labels[i].is_string()) fail("/labels/" + std::to_string(i), "expected a string label");
            out.push_back(labels[i].get<std::string>());
        }
        try {
            return DiscretePath(std::move(out), optional_flag(doc, "allow_repeats", ""));
        } catch (const Error& e) {
            fail("/labels", e.what());
        }
    }
    if (kind != "polyline") fail("/kind", "expected \"polyline\" or \"discrete\"");

    const auto& dim_v = field(doc, "dim", "");
    if (!dim_v.is_number_unsigned() || dim_v.get<std::size_t>() == 0) fail("/dim", "expected a positive integer");
    const auto dim = dim_v.get<std::size_t>();
    const auto& list = array_at(doc, "vertices", "");
    std::vector<Vertex> vs;
    for (std::size_t k = 0; k < list.size(); ++k) {
        const std::string at = "/vertices/" + std::to_string(k);
        Param t = param_at(field(list[k], "t", at), at + "/t");
        const auto& p = field(list[k], "p", at);
        if (!p.is_array() || p.size() != dim) {
            fail(at + "/p", "expected " + std::to_string(dim) + " coordinates");
        }
        Coords c;
        for (std::size_t i = 0; i < dim; ++i) c.push_back(rational_at(p[i], at + "/p/" + std::to_string(i)));
        vs.push_back({std::move(t), std::move(c)});
    }
    try {
        return PolylinePath(std::move(vs), optional_flag(doc, "allow_stalls", ""));
    } catch (const Error& e) {
        const std::string at = e.first() == Error::npos ? "/vertices" : "/vertices/" + std::to_string(e.first());
        fail(at, e.what());
    }
}

json to_json(const IntervalFamily& family) {
    json list = json::array();
    for (const auto& iv : family) list.push_back({iv.lo().str(), iv.hi().str()});
    return {{"intervals", std::move(list)}};
}

IntervalFamily family_from_json(const json& doc) {
    std::vector<OpenInterval> raw;
    std::size_t i = 0;
    for (auto& [lo, hi] : param_pairs(array_at(doc, "intervals", ""), "/intervals")) {
        if (!(lo < hi)) fail("/intervals/" + std::to_string(i), "interval must satisfy lo < hi");
        raw.emplace_back(std::move(lo), std::move(hi));
        ++i;
    }
    return IntervalFamily::normalize(std::move(raw));
}

json to_json(const CollapsingMap& map) {
    json list = json::array();
    for (const auto& n : map.vertices()) list.push_back({n.t.str(), n.y.str()});
    return {{"vertices", std::move(list)}};
}

CollapsingMap map_from_json(const json& doc, const IntervalFamily& family) {
    std::vector<CollapsingMap::Node> vs;
    for (auto& [t, y] : param_pairs(array_at(doc, "vertices", ""), "/vertices")) {
        vs.push_back({std::move(t), std::move(y)});
    }
    return CollapsingMap::from_vertices(std::move(vs), family);
}

json pairs_to_json(const std::vector<ParamPair>& pairs) {
    json list = json::array();
    for (const auto& p : pairs) list.push_back({p.s.str(), p.t.str()});
    return {{"pairs", std::move(list)}};
}

std::vector<ParamPair> pairs_from_json(const json& doc) {
    std::vector<ParamPair> out;
    for (auto& [a, b] : param_pairs(array_at(doc, "pairs", ""), "/pairs")) {
        out.push_back({std::move(a), std::move(b)});
    }
    return out;
}

json to_json(const CoincidenceSet& cs) {
    json points = json::array();
    for (const auto& p : cs.points) points.push_back({p.s.str(), p.t.str()});
    json segments = json::array();
    for (const auto& s : cs.segments) {
        segments.push_back({{s.start.s.str(), s.start.t.str()}, {s.end.s.str(), s.end.t.str()}});
    }
    return {{"points", std::move(points)}, {"segments", std::move(segments)}};
}

json to_json(const ArcExtraction& extraction) {
    return {{"arc", to_json(extraction.arc)},
            {"cancellation", to_json(extraction.cancellation.family())},
            {"collapsing_map", extraction.gamma ? to_json(*extraction.gamma) : json(nullptr)}};
}

} // namespace arcwise::io
