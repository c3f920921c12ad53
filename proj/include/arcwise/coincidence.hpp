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

#ifndef ARCWISE_COINCIDENCE_HPP
#define ARCWISE_COINCIDENCE_HPP

#include <optional>
#include <vector>

#include "arcwise/path.hpp"

namespace arcwise {

// A pair of parameters s < t with path(s) == path(t).
struct ParamPair {
    Param s;
    Param t;

    friend bool operator==(const ParamPair&, const ParamPair&) = default;
    friend std::strong_ordering operator<=>(const ParamPair& a, const ParamPair& b) {
        if (auto c = a.s <=> b.s; c != 0) return c;
        return a.t <=> b.t;
    }
};

// Straight segment of coincident pairs in the parameter square, from
// `start` to `end` with start.s < end.s. Interior points satisfy s < t;
// an endpoint may sit on the diagonal where a path doubles back.
struct CoincidenceSegment {
    ParamPair start;
    ParamPair end;

    // t coordinate at s, for start.s <= s <= end.s.
    Param t_at(const Param& s) const;
    bool contains(const ParamPair& p) const;

    friend bool operator==(const CoincidenceSegment&, const CoincidenceSegment&) = default;
};

struct CoincidenceSet {
    std::vector<ParamPair> points;             // sorted, off every segment
    std::vector<CoincidenceSegment> segments;  // sorted by start
    std::vector<Param> breakpoints;            // of the source path

    bool empty() const { return points.empty() && segments.empty(); }
};

// Every (s, t) with s < t and path(s) == path(t) lies in a listed point or
// segment. Discrete paths report all sample pairs with equal labels.
// Throws Error{InvalidArgument} for polylines containing stalls.
CoincidenceSet coincidence_set(const Path& path);

// Isolated points, segment endpoints off the diagonal, and segment points
// whose s or t is a breakpoint of the path. Sorted and unique.
std::vector<ParamPair> candidate_endpoints(const CoincidenceSet& cs);

} // namespace arcwise

#endif // ARCWISE_COINCIDENCE_HPP
