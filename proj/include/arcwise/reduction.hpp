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

#ifndef ARCWISE_REDUCTION_HPP
#define ARCWISE_REDUCTION_HPP

#include <optional>
#include <span>
#include <vector>

#include "arcwise/cancellation.hpp"
#include "arcwise/coincidence.hpp"
#include "arcwise/path.hpp"

namespace arcwise {

// Monotone piecewise-linear surjection of [0,1] onto itself. Its zero-slope
// spans (plateaus) cover exactly the closures of the family it was built
// for; everywhere else it strictly increases.
class CollapsingMap {
public:
    struct Node {
        Param t;
        Param y;
        friend bool operator==(const Node&, const Node&) = default;
    };

    // Checks the monotone-surjection contract against `family`; throws
    // Error{InvalidArgument} on any violation.
    static CollapsingMap from_vertices(std::vector<Node> vertices, const IntervalFamily& family);

    std::span<const Node> vertices() const noexcept { return vertices_; }
    Param apply(const Param& t) const;

    // Smallest / largest t with apply(t) == y.
    Param preimage_min(const Param& y) const;
    Param preimage_max(const Param& y) const;

    // Maximal zero-slope runs as closed parameter spans [lo, hi].
    std::vector<std::pair<Param, Param>> plateaus() const;

    friend bool operator==(const CollapsingMap&, const CollapsingMap&) = default;

private:
    explicit CollapsingMap(std::vector<Node> vertices) : vertices_(std::move(vertices)) {}

    std::vector<Node> vertices_;
};

// True when the closures of the members are pairwise disjoint and the
// family is not {(0,1)}.
bool has_disjoint_closures(const IntervalFamily& family);

// Canonical map: each gap between closures keeps its share of the total
// gap length. Throws Error{NotCollapsible}.
CollapsingMap collapsing_map(const IntervalFamily& family);
CollapsingMap collapsing_map(const LoopCancellation& lc);

// Middle thirds removed through stage `depth` (2^depth - 1 intervals).
IntervalFamily cantor_family(unsigned depth);
// Throws Error{InvalidArgument} for depth 0.
CollapsingMap cantor_collapsing_map(unsigned depth);

// The path held constant at path(a) on each closure [a,b]; unchanged elsewhere.
Path collapse_path(const Path& path, const LoopCancellation& lc);

struct ReductionResult {
    Path beta;
    CollapsingMap gamma;
    Path collapsed;
    LoopCancellation cancellation;
};

// beta with beta o gamma == collapse_path(path, lc), verified exactly.
ReductionResult u_reduction(const Path& path, const LoopCancellation& lc);
// Same, against a caller-supplied collapsing map for lc's family. Discrete
// paths need a map that sends the sample grid onto the reduced grid.
ReductionResult u_reduction(const Path& path, const LoopCancellation& lc,
                            const CollapsingMap& gamma);

// Some x < y with path(x) == path(y): the smallest such x, then the largest
// y. For a polyline with stalls the earliest stall is reported.
std::optional<ParamPair> injectivity_witness(const Path& path);

struct MaximalizeStats {
    std::size_t iterations = 0;
    // Breakpoint count of the reduction examined at each iteration.
    std::vector<std::size_t> reduction_sizes;
};

// Extends `seed` until its reduction is injective. Throws Error{IsLoop}
// when path(0) == path(1).
LoopCancellation maximalize(const Path& path, const LoopCancellation& seed,
                            MaximalizeStats* stats = nullptr);

struct ArcExtraction {
    Path arc;
    LoopCancellation cancellation;
    std::optional<CollapsingMap> gamma;  // absent for loops
    std::size_t iterations = 0;
    bool input_was_loop = false;
};

// Loops yield the constant path at path(0) with cancellation {(0,1)}.
ArcExtraction extract(const Path& path);
inline Path extract_arc(const Path& path) { return extract(path).arc; }

} // namespace arcwise

#endif // ARCWISE_REDUCTION_HPP
