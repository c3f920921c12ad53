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

#ifndef ARCWISE_TESTKIT_HPP
#define ARCWISE_TESTKIT_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

#include "arcwise/cancellation.hpp"
#include "arcwise/reduction.hpp"

namespace arcwise::testkit {

enum class FixtureKind {
    Retrace,
    FigureEight,
    Lasso,
    NestedDiscrete,
    Quotient,
    RandomPolyline,
    RandomDiscrete,
};

const char* to_string(FixtureKind kind) noexcept;
std::optional<FixtureKind> parse_fixture_kind(std::string_view name);

struct FixtureSpec {
    FixtureKind kind = FixtureKind::RandomDiscrete;
    std::uint64_t seed = 0;
    std::size_t size = 6;      // base vertices / samples
    std::size_t loops = 0;     // forced subloops (random_polyline)
    std::size_t alphabet = 3;  // random_discrete
    unsigned depth = 1;        // quotient
    bool generic = true;       // random_polyline: x-monotone base, no accidental crossings
};

// concat(concat(beta, reverse(beta)), gamma): beta on [0,1/4], its reverse
// on [1/4,1/2], gamma on [1/2,1]. Both inputs must be injective with shared
// endpoints; disjointness of the interiors is the caller's responsibility.
Path build_retrace_example(const Path& beta, const Path& gamma);

// The upper arc (0,0)->(1/2,1)->(1,0) and the lower segment (0,0)->(1,0).
Path standard_retrace_beta();
Path standard_retrace_gamma();
Path standard_retrace();

// Loop through the origin at t = 0, 1/2, 1 (two triangles).
Path build_figure_eight();
// Path (-1,0) -> (0,0), a triangular loop back to (0,0) on [1/4,3/4], then on to (1,0).
Path build_lasso();
// [a,b,c,b,a,d]
Path build_nested_discrete();

struct QuotientFixture {
    DiscretePath path;
    std::vector<ParamPair> pairs;  // innermost first
};

// Samples at -1, -N/(N+1), ..., -1/2, 0, 1/2, ..., N/(N+1), 1 where
// -n/(n+1) and n/(n+1) share the label "pair<n>".
QuotientFixture build_quotient_fixture(unsigned depth);

Path generate_random_path(const FixtureSpec& spec);
Path build_fixture(const FixtureSpec& spec);

// A collapsible cancellation with up to `max_intervals` members, drawn from
// the path's coincidence candidates.
LoopCancellation random_collapsible_cancellation(const Path& path, std::mt19937_64& rng,
                                                 std::size_t max_intervals = 3);

// A valid collapsing map for lc's family whose gap lengths and interior
// breakpoints differ from the canonical map.
CollapsingMap perturbed_collapsing_map(const LoopCancellation& lc, std::mt19937_64& rng);

} // namespace arcwise::testkit

#endif // ARCWISE_TESTKIT_HPP
