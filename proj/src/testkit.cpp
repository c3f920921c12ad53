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

#include "arcwise/testkit.hpp"

#include <algorithm>
#include <array>

namespace arcwise::testkit {

namespace {

constexpr std::array<std::pair<FixtureKind, const char*>, 7> kKindNames{{
    {FixtureKind::Retrace, "retrace"},
    {FixtureKind::FigureEight, "figure_eight"},
    {FixtureKind::Lasso, "lasso"},
    {FixtureKind::NestedDiscrete, "nested_discrete"},
    {FixtureKind::Quotient, "quotient"},
    {FixtureKind::RandomPolyline, "random_polyline"},
    {FixtureKind::RandomDiscrete, "random_discrete"},
}};

// Portable bounded draw; std::uniform_int_distribution differs between
// standard libraries and would break golden files.
std::size_t draw(std::mt19937_64& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

Coords pt(long x, long y, unsigned long den = 1) { return {ratio(x, den), ratio(y, den)}; }

Coords random_grid_point(std::mt19937_64& rng) {
    return pt(static_cast<long>(draw(rng, 5)), static_cast<long>(draw(rng, 5)), 2);
}

} // namespace

const char* to_string(FixtureKind kind) noexcept {
    for (const auto& [k, name] : kKindNames) {
        if (k == kind) return name;
    }
    return "unknown";
}

std::optional<FixtureKind> parse_fixture_kind(std::string_view name) {
    for (const auto& [k, n] : kKindNames) {
        if (name == n) return k;
    }
    return std::nullopt;
}

Path build_retrace_example(const Path& beta, const Path& gamma) {
    if (eval(beta, Param::zero()) != eval(gamma, Param::zero()) ||
        eval(beta, Param::one()) != eval(gamma, Param::one())) {
        throw Error(ErrorCode::EndpointMismatch, "beta and gamma must share both endpoints");
    }
    if (injectivity_witness(beta) || injectivity_witness(gamma)) {
        throw Error(ErrorCode::InvalidArgument, "beta and gamma must be injective");
    }
    return concat(concat(beta, reverse(beta)), gamma);
}

Path standard_retrace_beta() { return PolylinePath::uniform({pt(0, 0), pt(1, 2, 2), pt(1, 0)}); }

Path standard_retrace_gamma() { return PolylinePath::uniform({pt(0, 0), pt(1, 0)}); }

Path standard_retrace() {
    return build_retrace_example(standard_retrace_beta(), standard_retrace_gamma());
}

Path build_figure_eight() {
    return PolylinePath::uniform(
        {pt(0, 0), pt(1, 1), pt(1, -1), pt(0, 0), pt(-1, 1), pt(-1, -1), pt(0, 0)});
}

Path build_lasso() {
    return PolylinePath({{Param::zero(), pt(-1, 0)},
                         {Param(1, 4), pt(0, 0)},
                         {Param(3, 8), pt(1, 1)},
                         {Param(1, 2), pt(2, 0)},
                         {Param(5, 8), pt(1, -1)},
                         {Param(3, 4), pt(0, 0)},
                         {Param::one(), pt(1, 0)}});
}

Path build_nested_discrete() { return DiscretePath({"a", "b", "c", "b", "a", "d"}); }

QuotientFixture build_quotient_fixture(unsigned depth) {
    if (depth == 0) throw Error(ErrorCode::InvalidArgument, "quotient depth must be at least 1");
    std::vector<std::string> labels{"end-"};
    for (unsigned n = depth; n >= 1; --n) labels.push_back("pair" + std::to_string(n));
    labels.push_back("mid");
    for (unsigned n = 1; n <= depth; ++n) labels.push_back("pair" + std::to_string(n));
    labels.push_back("end+");

    DiscretePath path(std::move(labels));
    std::vector<ParamPair> pairs;
    const std::size_t center = depth + 1;
    for (unsigned n = 1; n <= depth; ++n) {
        pairs.push_back({path.sample_param(center - n), path.sample_param(center + n)});
    }
    return {std::move(path), std::move(pairs)};
}

Path generate_random_path(const FixtureSpec& spec) {
    std::mt19937_64 rng(spec.seed);
    if (spec.kind == FixtureKind::RandomDiscrete) {
        if (spec.size < 2 || spec.alphabet < 1 || spec.alphabet > 26) {
            throw Error(ErrorCode::InvalidArgument, "random_discrete needs size >= 2 and 1..26 letters");
        }
        std::vector<std::string> labels;
        for (std::size_t i = 0; i < spec.size; ++i) {
            labels.emplace_back(1, static_cast<char>('a' + draw(rng, spec.alphabet)));
        }
        return DiscretePath(std::move(labels), true);
    }
    if (spec.kind != FixtureKind::RandomPolyline) {
        throw Error(ErrorCode::InvalidArgument, "not a random fixture kind");
    }
    if (spec.size < 2) throw Error(ErrorCode::InvalidArgument, "random_polyline needs size >= 2");

    std::vector<Coords> pts;
    for (std::size_t i = 0; i < spec.size; ++i) {
        if (spec.generic) {
            // Graph of a function of x: injective by construction.
            pts.push_back(pt(static_cast<long>(i), static_cast<long>(draw(rng, 5)), 2));
        } else {
            Coords p = random_grid_point(rng);
            while (!pts.empty() && p == pts.back()) p = random_grid_point(rng);
            pts.push_back(std::move(p));
        }
    }
    for (std::size_t k = 0; k < spec.loops; ++k) {
        // Splice anchor -> q1 -> q2 -> anchor right after a random vertex.
        const std::size_t at = draw(rng, pts.size() - 1);
        const Coords anchor = pts[at];
        Coords q1 = random_grid_point(rng);
        while (q1 == anchor) q1 = random_grid_point(rng);
        Coords q2 = random_grid_point(rng);
        while (q2 == q1 || q2 == anchor) q2 = random_grid_point(rng);
        const auto pos = pts.begin() + static_cast<std::ptrdiff_t>(at + 1);
        pts.insert(pos, {q1, q2, anchor});
    }
    return PolylinePath::uniform(pts);
}

Path build_fixture(const FixtureSpec& spec) {
    switch (spec.kind) {
    case FixtureKind::Retrace: return standard_retrace();
    case FixtureKind::FigureEight: return build_figure_eight();
    case FixtureKind::Lasso: return build_lasso();
    case FixtureKind::NestedDiscrete: return build_nested_discrete();
    case FixtureKind::Quotient: return build_quotient_fixture(spec.depth).path;
    case FixtureKind::RandomPolyline:
    case FixtureKind::RandomDiscrete: return generate_random_path(spec);
    }
    throw Error(ErrorCode::InvalidArgument, "unknown fixture kind");
}

LoopCancellation random_collapsible_cancellation(const Path& path, std::mt19937_64& rng,
                                                 std::size_t max_intervals) {
    auto candidates = candidate_endpoints(coincidence_set(path));
    std::shuffle(candidates.begin(), candidates.end(), rng);
    const std::size_t want = candidates.empty() ? 0 : 1 + draw(rng, max_intervals);
    std::vector<OpenInterval> chosen;
    for (const auto& c : candidates) {
        if (chosen.size() >= want) break;
        if (c.s == Param::zero() && c.t == Param::one()) continue;
        OpenInterval iv(c.s, c.t);
        const bool clear = std::none_of(chosen.begin(), chosen.end(),
                                        [&](const OpenInterval& o) { return o.closure_meets(iv); });
        if (clear) chosen.push_back(std::move(iv));
    }
    return validate_cancellation(path, IntervalFamily::normalize(std::move(chosen)));
}

CollapsingMap perturbed_collapsing_map(const LoopCancellation& lc, std::mt19937_64& rng) {
    const auto& family = lc.family();
    if (!has_disjoint_closures(family)) {
        throw Error(ErrorCode::NotCollapsible, "family is not collapsible");
    }
    // Gaps between closures, with a random positive weight each.
    std::vector<std::pair<Param, Param>> gaps;
    Param cursor = Param::zero();
    for (const auto& iv : family) {
        gaps.emplace_back(cursor, iv.lo());
        cursor = iv.hi();
    }
    gaps.emplace_back(cursor, Param::one());
    std::vector<Rational> weights;
    Rational total = 0;
    for (const auto& [lo, hi] : gaps) {
        Rational w = lo == hi ? Rational(0) : Rational(static_cast<long>(1 + draw(rng, 7)));
        total += w;
        weights.push_back(w);
    }

    std::vector<CollapsingMap::Node> vs;
    Rational level = 0;
    for (std::size_t g = 0; g < gaps.size(); ++g) {
        const auto& [lo, hi] = gaps[g];
        const Rational next_level = level + weights[g] / total;
        if (vs.empty() || vs.back().t != lo) vs.push_back({lo, Param(level)});
        if (lo != hi) {
            // One extra breakpoint at a random split of the gap.
            const Rational at = ratio(static_cast<long>(1 + draw(rng, 4)), 5);
            const Rational rise = ratio(static_cast<long>(1 + draw(rng, 4)), 5);
            vs.push_back({Param(lo.value() + at * (hi.value() - lo.value())),
                          Param(level + rise * (next_level - level))});
            vs.push_back({hi, Param(next_level)});
        }
        level = next_level;
    }
    return CollapsingMap::from_vertices(std::move(vs), family);
}

} // namespace arcwise::testkit
