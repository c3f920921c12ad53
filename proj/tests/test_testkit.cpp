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

#include <fstream>
#include <sstream>

#include <doctest.h>

#include "arcwise/io.hpp"
#include "arcwise/testkit.hpp"
#include "support.hpp"

using namespace arcwise;
using namespace arcwise::test;
using namespace arcwise::testkit;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("retrace fixture") {
    const auto path = standard_retrace();
    const auto vs = path.polyline().vertices();
    std::vector<Param> ts;
    for (const auto& v : vs) ts.push_back(v.t);
    CHECK(ts == std::vector<Param>{p("0"), p("1/8"), p("1/4"), p("3/8"), p("1/2"), p("1")});
    CHECK(same_point(path, Param::zero(), p("1/2")));
    CHECK(same_point(path, p("1/4"), Param::one()));
    CHECK_FALSE(same_point(path, Param::zero(), p("1/4")));

    const auto up = segment(xy(0, 0), xy(0, 1));
    try {
        (void)build_retrace_example(up, standard_retrace_gamma());
        FAIL("accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::EndpointMismatch);
    }
}

TEST_CASE("figure eight and lasso fixtures") {
    const auto eight = build_figure_eight();
    CHECK(is_loop(eight));
    CHECK(same_point(eight, Param::zero(), p("1/2")));
    const auto lasso = build_lasso();
    CHECK_FALSE(is_loop(lasso));
    CHECK(same_point(lasso, p("1/4"), p("3/4")));
}

TEST_CASE("quotient fixture") {
    const auto q1 = build_quotient_fixture(1);
    CHECK(labels_of(q1.path) == std::vector<std::string>{"end-", "pair1", "mid", "pair1", "end+"});
    CHECK(q1.pairs == std::vector<ParamPair>{{p("1/4"), p("3/4")}});

    for (unsigned n = 1; n <= 6; ++n) {
        const auto qf = build_quotient_fixture(n);
        CHECK(qf.path.size() == 2 * n + 3);
        CHECK(qf.pairs.size() == n);
        const Path path = qf.path;
        CHECK(loop_deletion_witness(path, qf.pairs) == Verdict::Violated);
        // Strictly nested, and the singleton cancellations form a strictly increasing chain.
        std::vector<LoopCancellation> chain;
        for (std::size_t k = 0; k < qf.pairs.size(); ++k) {
            if (k > 0) {
                CHECK(qf.pairs[k].s < qf.pairs[k - 1].s);
                CHECK(qf.pairs[k - 1].t < qf.pairs[k].t);
            }
            chain.push_back(validate_cancellation(path, fam({OpenInterval(qf.pairs[k].s, qf.pairs[k].t)})));
            if (k > 0) CHECK(compare_families(chain[k - 1].family(), chain[k].family()) == Ordering::Less);
        }
        CHECK(chain_upper_bound(path, chain).family() == chain.back().family());
        const auto lc = maximalize(path, validate_cancellation(path, fam({})));
        CHECK(lc.family() == chain.back().family());
        CHECK_FALSE(injectivity_witness(u_reduction(path, lc).beta).has_value());
    }
    CHECK_THROWS_AS(build_quotient_fixture(0), Error);
}

TEST_CASE("fixture kinds round-trip through names") {
    for (auto k : {FixtureKind::Retrace, FixtureKind::FigureEight, FixtureKind::Lasso, FixtureKind::NestedDiscrete,
                   FixtureKind::Quotient, FixtureKind::RandomPolyline, FixtureKind::RandomDiscrete}) {
        CHECK(parse_fixture_kind(to_string(k)) == k);
    }
    CHECK_FALSE(parse_fixture_kind("spiral").has_value());
}

TEST_CASE("generators are reproducible") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        FixtureSpec spec;
        spec.seed = seed;
        spec.kind = seed % 2 ? FixtureKind::RandomDiscrete : FixtureKind::RandomPolyline;
        spec.loops = seed % 3;
        CHECK(generate_random_path(spec) == generate_random_path(spec));
        std::mt19937_64 a(seed), b(seed);
        const auto path = generate_random_path(spec);
        CHECK(random_collapsible_cancellation(path, a) == random_collapsible_cancellation(path, b));
    }
    FixtureSpec spec;
    spec.kind = FixtureKind::Retrace;
    CHECK_THROWS_AS(generate_random_path(spec), Error);
}

TEST_CASE("random_discrete golden file") {
    FixtureSpec spec;
    spec.kind = FixtureKind::RandomDiscrete;
    spec.seed = 7;
    spec.size = 6;
    spec.alphabet = 3;
    const auto golden = io::parse_document(slurp(ARCWISE_GOLDEN_DIR "/random_discrete_seed7.json"));
    CHECK(io::to_json(generate_random_path(spec)) == golden);
}

TEST_CASE("forced loops create coincidences") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        FixtureSpec spec;
        spec.kind = FixtureKind::RandomPolyline;
        spec.seed = seed;
        spec.loops = 1 + seed % 3;
        CHECK_FALSE(coincidence_set(generate_random_path(spec)).empty());
        spec.loops = 0;
        const auto plain = generate_random_path(spec);
        CHECK(reparam_equivalent(extract_arc(plain), plain));
    }
}
