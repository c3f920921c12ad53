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

// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance [path-to-arcwise-cli]
//
// Without the CLI path, the exit-code half of criterion 6 is reported as
// failed.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

#include "arcwise/io.hpp"
#include "arcwise/report.hpp"
#include "arcwise/testkit.hpp"
#include "support.hpp"

using namespace arcwise;
using namespace arcwise::test;

namespace {

std::string g_cli;

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

bool le(Ordering o) { return o == Ordering::Less || o == Ordering::Equal; }

// 1. Retrace example.
Outcome retrace_example() {
    Outcome out;
    const auto path = testkit::standard_retrace();
    const auto u = validate_cancellation(path, fam({iv("0", "1/2")}));
    const auto v = validate_cancellation(path, fam({iv("1/4", "1")}));
    const auto ru = u_reduction(path, u);
    const auto rv = u_reduction(path, v);
    out.require(!injectivity_witness(ru.beta), "U-reduction not injective");
    out.require(!injectivity_witness(rv.beta), "V-reduction not injective");
    out.require(reparam_equivalent(ru.beta, testkit::standard_retrace_gamma()), "U-reduction is not gamma");
    out.require(reparam_equivalent(rv.beta, testkit::standard_retrace_beta()), "V-reduction is not beta");
    out.require(compare_families(u.family(), v.family()) == Ordering::Incomparable, "U and V comparable");
    out.require(extract(path).cancellation == u, "extraction did not pick U");
    std::ostringstream d;
    d << "U={(0,1/2)} -> gamma, V={(1/4,1)} -> beta, INCOMPARABLE";
    if (out.ok) out.detail = d.str();
    return out;
}

// 2. Extraction pipeline on generated paths.
Outcome pipeline_suite() {
    Outcome out;
    std::size_t polylines = 0, discretes = 0, loops = 0;
    auto check = [&](const Path& path, const std::string& tag) {
        const auto ex = extract(path);
        if (is_loop(path)) {
            ++loops;
            out.require(make_report(path, ex, 0).verified(), tag + ": loop report");
            return false;
        }
        out.require(!injectivity_witness(ex.arc), tag + ": arc not injective");
        out.require(verify::endpoints_preserved(path, ex.arc), tag + ": endpoints moved");
        out.require(verify::image_contained(path, ex.arc, ex.cancellation.family()), tag + ": image escapes");
        out.require(reparam_equivalent(extract_arc(ex.arc), ex.arc), tag + ": not idempotent");
        return true;
    };
    for (std::uint64_t seed = 0; polylines < 250; ++seed) {
        testkit::FixtureSpec spec;
        spec.kind = testkit::FixtureKind::RandomPolyline;
        spec.seed = seed;
        spec.loops = seed % 4;
        spec.size = 2 + (seed / 4) % (11 - 3 * spec.loops);
        spec.generic = seed % 3 != 0;
        const auto path = testkit::generate_random_path(spec);
        out.require(path.breakpoint_count() <= 12, "generator exceeded 12 breakpoints");
        if (check(path, "polyline seed " + std::to_string(seed))) ++polylines;
    }
    for (std::uint64_t seed = 0; discretes < 250; ++seed) {
        testkit::FixtureSpec spec;
        spec.kind = testkit::FixtureKind::RandomDiscrete;
        spec.seed = seed;
        spec.size = 2 + seed % 19;
        spec.alphabet = 2 + seed % 5;
        if (check(testkit::generate_random_path(spec), "discrete seed " + std::to_string(seed))) ++discretes;
    }
    if (out.ok) {
        out.detail = std::to_string(polylines) + " polylines, " + std::to_string(discretes) +
                     " discrete paths (+" + std::to_string(loops) + " loop inputs)";
    }
    return out;
}

// 3. Brute-force oracle over every 3-letter discrete path with n <= 8.
Outcome proposition_oracle() {
    Outcome out;
    std::size_t paths = 0, maxima_checked = 0;
    for (std::size_t n = 2; n <= 8; ++n) {
        std::size_t total = 1;
        for (std::size_t i = 0; i < n; ++i) total *= 3;
        for (std::size_t code = 0; code < total && out.ok; ++code) {
            std::vector<std::string> labels;
            for (std::size_t i = 0, c = code; i < n; ++i, c /= 3) labels.emplace_back(1, static_cast<char>('a' + c % 3));
            const Path path = discrete(labels);
            const auto all = enumerate_cancellations(labels);
            const std::string tag = "path " + std::to_string(n) + "/" + std::to_string(code);
            ++paths;

            if (labels.front() != labels.back()) {
                const auto lc = maximalize(path, validate_cancellation(path, fam({})));
                for (const auto& v : all) {
                    out.require(compare_families(lc.family(), from_indices(v, n)) != Ordering::Less,
                                tag + ": maximalize output is not maximal");
                }
                out.require(!injectivity_witness(u_reduction(path, lc).beta), tag + ": reduction not injective");
            }
            for (const auto& m : maximal_elements(all)) {
                if (!index_collapsible(m, n)) continue;
                ++maxima_checked;
                const auto lc = validate_cancellation(path, from_indices(m, n));
                const auto beta = u_reduction(path, lc).beta;
                out.require(all_distinct(index_reduction(labels, m)), tag + ": oracle reduction not injective");
                out.require(labels_of(beta) == index_reduction(labels, m), tag + ": reduction differs from oracle");
                out.require(!injectivity_witness(beta), tag + ": engine reports a witness");
            }
        }
    }
    if (out.ok) {
        out.detail = std::to_string(paths) + " paths exhaustively, " + std::to_string(maxima_checked) +
                     " maximal collapsible cancellations";
    }
    return out;
}

// 4. Finite chains.
Outcome chain_bound() {
    Outcome out;
    std::mt19937_64 rng(2024);
    std::vector<std::string> labels(12, "a");
    labels.push_back("b");
    const Path path = discrete(labels);
    for (int trial = 0; trial < 100; ++trial) {
        const auto idx = random_index_chain(rng, 1 + draw(rng, 6), 11);
        std::vector<LoopCancellation> chain;
        for (const auto& u : idx) chain.push_back(validate_cancellation(path, from_indices(u, labels.size())));
        const auto ub = chain_upper_bound(path, chain);
        out.require(ub.family() == from_indices(idx.back(), labels.size()), "bound is not the maximum");
        for (const auto& m : chain) {
            out.require(le(compare_families(m.family(), ub.family())), "bound below a member");
            out.require(index_refines(to_indices(m.family(), labels.size()), idx.back()), "oracle order disagrees");
        }
    }
    if (out.ok) out.detail = "100 chains";
    return out;
}

// 5. Cantor maps against the self-similar oracle.
Outcome cantor_checks() {
    Outcome out;
    for (unsigned depth = 1; depth <= 6; ++depth) {
        const auto map = cantor_collapsing_map(depth);
        const auto vs = map.vertices();
        const std::string tag = "depth " + std::to_string(depth);
        out.require(vs.front().t == Param::zero() && vs.front().y == Param::zero(), tag + ": starts off origin");
        out.require(vs.back().t == Param::one() && vs.back().y == Param::one(), tag + ": not onto");
        for (std::size_t k = 0; k + 1 < vs.size(); ++k) {
            out.require(vs[k].t < vs[k + 1].t && vs[k].y <= vs[k + 1].y, tag + ": not monotone");
        }
        const auto plateaus = map.plateaus();
        const auto gaps = cantor_gaps(depth);
        out.require(plateaus.size() == (std::size_t{1} << depth) - 1, tag + ": plateau count");
        out.require(gaps.size() == plateaus.size(), tag + ": oracle gap count");
        for (const auto& [a, b] : gaps) {
            const Rational expected = cantor_value((a + b) / 2, depth);
            out.require(expected >= 0, tag + ": oracle failed to resolve");
            out.require(map.apply(Param(a)).value() == expected, tag + ": value at gap start");
            out.require(map.apply(Param(b)).value() == expected, tag + ": value at gap end");
            out.require(map.apply(Param((a + b) / 2)).value() == expected, tag + ": value inside gap");
        }
    }
    if (out.ok) out.detail = "depths 1..6";
    return out;
}

int run_cli(const std::vector<std::string>& args) {
    std::string cmd = "\"" + g_cli + "\"";
    for (const auto& a : args) cmd += " \"" + a + "\"";
    cmd += " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return status == -1 ? -1 : WEXITSTATUS(status);
}

// 6. Quotient fixtures.
Outcome quotient_counterexample() {
    Outcome out;
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / ("arcwise-acceptance-" + std::to_string(::getpid()));
    fs::create_directories(dir);
    for (unsigned n = 1; n <= 10; ++n) {
        const std::string tag = "N=" + std::to_string(n);
        const auto qf = testkit::build_quotient_fixture(n);
        const Path path = qf.path;
        out.require(loop_deletion_witness(path, qf.pairs) == Verdict::Violated, tag + ": not Violated");

        const auto lc = maximalize(path, validate_cancellation(path, fam({})));
        const auto& outer = qf.pairs.back();
        out.require(lc.family() == fam({OpenInterval(outer.s, outer.t)}), tag + ": not the outermost pair");
        out.require(!injectivity_witness(u_reduction(path, lc).beta), tag + ": reduction not injective");
        if (n <= 4) {
            const auto labels = labels_of(path);
            const auto maxima = maximal_elements(enumerate_cancellations(labels));
            out.require(maxima.size() == 1 && maxima[0] == to_indices(lc.family(), labels.size()),
                        tag + ": brute force disagrees");
        }

        if (g_cli.empty()) {
            out.require(false, "no CLI path given");
            continue;
        }
        const auto path_file = (dir / "q.json").string();
        const auto pairs_file = (dir / "pairs.json").string();
        std::ofstream(path_file) << io::to_json(path).dump();
        std::ofstream(pairs_file) << io::pairs_to_json(qf.pairs).dump();
        out.require(run_cli({"witness", path_file, pairs_file}) == 3, tag + ": CLI exit code is not 3");
    }
    fs::remove_all(dir);
    if (out.ok) out.detail = "N=1..10 Violated (CLI exit 3), outermost pair; brute force N<=4";
    return out;
}

// 7. Canonical versus perturbed collapsing maps.
Outcome reduction_uniqueness() {
    Outcome out;
    std::mt19937_64 rng(77);
    std::size_t done = 0;
    for (std::uint64_t seed = 0; done < 50; ++seed) {
        testkit::FixtureSpec spec;
        spec.kind = testkit::FixtureKind::RandomPolyline;
        spec.seed = seed;
        spec.size = 3 + seed % 5;
        spec.loops = 1 + seed % 3;
        spec.generic = seed % 2 == 0;
        const auto path = testkit::generate_random_path(spec);
        const auto lc = testkit::random_collapsible_cancellation(path, rng);
        if (lc.empty()) continue;
        const auto perturbed = testkit::perturbed_collapsing_map(lc, rng);
        const auto canonical = u_reduction(path, lc);
        out.require(!(perturbed == canonical.gamma), "perturbed map equals the canonical one");
        const auto other = u_reduction(path, lc, perturbed);
        out.require(reparam_equivalent(canonical.beta, other.beta), "seed " + std::to_string(seed) + ": reductions differ");
        ++done;
    }
    if (out.ok) out.detail = "50 cancellations";
    return out;
}

} // namespace

int main(int argc, char** argv) {
    if (argc > 1) g_cli = argv[1];

    struct Criterion {
        int id;
        const char* name;
        double limit_s;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "retrace example reproduction", 1.0, retrace_example},
        {2, "extraction pipeline properties", 30.0, pipeline_suite},
        {3, "maximality oracle (n<=8, 3 letters)", 60.0, proposition_oracle},
        {4, "finite-chain upper bound", 1.0, chain_bound},
        {5, "Cantor collapsing maps", 1.0, cantor_checks},
        {6, "quotient-space counterexample", 1.0, quotient_counterexample},
        {7, "reduction uniqueness up to reparameterization", 5.0, reduction_uniqueness},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = c.run();
        } catch (const std::exception& e) {
            outcome.ok = false;
            outcome.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (outcome.ok && secs >= c.limit_s) {
            outcome.ok = false;
            outcome.detail += " [too slow]";
        }
        failures += outcome.ok ? 0 : 1;
        std::printf("%s  %d  %-46s %7.3fs / %4.0fs  %s\n", outcome.ok ? "PASS" : "FAIL", c.id, c.name, secs,
                    c.limit_s, outcome.detail.c_str());
    }
    std::fflush(stdout);
    return failures == 0 ? 0 : 1;
}
