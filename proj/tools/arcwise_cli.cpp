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

// arcwise command-line tool. Talks to the library only through arcwise.h.
//
// Exit codes: 0 success, 1 input error, 2 internal verification failure,
// 3 loop-deletion violation found.

#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "arcwise/arcwise.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitVerify = 2;
constexpr int kExitViolated = 3;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct StringDeleter {
    void operator()(char* s) const { arcw_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct PathDeleter {
    void operator()(arcw_path* p) const { arcw_path_free(p); }
};
struct FamilyDeleter {
    void operator()(arcw_family* p) const { arcw_family_free(p); }
};
struct CancellationDeleter {
    void operator()(arcw_cancellation* p) const { arcw_cancellation_free(p); }
};
struct ExtractionDeleter {
    void operator()(arcw_extraction* p) const { arcw_extraction_free(p); }
};
using PathPtr = std::unique_ptr<arcw_path, PathDeleter>;
using FamilyPtr = std::unique_ptr<arcw_family, FamilyDeleter>;
using CancellationPtr = std::unique_ptr<arcw_cancellation, CancellationDeleter>;
using ExtractionPtr = std::unique_ptr<arcw_extraction, ExtractionDeleter>;

// Throws InputError carrying the library's diagnostic.
void check(arcw_status status, const std::string& context) {
    if (status == ARCW_OK) return;
    throw InputError(context + ": " + arcw_last_error());
}

std::string take(char* s) {
    OwnedString owned(s);
    return s ? std::string(s) : std::string();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path);
    out << content;
    if (content.empty() || content.back() != '\n') out << '\n';
}

PathPtr load_path(const std::string& file) {
    arcw_path* p = nullptr;
    check(arcw_path_from_json(read_file(file).c_str(), &p), file);
    return PathPtr(p);
}

FamilyPtr load_family(const std::string& file) {
    arcw_family* f = nullptr;
    check(arcw_family_from_json(read_file(file).c_str(), &f), file);
    return FamilyPtr(f);
}

struct Globals {
    bool json = false;
    std::string svg;
};

struct ReduceArgs {
    std::string input, arc, cancellation, map, coincidence;
};

int cmd_reduce(const ReduceArgs& args, const Globals& g) {
    const auto path = load_path(args.input);
    if (!args.coincidence.empty()) {
        char* cs = nullptr;
        check(arcw_path_coincidence_json(path.get(), &cs), "coincidence");
        write_file(args.coincidence, take(cs));
    }

    const auto start = std::chrono::steady_clock::now();
    arcw_extraction* raw = nullptr;
    const arcw_status st = arcw_extract(path.get(), &raw);
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (st == ARCW_E_INTERNAL) {
        std::cerr << "error: internal verification failed: " << arcw_last_error() << "\n";
        return kExitVerify;
    }
    check(st, args.input);
    const ExtractionPtr ex(raw);

    char* s = nullptr;
    if (!args.arc.empty()) {
        check(arcw_extraction_arc_json(ex.get(), &s), "arc");
        write_file(args.arc, take(s));
    }
    if (!args.cancellation.empty()) {
        check(arcw_extraction_cancellation_json(ex.get(), &s), "cancellation");
        write_file(args.cancellation, take(s));
    }
    if (!args.map.empty()) {
        check(arcw_extraction_map_json(ex.get(), &s), "map");
        write_file(args.map, take(s));
    }
    if (!g.svg.empty()) {
        check(arcw_extraction_svg(path.get(), ex.get(), &s), "svg");
        write_file(g.svg, take(s));
    }

    int verified = 0;
    check(arcw_extraction_report(path.get(), ex.get(), ms, g.json ? 1 : 0, &verified, &s), "report");
    std::cout << take(s);
    if (g.json) std::cout << "\n";
    if (!verified) {
        std::cerr << "error: post-verification of the arc failed\n";
        return kExitVerify;
    }
    return kExitOk;
}

int cmd_check(const std::string& input, const std::string& cancellation_file, const Globals& g) {
    const auto path = load_path(input);
    const auto family = load_family(cancellation_file);
    arcw_cancellation* raw = nullptr;
    check(arcw_cancellation_validate(path.get(), family.get(), &raw), cancellation_file);
    const CancellationPtr lc(raw);

    int collapsible = 0;
    check(arcw_cancellation_is_collapsible(lc.get(), &collapsible), "collapsible");
    int injective = 0;
    if (collapsible) check(arcw_cancellation_reduction_injective(path.get(), lc.get(), &injective), "reduce");

    if (g.json) {
        std::cout << "{\"valid\":true,\"collapsible\":" << (collapsible ? "true" : "false")
                  << ",\"reduction_injective\":"
                  << (collapsible ? (injective ? "true" : "false") : "null") << "}\n";
    } else {
        std::cout << "valid:               yes\n"
                  << "collapsible:         " << (collapsible ? "yes" : "no") << "\n"
                  << "reduction injective: " << (collapsible ? (injective ? "yes" : "no") : "n/a")
                  << "\n";
    }
    return kExitOk;
}

int cmd_compare(const std::string& first, const std::string& second) {
    const auto u = load_family(first);
    const auto v = load_family(second);
    arcw_ordering ord{};
    check(arcw_family_compare(u.get(), v.get(), &ord), "compare");
    switch (ord) {
    case ARCW_LESS: std::cout << "LESS\n"; break;
    case ARCW_GREATER: std::cout << "GREATER\n"; break;
    case ARCW_EQUAL: std::cout << "EQUAL\n"; break;
    case ARCW_INCOMPARABLE: std::cout << "INCOMPARABLE\n"; break;
    }
    return kExitOk;
}

int cmd_witness(const std::string& input, const std::string& pairs_file, const Globals& g) {
    const auto path = load_path(input);
    arcw_verdict verdict{};
    check(arcw_loop_deletion_witness(path.get(), read_file(pairs_file).c_str(), &verdict), pairs_file);
    char* s = nullptr;
    check(arcw_path_eval(path.get(), "0", &s), "eval");
    const std::string start = take(s);
    check(arcw_path_eval(path.get(), "1", &s), "eval");
    const std::string end = take(s);
    const char* name = verdict == ARCW_VIOLATED ? "Violated" : "Permits";
    if (g.json) {
        std::cout << "{\"verdict\":\"" << name << "\",\"start\":\"" << start << "\",\"end\":\"" << end
                  << "\"}\n";
    } else {
        std::cout << name << ": path(0) = " << start << ", path(1) = " << end << "\n";
    }
    return verdict == ARCW_VIOLATED ? kExitViolated : kExitOk;
}

int cmd_cantor(int depth, const std::string& out, const Globals& g) {
    if (depth < 1) throw InputError("depth must be at least 1");
    char* map = nullptr;
    char* svg = nullptr;
    check(arcw_cantor_map(static_cast<unsigned>(depth), &map, g.svg.empty() ? nullptr : &svg), "cantor");
    const std::string doc = take(map);
    if (!g.svg.empty()) write_file(g.svg, take(svg));
    if (out.empty()) std::cout << doc << "\n";
    else write_file(out, doc);
    return kExitOk;
}

struct GenArgs {
    std::string kind;
    std::uint64_t seed = 0;
    std::size_t size = 6;
    std::size_t loops = 0;
    std::size_t alphabet = 3;
    unsigned depth = 1;
    bool wander = false;
    std::string out, pairs;
};

int cmd_gen(const GenArgs& a) {
    const arcw_fixture_spec spec{a.kind.c_str(), a.seed, a.size, a.loops, a.alphabet, a.depth, a.wander ? 0 : 1};
    char* doc = nullptr;
    char* pairs = nullptr;
    check(arcw_generate(&spec, &doc, &pairs), "gen");
    const std::string path_doc = take(doc);
    const std::string pairs_doc = take(pairs);
    if (a.out.empty()) std::cout << path_doc << "\n";
    else write_file(a.out, path_doc);
    if (!a.pairs.empty()) {
        if (pairs_doc == "null") throw InputError("--pairs is only available for quotient fixtures");
        write_file(a.pairs, pairs_doc);
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"arcwise: extract arcs from self-intersecting paths"};
    app.require_subcommand(1);
    Globals g;
    app.add_flag("--json", g.json, "machine-readable output");
    app.add_option("--svg", g.svg, "write an SVG figure to this file");
    app.set_version_flag("--version", arcw_version());

    ReduceArgs reduce;
    auto* reduce_cmd = app.add_subcommand("reduce", "extract an arc from a path document");
    reduce_cmd->add_option("input", reduce.input, "path JSON")->required();
    reduce_cmd->add_option("--arc", reduce.arc, "write the arc path JSON");
    reduce_cmd->add_option("--cancellation", reduce.cancellation, "write the cancellation JSON");
    reduce_cmd->add_option("--map", reduce.map, "write the collapsing-map JSON");
    reduce_cmd->add_option("--coincidence", reduce.coincidence, "write the coincidence set JSON");

    std::string check_input, check_cancellation;
    auto* check_cmd = app.add_subcommand("check", "validate a cancellation against a path");
    check_cmd->add_option("input", check_input, "path JSON")->required();
    check_cmd->add_option("cancellation", check_cancellation, "cancellation JSON")->required();

    std::string cmp_a, cmp_b;
    auto* compare_cmd = app.add_subcommand("compare", "order two cancellations");
    compare_cmd->add_option("first", cmp_a, "cancellation JSON")->required();
    compare_cmd->add_option("second", cmp_b, "cancellation JSON")->required();

    std::string wit_input, wit_pairs;
    auto* witness_cmd = app.add_subcommand("witness", "check nested identified pairs against the endpoints");
    witness_cmd->add_option("input", wit_input, "path JSON")->required();
    witness_cmd->add_option("pairs", wit_pairs, "pairs JSON, innermost first")->required();

    int cantor_depth = 0;
    std::string cantor_out;
    auto* cantor_cmd = app.add_subcommand("cantor", "emit the depth-N Cantor collapsing map");
    cantor_cmd->add_option("depth", cantor_depth, "number of stages")->required();
    cantor_cmd->add_option("--out", cantor_out, "write the map JSON here instead of stdout");

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "emit a fixture path document");
    gen_cmd->add_option("kind", gen.kind,
                        "retrace|figure_eight|lasso|nested_discrete|quotient|random_polyline|random_discrete")
        ->required();
    gen_cmd->add_option("--seed", gen.seed, "random seed");
    gen_cmd->add_option("--size", gen.size, "base vertices or samples");
    gen_cmd->add_option("--loops", gen.loops, "forced subloops (random_polyline)");
    gen_cmd->add_option("--alphabet", gen.alphabet, "alphabet size (random_discrete)");
    gen_cmd->add_option("--depth", gen.depth, "identification depth (quotient)");
    gen_cmd->add_flag("--wander", gen.wander, "random_polyline: free random walk instead of an x-monotone base");
    gen_cmd->add_option("--out", gen.out, "write the path JSON here instead of stdout");
    gen_cmd->add_option("--pairs", gen.pairs, "write the identified pairs (quotient)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (*reduce_cmd) return cmd_reduce(reduce, g);
        if (*check_cmd) return cmd_check(check_input, check_cancellation, g);
        if (*compare_cmd) return cmd_compare(cmp_a, cmp_b);
        if (*witness_cmd) return cmd_witness(wit_input, wit_pairs, g);
        if (*cantor_cmd) return cmd_cantor(cantor_depth, cantor_out, g);
        if (*gen_cmd) return cmd_gen(gen);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
