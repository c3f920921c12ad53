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

#include "arcwise/arcwise.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "arcwise/io.hpp"
#include "arcwise/reduction.hpp"
#include "arcwise/report.hpp"
#include "arcwise/testkit.hpp"

struct arcw_path {
    arcwise::Path value;
};
struct arcw_family {
    arcwise::IntervalFamily value;
};
struct arcw_cancellation {
    arcwise::LoopCancellation value;
};
struct arcw_extraction {
    arcwise::ArcExtraction value;
};

namespace {

thread_local std::string g_last_error;

arcw_status fail(arcw_status status, const std::string& message) {
    g_last_error = message;
    return status;
}

// Runs `body`, translating exceptions into status codes.
template <class F>
arcw_status guarded(F&& body) {
    try {
        body();
        return ARCW_OK;
    } catch (const arcwise::Error& e) {
        return fail(static_cast<arcw_status>(static_cast<int>(e.code())),
                    std::string(arcwise::to_string(e.code())) + ": " + e.what());
    } catch (const std::bad_alloc&) {
        return fail(ARCW_E_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(ARCW_E_INTERNAL, e.what());
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void put(char** out, const std::string& s) { *out = dup_string(s); }

#define ARCW_REQUIRE(...)                                                   \
    do {                                                                    \
        const void* ptrs_[] = {__VA_ARGS__};                                \
        for (const void* p_ : ptrs_) {                                      \
            if (!p_) return fail(ARCW_E_NULL_ARGUMENT, "null argument");    \
        }                                                                   \
    } while (0)

} // namespace

extern "C" {

const char* arcw_version(void) { return "1.0.0"; }

const char* arcw_last_error(void) { return g_last_error.c_str(); }

const char* arcw_status_name(arcw_status status) {
    switch (status) {
    case ARCW_OK: return "OK";
    case ARCW_E_NULL_ARGUMENT: return "NullArgument";
    default: return arcwise::to_string(static_cast<arcwise::ErrorCode>(status));
    }
}

void arcw_string_free(char* s) { std::free(s); }

arcw_status arcw_path_from_json(const char* json, arcw_path** out) {
    ARCW_REQUIRE(json, out);
    return guarded([&] {
        *out = new arcw_path{arcwise::io::path_from_json(arcwise::io::parse_document(json))};
    });
}

arcw_status arcw_path_to_json(const arcw_path* path, char** out) {
    ARCW_REQUIRE(path, out);
    return guarded([&] { put(out, arcwise::io::to_json(path->value).dump()); });
}

arcw_status arcw_path_is_loop(const arcw_path* path, int* out) {
    ARCW_REQUIRE(path, out);
    return guarded([&] { *out = arcwise::is_loop(path->value) ? 1 : 0; });
}

arcw_status arcw_path_eval(const arcw_path* path, const char* t, char** out) {
    ARCW_REQUIRE(path, t, out);
    return guarded([&] {
        put(out, arcwise::to_string(arcwise::eval(path->value, arcwise::Param(arcwise::parse_rational(t)))));
    });
}

arcw_status arcw_path_breakpoint_count(const arcw_path* path, size_t* out) {
    ARCW_REQUIRE(path, out);
    return guarded([&] { *out = path->value.breakpoint_count(); });
}

arcw_status arcw_path_coincidence_json(const arcw_path* path, char** out) {
    ARCW_REQUIRE(path, out);
    return guarded([&] {
        put(out, arcwise::io::to_json(arcwise::coincidence_set(path->value)).dump());
    });
}

arcw_status arcw_path_injectivity_witness(const arcw_path* path, int* found, char** pair_json) {
    ARCW_REQUIRE(path, found, pair_json);
    return guarded([&] {
        const auto w = arcwise::injectivity_witness(path->value);
        *found = w ? 1 : 0;
        *pair_json = nullptr;
        if (w) put(pair_json, arcwise::io::json::array({w->s.str(), w->t.str()}).dump());
    });
}

arcw_status arcw_path_reparam_equivalent(const arcw_path* a, const arcw_path* b, int* out) {
    ARCW_REQUIRE(a, b, out);
    return guarded([&] { *out = arcwise::reparam_equivalent(a->value, b->value) ? 1 : 0; });
}

void arcw_path_free(arcw_path* path) { delete path; }

arcw_status arcw_family_from_json(const char* json, arcw_family** out) {
    ARCW_REQUIRE(json, out);
    return guarded([&] {
        *out = new arcw_family{arcwise::io::family_from_json(arcwise::io::parse_document(json))};
    });
}

arcw_status arcw_family_compare(const arcw_family* u, const arcw_family* v, arcw_ordering* out) {
    ARCW_REQUIRE(u, v, out);
    return guarded([&] {
        switch (arcwise::compare_families(u->value, v->value)) {
        case arcwise::Ordering::Less: *out = ARCW_LESS; break;
        case arcwise::Ordering::Greater: *out = ARCW_GREATER; break;
        case arcwise::Ordering::Equal: *out = ARCW_EQUAL; break;
        case arcwise::Ordering::Incomparable: *out = ARCW_INCOMPARABLE; break;
        }
    });
}

void arcw_family_free(arcw_family* family) { delete family; }

arcw_status arcw_cancellation_validate(const arcw_path* path, const arcw_family* family,
                                       arcw_cancellation** out) {
    ARCW_REQUIRE(path, family, out);
    return guarded([&] {
        *out = new arcw_cancellation{arcwise::validate_cancellation(path->value, family->value)};
    });
}

arcw_status arcw_cancellation_is_collapsible(const arcw_cancellation* lc, int* out) {
    ARCW_REQUIRE(lc, out);
    return guarded([&] { *out = arcwise::is_collapsible(lc->value) ? 1 : 0; });
}

arcw_status arcw_cancellation_reduction_injective(const arcw_path* path, const arcw_cancellation* lc,
                                                  int* out) {
    ARCW_REQUIRE(path, lc, out);
    return guarded([&] {
        const auto r = arcwise::u_reduction(path->value, lc->value);
        *out = arcwise::injectivity_witness(r.beta) ? 0 : 1;
    });
}

arcw_status arcw_cancellation_maximalize(const arcw_path* path, const arcw_cancellation* seed,
                                         arcw_cancellation** out) {
    ARCW_REQUIRE(path, seed, out);
    return guarded([&] {
        *out = new arcw_cancellation{arcwise::maximalize(path->value, seed->value)};
    });
}

arcw_status arcw_cancellation_to_json(const arcw_cancellation* lc, char** out) {
    ARCW_REQUIRE(lc, out);
    return guarded([&] { put(out, arcwise::io::to_json(lc->value.family()).dump()); });
}

void arcw_cancellation_free(arcw_cancellation* lc) { delete lc; }

arcw_status arcw_extract(const arcw_path* path, arcw_extraction** out) {
    ARCW_REQUIRE(path, out);
    return guarded([&] { *out = new arcw_extraction{arcwise::extract(path->value)}; });
}

arcw_status arcw_extraction_arc_json(const arcw_extraction* ex, char** out) {
    ARCW_REQUIRE(ex, out);
    return guarded([&] { put(out, arcwise::io::to_json(ex->value.arc).dump()); });
}

arcw_status arcw_extraction_cancellation_json(const arcw_extraction* ex, char** out) {
    ARCW_REQUIRE(ex, out);
    return guarded([&] { put(out, arcwise::io::to_json(ex->value.cancellation.family()).dump()); });
}

arcw_status arcw_extraction_map_json(const arcw_extraction* ex, char** out) {
    ARCW_REQUIRE(ex, out);
    return guarded([&] {
        put(out, ex->value.gamma ? arcwise::io::to_json(*ex->value.gamma).dump() : std::string("null"));
    });
}

arcw_status arcw_extraction_document_json(const arcw_extraction* ex, char** out) {
    ARCW_REQUIRE(ex, out);
    return guarded([&] { put(out, arcwise::io::to_json(ex->value).dump()); });
}

arcw_status arcw_extraction_report(const arcw_path* input, const arcw_extraction* ex, double elapsed_ms,
                                   int as_json, int* verified, char** out) {
    ARCW_REQUIRE(input, ex, verified, out);
    return guarded([&] {
        const auto report = arcwise::make_report(input->value, ex->value, elapsed_ms);
        *verified = report.verified() ? 1 : 0;
        put(out, as_json ? arcwise::to_json(report).dump(2) : arcwise::to_text(report));
    });
}

arcw_status arcw_extraction_svg(const arcw_path* input, const arcw_extraction* ex, char** out) {
    ARCW_REQUIRE(input, ex, out);
    return guarded([&] { put(out, arcwise::render_reduction_svg(input->value, ex->value)); });
}

void arcw_extraction_free(arcw_extraction* ex) { delete ex; }

arcw_status arcw_loop_deletion_witness(const arcw_path* path, const char* pairs_json, arcw_verdict* out) {
    ARCW_REQUIRE(path, pairs_json, out);
    return guarded([&] {
        const auto pairs = arcwise::io::pairs_from_json(arcwise::io::parse_document(pairs_json));
        *out = arcwise::loop_deletion_witness(path->value, pairs) == arcwise::Verdict::Violated
                   ? ARCW_VIOLATED
                   : ARCW_PERMITS;
    });
}

arcw_status arcw_cantor_map(unsigned depth, char** map_json, char** svg) {
    ARCW_REQUIRE(map_json);
    return guarded([&] {
        const auto map = arcwise::cantor_collapsing_map(depth);
        put(map_json, arcwise::io::to_json(map).dump());
        if (svg) put(svg, arcwise::render_map_svg(map));
    });
}

arcw_status arcw_generate(const arcw_fixture_spec* spec, char** path_json, char** pairs_json) {
    ARCW_REQUIRE(spec, spec ? spec->kind : nullptr, path_json);
    return guarded([&] {
        const auto kind = arcwise::testkit::parse_fixture_kind(spec->kind);
        if (!kind) {
            throw arcwise::Error(arcwise::ErrorCode::InvalidArgument,
                                 std::string("unknown fixture kind \"") + spec->kind + "\"");
        }
        arcwise::testkit::FixtureSpec fs;
        fs.kind = *kind;
        fs.seed = spec->seed;
        fs.size = spec->size;
        fs.loops = spec->loops;
        fs.alphabet = spec->alphabet;
        fs.depth = spec->depth;
        fs.generic = spec->generic != 0;
        std::string pairs = "null";
        std::string doc;
        if (fs.kind == arcwise::testkit::FixtureKind::Quotient) {
            const auto q = arcwise::testkit::build_quotient_fixture(fs.depth);
            doc = arcwise::io::to_json(arcwise::Path(q.path)).dump();
            pairs = arcwise::io::pairs_to_json(q.pairs).dump();
        } else {
            doc = arcwise::io::to_json(arcwise::testkit::build_fixture(fs)).dump();
        }
        put(path_json, doc);
        if (pairs_json) put(pairs_json, pairs);
    });
}

} // extern "C"
