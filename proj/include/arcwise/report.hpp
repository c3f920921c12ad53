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

#ifndef ARCWISE_REPORT_HPP
#define ARCWISE_REPORT_HPP

#include <string>

#include "arcwise/io.hpp"
#include "arcwise/reduction.hpp"

namespace arcwise {

// Independent checks of an extracted arc against its input. None of these
// trust the engine's own stopping decision.
namespace verify {

bool endpoints_preserved(const Path& input, const Path& arc);
// Every arc vertex is input(t) for some t outside the cancellation, and each
// arc span lies on a single input span (checked at both ends and midpoint).
bool image_contained(const Path& input, const Path& arc, const IntervalFamily& cancellation);

} // namespace verify

struct RunReport {
    std::string input_kind;
    std::size_t input_size = 0;
    IntervalFamily cancellation;
    std::size_t iterations = 0;
    std::size_t arc_size = 0;
    std::string arc_start;
    std::string arc_end;
    bool input_was_loop = false;
    bool injective = false;
    bool endpoints_preserved = false;
    bool image_contained = false;
    double elapsed_ms = 0.0;

    // All applicable verdicts hold. A loop input yields a constant arc, so
    // injectivity is not required there.
    bool verified() const {
        return endpoints_preserved && image_contained && (injective || input_was_loop);
    }
};

RunReport make_report(const Path& input, const ArcExtraction& extraction, double elapsed_ms);
io::json to_json(const RunReport& report);
std::string to_text(const RunReport& report);

// Input path (light) under the arc (dark), with the cancellation marked on
// a parameter bar.
std::string render_reduction_svg(const Path& input, const ArcExtraction& extraction);
std::string render_map_svg(const CollapsingMap& map);

} // namespace arcwise

#endif // ARCWISE_REPORT_HPP
