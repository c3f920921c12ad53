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

#include "arcwise/cancellation.hpp"

namespace arcwise {

const char* to_string(Verdict v) noexcept {
    return v == Verdict::Permits ? "Permits" : "Violated";
}

void LoopCancellation::check_bound_to(const Path& path) const {
    if (fingerprint(path) != fingerprint_) {
        throw Error(ErrorCode::PathMismatch, "cancellation was validated against a different path");
    }
}

LoopCancellation validate_cancellation(const Path& path, const IntervalFamily& family) {
    for (std::size_t i = 0; i < family.size(); ++i) {
        const auto& iv = family[i];
        if (!path.is_polyline()) {
            const auto& d = path.discrete();
            if (!d.grid_index(iv.lo()) || !d.grid_index(iv.hi())) {
                throw Error(ErrorCode::OffGrid,
                            "interval " + std::to_string(i) + " (" + iv.lo().str() + "," +
                                iv.hi().str() + ") has an endpoint off the sample grid",
                            i);
            }
        }
        if (!same_point(path, iv.lo(), iv.hi())) {
            throw Error(ErrorCode::NotALoop,
                        "interval " + std::to_string(i) + " (" + iv.lo().str() + "," +
                            iv.hi().str() + ") is not a loop: " +
                            to_string(eval(path, iv.lo())) + " != " +
                            to_string(eval(path, iv.hi())),
                        i);
        }
    }
    return LoopCancellation(family, fingerprint(path));
}

bool is_collapsible(const LoopCancellation& lc) {
    const auto& f = lc.family();
    if (f.size() == 1 && f[0].lo() == Param::zero() && f[0].hi() == Param::one()) return false;
    for (std::size_t i = 1; i < f.size(); ++i) {
        if (f[i - 1].hi() == f[i].lo()) return false;
    }
    return true;
}

LoopCancellation merge_adjacent(const Path& path, const LoopCancellation& lc) {
    lc.check_bound_to(path);
    std::vector<OpenInterval> merged;
    for (const auto& iv : lc.family()) {
        if (!merged.empty() && merged.back().hi() == iv.lo()) {
            merged.back() = OpenInterval(merged.back().lo(), iv.hi());
        } else {
            merged.push_back(iv);
        }
    }
    return validate_cancellation(path, IntervalFamily::normalize(std::move(merged)));
}

LoopCancellation chain_upper_bound(const Path& path, std::span<const LoopCancellation> chain) {
    std::vector<IntervalFamily> families;
    families.reserve(chain.size());
    for (std::size_t i = 0; i < chain.size(); ++i) {
        chain[i].check_bound_to(path);
        for (std::size_t j = i + 1; j < chain.size(); ++j) {
            const auto ord = compare_families(chain[i].family(), chain[j].family());
            if (ord == Ordering::Incomparable || ord == Ordering::Greater) {
                throw Error(ErrorCode::NotAChain,
                            std::string("members ") + std::to_string(i) + " and " +
                                std::to_string(j) +
                                (ord == Ordering::Greater ? " are out of order" : " are incomparable"),
                            i, j);
            }
        }
        families.push_back(chain[i].family());
    }
    return validate_cancellation(path, IntervalFamily::union_components(families));
}

Verdict loop_deletion_witness(const Path& path, std::span<const ParamPair> pairs) {
    for (std::size_t n = 0; n < pairs.size(); ++n) {
        const auto& [a, b] = pairs[n];
        if (!(a < b)) {
            throw Error(ErrorCode::PremiseFailed,
                        "pair " + std::to_string(n) + " is not ordered a < b", n);
        }
        if (n > 0 && (pairs[n - 1].s < a || b < pairs[n - 1].t)) {
            throw Error(ErrorCode::PremiseFailed,
                        "pair " + std::to_string(n) + " does not enclose pair " + std::to_string(n - 1),
                        n);
        }
        if (!same_point(path, a, b)) {
            throw Error(ErrorCode::PremiseFailed,
                        "pair " + std::to_string(n) + " (" + a.str() + "," + b.str() +
                            ") is not identified by the path",
                        n);
        }
    }
    if (pairs.empty() || is_loop(path)) return Verdict::Permits;
    return Verdict::Violated;
}

} // namespace arcwise
