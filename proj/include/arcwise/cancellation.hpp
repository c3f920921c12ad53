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

#ifndef ARCWISE_CANCELLATION_HPP
#define ARCWISE_CANCELLATION_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "arcwise/coincidence.hpp"
#include "arcwise/param.hpp"
#include "arcwise/path.hpp"

namespace arcwise {

// An interval family whose every member (a,b) satisfies path(a) == path(b),
// bound to the path it was validated against.
class LoopCancellation {
public:
    const IntervalFamily& family() const noexcept { return family_; }
    std::uint64_t path_fingerprint() const noexcept { return fingerprint_; }
    std::size_t size() const noexcept { return family_.size(); }
    bool empty() const noexcept { return family_.empty(); }

    // Throws Error{PathMismatch} when `path` is not the validated path.
    void check_bound_to(const Path& path) const;

    friend bool operator==(const LoopCancellation&, const LoopCancellation&) = default;

private:
    friend LoopCancellation validate_cancellation(const Path&, const IntervalFamily&);

    LoopCancellation(IntervalFamily family, std::uint64_t fp)
        : family_(std::move(family)), fingerprint_(fp) {}

    IntervalFamily family_;
    std::uint64_t fingerprint_ = 0;
};

// Throws Error{NotALoop, i} for the first member with path(a) != path(b).
// Discrete paths additionally require endpoints on the sample grid
// (Error{OffGrid, i}).
LoopCancellation validate_cancellation(const Path& path, const IntervalFamily& family);

// Not {(0,1)} and no two members share an endpoint.
bool is_collapsible(const LoopCancellation& lc);

// Replaces endpoint-sharing members (a,b),(b,c) by (a,c) until none remain.
LoopCancellation merge_adjacent(const Path& path, const LoopCancellation& lc);

// Components of the union of a chain sorted ascending. Throws
// Error{NotAChain, i, j} when members i < j are incomparable or out of order,
// and Error{NotALoop} if a component fails to be a loop.
LoopCancellation chain_upper_bound(const Path& path, std::span<const LoopCancellation> chain);

enum class Verdict { Permits, Violated };

const char* to_string(Verdict v) noexcept;

// Finite-depth check of the loop-deletion property. `pairs` are listed
// innermost first: a_{n+1} <= a_n < b_n <= b_{n+1}, each with
// path(a_n) == path(b_n); otherwise Error{PremiseFailed, n}. Violated when at
// least one pair is given yet path(0) != path(1).
Verdict loop_deletion_witness(const Path& path, std::span<const ParamPair> pairs);

} // namespace arcwise

#endif // ARCWISE_CANCELLATION_HPP
