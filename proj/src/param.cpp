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

#include "arcwise/param.hpp"

#include <algorithm>
#include <cctype>

namespace arcwise {

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::Overlap: return "OverlapError";
    case ErrorCode::NotALoop: return "NotALoop";
    case ErrorCode::EndpointMismatch: return "EndpointMismatch";
    case ErrorCode::NotCollapsible: return "NotCollapsible";
    case ErrorCode::NotAChain: return "NotAChain";
    case ErrorCode::PremiseFailed: return "PremiseFailed";
    case ErrorCode::IsLoop: return "IsLoop";
    case ErrorCode::PathMismatch: return "PathMismatch";
    case ErrorCode::OffGrid: return "OffGrid";
    case ErrorCode::Internal: return "InternalError";
    }
    return "Unknown";
}

const char* to_string(Ordering ordering) noexcept {
    switch (ordering) {
    case Ordering::Less: return "LESS";
    case Ordering::Greater: return "GREATER";
    case Ordering::Equal: return "EQUAL";
    case Ordering::Incomparable: return "INCOMPARABLE";
    }
    return "UNKNOWN";
}

namespace {

bool is_integer_text(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                       [](unsigned char c) { return std::isdigit(c) != 0; });
}

} // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    const std::string_view den =
        slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_integer_text(num) || !is_integer_text(den) || den[0] == '-' || den[0] == '+') {
        throw Error(ErrorCode::Parse, "malformed rational \"" + std::string(text) + "\"");
    }
    mpz_class n(std::string(num[0] == '+' ? num.substr(1) : num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) {
        throw Error(ErrorCode::Parse, "zero denominator in \"" + std::string(text) + "\"");
    }
    Rational q(n, d);
    q.canonicalize();
    return q;
}

std::string format_rational(const Rational& value) {
    Rational q = value;
    q.canonicalize();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational ratio(long num, unsigned long den) {
    if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::strong_ordering compare(const Rational& a, const Rational& b) {
    const int c = cmp(a, b);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Param::Param(Rational value) : value_(std::move(value)) {
    value_.canonicalize();
    if (value_ < 0 || value_ > 1) {
        throw Error(ErrorCode::InvalidArgument,
                    "parameter " + format_rational(value_) + " outside [0,1]");
    }
}

Param::Param(long num, unsigned long den) : Param(ratio(num, den)) {}

OpenInterval::OpenInterval(Param lo, Param hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (!(lo_ < hi_)) {
        throw Error(ErrorCode::InvalidArgument,
                    "empty interval (" + lo_.str() + "," + hi_.str() + ")");
    }
}

IntervalFamily IntervalFamily::normalize(std::vector<OpenInterval> raw) {
    std::vector<std::size_t> order(raw.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return raw[a] < raw[b]; });
    // After sorting by lo, any intersecting pair implies an intersecting
    // neighbour pair, so checking neighbours suffices.
    for (std::size_t k = 1; k < order.size(); ++k) {
        const auto& prev = raw[order[k - 1]];
        const auto& next = raw[order[k]];
        if (prev.intersects(next)) {
            const auto i = std::min(order[k - 1], order[k]);
            const auto j = std::max(order[k - 1], order[k]);
            throw Error(ErrorCode::Overlap,
                        "intervals " + std::to_string(i) + " and " + std::to_string(j) +
                            " overlap",
                        i, j);
        }
    }
    std::vector<OpenInterval> sorted;
    sorted.reserve(raw.size());
    for (auto i : order) sorted.push_back(raw[i]);
    return IntervalFamily(std::move(sorted));
}

std::optional<std::size_t> IntervalFamily::find(const Param& t) const {
    auto it = std::upper_bound(intervals_.begin(), intervals_.end(), t,
                               [](const Param& x, const OpenInterval& iv) { return x < iv.lo(); });
    if (it == intervals_.begin()) return std::nullopt;
    --it;
    if (it->contains(t)) return static_cast<std::size_t>(it - intervals_.begin());
    return std::nullopt;
}

bool IntervalFamily::refined_by(const IntervalFamily& other) const {
    for (const auto& iv : intervals_) {
        // The only candidate container is the last interval of `other` that
        // starts at or before iv.lo.
        auto it = std::upper_bound(other.intervals_.begin(), other.intervals_.end(), iv.lo(),
                                   [](const Param& x, const OpenInterval& o) { return x < o.lo(); });
        if (it == other.intervals_.begin()) return false;
        if (!std::prev(it)->contains(iv)) return false;
    }
    return true;
}

IntervalFamily IntervalFamily::union_components(std::span<const IntervalFamily> families) {
    std::vector<OpenInterval> all;
    for (const auto& f : families) all.insert(all.end(), f.begin(), f.end());
    std::sort(all.begin(), all.end());
    std::vector<OpenInterval> merged;
    for (const auto& iv : all) {
        // Touching open intervals (a,b),(b,c) stay separate: b is not covered.
        if (!merged.empty() && iv.lo() < merged.back().hi()) {
            if (merged.back().hi() < iv.hi()) {
                merged.back() = OpenInterval(merged.back().lo(), iv.hi());
            }
        } else {
            merged.push_back(iv);
        }
    }
    return IntervalFamily(std::move(merged));
}

Ordering compare_families(const IntervalFamily& u, const IntervalFamily& v) {
    if (u == v) return Ordering::Equal;
    const bool le = u.refined_by(v);
    const bool ge = v.refined_by(u);
    if (le && !ge) return Ordering::Less;
    if (ge && !le) return Ordering::Greater;
    return Ordering::Incomparable;
}

} // namespace arcwise
