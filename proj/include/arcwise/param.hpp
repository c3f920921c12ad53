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

#ifndef ARCWISE_PARAM_HPP
#define ARCWISE_PARAM_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "arcwise/error.hpp"

namespace arcwise {

using Rational = mpq_class;

// Parses "p/q" or a bare integer "p". Throws Error{Parse} on malformed
// text or a zero denominator. The result is canonicalized.
Rational parse_rational(std::string_view text);

// Always "p/q" in lowest terms with q > 0, e.g. "0/1", "1/3".
std::string format_rational(const Rational& value);
// num/den in lowest terms.
Rational ratio(long num, unsigned long den);

std::strong_ordering compare(const Rational& a, const Rational& b);

// An exact point of the parameter interval [0,1].
class Param {
public:
    Param() = default;
    // Throws Error{InvalidArgument} outside [0,1].
    explicit Param(Rational value);
    Param(long num, unsigned long den);

    static Param zero() { return Param(); }
    static Param one() { return Param(1, 1); }

    const Rational& value() const noexcept { return value_; }
    std::string str() const { return format_rational(value_); }
    double to_double() const { return value_.get_d(); }

    friend bool operator==(const Param& a, const Param& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Param& a, const Param& b) {
        return compare(a.value_, b.value_);
    }

private:
    Rational value_{0};
};

// Open subinterval (lo, hi) of [0,1] with lo < hi.
class OpenInterval {
public:
    // Throws Error{InvalidArgument} unless lo < hi.
    OpenInterval(Param lo, Param hi);

    const Param& lo() const noexcept { return lo_; }
    const Param& hi() const noexcept { return hi_; }
    Rational length() const { return hi_.value() - lo_.value(); }

    bool contains(const Param& t) const { return lo_ < t && t < hi_; }
    bool contains(const OpenInterval& other) const {
        return lo_ <= other.lo_ && other.hi_ <= hi_;
    }
    // Open intervals meet iff they share an interior point.
    bool intersects(const OpenInterval& other) const {
        return lo_ < other.hi_ && other.lo_ < hi_;
    }
    // The closures meet.
    bool closure_meets(const OpenInterval& other) const {
        return lo_ <= other.hi_ && other.lo_ <= hi_;
    }

    friend bool operator==(const OpenInterval&, const OpenInterval&) = default;
    friend std::strong_ordering operator<=>(const OpenInterval& a, const OpenInterval& b) {
        if (auto c = a.lo_ <=> b.lo_; c != 0) return c;
        return a.hi_ <=> b.hi_;
    }

private:
    Param lo_;
    Param hi_;
};

enum class Ordering { Less, Greater, Equal, Incomparable };

const char* to_string(Ordering ordering) noexcept;

// Pairwise-disjoint open intervals, sorted by left endpoint. Intervals may
// share an endpoint.
class IntervalFamily {
public:
    IntervalFamily() = default;

    // Sorts `raw`; throws Error{Overlap, i, j} (indices into `raw`) when two
    // input intervals intersect.
    static IntervalFamily normalize(std::vector<OpenInterval> raw);

    std::span<const OpenInterval> intervals() const noexcept { return intervals_; }
    std::size_t size() const noexcept { return intervals_.size(); }
    bool empty() const noexcept { return intervals_.empty(); }
    const OpenInterval& operator[](std::size_t i) const { return intervals_[i]; }
    auto begin() const noexcept { return intervals_.begin(); }
    auto end() const noexcept { return intervals_.end(); }

    // Index of the interval containing t, if any.
    std::optional<std::size_t> find(const Param& t) const;

    // True when every interval of this family lies inside some interval of
    // `other`.
    bool refined_by(const IntervalFamily& other) const;

    // Connected components of the union of all intervals in `families`.
    static IntervalFamily union_components(std::span<const IntervalFamily> families);

    friend bool operator==(const IntervalFamily&, const IntervalFamily&) = default;

private:
    explicit IntervalFamily(std::vector<OpenInterval> sorted) : intervals_(std::move(sorted)) {}

    std::vector<OpenInterval> intervals_;
};

inline IntervalFamily normalize_family(std::vector<OpenInterval> raw) {
    return IntervalFamily::normalize(std::move(raw));
}

Ordering compare_families(const IntervalFamily& u, const IntervalFamily& v);

inline std::optional<std::size_t> interval_membership(const IntervalFamily& family,
                                                      const Param& t) {
    return family.find(t);
}

} // namespace arcwise

#endif // ARCWISE_PARAM_HPP
