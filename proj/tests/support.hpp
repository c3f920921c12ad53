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

// Shared helpers and reference oracles for the test binaries. The oracles
// work on integer sample indices and plain label vectors and never call
// into the engine.

#ifndef ARCWISE_TESTS_SUPPORT_HPP
#define ARCWISE_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "arcwise/cancellation.hpp"
#include "arcwise/param.hpp"
#include "arcwise/path.hpp"
#include "arcwise/reduction.hpp"

namespace arcwise::test {

inline Rational q(const char* text) { return parse_rational(text); }
inline Param p(const char* text) { return Param(parse_rational(text)); }
inline OpenInterval iv(const char* lo, const char* hi) { return OpenInterval(p(lo), p(hi)); }
inline IntervalFamily fam(std::vector<OpenInterval> ivs) { return normalize_family(std::move(ivs)); }

inline Coords xy(long x, long y, unsigned long den = 1) { return {ratio(x, den), ratio(y, den)}; }
inline Path segment(Coords a, Coords b) { return PolylinePath::uniform({std::move(a), std::move(b)}); }
inline Path polyline(const std::vector<Coords>& pts) { return PolylinePath::uniform(pts); }
inline Path discrete(std::vector<std::string> labels) { return DiscretePath(std::move(labels), true); }
inline Path square_loop() {
    return polyline({xy(0, 0), xy(1, 0), xy(1, 1), xy(0, 1), xy(0, 0)});
}

inline std::size_t draw(std::mt19937_64& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

// Random small family on the grid k/den, intervals possibly sharing ends.
inline IntervalFamily random_family(std::mt19937_64& rng, long den = 8) {
    std::vector<OpenInterval> out;
    long at = static_cast<long>(draw(rng, 3));
    while (at < den && out.size() < 4) {
        const long len = 1 + static_cast<long>(draw(rng, 3));
        if (at + len > den) break;
        if (draw(rng, 3) != 0) out.emplace_back(Param(at, den), Param(at + len, den));
        at += len + static_cast<long>(draw(rng, 2));
    }
    return fam(std::move(out));
}

// ---- Discrete oracles (integer sample indices) ----

using IndexInterval = std::pair<std::size_t, std::size_t>;
using IndexFamily = std::vector<IndexInterval>;  // sorted, a_k < b_k <= a_{k+1}

// All i < j with labels[i] == labels[j].
inline std::vector<IndexInterval> brute_coincidences(const std::vector<std::string>& labels) {
    std::vector<IndexInterval> out;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        for (std::size_t j = i + 1; j < labels.size(); ++j) {
            if (labels[i] == labels[j]) out.emplace_back(i, j);
        }
    }
    return out;
}

// Every loop-cancellation of the step path with endpoints on the sample grid.
inline std::vector<IndexFamily> enumerate_cancellations(const std::vector<std::string>& labels) {
    const auto pairs = brute_coincidences(labels);
    std::vector<IndexFamily> out;
    IndexFamily current;
    auto rec = [&](auto&& self, std::size_t min_start) -> void {
        out.push_back(current);
        for (const auto& [a, b] : pairs) {
            if (a < min_start) continue;
            current.emplace_back(a, b);
            self(self, b);
            current.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

// Every interval of u lies inside some interval of v.
inline bool index_refines(const IndexFamily& u, const IndexFamily& v) {
    for (const auto& [a, b] : u) {
        bool inside = false;
        for (const auto& [c, d] : v) inside = inside || (c <= a && b <= d);
        if (!inside) return false;
    }
    return true;
}

inline bool index_less(const IndexFamily& u, const IndexFamily& v) {
    return index_refines(u, v) && !index_refines(v, u);
}

inline std::vector<IndexFamily> maximal_elements(const std::vector<IndexFamily>& all) {
    std::vector<IndexFamily> out;
    for (const auto& u : all) {
        bool dominated = false;
        for (const auto& v : all) dominated = dominated || index_less(u, v);
        if (!dominated) out.push_back(u);
    }
    return out;
}

inline bool index_collapsible(const IndexFamily& u, std::size_t n) {
    if (u.size() == 1 && u[0].first == 0 && u[0].second + 1 == n) return false;
    for (std::size_t k = 0; k + 1 < u.size(); ++k) {
        if (u[k].second >= u[k + 1].first) return false;
    }
    return true;
}

// Labels of the reduction: each closed interval contributes one sample.
inline std::vector<std::string> index_reduction(const std::vector<std::string>& labels,
                                                const IndexFamily& u) {
    std::vector<std::string> out;
    std::size_t i = 0;
    for (const auto& [a, b] : u) {
        while (i < a) out.push_back(labels[i++]);
        out.push_back(labels[a]);
        i = b + 1;
    }
    while (i < labels.size()) out.push_back(labels[i++]);
    return out;
}

inline bool all_distinct(const std::vector<std::string>& labels) {
    return brute_coincidences(labels).empty();
}

inline IndexFamily to_indices(const IntervalFamily& f, std::size_t n) {
    IndexFamily out;
    const Rational scale(static_cast<long>(n - 1));
    for (const auto& i : f) {
        const Rational a = i.lo().value() * scale;
        const Rational b = i.hi().value() * scale;
        out.emplace_back(a.get_num().get_ui(), b.get_num().get_ui());
    }
    return out;
}

inline IntervalFamily from_indices(const IndexFamily& u, std::size_t n) {
    std::vector<OpenInterval> ivs;
    for (const auto& [a, b] : u) {
        ivs.emplace_back(Param(static_cast<long>(a), n - 1), Param(static_cast<long>(b), n - 1));
    }
    return fam(std::move(ivs));
}

inline std::vector<std::string> labels_of(const Path& path) {
    const auto s = path.discrete().labels();
    return {s.begin(), s.end()};
}

// Components of the union of open intervals; touching members stay apart.
inline IndexFamily index_union(IndexFamily u, const IndexInterval& extra) {
    u.push_back(extra);
    std::sort(u.begin(), u.end());
    IndexFamily out;
    for (const auto& i : u) {
        if (!out.empty() && i.first < out.back().second) {
            out.back().second = std::max(out.back().second, i.second);
        } else {
            out.push_back(i);
        }
    }
    return out;
}

// Ascending chain of grid families inside [0, last]: each member adds one
// random interval to the previous one and takes union components.
inline std::vector<IndexFamily> random_index_chain(std::mt19937_64& rng, std::size_t length,
                                                   std::size_t last) {
    std::vector<IndexFamily> chain;
    IndexFamily current;
    for (std::size_t k = 0; k < length; ++k) {
        if (k > 0 || draw(rng, 4) != 0) {
            const std::size_t a = draw(rng, last);
            const std::size_t b = a + 1 + draw(rng, std::min<std::size_t>(last - a, 4));
            current = index_union(current, {a, b});
        }
        chain.push_back(current);
    }
    return chain;
}

// ---- Cantor oracle ----

// The Cantor function by its self-similarity, for x inside some removed
// middle third of stage at most `depth`.
inline Rational cantor_value(const Rational& x, unsigned depth) {
    if (depth == 0) return Rational(-1);
    const Rational third(1, 3);
    const Rational two_thirds(2, 3);
    if (x >= third && x <= two_thirds) return Rational(1, 2);
    if (x < third) {
        const Rational v = cantor_value(3 * x, depth - 1);
        return v < 0 ? v : Rational(v / 2);
    }
    const Rational v = cantor_value(3 * x - 2, depth - 1);
    return v < 0 ? v : Rational(Rational(1, 2) + v / 2);
}

// Removed middle thirds through stage `depth`, generated by subdivision.
inline std::vector<std::pair<Rational, Rational>> cantor_gaps(unsigned depth) {
    std::vector<std::pair<Rational, Rational>> kept{{Rational(0), Rational(1)}};
    std::vector<std::pair<Rational, Rational>> gaps;
    for (unsigned stage = 0; stage < depth; ++stage) {
        std::vector<std::pair<Rational, Rational>> next;
        for (const auto& [a, b] : kept) {
            const Rational len = (b - a) / 3;
            gaps.emplace_back(a + len, b - len);
            next.emplace_back(a, a + len);
            next.emplace_back(b - len, b);
        }
        kept = std::move(next);
    }
    return gaps;
}

} // namespace arcwise::test

#endif // ARCWISE_TESTS_SUPPORT_HPP
