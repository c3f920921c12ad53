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

#include "arcwise/reduction.hpp"

#include <algorithm>
#include <set>

namespace arcwise {

namespace {

Rational interpolate(const Rational& x0, const Rational& y0, const Rational& x1,
                     const Rational& y1, const Rational& x) {
    return y0 + (x - x0) * (y1 - y0) / (x1 - x0);
}

Param midpoint(const Param& a, const Param& b) {
    return Param((a.value() + b.value()) / 2);
}

} // namespace

CollapsingMap CollapsingMap::from_vertices(std::vector<Node> vs, const IntervalFamily& family) {
    auto fail = [](const std::string& why) {
        throw Error(ErrorCode::InvalidArgument, "invalid collapsing map: " + why);
    };
    if (vs.size() < 2) fail("needs at least two vertices");
    if (vs.front().t != Param::zero() || vs.front().y != Param::zero()) fail("must start at (0,0)");
    if (vs.back().t != Param::one() || vs.back().y != Param::one()) fail("must end at (1,1)");
    for (std::size_t k = 1; k < vs.size(); ++k) {
        if (!(vs[k - 1].t < vs[k].t)) fail("t must strictly increase");
        if (vs[k].y < vs[k - 1].y) fail("y must be non-decreasing");
    }
    CollapsingMap map(std::move(vs));
    const auto runs = map.plateaus();
    if (runs.size() != family.size()) fail("plateaus do not match the family");
    for (std::size_t i = 0; i < runs.size(); ++i) {
        if (runs[i].first != family[i].lo() || runs[i].second != family[i].hi()) {
            fail("plateau " + std::to_string(i) + " does not cover the closure of interval " +
                 std::to_string(i));
        }
    }
    return map;
}

Param CollapsingMap::apply(const Param& t) const {
    auto it = std::upper_bound(vertices_.begin(), vertices_.end(), t,
                               [](const Param& x, const Node& n) { return x < n.t; });
    if (it == vertices_.end()) return vertices_.back().y;
    const auto& b = *it;
    const auto& a = *std::prev(it);
    if (t == a.t) return a.y;
    return Param(interpolate(a.t.value(), a.y.value(), b.t.value(), b.y.value(), t.value()));
}

Param CollapsingMap::preimage_min(const Param& y) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), y,
                               [](const Node& n, const Param& v) { return n.y < v; });
    if (it == vertices_.begin()) return it->t;
    const auto& b = *it;
    const auto& a = *std::prev(it);
    if (y == b.y) return b.t;
    return Param(interpolate(a.y.value(), a.t.value(), b.y.value(), b.t.value(), y.value()));
}

Param CollapsingMap::preimage_max(const Param& y) const {
    auto it = std::upper_bound(vertices_.begin(), vertices_.end(), y,
                               [](const Param& v, const Node& n) { return v < n.y; });
    if (it == vertices_.end()) return vertices_.back().t;
    const auto& b = *it;
    const auto& a = *std::prev(it);
    if (y == a.y) return a.t;
    return Param(interpolate(a.y.value(), a.t.value(), b.y.value(), b.t.value(), y.value()));
}

std::vector<std::pair<Param, Param>> CollapsingMap::plateaus() const {
    std::vector<std::pair<Param, Param>> runs;
    for (std::size_t k = 1; k < vertices_.size(); ++k) {
        if (vertices_[k].y != vertices_[k - 1].y) continue;
        if (!runs.empty() && runs.back().second == vertices_[k - 1].t) {
            runs.back().second = vertices_[k].t;
        } else {
            runs.emplace_back(vertices_[k - 1].t, vertices_[k].t);
        }
    }
    return runs;
}

bool has_disjoint_closures(const IntervalFamily& family) {
    if (family.size() == 1 && family[0].lo() == Param::zero() && family[0].hi() == Param::one()) {
        return false;
    }
    for (std::size_t i = 1; i < family.size(); ++i) {
        if (family[i - 1].hi() == family[i].lo()) return false;
    }
    return true;
}

CollapsingMap collapsing_map(const IntervalFamily& family) {
    if (!has_disjoint_closures(family)) {
        throw Error(ErrorCode::NotCollapsible, "family is not collapsible");
    }
    Rational removed = 0;
    for (const auto& iv : family) removed += iv.length();
    const Rational kept = 1 - removed;

    std::vector<CollapsingMap::Node> vs{{Param::zero(), Param::zero()}};
    Rational removed_before = 0;
    for (const auto& iv : family) {
        const Param level((iv.lo().value() - removed_before) / kept);
        if (iv.lo() != Param::zero()) vs.push_back({iv.lo(), level});
        vs.push_back({iv.hi(), level});
        removed_before += iv.length();
    }
    if (vs.back().t != Param::one()) vs.push_back({Param::one(), Param::one()});
    return CollapsingMap::from_vertices(std::move(vs), family);
}

CollapsingMap collapsing_map(const LoopCancellation& lc) {
    return collapsing_map(lc.family());
}

IntervalFamily cantor_family(unsigned depth) {
    std::vector<OpenInterval> removed;
    std::vector<std::pair<Rational, Rational>> kept{{Rational(0), Rational(1)}};
    for (unsigned stage = 0; stage < depth; ++stage) {
        std::vector<std::pair<Rational, Rational>> next;
        for (const auto& [lo, hi] : kept) {
            const Rational third = (hi - lo) / 3;
            removed.emplace_back(Param(lo + third), Param(hi - third));
            next.emplace_back(lo, lo + third);
            next.emplace_back(hi - third, hi);
        }
        kept = std::move(next);
    }
    return IntervalFamily::normalize(std::move(removed));
}

CollapsingMap cantor_collapsing_map(unsigned depth) {
    if (depth == 0) throw Error(ErrorCode::InvalidArgument, "Cantor depth must be at least 1");
    return collapsing_map(cantor_family(depth));
}

Path collapse_path(const Path& path, const LoopCancellation& lc) {
    lc.check_bound_to(path);
    if (!is_collapsible(lc)) throw Error(ErrorCode::NotCollapsible, "cancellation is not collapsible");
    const auto& family = lc.family();
    if (family.empty()) return path;
    auto in_closure = [&](const Param& t) {
        return std::any_of(family.begin(), family.end(),
                           [&](const OpenInterval& iv) { return iv.lo() <= t && t <= iv.hi(); });
    };

    if (!path.is_polyline()) {
        const auto& d = path.discrete();
        std::vector<std::string> labels(d.labels().begin(), d.labels().end());
        for (const auto& iv : family) {
            const auto lo = *d.grid_index(iv.lo());
            const auto hi = *d.grid_index(iv.hi());
            for (auto i = lo; i <= hi; ++i) labels[i] = labels[lo];
        }
        return DiscretePath(std::move(labels), true);
    }

    const auto& poly = path.polyline();
    std::vector<Vertex> vs;
    for (const auto& v : poly.vertices()) {
        if (!in_closure(v.t)) vs.push_back(v);
    }
    for (const auto& iv : family) {
        const Coords p = poly.eval(iv.lo());
        vs.push_back({iv.lo(), p});
        vs.push_back({iv.hi(), p});
    }
    std::sort(vs.begin(), vs.end(), [](const Vertex& a, const Vertex& b) { return a.t < b.t; });
    return PolylinePath(std::move(vs), true);
}

ReductionResult u_reduction(const Path& path, const LoopCancellation& lc) {
    lc.check_bound_to(path);
    if (!is_collapsible(lc)) throw Error(ErrorCode::NotCollapsible, "cancellation is not collapsible");
    return u_reduction(path, lc, collapsing_map(lc));
}

ReductionResult u_reduction(const Path& path, const LoopCancellation& lc, const CollapsingMap& gamma) {
    Path collapsed = collapse_path(path, lc);
    const auto runs = gamma.plateaus();
    if (runs.size() != lc.size()) {
        throw Error(ErrorCode::InvalidArgument, "collapsing map belongs to a different family");
    }
    for (std::size_t i = 0; i < runs.size(); ++i) {
        if (runs[i].first != lc.family()[i].lo() || runs[i].second != lc.family()[i].hi()) {
            throw Error(ErrorCode::InvalidArgument, "collapsing map belongs to a different family");
        }
    }
    auto verify_fail = [](const Param& t) {
        throw Error(ErrorCode::Internal, "reduction does not factor the collapsed path at t=" + t.str());
    };

    if (!path.is_polyline()) {
        const auto& d = collapsed.discrete();
        std::vector<std::string> labels;
        std::optional<Param> last_y;
        for (std::size_t i = 0; i < d.size(); ++i) {
            const Param t = d.sample_param(i);
            if (lc.family().find(t)) continue;
            const Param y = gamma.apply(t);
            if (last_y && *last_y == y) continue;
            labels.push_back(d.labels()[i]);
            last_y = y;
        }
        DiscretePath beta(std::move(labels), path.discrete().allows_repeats());
        for (std::size_t i = 0; i < d.size(); ++i) {
            const Param t = d.sample_param(i);
            const Param y = gamma.apply(t);
            if (!beta.grid_index(y)) {
                throw Error(ErrorCode::InvalidArgument,
                            "collapsing map does not send the sample grid onto the reduced grid");
            }
            if (beta.eval(y) != d.labels()[i]) verify_fail(t);
        }
        return {Path(std::move(beta)), gamma, std::move(collapsed), lc};
    }

    const auto& col = collapsed.polyline();
    std::set<Param> ts;
    for (const auto& v : col.vertices()) ts.insert(v.t);
    for (const auto& n : gamma.vertices()) ts.insert(n.t);

    std::vector<Vertex> vs;
    for (const auto& t : ts) {
        const Param y = gamma.apply(t);
        if (!vs.empty() && vs.back().t == y) continue;
        vs.push_back({y, col.eval(t)});
    }
    PolylinePath beta(std::move(vs), path.polyline().allows_stalls());

    std::vector<Param> checks(ts.begin(), ts.end());
    for (std::size_t k = 1; k < ts.size(); ++k) checks.push_back(midpoint(checks[k - 1], checks[k]));
    for (const auto& t : checks) {
        if (beta.eval(gamma.apply(t)) != col.eval(t)) verify_fail(t);
    }
    return {Path(std::move(beta)), gamma, std::move(collapsed), lc};
}

std::optional<ParamPair> injectivity_witness(const Path& path) {
    if (!path.is_polyline()) {
        const auto& d = path.discrete();
        for (std::size_t i = 0; i < d.size(); ++i) {
            for (std::size_t j = d.size() - 1; j > i; --j) {
                if (d.labels()[i] == d.labels()[j]) {
                    return ParamPair{d.sample_param(i), d.sample_param(j)};
                }
            }
        }
        return std::nullopt;
    }
    const auto vs = path.polyline().vertices();
    for (std::size_t k = 0; k + 1 < vs.size(); ++k) {
        if (vs[k].p == vs[k + 1].p) return ParamPair{vs[k].t, vs[k + 1].t};
    }

    const auto cs = coincidence_set(path);
    std::optional<Param> x;
    auto consider = [&](const ParamPair& p) {
        if (p.s < p.t && (!x || p.s < *x)) x = p.s;
    };
    for (const auto& p : cs.points) consider(p);
    for (const auto& seg : cs.segments) {
        consider(seg.start);
        consider(seg.end);
    }
    if (!x) return std::nullopt;

    std::optional<Param> y;
    auto offer = [&](const Param& t) {
        if (*x < t && (!y || *y < t)) y = t;
    };
    for (const auto& p : cs.points) {
        if (p.s == *x) offer(p.t);
    }
    for (const auto& seg : cs.segments) {
        if (seg.start.s <= *x && *x <= seg.end.s) offer(seg.t_at(*x));
    }
    return ParamPair{*x, *y};
}

LoopCancellation maximalize(const Path& path, const LoopCancellation& seed, MaximalizeStats* stats) {
    if (is_loop(path)) {
        throw Error(ErrorCode::IsLoop, "path is a loop; its maximal cancellation is {(0,1)}");
    }
    seed.check_bound_to(path);
    MaximalizeStats local;
    MaximalizeStats& st = stats ? *stats : local;
    st = {};

    // Each extension strictly shrinks the reduction, so this bound is never
    // reached unless the engine is broken.
    const std::size_t limit = 2 * path.breakpoint_count() + 2 * seed.size() + 8;
    LoopCancellation current = seed;
    for (;;) {
        current = merge_adjacent(path, current);
        const auto reduction = u_reduction(path, current);
        st.reduction_sizes.push_back(reduction.beta.breakpoint_count());
        const auto witness = injectivity_witness(reduction.beta);
        if (!witness) return current;
        if (++st.iterations > limit) {
            throw Error(ErrorCode::Internal, "maximalize failed to terminate");
        }

        // Pull [x,y] back to the closed interval [c,d]; members meeting it
        // lie inside (c,d) and are absorbed.
        const Param c = reduction.gamma.preimage_min(witness->s);
        const Param d = reduction.gamma.preimage_max(witness->t);
        const OpenInterval extension(c, d);
        std::vector<OpenInterval> next;
        for (const auto& iv : current.family()) {
            const bool disjoint = iv.hi() <= c || d <= iv.lo();
            if (disjoint) {
                next.push_back(iv);
            } else if (!extension.contains(iv)) {
                throw Error(ErrorCode::Internal, "pull-back interval cuts an existing member");
            }
        }
        next.push_back(extension);
        current = validate_cancellation(path, IntervalFamily::normalize(std::move(next)));
    }
}

ArcExtraction extract(const Path& path) {
    if (is_loop(path)) {
        std::vector<OpenInterval> whole{OpenInterval(Param::zero(), Param::one())};
        auto lc = validate_cancellation(path, IntervalFamily::normalize(std::move(whole)));
        if (path.is_polyline()) {
            return {Path(PolylinePath::constant(path.polyline().eval(Param::zero()))), std::move(lc),
                    std::nullopt, 0, true};
        }
        const auto& first = path.discrete().labels().front();
        return {Path(DiscretePath({first, first}, true)), std::move(lc), std::nullopt, 0, true};
    }
    MaximalizeStats stats;
    auto lc = maximalize(path, validate_cancellation(path, IntervalFamily{}), &stats);
    auto reduction = u_reduction(path, lc);
    return {std::move(reduction.beta), std::move(lc), std::move(reduction.gamma), stats.iterations,
            false};
}

} // namespace arcwise
