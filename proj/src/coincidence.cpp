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

#include "arcwise/coincidence.hpp"

#include <algorithm>

namespace arcwise {

Param CoincidenceSegment::t_at(const Param& s) const {
    if (s == start.s) return start.t;
    if (s == end.s) return end.t;
    const Rational u = (s.value() - start.s.value()) / (end.s.value() - start.s.value());
    return Param(start.t.value() + u * (end.t.value() - start.t.value()));
}

bool CoincidenceSegment::contains(const ParamPair& p) const {
    if (p.s < start.s || end.s < p.s) return false;
    return t_at(p.s) == p.t;
}

namespace {

// Span k covers parameters [t_k, t_{k+1}]; position u in [0,1] along it.
Param span_param(std::span<const Vertex> vs, std::size_t k, const Rational& u) {
    return Param(vs[k].t.value() + u * (vs[k + 1].t.value() - vs[k].t.value()));
}

void intersect_spans(std::span<const Vertex> vs, std::size_t i, std::size_t j,
                     std::vector<ParamPair>& points, std::vector<CoincidenceSegment>& segments) {
    const Coords& p = vs[i].p;
    const Coords& q = vs[j].p;
    const Coords d1 = geom::sub(vs[i + 1].p, p);
    const Coords d2 = geom::sub(vs[j + 1].p, q);
    const Coords r = geom::sub(q, p);

    auto add_point = [&](const Rational& u, const Rational& v) {
        ParamPair pair{span_param(vs, i, u), span_param(vs, j, v)};
        if (pair.s < pair.t) points.push_back(std::move(pair));
    };

    if (!geom::parallel(d1, d2)) {
        // Solve p + u d1 = q + v d2 on a coordinate pair with non-zero
        // determinant, then confirm the remaining coordinates.
        const std::size_t dim = p.size();
        for (std::size_t a = 0; a < dim; ++a) {
            for (std::size_t b = a + 1; b < dim; ++b) {
                const Rational det = d2[a] * d1[b] - d1[a] * d2[b];
                if (det == 0) continue;
                const Rational u = (d2[a] * r[b] - r[a] * d2[b]) / det;
                const Rational v = (d1[a] * r[b] - d1[b] * r[a]) / det;
                if (u < 0 || u > 1 || v < 0 || v > 1) return;
                if (geom::lerp(p, vs[i + 1].p, u) != geom::lerp(q, vs[j + 1].p, v)) return;
                add_point(u, v);
                return;
            }
        }
        return;
    }
    if (!geom::parallel(r, d1)) return;

    // Collinear: measure span j in span i's coordinate u.
    const Rational dd = geom::dot(d1, d1);
    const Rational w0 = geom::dot(r, d1) / dd;
    const Rational w1 = geom::dot(geom::sub(vs[j + 1].p, p), d1) / dd;
    const Rational lo = std::max(Rational(0), std::min(w0, w1));
    const Rational hi = std::min(Rational(1), std::max(w0, w1));
    if (lo > hi) return;
    auto v_of = [&](const Rational& u) -> Rational { return (u - w0) / (w1 - w0); };
    if (lo == hi) {
        add_point(lo, v_of(lo));
        return;
    }
    CoincidenceSegment seg{{span_param(vs, i, lo), span_param(vs, j, v_of(lo))},
                           {span_param(vs, i, hi), span_param(vs, j, v_of(hi))}};
    segments.push_back(std::move(seg));
}

bool same_direction(const CoincidenceSegment& a, const CoincidenceSegment& b) {
    const Rational ds_a = a.end.s.value() - a.start.s.value();
    const Rational dt_a = a.end.t.value() - a.start.t.value();
    const Rational ds_b = b.end.s.value() - b.start.s.value();
    const Rational dt_b = b.end.t.value() - b.start.t.value();
    return ds_a * dt_b == dt_a * ds_b;
}

void canonicalize(CoincidenceSet& cs) {
    auto& segs = cs.segments;
    std::sort(segs.begin(), segs.end(), [](const auto& a, const auto& b) {
        return std::tie(a.start, a.end) < std::tie(b.start, b.end);
    });
    // Join collinear pieces that meet end to start (a coincidence run that
    // crosses a breakpoint is reported once per span pair).
    bool merged = true;
    while (merged) {
        merged = false;
        for (std::size_t a = 0; a < segs.size() && !merged; ++a) {
            for (std::size_t b = 0; b < segs.size() && !merged; ++b) {
                if (a == b || !(segs[a].end == segs[b].start) || !same_direction(segs[a], segs[b])) {
                    continue;
                }
                segs[a].end = segs[b].end;
                segs.erase(segs.begin() + static_cast<std::ptrdiff_t>(b));
                merged = true;
            }
        }
    }
    std::sort(cs.points.begin(), cs.points.end());
    cs.points.erase(std::unique(cs.points.begin(), cs.points.end()), cs.points.end());
    std::erase_if(cs.points, [&](const ParamPair& p) {
        return std::any_of(segs.begin(), segs.end(),
                           [&](const CoincidenceSegment& s) { return s.contains(p); });
    });
}

} // namespace

CoincidenceSet coincidence_set(const Path& path) {
    CoincidenceSet cs;
    cs.breakpoints = path.breakpoints();
    if (!path.is_polyline()) {
        const auto& d = path.discrete();
        for (std::size_t i = 0; i < d.size(); ++i) {
            for (std::size_t j = i + 1; j < d.size(); ++j) {
                if (d.labels()[i] == d.labels()[j]) {
                    cs.points.push_back({d.sample_param(i), d.sample_param(j)});
                }
            }
        }
        return cs;
    }
    const auto vs = path.polyline().vertices();
    for (std::size_t k = 0; k + 1 < vs.size(); ++k) {
        if (vs[k].p == vs[k + 1].p) {
            throw Error(ErrorCode::InvalidArgument,
                        "coincidence set of a polyline with stalls is not finite", k);
        }
    }
    // Within a single span the path is injective, so only distinct span
    // pairs contribute.
    const std::size_t spans = vs.size() - 1;
    for (std::size_t i = 0; i < spans; ++i) {
        for (std::size_t j = i + 1; j < spans; ++j) {
            intersect_spans(vs, i, j, cs.points, cs.segments);
        }
    }
    canonicalize(cs);
    return cs;
}

std::vector<ParamPair> candidate_endpoints(const CoincidenceSet& cs) {
    std::vector<ParamPair> out = cs.points;
    for (const auto& seg : cs.segments) {
        for (const auto* end : {&seg.start, &seg.end}) {
            if (end->s < end->t) out.push_back(*end);
        }
        const Rational s_lo = seg.start.s.value();
        const Rational s_hi = seg.end.s.value();
        const Rational t_lo = std::min(seg.start.t.value(), seg.end.t.value());
        const Rational t_hi = std::max(seg.start.t.value(), seg.end.t.value());
        for (const auto& b : cs.breakpoints) {
            if (s_lo < b.value() && b.value() < s_hi) {
                ParamPair p{b, seg.t_at(b)};
                if (p.s < p.t) out.push_back(std::move(p));
            }
            if (t_lo < b.value() && b.value() < t_hi) {
                const Rational u = (b.value() - seg.start.t.value()) /
                                   (seg.end.t.value() - seg.start.t.value());
                ParamPair p{Param(s_lo + u * (s_hi - s_lo)), b};
                if (p.s < p.t) out.push_back(std::move(p));
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace arcwise
