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

#include "arcwise/path.hpp"

#include <algorithm>

namespace arcwise {

std::string to_string(const Point& p) {
    if (const auto* label = std::get_if<Label>(&p)) return label->name;
    const auto& c = std::get<Coords>(p);
    std::string out = "(";
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) out += ", ";
        out += format_rational(c[i]);
    }
    return out + ")";
}

namespace geom {

Coords sub(const Coords& a, const Coords& b) {
    Coords out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

Coords lerp(const Coords& a, const Coords& b, const Rational& u) {
    Coords out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + u * (b[i] - a[i]);
    return out;
}

bool parallel(const Coords& u, const Coords& v) {
    for (std::size_t i = 0; i < u.size(); ++i) {
        for (std::size_t j = i + 1; j < u.size(); ++j) {
            if (u[i] * v[j] != u[j] * v[i]) return false;
        }
    }
    return true;
}

Rational dot(const Coords& a, const Coords& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

bool on_segment(const Coords& p, const Coords& a, const Coords& b) {
    const Coords d = sub(b, a);
    const Coords w = sub(p, a);
    if (!parallel(w, d)) return false;
    const Rational dd = dot(d, d);
    if (dd == 0) return p == a;
    const Rational wd = dot(w, d);
    return wd >= 0 && wd <= dd;
}

} // namespace geom

PolylinePath::PolylinePath(std::vector<Vertex> vertices, bool allow_stalls)
    : vertices_(std::move(vertices)), allow_stalls_(allow_stalls) {
    if (vertices_.size() < 2) {
        throw Error(ErrorCode::InvalidArgument, "polyline needs at least two vertices");
    }
    if (vertices_.front().t != Param::zero() || vertices_.back().t != Param::one()) {
        throw Error(ErrorCode::InvalidArgument, "polyline parameters must run from 0 to 1");
    }
    const std::size_t d = vertices_.front().p.size();
    if (d == 0) throw Error(ErrorCode::InvalidArgument, "polyline dimension must be at least 1");
    for (std::size_t k = 0; k < vertices_.size(); ++k) {
        if (vertices_[k].p.size() != d) {
            throw Error(ErrorCode::InvalidArgument,
                        "vertex " + std::to_string(k) + " has the wrong dimension", k);
        }
        if (k == 0) continue;
        if (!(vertices_[k - 1].t < vertices_[k].t)) {
            throw Error(ErrorCode::InvalidArgument,
                        "breakpoint parameters must strictly increase at vertex " +
                            std::to_string(k),
                        k);
        }
        if (!allow_stalls_ && vertices_[k - 1].p == vertices_[k].p) {
            throw Error(ErrorCode::InvalidArgument,
                        "zero-length segment ending at vertex " + std::to_string(k), k);
        }
    }
}

PolylinePath PolylinePath::uniform(const std::vector<Coords>& points, bool allow_stalls) {
    if (points.size() < 2) {
        throw Error(ErrorCode::InvalidArgument, "polyline needs at least two vertices");
    }
    std::vector<Vertex> vs;
    vs.reserve(points.size());
    const auto n = static_cast<unsigned long>(points.size() - 1);
    for (std::size_t i = 0; i < points.size(); ++i) {
        vs.push_back({Param(static_cast<long>(i), n), points[i]});
    }
    return PolylinePath(std::move(vs), allow_stalls);
}

PolylinePath PolylinePath::constant(const Coords& p) {
    return PolylinePath({{Param::zero(), p}, {Param::one(), p}}, true);
}

std::size_t PolylinePath::span_index(const Param& t) const {
    auto it = std::upper_bound(vertices_.begin(), vertices_.end(), t,
                               [](const Param& x, const Vertex& v) { return x < v.t; });
    auto k = static_cast<std::size_t>(it - vertices_.begin());
    if (k == 0) return 0;
    return std::min(k - 1, span_count() - 1);
}

Coords PolylinePath::eval(const Param& t) const {
    const auto k = span_index(t);
    const auto& a = vertices_[k];
    const auto& b = vertices_[k + 1];
    if (t == a.t) return a.p;
    if (t == b.t) return b.p;
    const Rational u = (t.value() - a.t.value()) / (b.t.value() - a.t.value());
    return geom::lerp(a.p, b.p, u);
}

DiscretePath::DiscretePath(std::vector<std::string> labels, bool allow_repeats)
    : labels_(std::move(labels)), allow_repeats_(allow_repeats) {
    if (labels_.size() < 2) {
        throw Error(ErrorCode::InvalidArgument, "discrete path needs at least two samples");
    }
    if (!allow_repeats_) {
        for (std::size_t i = 1; i < labels_.size(); ++i) {
            if (labels_[i] == labels_[i - 1]) {
                throw Error(ErrorCode::InvalidArgument,
                            "repeated label at sample " + std::to_string(i) +
                                " (set allow_repeats to permit)",
                            i);
            }
        }
    }
}

Param DiscretePath::sample_param(std::size_t i) const {
    return Param(static_cast<long>(i), static_cast<unsigned long>(labels_.size() - 1));
}

std::size_t DiscretePath::index_at(const Param& t) const {
    const Rational scaled = t.value() * static_cast<unsigned long>(labels_.size() - 1);
    mpz_class floor_value;
    mpz_fdiv_q(floor_value.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    return static_cast<std::size_t>(floor_value.get_ui());
}

std::optional<std::size_t> DiscretePath::grid_index(const Param& t) const {
    const Rational scaled = t.value() * static_cast<unsigned long>(labels_.size() - 1);
    if (scaled.get_den() != 1) return std::nullopt;
    return static_cast<std::size_t>(scaled.get_num().get_ui());
}

std::vector<Param> Path::breakpoints() const {
    std::vector<Param> out;
    if (is_polyline()) {
        for (const auto& v : polyline().vertices()) out.push_back(v.t);
    } else {
        for (std::size_t i = 0; i < discrete().size(); ++i) out.push_back(discrete().sample_param(i));
    }
    return out;
}

std::size_t Path::breakpoint_count() const {
    return is_polyline() ? polyline().vertices().size() : discrete().size();
}

Point eval(const Path& path, const Param& t) {
    if (path.is_polyline()) return path.polyline().eval(t);
    return Label{path.discrete().eval(t)};
}

bool same_point(const Path& path, const Param& a, const Param& b) {
    if (path.is_polyline()) return path.polyline().eval(a) == path.polyline().eval(b);
    return path.discrete().eval(a) == path.discrete().eval(b);
}

bool is_loop(const Path& path) { return same_point(path, Param::zero(), Param::one()); }

Path reverse(const Path& path) {
    if (!path.is_polyline()) {
        const auto labels = path.discrete().labels();
        return DiscretePath(std::vector<std::string>(labels.rbegin(), labels.rend()),
                            path.discrete().allows_repeats());
    }
    const auto vs = path.polyline().vertices();
    std::vector<Vertex> out;
    out.reserve(vs.size());
    for (auto it = vs.rbegin(); it != vs.rend(); ++it) {
        out.push_back({Param(1 - it->t.value()), it->p});
    }
    return PolylinePath(std::move(out), path.polyline().allows_stalls());
}

Path concat(const Path& alpha, const Path& beta) {
    if (alpha.kind() != beta.kind()) {
        throw Error(ErrorCode::InvalidArgument, "cannot concatenate paths of different kinds");
    }
    if (alpha.is_polyline() && alpha.polyline().dim() != beta.polyline().dim()) {
        throw Error(ErrorCode::InvalidArgument, "cannot concatenate paths of different dimension");
    }
    if (eval(alpha, Param::one()) != eval(beta, Param::zero())) {
        throw Error(ErrorCode::EndpointMismatch,
                    "endpoint mismatch: " + to_string(eval(alpha, Param::one())) +
                        " != " + to_string(eval(beta, Param::zero())));
    }
    if (!alpha.is_polyline()) {
        const auto a = alpha.discrete().labels();
        const auto b = beta.discrete().labels();
        std::vector<std::string> labels(a.begin(), a.end());
        labels.insert(labels.end(), b.begin() + 1, b.end());
        return DiscretePath(std::move(labels),
                            alpha.discrete().allows_repeats() || beta.discrete().allows_repeats());
    }
    const Rational half(1, 2);
    std::vector<Vertex> out;
    for (const auto& v : alpha.polyline().vertices()) out.push_back({Param(v.t.value() * half), v.p});
    bool first = true;
    for (const auto& v : beta.polyline().vertices()) {
        if (first) {
            first = false;
            continue;
        }
        out.push_back({Param(half + v.t.value() * half), v.p});
    }
    return PolylinePath(std::move(out),
                        alpha.polyline().allows_stalls() || beta.polyline().allows_stalls());
}

std::vector<Point> normal_form(const Path& path) {
    std::vector<Point> out;
    if (!path.is_polyline()) {
        for (const auto& l : path.discrete().labels()) {
            if (out.empty() || std::get<Label>(out.back()).name != l) out.push_back(Label{l});
        }
        return out;
    }
    std::vector<Coords> pts;
    for (const auto& v : path.polyline().vertices()) {
        if (!pts.empty() && pts.back() == v.p) continue;
        if (pts.size() >= 2) {
            const auto& a = pts[pts.size() - 2];
            const auto& b = pts.back();
            const Coords d1 = geom::sub(b, a);
            const Coords d2 = geom::sub(v.p, b);
            if (geom::parallel(d1, d2) && geom::dot(d1, d2) > 0) pts.pop_back();
        }
        pts.push_back(v.p);
    }
    out.reserve(pts.size());
    for (auto& p : pts) out.emplace_back(std::move(p));
    return out;
}

bool reparam_equivalent(const Path& alpha, const Path& beta) {
    if (alpha.kind() != beta.kind()) return false;
    return normal_form(alpha) == normal_form(beta);
}

std::uint64_t fingerprint(const Path& path) {
    std::string canon;
    if (path.is_polyline()) {
        canon = "polyline:" + std::to_string(path.polyline().dim());
        for (const auto& v : path.polyline().vertices()) {
            canon += ";" + v.t.str();
            for (const auto& c : v.p) canon += "," + format_rational(c);
        }
    } else {
        canon = "discrete";
        for (const auto& l : path.discrete().labels()) {
            canon += ";" + std::to_string(l.size()) + ":" + l;
        }
    }
    // FNV-1a, 64 bit.
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : canon) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

} // namespace arcwise
