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

#ifndef ARCWISE_PATH_HPP
#define ARCWISE_PATH_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "arcwise/param.hpp"

namespace arcwise {

using Coords = std::vector<Rational>;

struct Label {
    std::string name;
    friend bool operator==(const Label&, const Label&) = default;
};

// A point of the carrier space. Only equality is ever consulted.
using Point = std::variant<Coords, Label>;

std::string to_string(const Point& p);

struct Vertex {
    Param t;
    Coords p;
    friend bool operator==(const Vertex&, const Vertex&) = default;
};

// Piecewise-linear path in Q^d. Breakpoint parameters strictly increase
// from 0 to 1. Consecutive points must differ unless the path was built
// with `allow_stalls`, which is reserved for collapsed paths and constant
// paths.
class PolylinePath {
public:
    explicit PolylinePath(std::vector<Vertex> vertices, bool allow_stalls = false);

    // Breakpoints at i/(n-1).
    static PolylinePath uniform(const std::vector<Coords>& points, bool allow_stalls = false);
    static PolylinePath constant(const Coords& p);

    std::size_t dim() const noexcept { return vertices_.front().p.size(); }
    std::span<const Vertex> vertices() const noexcept { return vertices_; }
    std::size_t span_count() const noexcept { return vertices_.size() - 1; }
    bool allows_stalls() const noexcept { return allow_stalls_; }

    // Index of the span [t_k, t_{k+1}] containing t; t = 1 maps to the last span.
    std::size_t span_index(const Param& t) const;
    Coords eval(const Param& t) const;

    friend bool operator==(const PolylinePath&, const PolylinePath&) = default;

private:
    std::vector<Vertex> vertices_;
    bool allow_stalls_ = false;
};

// Step path over a finite alphabet: sample i sits at i/(n-1) and holds
// until the next sample.
class DiscretePath {
public:
    explicit DiscretePath(std::vector<std::string> labels, bool allow_repeats = false);

    std::span<const std::string> labels() const noexcept { return labels_; }
    std::size_t size() const noexcept { return labels_.size(); }
    bool allows_repeats() const noexcept { return allow_repeats_; }

    Param sample_param(std::size_t i) const;
    // Nearest sample at or below t.
    std::size_t index_at(const Param& t) const;
    // Sample index when t lies exactly on the grid.
    std::optional<std::size_t> grid_index(const Param& t) const;
    const std::string& eval(const Param& t) const { return labels_[index_at(t)]; }

    friend bool operator==(const DiscretePath&, const DiscretePath&) = default;

private:
    std::vector<std::string> labels_;
    bool allow_repeats_ = false;
};

enum class PathKind { Polyline, Discrete };

class Path {
public:
    Path(PolylinePath p) : impl_(std::move(p)) {}
    Path(DiscretePath p) : impl_(std::move(p)) {}

    PathKind kind() const noexcept {
        return impl_.index() == 0 ? PathKind::Polyline : PathKind::Discrete;
    }
    bool is_polyline() const noexcept { return kind() == PathKind::Polyline; }
    const PolylinePath& polyline() const { return std::get<PolylinePath>(impl_); }
    const DiscretePath& discrete() const { return std::get<DiscretePath>(impl_); }

    // Vertex parameters (polyline) or sample parameters (discrete).
    std::vector<Param> breakpoints() const;
    std::size_t breakpoint_count() const;

    friend bool operator==(const Path&, const Path&) = default;

private:
    std::variant<PolylinePath, DiscretePath> impl_;
};

Point eval(const Path& path, const Param& t);
bool same_point(const Path& path, const Param& a, const Param& b);
bool is_loop(const Path& path);

Path reverse(const Path& path);
// Throws Error{EndpointMismatch} when alpha(1) != beta(0), and
// Error{InvalidArgument} on mixed kinds or dimensions.
Path concat(const Path& alpha, const Path& beta);

// Canonical trace used for reparameterization equivalence: stalls dropped,
// same-direction collinear interior vertices removed (polylines), or
// consecutive duplicates collapsed (discrete).
std::vector<Point> normal_form(const Path& path);
bool reparam_equivalent(const Path& alpha, const Path& beta);

// Content hash of the canonical serialization.
std::uint64_t fingerprint(const Path& path);

// Exact geometry helpers shared by coincidence detection and verification.
namespace geom {

Coords sub(const Coords& a, const Coords& b);
Coords lerp(const Coords& a, const Coords& b, const Rational& u);
bool parallel(const Coords& u, const Coords& v);
Rational dot(const Coords& a, const Coords& b);
// p lies on the closed segment [a, b].
bool on_segment(const Coords& p, const Coords& a, const Coords& b);

} // namespace geom

} // namespace arcwise

#endif // ARCWISE_PATH_HPP
