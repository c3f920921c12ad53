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

#include "arcwise/report.hpp"

#include <algorithm>
#include <iomanip>
#include <limits>
#include <sstream>

namespace arcwise {

namespace verify {

bool endpoints_preserved(const Path& input, const Path& arc) {
    return eval(arc, Param::zero()) == eval(input, Param::zero()) &&
           eval(arc, Param::one()) == eval(input, Param::one());
}

namespace {

bool polyline_vertex_outside(const PolylinePath& input, const Coords& p, const IntervalFamily& u) {
    const auto vs = input.vertices();
    for (std::size_t k = 0; k + 1 < vs.size(); ++k) {
        if (!geom::on_segment(p, vs[k].p, vs[k + 1].p)) continue;
        const Coords d = geom::sub(vs[k + 1].p, vs[k].p);
        const Rational dd = geom::dot(d, d);
        const Rational frac = dd == 0 ? Rational(0) : geom::dot(geom::sub(p, vs[k].p), d) / dd;
        const Param t(vs[k].t.value() + frac * (vs[k + 1].t.value() - vs[k].t.value()));
        if (!u.find(t)) return true;
    }
    return false;
}

bool polyline_span_inside(const PolylinePath& input, const Coords& p, const Coords& q) {
    const Coords mid = geom::lerp(p, q, Rational(1, 2));
    const auto vs = input.vertices();
    for (std::size_t k = 0; k + 1 < vs.size(); ++k) {
        const auto& a = vs[k].p;
        const auto& b = vs[k + 1].p;
        if (geom::on_segment(p, a, b) && geom::on_segment(q, a, b) && geom::on_segment(mid, a, b)) {
            return true;
        }
    }
    return false;
}

} // namespace

bool image_contained(const Path& input, const Path& arc, const IntervalFamily& cancellation) {
    if (input.kind() != arc.kind()) return false;
    if (!input.is_polyline()) {
        const auto& d = input.discrete();
        for (const auto& label : arc.discrete().labels()) {
            bool found = false;
            for (std::size_t i = 0; i < d.size() && !found; ++i) {
                found = d.labels()[i] == label && !cancellation.find(d.sample_param(i));
            }
            if (!found) return false;
        }
        return true;
    }
    const auto& in = input.polyline();
    const auto vs = arc.polyline().vertices();
    if (in.dim() != arc.polyline().dim()) return false;
    for (const auto& v : vs) {
        if (!polyline_vertex_outside(in, v.p, cancellation)) return false;
    }
    for (std::size_t k = 0; k + 1 < vs.size(); ++k) {
        if (!polyline_span_inside(in, vs[k].p, vs[k + 1].p)) return false;
    }
    return true;
}

} // namespace verify

RunReport make_report(const Path& input, const ArcExtraction& extraction, double elapsed_ms) {
    RunReport r;
    r.input_kind = input.is_polyline() ? "polyline" : "discrete";
    r.input_size = input.breakpoint_count();
    r.cancellation = extraction.cancellation.family();
    r.iterations = extraction.iterations;
    r.arc_size = extraction.arc.breakpoint_count();
    r.arc_start = to_string(eval(extraction.arc, Param::zero()));
    r.arc_end = to_string(eval(extraction.arc, Param::one()));
    r.input_was_loop = is_loop(input);
    r.injective = !injectivity_witness(extraction.arc).has_value();
    r.endpoints_preserved = verify::endpoints_preserved(input, extraction.arc);
    r.image_contained = verify::image_contained(
        input, extraction.arc, r.input_was_loop ? IntervalFamily{} : r.cancellation);
    r.elapsed_ms = elapsed_ms;
    return r;
}

io::json to_json(const RunReport& r) {
    return {{"input", {{"kind", r.input_kind}, {"size", r.input_size}, {"loop", r.input_was_loop}}},
            {"cancellation",
             {{"count", r.cancellation.size()}, {"intervals", io::to_json(r.cancellation)["intervals"]}}},
            {"iterations", r.iterations},
            {"arc", {{"vertices", r.arc_size}, {"start", r.arc_start}, {"end", r.arc_end}}},
            {"verdicts",
             {{"injective", r.injective},
              {"endpoints_preserved", r.endpoints_preserved},
              {"image_contained", r.image_contained},
              {"verified", r.verified()}}},
            {"elapsed_ms", r.elapsed_ms}};
}

std::string to_text(const RunReport& r) {
    std::ostringstream out;
    auto yes = [](bool b) { return b ? "yes" : "no"; };
    out << "input:        " << r.input_kind << ", " << r.input_size << " breakpoints"
        << (r.input_was_loop ? " (loop)" : "") << "\n";
    out << "cancellation: " << r.cancellation.size() << " interval(s)";
    for (const auto& iv : r.cancellation) out << " (" << iv.lo().str() << "," << iv.hi().str() << ")";
    out << "\n";
    out << "iterations:   " << r.iterations << "\n";
    out << "arc:          " << r.arc_size << " breakpoints, " << r.arc_start << " -> " << r.arc_end << "\n";
    out << "injective:    " << yes(r.injective) << "\n";
    out << "endpoints:    " << yes(r.endpoints_preserved) << "\n";
    out << "image:        " << yes(r.image_contained) << "\n";
    out << "verified:     " << yes(r.verified()) << "\n";
    out << "elapsed:      " << std::fixed << std::setprecision(2) << r.elapsed_ms << " ms\n";
    return out.str();
}

namespace {

constexpr double kWidth = 480.0;
constexpr double kPlot = 400.0;
constexpr double kMargin = 40.0;
constexpr double kBarY = 470.0;

struct Box {
    double x0 = std::numeric_limits<double>::max(), y0 = x0;
    double x1 = std::numeric_limits<double>::lowest(), y1 = x1;

    void add(double x, double y) {
        x0 = std::min(x0, x);
        x1 = std::max(x1, x);
        y0 = std::min(y0, y);
        y1 = std::max(y1, y);
    }
    std::pair<double, double> map(double x, double y) const {
        const double span = std::max({x1 - x0, y1 - y0, 1e-9});
        return {kMargin + (x - x0) / span * kPlot, kMargin + kPlot - (y - y0) / span * kPlot};
    }
};

std::pair<double, double> xy(const Coords& c) {
    return {c[0].get_d(), c.size() > 1 ? c[1].get_d() : 0.0};
}

std::string polyline_points(const PolylinePath& p, const Box& box) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(2);
    for (const auto& v : p.vertices()) {
        const auto [x, y] = xy(v.p);
        const auto [sx, sy] = box.map(x, y);
        out << sx << "," << sy << " ";
    }
    return out.str();
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '&': out += "&amp;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

} // namespace

std::string render_reduction_svg(const Path& input, const ArcExtraction& extraction) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(2);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"520\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (input.is_polyline()) {
        Box box;
        for (const auto& v : input.polyline().vertices()) {
            const auto [x, y] = xy(v.p);
            box.add(x, y);
        }
        out << "<polyline fill=\"none\" stroke=\"#c8c8c8\" stroke-width=\"6\" points=\""
            << polyline_points(input.polyline(), box) << "\"/>\n";
        out << "<polyline fill=\"none\" stroke=\"#202020\" stroke-width=\"2\" points=\""
            << polyline_points(extraction.arc.polyline(), box) << "\"/>\n";
    } else {
        auto row = [&](std::span<const std::string> labels, double y, const char* fill) {
            const double step = kPlot / static_cast<double>(std::max<std::size_t>(labels.size(), 1));
            for (std::size_t i = 0; i < labels.size(); ++i) {
                out << "<text x=\"" << kMargin + step * static_cast<double>(i) << "\" y=\"" << y
                    << "\" fill=\"" << fill << "\" font-family=\"monospace\">" << escape(labels[i])
                    << "</text>\n";
            }
        };
        row(input.discrete().labels(), 200.0, "#a0a0a0");
        row(extraction.arc.discrete().labels(), 260.0, "#202020");
    }
    // Parameter bar [0,1] with the cancellation's intervals.
    out << "<rect x=\"" << kMargin << "\" y=\"" << kBarY << "\" width=\"" << kPlot
        << "\" height=\"12\" fill=\"#eeeeee\" stroke=\"#888888\"/>\n";
    for (const auto& iv : extraction.cancellation.family()) {
        const double a = kMargin + iv.lo().to_double() * kPlot;
        const double b = kMargin + iv.hi().to_double() * kPlot;
        out << "<rect x=\"" << a << "\" y=\"" << kBarY << "\" width=\"" << (b - a)
            << "\" height=\"12\" fill=\"#d04040\" fill-opacity=\"0.6\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

std::string render_map_svg(const CollapsingMap& map) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(2);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kWidth
        << "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<rect x=\"" << kMargin << "\" y=\"" << kMargin << "\" width=\"" << kPlot << "\" height=\""
        << kPlot << "\" fill=\"none\" stroke=\"#bbbbbb\"/>\n";
    out << "<polyline fill=\"none\" stroke=\"#202020\" stroke-width=\"1.5\" points=\"";
    for (const auto& n : map.vertices()) {
        out << kMargin + n.t.to_double() * kPlot << "," << kMargin + kPlot - n.y.to_double() * kPlot << " ";
    }
    out << "\"/>\n</svg>\n";
    return out.str();
}

} // namespace arcwise
