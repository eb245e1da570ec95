#pragma once

// Static SVG drawings of frames in R^2 and R^3: one arrow from the origin
// per frame element, optionally with the canonical dual in a second colour.
// Three-dimensional frames use a fixed isometric projection (30 / 30 deg).

#include "finframe/frame.hpp"
#include "finframe/io.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

namespace finframe {

enum class Projection { XY, Isometric };

struct PlotSpec {
    int width_px = 480;
    int height_px = 480;
    Projection projection = Projection::XY;
    double stroke_px = 2.0;
    double margin_px = 30.0;
    std::string frame_color = "#1f4e99";
    std::string dual_color = "#c0392b";
    std::string axis_color = "#999999";
};

/// Point of the drawing plane for an element (real parts only).
inline std::array<double, 2> project(std::span<const Scalar> v, Projection p) {
    if (p == Projection::XY) {
        return {v[0].real(), v[1].real()};
    }
    const double c = std::cos(std::numbers::pi / 6.0);
    const double s = std::sin(std::numbers::pi / 6.0);
    const double x = v[0].real();
    const double y = v[1].real();
    const double z = v[2].real();
    return {(x - y) * c, z - (x + y) * s};
}

/// Renders the frame (and its dual when with_dual). Arrow end points are in
/// frame coordinates inside a group that maps them to pixels.
inline std::string render_svg(const Frame& f, bool with_dual, PlotSpec spec = {}) {
    if (f.dim() != 2 && f.dim() != 3) {
        throw InvalidInput("plot supports dim 2 or 3");
    }
    spec.projection = f.dim() == 2 ? Projection::XY : Projection::Isometric;

    std::vector<std::vector<std::array<double, 2>>> sets;
    auto collect = [&](const Frame& fr) {
        std::vector<std::array<double, 2>> pts;
        for (std::size_t k = 0; k < fr.count(); ++k) {
            pts.push_back(project(fr.element(k), spec.projection));
        }
        sets.push_back(std::move(pts));
    };
    collect(f);
    if (with_dual) {
        collect(f.dual());
    }

    // Axes: unit vectors of the ambient space, scaled to the data extent.
    double extent = 1.0;
    for (const auto& pts : sets) {
        for (const auto& p : pts) {
            extent = std::max({extent, std::abs(p[0]), std::abs(p[1])});
        }
    }
    std::vector<std::array<double, 2>> axes;
    for (std::size_t a = 0; a < f.dim(); ++a) {
        Vector e(f.dim());
        e[a] = extent;
        axes.push_back(project(e, spec.projection));
    }

    const double half = std::min(spec.width_px, spec.height_px) / 2.0 - spec.margin_px;
    const double scale = half / (extent * 1.05);
    const double cx = spec.width_px / 2.0;
    const double cy = spec.height_px / 2.0;
    const double stroke = spec.stroke_px / scale;

    std::string s;
    s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + std::to_string(spec.width_px) +
         "\" height=\"" + std::to_string(spec.height_px) + "\" viewBox=\"0 0 " + std::to_string(spec.width_px) +
         " " + std::to_string(spec.height_px) + "\">\n";
    s += "<defs>\n";
    const std::array<std::string, 2> colors{spec.frame_color, spec.dual_color};
    const std::array<std::string, 2> ids{"frame", "dual"};
    for (std::size_t i = 0; i < sets.size(); ++i) {
        s += "<marker id=\"head-" + ids[i] +
             "\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" markerWidth=\"6\" markerHeight=\"6\" "
             "orient=\"auto\" markerUnits=\"strokeWidth\"><path d=\"M0,0 L10,5 L0,10 z\" fill=\"" +
             colors[i] + "\"/></marker>\n";
    }
    s += "</defs>\n";
    s += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    s += "<g transform=\"translate(" + format_number(cx) + "," + format_number(cy) + ") scale(" +
         format_number(scale) + "," + format_number(-scale) + ")\">\n";

    s += "<g id=\"axes\" stroke=\"" + spec.axis_color + "\" stroke-width=\"" + format_number(stroke / 2.0) +
         "\">\n";
    for (const auto& a : axes) {
        s += "<line x1=\"" + format_number(-a[0]) + "\" y1=\"" + format_number(-a[1]) + "\" x2=\"" +
             format_number(a[0]) + "\" y2=\"" + format_number(a[1]) + "\"/>\n";
    }
    s += "</g>\n";

    for (std::size_t i = 0; i < sets.size(); ++i) {
        s += "<g id=\"" + ids[i] + "\" stroke=\"" + colors[i] + "\" stroke-width=\"" + format_number(stroke) +
             "\">\n";
        for (const auto& p : sets[i]) {
            s += "<line x1=\"0\" y1=\"0\" x2=\"" + format_number(p[0]) + "\" y2=\"" + format_number(p[1]) +
                 "\" marker-end=\"url(#head-" + ids[i] + ")\"/>\n";
        }
        s += "</g>\n";
    }
    s += "</g>\n</svg>\n";
    return s;
}

} // namespace finframe
