/* SPDX-License-Identifier: Apache-2.0 */
#include "refrigimc/svg.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "refrigimc/errors.hpp"
#include "refrigimc/serialization.hpp"

namespace refrigimc {

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

std::string heat_color(double t) {
    // Blue (low) to red (high).
    t = std::clamp(t, 0.0, 1.0);
    const int r = static_cast<int>(std::lround(255.0 * t));
    const int b = static_cast<int>(std::lround(255.0 * (1.0 - t)));
    const int g = static_cast<int>(std::lround(80.0 * (1.0 - std::abs(2.0 * t - 1.0))));
    std::ostringstream os;
    os << "rgb(" << r << ',' << g << ',' << b << ')';
    return os.str();
}

struct Extent {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    void add(double v) {
        if (std::isfinite(v)) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    double span() const { return hi > lo ? hi - lo : 1.0; }
};

void polyline(std::ostream& out, std::span<const double> t, std::span<const double> v, double x0,
              double y0, double w, double h, const Extent& tx, const Extent& vx,
              const std::string& color, const std::string& dash = "") {
    out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1\"";
    if (!dash.empty()) {
        out << " stroke-dasharray=\"" << dash << "\"";
    }
    out << " points=\"";
    const std::size_t stride = std::max<std::size_t>(1, t.size() / 2000);
    for (std::size_t i = 0; i < t.size(); i += stride) {
        const double x = x0 + (t[i] - tx.lo) / tx.span() * w;
        const double y = y0 + h - (v[i] - vx.lo) / vx.span() * h;
        out << fmt(x) << ',' << fmt(y) << ' ';
    }
    out << "\"/>\n";
}

void text(std::ostream& out, double x, double y, const std::string& s, int size = 11) {
    out << "<text x=\"" << fmt(x) << "\" y=\"" << fmt(y) << "\" font-size=\"" << size
        << "\" font-family=\"sans-serif\">" << s << "</text>\n";
}

}  // namespace

void write_surface_svg(const std::filesystem::path& path, const SweepSurface& surface,
                       const std::string& quantity, const std::string& title) {
    std::ofstream out(path);
    if (!out) {
        throw ConfigError("cannot write file: " + path.string());
    }
    const auto& l11 = surface.grid.lambda11;
    const auto& l22 = surface.grid.lambda22;
    const double cell = 34.0;
    const double mx = 70.0;
    const double my = 50.0;
    const double w = cell * static_cast<double>(l22.size());
    const double h = cell * static_cast<double>(l11.size());

    int ratio_idx = -1;
    for (std::size_t i = 0; i < ratio_names().size(); ++i) {
        if (ratio_names()[i] == quantity) {
            ratio_idx = static_cast<int>(i);
        }
    }
    auto value = [&](const SweepPoint& p) {
        if (!p.stable) {
            return std::numeric_limits<double>::quiet_NaN();
        }
        return quantity == "J" ? p.j : p.report.ratios[static_cast<std::size_t>(ratio_idx)];
    };

    Extent ve;
    for (const auto& p : surface.points) {
        ve.add(value(p));
    }

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(w + mx + 120)
        << "\" height=\"" << fmt(h + my + 40) << "\">\n";
    text(out, mx, 24, title, 14);
    for (std::size_t i = 0; i < l11.size(); ++i) {
        for (std::size_t j = 0; j < l22.size(); ++j) {
            const double v = value(surface.at(i, j));
            const std::string color =
                std::isfinite(v) ? heat_color((v - ve.lo) / ve.span()) : "rgb(150,150,150)";
            out << "<rect x=\"" << fmt(mx + cell * static_cast<double>(j)) << "\" y=\""
                << fmt(my + cell * static_cast<double>(i)) << "\" width=\"" << fmt(cell)
                << "\" height=\"" << fmt(cell) << "\" fill=\"" << color << "\"/>\n";
        }
        text(out, 8, my + cell * (static_cast<double>(i) + 0.65), fmt(l11[i]), 10);
    }
    for (std::size_t j = 0; j < l22.size(); ++j) {
        text(out, mx + cell * (static_cast<double>(j) + 0.15), my + h + 14, fmt(l22[j]), 10);
    }
    text(out, 8, my - 10, "lambda11 \\ lambda22", 10);
    text(out, mx + w + 10, my + 12, "min " + fmt(ve.lo), 10);
    text(out, mx + w + 10, my + 28, "max " + fmt(ve.hi), 10);
    out << "</svg>\n";
}

void write_sim_svg(const std::filesystem::path& path, const SimResult& result,
                   const std::string& title) {
    std::ofstream out(path);
    if (!out) {
        throw ConfigError("cannot write file: " + path.string());
    }
    const double w = 720.0;
    const double h = 180.0;
    const double mx = 60.0;
    const double gap = 40.0;
    Extent tx;
    tx.add(result.time.front());
    tx.add(result.time.back());

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(w + mx + 20)
        << "\" height=\"" << fmt(2 * h + 3 * gap) << "\">\n";
    text(out, mx, 22, title, 14);

    const std::array<std::string, 2> colors{"rgb(0,90,200)", "rgb(200,60,0)"};
    double y0 = gap;
    {
        Extent vy;
        for (int l = 0; l < 2; ++l) {
            const auto li = static_cast<std::size_t>(l);
            for (double v : result.y[li]) {
                vy.add(v);
            }
            for (double v : result.r[li]) {
                vy.add(v);
            }
        }
        for (int l = 0; l < 2; ++l) {
            const auto li = static_cast<std::size_t>(l);
            polyline(out, result.time, result.y[li], mx, y0, w, h, tx, vy, colors[li]);
            polyline(out, result.time, result.r[li], mx, y0, w, h, tx, vy, colors[li], "4,3");
        }
        out << "<rect x=\"" << fmt(mx) << "\" y=\"" << fmt(y0) << "\" width=\"" << fmt(w)
            << "\" height=\"" << fmt(h) << "\" fill=\"none\" stroke=\"black\"/>\n";
        text(out, 8, y0 + 12, fmt(vy.hi), 10);
        text(out, 8, y0 + h, fmt(vy.lo), 10);
        text(out, mx, y0 - 6, "outputs (solid) and setpoints (dashed)", 11);
    }
    y0 = h + 2 * gap;
    {
        Extent vy;
        for (int l = 0; l < 2; ++l) {
            for (double v : result.u[static_cast<std::size_t>(l)]) {
                vy.add(v);
            }
        }
        for (int l = 0; l < 2; ++l) {
            const auto li = static_cast<std::size_t>(l);
            polyline(out, result.time, result.u[li], mx, y0, w, h, tx, vy, colors[li]);
        }
        out << "<rect x=\"" << fmt(mx) << "\" y=\"" << fmt(y0) << "\" width=\"" << fmt(w)
            << "\" height=\"" << fmt(h) << "\" fill=\"none\" stroke=\"black\"/>\n";
        text(out, 8, y0 + 12, fmt(vy.hi), 10);
        text(out, 8, y0 + h, fmt(vy.lo), 10);
        text(out, mx, y0 - 6, "control actions", 11);
    }
    out << "</svg>\n";
}

}  // namespace refrigimc
