// Copyright 2026 The qaoa-reach Authors
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

#include "qreach/svg_plot.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fmt/format.h>
#include <limits>

namespace qreach::svg {

namespace {

constexpr std::array<const char *, 8> kPalette = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                                  "#9467bd", "#8c564b", "#e377c2", "#17becf"};

std::string num(double v) { return fmt::format("{:.2f}", v); }

std::string tick_label(double v) {
    if (v == 0.0) {
        return "0";
    }
    const double a = std::abs(v);
    if (a >= 1e4 || a < 1e-3) {
        return fmt::format("{:.0e}", v);
    }
    return fmt::format("{:g}", v);
}

struct Range {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();

    void include(double v) {
        if (std::isfinite(v)) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    [[nodiscard]] bool valid() const { return lo <= hi; }
    void pad() {
        if (!valid()) {
            lo = 0.0;
            hi = 1.0;
        } else if (hi - lo < 1e-12) {
            const double d = std::max(std::abs(lo) * 0.1, 0.5);
            lo -= d;
            hi += d;
        }
    }
};

} // namespace

std::string xml_escape(const std::string &s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
        case '&':
            out += "&amp;";
            break;
        case '<':
            out += "&lt;";
            break;
        case '>':
            out += "&gt;";
            break;
        case '"':
            out += "&quot;";
            break;
        default:
            out += c;
        }
    }
    return out;
}

std::vector<double> nice_ticks(double lo, double hi, int target) {
    std::vector<double> ticks;
    if (!(hi > lo) || target < 1) {
        ticks.push_back(lo);
        return ticks;
    }
    const double raw = (hi - lo) / target;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    double step = mag;
    for (double m : {1.0, 2.0, 2.5, 5.0, 10.0}) {
        if (m * mag >= raw) {
            step = m * mag;
            break;
        }
    }
    const double first = std::ceil(lo / step - 1e-9) * step;
    for (double t = first; t <= hi + step * 1e-9; t += step) {
        ticks.push_back(std::abs(t) < step * 1e-9 ? 0.0 : t);
    }
    return ticks;
}

bool Chart::empty() const {
    return std::all_of(series_.begin(), series_.end(),
                       [](const Series &s) { return s.points.empty(); });
}

std::string Chart::render(int width, int height) const {
    const double left = 70.0;
    const double right = 170.0;
    const double top = 40.0;
    const double bottom = 55.0;
    const double pw = width - left - right;
    const double ph = height - top - bottom;

    auto ty = [this](double y) { return log_y_ ? std::log10(y) : y; };

    Range xr;
    Range yr;
    for (const auto &s : series_) {
        for (const auto &p : s.points) {
            xr.include(p.x);
            if (log_y_) {
                if (p.y > 0.0) {
                    yr.include(ty(p.y));
                }
            } else {
                yr.include(p.y - p.err);
                yr.include(p.y + p.err);
            }
        }
    }
    for (const auto &r : refs_) {
        xr.include(r.x);
    }
    if (y_from_zero_ && !log_y_) {
        yr.include(0.0);
    }
    xr.pad();
    yr.pad();
    if (log_y_) {
        yr.lo = std::floor(yr.lo);
        yr.hi = std::ceil(yr.hi);
        if (yr.hi <= yr.lo) {
            yr.hi = yr.lo + 1.0;
        }
    } else {
        const double margin = 0.05 * (yr.hi - yr.lo);
        yr.hi += margin;
        if (!(y_from_zero_ && yr.lo == 0.0)) {
            yr.lo -= margin;
        }
    }
    const double xmargin = 0.03 * (xr.hi - xr.lo);
    xr.lo -= xmargin;
    xr.hi += xmargin;

    auto sx = [&](double x) { return left + (x - xr.lo) / (xr.hi - xr.lo) * pw; };
    auto sy = [&](double y) { return top + ph - (ty(y) - yr.lo) / (yr.hi - yr.lo) * ph; };
    auto sy_raw = [&](double t) { return top + ph - (t - yr.lo) / (yr.hi - yr.lo) * ph; };

    std::string out;
    out += fmt::format("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
                       "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" "
                       "viewBox=\"0 0 {} {}\" font-family=\"sans-serif\" font-size=\"12\">\n",
                       width, height, width, height);
    out += fmt::format("<rect width=\"{}\" height=\"{}\" fill=\"white\"/>\n", width, height);
    out += fmt::format("<text x=\"{}\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">{}</text>\n",
                       num(left + pw / 2), xml_escape(title_));

    // Grid and ticks.
    for (double t : nice_ticks(xr.lo, xr.hi)) {
        const double x = sx(t);
        out += fmt::format("<line x1=\"{0}\" y1=\"{1}\" x2=\"{0}\" y2=\"{2}\" stroke=\"#e6e6e6\"/>\n",
                           num(x), num(top), num(top + ph));
        out += fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">{}</text>\n", num(x),
                           num(top + ph + 18), tick_label(t));
    }
    std::vector<double> yticks;
    if (log_y_) {
        for (double e = yr.lo; e <= yr.hi + 1e-9; e += 1.0) {
            yticks.push_back(e);
        }
    } else {
        yticks = nice_ticks(yr.lo, yr.hi);
    }
    for (double t : yticks) {
        const double y = sy_raw(t);
        out += fmt::format("<line x1=\"{0}\" y1=\"{1}\" x2=\"{2}\" y2=\"{1}\" stroke=\"#e6e6e6\"/>\n",
                           num(left), num(y), num(left + pw));
        const std::string label = log_y_ ? fmt::format("1e{:.0f}", t) : tick_label(t);
        out += fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"end\">{}</text>\n",
                           num(left - 6), num(y + 4), label);
    }
    out += fmt::format("<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"none\" "
                       "stroke=\"black\"/>\n",
                       num(left), num(top), num(pw), num(ph));
    out += fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">{}</text>\n",
                       num(left + pw / 2), num(height - 12), xml_escape(x_label_));
    out += fmt::format("<text x=\"16\" y=\"{0}\" text-anchor=\"middle\" "
                       "transform=\"rotate(-90 16 {0})\">{1}</text>\n",
                       num(top + ph / 2), xml_escape(y_label_));

    for (const auto &r : refs_) {
        const double x = sx(r.x);
        out += fmt::format("<line x1=\"{0}\" y1=\"{1}\" x2=\"{0}\" y2=\"{2}\" stroke=\"#555\" "
                           "stroke-dasharray=\"6,4\"/>\n",
                           num(x), num(top), num(top + ph));
        out += fmt::format("<text x=\"{}\" y=\"{}\" fill=\"#555\">{}</text>\n", num(x + 4),
                           num(top + 14), xml_escape(r.label));
    }

    for (std::size_t i = 0; i < series_.size(); ++i) {
        const auto &s = series_[i];
        const char *color = kPalette[i % kPalette.size()];
        std::vector<Point> pts;
        for (const auto &p : s.points) {
            if (std::isfinite(p.x) && std::isfinite(p.y) && (!log_y_ || p.y > 0.0)) {
                pts.push_back(p);
            }
        }
        if (s.lines && pts.size() > 1) {
            std::string path;
            for (const auto &p : pts) {
                path += fmt::format("{}{},{}", path.empty() ? "M" : " L", num(sx(p.x)), num(sy(p.y)));
            }
            out += fmt::format("<path d=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"1.5\"/>\n",
                               path, color);
        }
        for (const auto &p : pts) {
            const double x = sx(p.x);
            const double y = sy(p.y);
            if (p.err > 0.0 && !log_y_) {
                out += fmt::format("<line x1=\"{0}\" y1=\"{1}\" x2=\"{0}\" y2=\"{2}\" stroke=\"{3}\"/>\n",
                                   num(x), num(sy(p.y - p.err)), num(sy(p.y + p.err)), color);
                for (double e : {p.y - p.err, p.y + p.err}) {
                    out += fmt::format("<line x1=\"{0}\" y1=\"{1}\" x2=\"{2}\" y2=\"{1}\" stroke=\"{3}\"/>\n",
                                       num(x - 3), num(sy(e)), num(x + 3), color);
                }
            }
            if (s.markers) {
                out += fmt::format("<rect x=\"{}\" y=\"{}\" width=\"7\" height=\"7\" fill=\"{}\" "
                                   "stroke=\"{}\"/>\n",
                                   num(x - 3.5), num(y - 3.5), p.hollow ? "white" : color, color);
            }
        }
        // Legend entry.
        const double ly = top + 10 + 18.0 * static_cast<double>(i);
        const double lx = left + pw + 14;
        out += fmt::format("<rect x=\"{}\" y=\"{}\" width=\"10\" height=\"10\" fill=\"{}\"/>\n",
                           num(lx), num(ly - 9), color);
        out += fmt::format("<text x=\"{}\" y=\"{}\">{}</text>\n", num(lx + 16), num(ly),
                           xml_escape(s.label));
    }
    out += "</svg>\n";
    return out;
}

} // namespace qreach::svg
