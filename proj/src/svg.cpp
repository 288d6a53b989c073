#include "localdeg/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <stdexcept>

#include "localdeg/csv.hpp"

namespace localdeg {

namespace {

constexpr double kMarginLeft = 70.0, kMarginRight = 20.0;
constexpr double kMarginTop = 40.0, kMarginBottom = 50.0;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                          "#9467bd", "#8c564b", "#17becf", "#7f7f7f"};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

struct Axis {
    double lo = 0.0, hi = 1.0;
    double px0 = 0.0, px1 = 1.0;
    double to_px(double v) const {
        if (hi == lo) return 0.5 * (px0 + px1);
        return px0 + (v - lo) / (hi - lo) * (px1 - px0);
    }
};

void draw_frame(std::string& out, const ChartSpec& spec, const Axis& x, const Axis& y) {
    out += "<rect x=\"" + fmt(x.px0) + "\" y=\"" + fmt(y.px1) + "\" width=\"" +
           fmt(x.px1 - x.px0) + "\" height=\"" + fmt(y.px0 - y.px1) +
           "\" fill=\"none\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
    for (int i = 0; i <= 4; ++i) {
        const double fx = x.lo + (x.hi - x.lo) * i / 4.0;
        const double fy = y.lo + (y.hi - y.lo) * i / 4.0;
        const double px = x.to_px(fx), py = y.to_px(fy);
        out += "<line x1=\"" + fmt(px) + "\" y1=\"" + fmt(y.px0) + "\" x2=\"" + fmt(px) +
               "\" y2=\"" + fmt(y.px0 + 5) + "\" stroke=\"#333333\"/>\n";
        out += "<text x=\"" + fmt(px) + "\" y=\"" + fmt(y.px0 + 18) +
               "\" font-size=\"11\" text-anchor=\"middle\">" + format_double(fx) + "</text>\n";
        out += "<line x1=\"" + fmt(x.px0 - 5) + "\" y1=\"" + fmt(py) + "\" x2=\"" +
               fmt(x.px0) + "\" y2=\"" + fmt(py) + "\" stroke=\"#333333\"/>\n";
        out += "<text x=\"" + fmt(x.px0 - 8) + "\" y=\"" + fmt(py + 4) +
               "\" font-size=\"11\" text-anchor=\"end\">" + format_double(fy) + "</text>\n";
    }
    if (!spec.title.empty())
        out += "<text x=\"" + fmt(0.5 * (x.px0 + x.px1)) +
               "\" y=\"22\" font-size=\"14\" text-anchor=\"middle\">" + spec.title +
               "</text>\n";
}

double parse_cell(const std::vector<std::string>& row, int col) {
    if (col < 0 || col >= static_cast<int>(row.size()))
        throw std::runtime_error("render_svg: column index out of range");
    try {
        return std::stod(row[static_cast<std::size_t>(col)]);
    } catch (const std::exception&) {
        throw std::runtime_error("render_svg: non-numeric cell '" +
                                 row[static_cast<std::size_t>(col)] + "'");
    }
}

} // namespace

void render_svg(const std::vector<std::vector<std::string>>& rows, const ChartSpec& spec,
                const std::filesystem::path& out_path) {
    std::vector<std::vector<std::string>> data(rows.begin() + (rows.empty() ? 0 : 1),
                                               rows.end());

    struct Pt {
        double x, y;
        std::string series;
    };
    std::vector<Pt> pts;
    pts.reserve(data.size());
    for (const auto& row : data) {
        Pt p;
        p.x = parse_cell(row, spec.x_column);
        p.y = parse_cell(row, spec.y_column);
        if (spec.log_y) {
            if (!(p.y > 0.0)) continue;
            p.y = std::log10(p.y);
        }
        if (spec.series_column >= 0)
            p.series = row.at(static_cast<std::size_t>(spec.series_column));
        pts.push_back(std::move(p));
    }

    Axis x, y;
    x.px0 = kMarginLeft;
    x.px1 = spec.width - kMarginRight;
    y.px0 = spec.height - kMarginBottom; // SVG y grows downward
    y.px1 = kMarginTop;
    if (!pts.empty()) {
        x.lo = x.hi = pts.front().x;
        y.lo = y.hi = pts.front().y;
        for (const auto& p : pts) {
            x.lo = std::min(x.lo, p.x);
            x.hi = std::max(x.hi, p.x);
            y.lo = std::min(y.lo, p.y);
            y.hi = std::max(y.hi, p.y);
        }
        if (x.hi == x.lo) x.hi = x.lo + 1.0;
        if (y.hi == y.lo) y.hi = y.lo + 1.0;
        const double pad = 0.05 * (y.hi - y.lo);
        y.lo -= pad;
        y.hi += pad;
    }

    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
                      std::to_string(spec.width) + "\" height=\"" +
                      std::to_string(spec.height) + "\">\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    draw_frame(out, spec, x, y);

    if (spec.kind == ChartSpec::Kind::line) {
        std::map<std::string, std::vector<const Pt*>> series;
        for (const auto& p : pts) series[p.series].push_back(&p);
        int idx = 0;
        for (auto& [name, sp] : series) {
            std::stable_sort(sp.begin(), sp.end(),
                             [](const Pt* a, const Pt* b) { return a->x < b->x; });
            std::string poly;
            for (const Pt* p : sp)
                poly += fmt(x.to_px(p->x)) + "," + fmt(y.to_px(p->y)) + " ";
            out += "<polyline fill=\"none\" stroke=\"" +
                   std::string(kPalette[idx % 8]) + "\" stroke-width=\"1.5\" points=\"" +
                   poly + "\"/>\n";
            if (!name.empty())
                out += "<text x=\"" + fmt(x.px1 - 6) + "\" y=\"" +
                       fmt(kMarginTop + 14.0 * (idx + 1)) +
                       "\" font-size=\"11\" text-anchor=\"end\" fill=\"" +
                       kPalette[idx % 8] + "\">" + name + "</text>\n";
            ++idx;
        }
    } else if (spec.kind == ChartSpec::Kind::box) {
        std::map<double, std::vector<double>> groups;
        for (const auto& p : pts) groups[p.x].push_back(p.y);
        const double bw = groups.size() > 0
                              ? 0.6 * (x.px1 - x.px0) / static_cast<double>(groups.size() + 1)
                              : 10.0;
        for (auto& [gx, vals] : groups) {
            std::sort(vals.begin(), vals.end());
            const auto q = [&](double f) {
                const double pos = f * static_cast<double>(vals.size() - 1);
                const std::size_t i = static_cast<std::size_t>(pos);
                const double frac = pos - static_cast<double>(i);
                return i + 1 < vals.size() ? vals[i] * (1 - frac) + vals[i + 1] * frac
                                           : vals[i];
            };
            const double cx = x.to_px(gx);
            const double q1 = y.to_px(q(0.25)), q2 = y.to_px(q(0.5)), q3 = y.to_px(q(0.75));
            const double wlo = y.to_px(vals.front()), whi = y.to_px(vals.back());
            out += "<line x1=\"" + fmt(cx) + "\" y1=\"" + fmt(wlo) + "\" x2=\"" + fmt(cx) +
                   "\" y2=\"" + fmt(whi) + "\" stroke=\"#333333\"/>\n";
            out += "<rect x=\"" + fmt(cx - bw / 2) + "\" y=\"" + fmt(q3) + "\" width=\"" +
                   fmt(bw) + "\" height=\"" + fmt(q1 - q3) +
                   "\" fill=\"#9ecae1\" stroke=\"#333333\"/>\n";
            out += "<line x1=\"" + fmt(cx - bw / 2) + "\" y1=\"" + fmt(q2) + "\" x2=\"" +
                   fmt(cx + bw / 2) + "\" y2=\"" + fmt(q2) +
                   "\" stroke=\"#333333\" stroke-width=\"1.5\"/>\n";
        }
    } else { // bar
        const double bw = pts.empty()
                              ? 10.0
                              : 0.7 * (x.px1 - x.px0) / static_cast<double>(pts.size() + 1);
        for (const auto& p : pts) {
            const double cx = x.to_px(p.x);
            const double base = y.to_px(std::max(y.lo, 0.0));
            const double top = y.to_px(p.y);
            out += "<rect x=\"" + fmt(cx - bw / 2) + "\" y=\"" + fmt(std::min(top, base)) +
                   "\" width=\"" + fmt(bw) + "\" height=\"" + fmt(std::abs(base - top)) +
                   "\" fill=\"#1f77b4\" stroke=\"#333333\"/>\n";
        }
    }

    out += "</svg>\n";
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + out_path.string());
    f << out;
}

void render_svg_file(const std::filesystem::path& csv_path, const ChartSpec& spec,
                     const std::filesystem::path& out_path) {
    render_svg(read_csv(csv_path), spec, out_path);
}

} // namespace localdeg
