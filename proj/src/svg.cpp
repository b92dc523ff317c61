#include "chebtrot/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <stdexcept>

namespace chebtrot {

namespace {

constexpr double kWidth = 640, kHeight = 420;
constexpr double kLeft = 70, kRight = 150, kTop = 40, kBottom = 50;
constexpr std::array<const char*, 8> kColours = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                                 "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string tick_label(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

struct Series {
    std::string name;
    std::vector<std::pair<double, double>> points;
};

std::size_t column(const ParsedCsv& csv, const std::string& name) {
    auto it = std::find(csv.header.begin(), csv.header.end(), name);
    if (it == csv.header.end()) throw std::runtime_error("CSV has no column '" + name + "'");
    return static_cast<std::size_t>(it - csv.header.begin());
}

bool parse_number(const std::string& cell, double& out) {
    if (cell.empty()) return false;
    char* end = nullptr;
    out = std::strtod(cell.c_str(), &end);
    return end && *end == '\0' && std::isfinite(out);
}

struct Axis {
    double lo, hi;
    bool log;
    double map(double v, double a, double b) const {
        const double x = log ? std::log10(v) : v;
        return a + (x - lo) / (hi - lo) * (b - a);
    }
};

Axis make_axis(const std::vector<double>& values, bool log) {
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (double v : values) {
        const double x = log ? std::log10(v) : v;
        lo = std::min(lo, x);
        hi = std::max(hi, x);
    }
    if (!(lo <= hi)) lo = 0, hi = 1;
    if (log) {
        lo = std::floor(lo);
        hi = std::ceil(hi);
    }
    if (hi - lo < 1e-12) {
        lo -= 0.5;
        hi += 0.5;
    }
    return Axis{lo, hi, log};
}

}  // namespace

std::string render_svg(const ParsedCsv& csv, const PlotSpec& spec) {
    const auto xi = column(csv, spec.x);
    std::vector<Series> series;
    if (!spec.group.empty()) {
        if (spec.y.empty()) throw std::runtime_error("plot needs a y column");
        const auto gi = column(csv, spec.group), yi = column(csv, spec.y.front());
        std::map<double, std::size_t> index;
        for (const auto& row : csv.rows) {
            double g, x, y;
            if (!parse_number(row[gi], g) || !parse_number(row[xi], x) || !parse_number(row[yi], y)) continue;
            if ((spec.log_x && x <= 0) || (spec.log_y && y <= 0)) continue;
            auto [it, fresh] = index.try_emplace(g, series.size());
            if (fresh) series.push_back({spec.group + "=" + row[gi], {}});
            series[it->second].points.emplace_back(x, y);
        }
    } else {
        for (const auto& name : spec.y) {
            const auto yi = column(csv, name);
            Series s{name, {}};
            for (const auto& row : csv.rows) {
                double x, y;
                if (!parse_number(row[xi], x) || !parse_number(row[yi], y)) continue;
                if ((spec.log_x && x <= 0) || (spec.log_y && y <= 0)) continue;
                s.points.emplace_back(x, y);
            }
            series.push_back(std::move(s));
        }
    }

    std::vector<double> xs, ys;
    for (const auto& s : series)
        for (const auto& [x, y] : s.points) xs.push_back(x), ys.push_back(y);
    const Axis ax = make_axis(xs, spec.log_x), ay = make_axis(ys, spec.log_y);
    const double x0 = kLeft, x1 = kWidth - kRight, y0 = kHeight - kBottom, y1 = kTop;

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(kWidth) + "\" height=\"" + fmt(kHeight) +
           "\" viewBox=\"0 0 " + fmt(kWidth) + " " + fmt(kHeight) + "\" font-family=\"sans-serif\" font-size=\"11\">\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out += "<text x=\"" + fmt(kWidth / 2) + "\" y=\"20\" text-anchor=\"middle\" font-size=\"14\">" + escape(spec.title) +
           "</text>\n";
    out += "<rect x=\"" + fmt(x0) + "\" y=\"" + fmt(y1) + "\" width=\"" + fmt(x1 - x0) + "\" height=\"" +
           fmt(y0 - y1) + "\" fill=\"none\" stroke=\"black\"/>\n";

    auto ticks = [](const Axis& a) {
        std::vector<double> t;
        if (a.log) {
            const int step = std::max(1, static_cast<int>(std::ceil((a.hi - a.lo) / 8)));
            for (double e = a.lo; e <= a.hi + 1e-9; e += step) t.push_back(std::pow(10.0, e));
        } else {
            for (int i = 0; i <= 5; ++i) t.push_back(a.lo + (a.hi - a.lo) * i / 5.0);
        }
        return t;
    };
    for (double v : ticks(ax)) {
        const double px = ax.map(v, x0, x1);
        out += "<line x1=\"" + fmt(px) + "\" y1=\"" + fmt(y0) + "\" x2=\"" + fmt(px) + "\" y2=\"" + fmt(y0 + 5) +
               "\" stroke=\"black\"/><text x=\"" + fmt(px) + "\" y=\"" + fmt(y0 + 18) +
               "\" text-anchor=\"middle\">" + tick_label(v) + "</text>\n";
    }
    for (double v : ticks(ay)) {
        const double py = ay.map(v, y0, y1);
        out += "<line x1=\"" + fmt(x0 - 5) + "\" y1=\"" + fmt(py) + "\" x2=\"" + fmt(x0) + "\" y2=\"" + fmt(py) +
               "\" stroke=\"black\"/><text x=\"" + fmt(x0 - 8) + "\" y=\"" + fmt(py + 4) +
               "\" text-anchor=\"end\">" + tick_label(v) + "</text>\n";
    }
    out += "<text x=\"" + fmt((x0 + x1) / 2) + "\" y=\"" + fmt(kHeight - 10) + "\" text-anchor=\"middle\">" +
           escape(spec.x) + (spec.log_x ? " (log)" : "") + "</text>\n";
    if (spec.log_y) out += "<text x=\"12\" y=\"" + fmt(y1 - 10) + "\">log scale</text>\n";

    for (std::size_t i = 0; i < series.size(); ++i) {
        const auto* colour = kColours[i % kColours.size()];
        std::string pts;
        for (const auto& [x, y] : series[i].points) {
            if (!pts.empty()) pts += ' ';
            pts += fmt(ax.map(x, x0, x1)) + "," + fmt(ay.map(y, y0, y1));
        }
        out += "<polyline fill=\"none\" stroke=\"" + std::string(colour) + "\" stroke-width=\"1.5\" points=\"" + pts +
               "\"/>\n";
        for (const auto& [x, y] : series[i].points)
            out += "<circle cx=\"" + fmt(ax.map(x, x0, x1)) + "\" cy=\"" + fmt(ay.map(y, y0, y1)) + "\" r=\"2.5\" fill=\"" +
                   colour + "\"/>\n";
        const double ly = y1 + 14 + 16 * static_cast<double>(i);
        out += "<line x1=\"" + fmt(x1 + 10) + "\" y1=\"" + fmt(ly - 4) + "\" x2=\"" + fmt(x1 + 30) + "\" y2=\"" +
               fmt(ly - 4) + "\" stroke=\"" + colour + "\" stroke-width=\"2\"/><text x=\"" + fmt(x1 + 35) + "\" y=\"" +
               fmt(ly) + "\">" + escape(series[i].name) + "</text>\n";
    }
    out += "</svg>\n";
    return out;
}

}  // namespace chebtrot
