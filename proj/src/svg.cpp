#include "topoplan/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <stdexcept>

namespace topoplan {

namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

std::string fmt_px(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string escape(const std::string& text) {
    std::string out;
    for (char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            default: out.push_back(c);
        }
    }
    return out;
}

}  // namespace

void write_line_chart(const std::filesystem::path& file, const std::string& title,
                      const std::string& x_label, const std::string& y_label,
                      const std::vector<ChartSeries>& series) {
    constexpr double width = 800.0, height = 500.0;
    constexpr double ml = 75.0, mr = 170.0, mt = 45.0, mb = 60.0;
    const double plot_w = width - ml - mr;
    const double plot_h = height - mt - mb;

    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    for (const auto& s : series) {
        for (const auto& [x, y] : s.points) {
            if (!std::isfinite(x) || !std::isfinite(y)) continue;
            xmin = std::min(xmin, x);
            xmax = std::max(xmax, x);
            ymin = std::min(ymin, y);
            ymax = std::max(ymax, y);
        }
    }
    if (!(xmin <= xmax)) { xmin = 0.0; xmax = 1.0; }
    if (!(ymin <= ymax)) { ymin = 0.0; ymax = 1.0; }
    if (xmax == xmin) { xmax += 1.0; xmin -= 1.0; }
    if (ymax == ymin) { ymax += std::abs(ymax) * 0.1 + 1.0; ymin -= std::abs(ymin) * 0.1 + 1.0; }
    const double ypad = (ymax - ymin) * 0.05;
    ymin -= ypad;
    ymax += ypad;

    auto sx = [&](double x) { return ml + (x - xmin) / (xmax - xmin) * plot_w; };
    auto sy = [&](double y) { return mt + plot_h - (y - ymin) / (ymax - ymin) * plot_h; };

    std::ofstream out(file);
    if (!out) throw std::runtime_error("cannot write " + file.string());

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    out << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
    out << "<text x=\"" << width / 2 << "\" y=\"24\" text-anchor=\"middle\" "
           "font-family=\"sans-serif\" font-size=\"16\">"
        << escape(title) << "</text>\n";

    constexpr int ticks = 5;
    for (int i = 0; i <= ticks; ++i) {
        const double tx = xmin + (xmax - xmin) * i / ticks;
        const double ty = ymin + (ymax - ymin) * i / ticks;
        const double px = sx(tx);
        const double py = sy(ty);
        out << "<line x1=\"" << fmt_px(px) << "\" y1=\"" << fmt_px(mt) << "\" x2=\"" << fmt_px(px)
            << "\" y2=\"" << fmt_px(mt + plot_h) << "\" stroke=\"#dddddd\"/>\n";
        out << "<line x1=\"" << fmt_px(ml) << "\" y1=\"" << fmt_px(py) << "\" x2=\""
            << fmt_px(ml + plot_w) << "\" y2=\"" << fmt_px(py) << "\" stroke=\"#dddddd\"/>\n";
        out << "<text x=\"" << fmt_px(px) << "\" y=\"" << fmt_px(mt + plot_h + 18)
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" << fmt(tx)
            << "</text>\n";
        out << "<text x=\"" << fmt_px(ml - 8) << "\" y=\"" << fmt_px(py + 4)
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << fmt(ty)
            << "</text>\n";
    }
    out << "<rect x=\"" << fmt_px(ml) << "\" y=\"" << fmt_px(mt) << "\" width=\"" << fmt_px(plot_w)
        << "\" height=\"" << fmt_px(plot_h) << "\" fill=\"none\" stroke=\"black\"/>\n";
    out << "<text x=\"" << fmt_px(ml + plot_w / 2) << "\" y=\"" << fmt_px(height - 14)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">"
        << escape(x_label) << "</text>\n";
    out << "<text x=\"20\" y=\"" << fmt_px(mt + plot_h / 2)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
           "transform=\"rotate(-90 20 "
        << fmt_px(mt + plot_h / 2) << ")\">" << escape(y_label) << "</text>\n";

    double legend_y = mt + 10;
    for (const auto& s : series) {
        if (!s.points.empty()) {
            out << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.8\" points=\"";
            for (const auto& [x, y] : s.points) out << fmt_px(sx(x)) << "," << fmt_px(sy(y)) << " ";
            out << "\"/>\n";
            for (const auto& [x, y] : s.points)
                out << "<circle cx=\"" << fmt_px(sx(x)) << "\" cy=\"" << fmt_px(sy(y))
                    << "\" r=\"2.2\" fill=\"" << s.color << "\"/>\n";
        }
        out << "<line x1=\"" << fmt_px(ml + plot_w + 12) << "\" y1=\"" << fmt_px(legend_y)
            << "\" x2=\"" << fmt_px(ml + plot_w + 34) << "\" y2=\"" << fmt_px(legend_y)
            << "\" stroke=\"" << s.color << "\" stroke-width=\"2\"/>\n";
        out << "<text x=\"" << fmt_px(ml + plot_w + 40) << "\" y=\"" << fmt_px(legend_y + 4)
            << "\" font-family=\"sans-serif\" font-size=\"12\">" << escape(s.label) << "</text>\n";
        legend_y += 20;
    }
    out << "</svg>\n";
}

}  // namespace topoplan
