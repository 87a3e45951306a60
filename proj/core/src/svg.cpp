#include "qg/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <string>

#include "qg/version.hpp"

namespace qg {

namespace {

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#17becf"};

std::string fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

// Round tick spacing to 1/2/5 times a power of ten.
double nice_step(double span, int target_ticks) {
    const double raw = span / std::max(target_ticks, 1);
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    const double frac = raw / mag;
    double step = 10.0;
    if (frac <= 1.0) {
        step = 1.0;
    } else if (frac <= 2.0) {
        step = 2.0;
    } else if (frac <= 5.0) {
        step = 5.0;
    }
    return step * mag;
}

} // namespace

void write_line_chart_svg(std::ostream& out, const ChartOptions& options,
                          const std::vector<Series>& series) {
    const double margin_left = 64, margin_right = 16, margin_top = 40,
                 margin_bottom = 48;
    const double plot_w = options.width - margin_left - margin_right;
    const double plot_h = options.height - margin_top - margin_bottom;

    double x_min = std::numeric_limits<double>::infinity(), x_max = -x_min;
    double y_min = 0.0, y_max = -std::numeric_limits<double>::infinity();
    for (const Series& s : series) {
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            const double xv = options.log_x ? std::log2(s.x[i]) : s.x[i];
            x_min = std::min(x_min, xv);
            x_max = std::max(x_max, xv);
            y_max = std::max(y_max, s.y[i]);
        }
    }
    if (!(x_max > x_min)) x_max = x_min + 1.0;
    if (!(y_max > y_min)) y_max = y_min + 1.0;
    y_max *= 1.05;

    auto sx = [&](double v) {
        const double t = (options.log_x ? std::log2(v) : v);
        return margin_left + (t - x_min) / (x_max - x_min) * plot_w;
    };
    auto sy = [&](double v) {
        return margin_top + plot_h - (v - y_min) / (y_max - y_min) * plot_h;
    };

    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<!-- generated by qg " << kVersion << " -->\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << options.width
        << "\" height=\"" << options.height << "\" viewBox=\"0 0 " << options.width
        << " " << options.height << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<text x=\"" << fmt(margin_left) << "\" y=\"24\" font-family=\"sans-serif\" "
           "font-size=\"16\">"
        << options.title << "</text>\n";

    // Axes.
    out << "<line x1=\"" << fmt(margin_left) << "\" y1=\"" << fmt(margin_top)
        << "\" x2=\"" << fmt(margin_left) << "\" y2=\"" << fmt(margin_top + plot_h)
        << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << fmt(margin_left) << "\" y1=\"" << fmt(margin_top + plot_h)
        << "\" x2=\"" << fmt(margin_left + plot_w) << "\" y2=\""
        << fmt(margin_top + plot_h) << "\" stroke=\"black\"/>\n";

    // Y ticks and labels.
    const double y_step = nice_step(y_max - y_min, 6);
    for (double v = y_min; v <= y_max + 1e-12; v += y_step) {
        const double y = sy(v);
        out << "<line x1=\"" << fmt(margin_left - 4) << "\" y1=\"" << fmt(y)
            << "\" x2=\"" << fmt(margin_left + plot_w) << "\" y2=\"" << fmt(y)
            << "\" stroke=\"#dddddd\"/>\n";
        out << "<text x=\"" << fmt(margin_left - 8) << "\" y=\"" << fmt(y + 4)
            << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"end\">"
            << fmt(v) << "</text>\n";
    }

    // X ticks at integer positions (log2 positions when log_x).
    const double x_step = std::max(1.0, nice_step(x_max - x_min, 8));
    for (double v = std::ceil(x_min); v <= x_max + 1e-12; v += x_step) {
        const double raw = options.log_x ? std::pow(2.0, v) : v;
        const double x = margin_left + (v - x_min) / (x_max - x_min) * plot_w;
        out << "<line x1=\"" << fmt(x) << "\" y1=\"" << fmt(margin_top + plot_h)
            << "\" x2=\"" << fmt(x) << "\" y2=\"" << fmt(margin_top + plot_h + 4)
            << "\" stroke=\"black\"/>\n";
        out << "<text x=\"" << fmt(x) << "\" y=\"" << fmt(margin_top + plot_h + 18)
            << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">"
            << fmt(raw) << "</text>\n";
    }
    out << "<text x=\"" << fmt(margin_left + plot_w / 2) << "\" y=\""
        << fmt(margin_top + plot_h + 36)
        << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">"
        << options.x_label << (options.log_x ? " (log scale)" : "") << "</text>\n";

    // Series polylines and legend.
    for (std::size_t s = 0; s < series.size(); ++s) {
        const char* color = kPalette[s % (sizeof(kPalette) / sizeof(kPalette[0]))];
        out << "<polyline fill=\"none\" stroke=\"" << color
            << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < series[s].x.size(); ++i) {
            if (i) out << " ";
            out << fmt(sx(series[s].x[i])) << "," << fmt(sy(series[s].y[i]));
        }
        out << "\"/>\n";
        const double ly = margin_top + 14 + 16 * static_cast<double>(s);
        out << "<line x1=\"" << fmt(margin_left + plot_w - 120) << "\" y1=\"" << fmt(ly)
            << "\" x2=\"" << fmt(margin_left + plot_w - 100) << "\" y2=\"" << fmt(ly)
            << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
        out << "<text x=\"" << fmt(margin_left + plot_w - 94) << "\" y=\"" << fmt(ly + 4)
            << "\" font-family=\"sans-serif\" font-size=\"11\">" << series[s].name
            << "</text>\n";
    }
    out << "</svg>\n";
}

} // namespace qg
