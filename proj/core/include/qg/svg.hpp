#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qg {

struct Series {
    std::string name;
    std::vector<double> x;
    std::vector<double> y;
};

struct ChartOptions {
    std::string title;
    std::string x_label = "N";
    std::string y_label;
    bool log_x = false; // base-2 log scale on x
    int width = 720;
    int height = 480;
};

// Static line chart. Output is deterministic; the only run-dependent
// content is the version comment emitted right after the XML header.
void write_line_chart_svg(std::ostream& out, const ChartOptions& options,
                          const std::vector<Series>& series);

} // namespace qg
