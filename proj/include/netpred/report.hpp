#pragma once

#include <string>
#include <vector>

namespace netpred {

struct PlotPoint {
    double x = 0;
    double y = 0;
};

struct PlotSeries {
    std::string label;
    std::vector<PlotPoint> points;
    bool connect = false;
};

// Minimal static SVG plots; byte-deterministic for identical inputs.
std::string render_svg_plot(const std::string& title, const std::string& xlabel,
                            const std::string& ylabel, const std::vector<PlotSeries>& series);

// least squares fit y = a*x + b; r2 is 1 for a perfect fit, 0 when x has no
// explanatory power
struct LinearFit {
    double slope = 0;
    double intercept = 0;
    double r2 = 0;
};
LinearFit fit_linear(const std::vector<PlotPoint>& pts);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace netpred
