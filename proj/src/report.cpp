#include "netpred/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace netpred {

namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

const char* kSeriesColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#8c564b"};

}  // namespace

std::string render_svg_plot(const std::string& title, const std::string& xlabel,
                            const std::string& ylabel, const std::vector<PlotSeries>& series) {
    const double W = 640, H = 480, ml = 70, mr = 20, mt = 40, mb = 55;
    double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
    bool first = true;
    for (const PlotSeries& s : series)
        for (const PlotPoint& p : s.points) {
            if (first) {
                xmin = xmax = p.x;
                ymin = ymax = p.y;
                first = false;
            }
            xmin = std::min(xmin, p.x);
            xmax = std::max(xmax, p.x);
            ymin = std::min(ymin, p.y);
            ymax = std::max(ymax, p.y);
        }
    if (xmax == xmin) xmax = xmin + 1;
    if (ymax == ymin) ymax = ymin + 1;
    double xpad = (xmax - xmin) * 0.05, ypad = (ymax - ymin) * 0.05;
    xmin -= xpad;
    xmax += xpad;
    ymin -= ypad;
    ymax += ypad;

    auto X = [&](double x) { return ml + (x - xmin) / (xmax - xmin) * (W - ml - mr); };
    auto Y = [&](double y) { return H - mb - (y - ymin) / (ymax - ymin) * (H - mt - mb); };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
        << "\" viewBox=\"0 0 " << W << " " << H << "\">\n";
    out << "<rect width=\"" << W << "\" height=\"" << H << "\" fill=\"white\"/>\n";
    out << "<text x=\"" << W / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">" << title
        << "</text>\n";
    // axes
    out << "<line x1=\"" << ml << "\" y1=\"" << H - mb << "\" x2=\"" << W - mr << "\" y2=\""
        << H - mb << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\"" << H - mb
        << "\" stroke=\"black\"/>\n";
    for (int i = 0; i <= 5; ++i) {
        double fx = xmin + (xmax - xmin) * i / 5.0;
        double fy = ymin + (ymax - ymin) * i / 5.0;
        out << "<text x=\"" << X(fx) << "\" y=\"" << H - mb + 18
            << "\" text-anchor=\"middle\" font-size=\"10\">" << fmt(fx) << "</text>\n";
        out << "<text x=\"" << ml - 8 << "\" y=\"" << Y(fy) + 4
            << "\" text-anchor=\"end\" font-size=\"10\">" << fmt(fy) << "</text>\n";
    }
    out << "<text x=\"" << (ml + W - mr) / 2 << "\" y=\"" << H - 12
        << "\" text-anchor=\"middle\" font-size=\"12\">" << xlabel << "</text>\n";
    out << "<text x=\"18\" y=\"" << (mt + H - mb) / 2
        << "\" text-anchor=\"middle\" font-size=\"12\" transform=\"rotate(-90 18 "
        << (mt + H - mb) / 2 << ")\">" << ylabel << "</text>\n";

    for (std::size_t si = 0; si < series.size(); ++si) {
        const char* color = kSeriesColors[si % 5];
        const PlotSeries& s = series[si];
        if (s.connect && s.points.size() > 1) {
            out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
            for (const PlotPoint& p : s.points) out << fmt(X(p.x)) << "," << fmt(Y(p.y)) << " ";
            out << "\"/>\n";
        }
        for (const PlotPoint& p : s.points)
            out << "<circle cx=\"" << fmt(X(p.x)) << "\" cy=\"" << fmt(Y(p.y))
                << "\" r=\"3\" fill=\"" << color << "\"/>\n";
        out << "<text x=\"" << W - mr - 8 << "\" y=\"" << mt + 16 + 16 * double(si)
            << "\" text-anchor=\"end\" font-size=\"11\" fill=\"" << color << "\">" << s.label
            << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

LinearFit fit_linear(const std::vector<PlotPoint>& pts) {
    LinearFit f;
    const double n = double(pts.size());
    if (pts.size() < 2) return f;
    double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
    for (const PlotPoint& p : pts) {
        sx += p.x;
        sy += p.y;
        sxx += p.x * p.x;
        sxy += p.x * p.y;
        syy += p.y * p.y;
    }
    double den = n * sxx - sx * sx;
    if (den == 0) return f;
    f.slope = (n * sxy - sx * sy) / den;
    f.intercept = (sy - f.slope * sx) / n;
    double ss_tot = syy - sy * sy / n;
    double ss_res = 0;
    for (const PlotPoint& p : pts) {
        double e = p.y - (f.slope * p.x + f.intercept);
        ss_res += e * e;
    }
    f.r2 = ss_tot <= 0 ? 1.0 : 1.0 - ss_res / ss_tot;
    return f;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write: " + path);
    out << content;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace netpred
