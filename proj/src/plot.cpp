#include "wskdc/plot.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <vector>

namespace wskdc {

namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 480.0;
constexpr double kLeft = 64.0;
constexpr double kRight = 16.0;
constexpr double kTop = 16.0;
constexpr double kBottom = 48.0;

std::string fmt(double v, const char* spec = "%.2f") {
    char buf[32];
    std::snprintf(buf, sizeof(buf), spec, v);
    return buf;
}

}  // namespace

void write_reject_curve_svg(const std::string& path, const RunSummary& summary) {
    const std::size_t n = summary.grid_coverage.size();
    if (n == 0 || summary.precision_mean.size() != n || summary.recall_mean.size() != n ||
        summary.precision_q05.size() != n || summary.precision_q95.size() != n ||
        summary.recall_q05.size() != n || summary.recall_q95.size() != n)
        throw std::invalid_argument("write_reject_curve_svg: malformed summary");

    double data_min = 1.0;
    for (const auto* arr : {&summary.precision_q05, &summary.recall_q05})
        for (const double v : *arr) data_min = std::min(data_min, v);
    const double ymin = std::min(0.99, std::max(0.0, data_min - 0.02));
    const double ymax = 1.0;

    const auto x_px = [&](double cov) { return kLeft + cov * (kWidth - kLeft - kRight); };
    const auto y_px = [&](double v) {
        const double t = (std::clamp(v, ymin, ymax) - ymin) / (ymax - ymin);
        return kHeight - kBottom - t * (kHeight - kTop - kBottom);
    };

    const auto line_points = [&](const std::vector<double>& ys) {
        std::string pts;
        for (std::size_t i = 0; i < n; ++i) {
            pts += fmt(x_px(summary.grid_coverage[i]));
            pts += ',';
            pts += fmt(y_px(ys[i]));
            pts += ' ';
        }
        return pts;
    };
    const auto band_points = [&](const std::vector<double>& hi, const std::vector<double>& lo) {
        std::string pts;
        for (std::size_t i = 0; i < n; ++i) {
            pts += fmt(x_px(summary.grid_coverage[i]));
            pts += ',';
            pts += fmt(y_px(hi[i]));
            pts += ' ';
        }
        for (std::size_t i = n; i-- > 0;) {
            pts += fmt(x_px(summary.grid_coverage[i]));
            pts += ',';
            pts += fmt(y_px(lo[i]));
            pts += ' ';
        }
        return pts;
    };

    std::ofstream out(path);
    if (!out) throw std::runtime_error(path + ": cannot open for writing");

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
        << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight
        << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    out << "<rect width=\"" << kWidth << "\" height=\"" << kHeight << "\" fill=\"white\"/>\n";

    for (int k = 0; k <= 5; ++k) {
        const double cov = static_cast<double>(k) / 5.0;
        const double x = x_px(cov);
        out << "<line x1=\"" << fmt(x) << "\" y1=\"" << fmt(kTop) << "\" x2=\"" << fmt(x)
            << "\" y2=\"" << fmt(kHeight - kBottom) << "\" stroke=\"#dddddd\"/>\n";
        out << "<text x=\"" << fmt(x) << "\" y=\"" << fmt(kHeight - kBottom + 18)
            << "\" text-anchor=\"middle\">" << fmt(cov, "%.1f") << "</text>\n";
    }
    for (int k = 0; k <= 4; ++k) {
        const double v = ymin + static_cast<double>(k) * (ymax - ymin) / 4.0;
        const double y = y_px(v);
        out << "<line x1=\"" << fmt(kLeft) << "\" y1=\"" << fmt(y) << "\" x2=\""
            << fmt(kWidth - kRight) << "\" y2=\"" << fmt(y) << "\" stroke=\"#dddddd\"/>\n";
        out << "<text x=\"" << fmt(kLeft - 6) << "\" y=\"" << fmt(y + 4)
            << "\" text-anchor=\"end\">" << fmt(v, "%.3f") << "</text>\n";
    }

    out << "<polygon points=\"" << band_points(summary.precision_q95, summary.precision_q05)
        << "\" fill=\"#1f77b4\" fill-opacity=\"0.18\" stroke=\"none\"/>\n";
    out << "<polygon points=\"" << band_points(summary.recall_q95, summary.recall_q05)
        << "\" fill=\"#2ca02c\" fill-opacity=\"0.18\" stroke=\"none\"/>\n";
    out << "<polyline points=\"" << line_points(summary.precision_mean)
        << "\" fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.8\"/>\n";
    out << "<polyline points=\"" << line_points(summary.recall_mean)
        << "\" fill=\"none\" stroke=\"#2ca02c\" stroke-width=\"1.8\"/>\n";

    if (summary.tau_coverage) {
        const double x = x_px(*summary.tau_coverage);
        out << "<line x1=\"" << fmt(x) << "\" y1=\"" << fmt(kTop) << "\" x2=\"" << fmt(x)
            << "\" y2=\"" << fmt(kHeight - kBottom)
            << "\" stroke=\"#d62728\" stroke-dasharray=\"5,4\"/>\n";
        out << "<text x=\"" << fmt(x + 4) << "\" y=\"" << fmt(kTop + 14)
            << "\" fill=\"#d62728\">tau coverage " << fmt(*summary.tau_coverage, "%.3f")
            << "</text>\n";
    }

    const double legend_y = kHeight - kBottom - 40.0;
    out << "<line x1=\"" << fmt(kLeft + 10) << "\" y1=\"" << fmt(legend_y) << "\" x2=\""
        << fmt(kLeft + 38) << "\" y2=\"" << fmt(legend_y)
        << "\" stroke=\"#1f77b4\" stroke-width=\"1.8\"/>\n";
    out << "<text x=\"" << fmt(kLeft + 44) << "\" y=\"" << fmt(legend_y + 4)
        << "\">precision (mean, 5-95% band)</text>\n";
    out << "<line x1=\"" << fmt(kLeft + 10) << "\" y1=\"" << fmt(legend_y + 18) << "\" x2=\""
        << fmt(kLeft + 38) << "\" y2=\"" << fmt(legend_y + 18)
        << "\" stroke=\"#2ca02c\" stroke-width=\"1.8\"/>\n";
    out << "<text x=\"" << fmt(kLeft + 44) << "\" y=\"" << fmt(legend_y + 22)
        << "\">recall (mean, 5-95% band)</text>\n";

    out << "<line x1=\"" << fmt(kLeft) << "\" y1=\"" << fmt(kHeight - kBottom) << "\" x2=\""
        << fmt(kWidth - kRight) << "\" y2=\"" << fmt(kHeight - kBottom)
        << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << fmt(kLeft) << "\" y1=\"" << fmt(kTop) << "\" x2=\"" << fmt(kLeft)
        << "\" y2=\"" << fmt(kHeight - kBottom) << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << fmt((kLeft + kWidth - kRight) / 2.0) << "\" y=\""
        << fmt(kHeight - 10) << "\" text-anchor=\"middle\">coverage</text>\n";
    out << "<text x=\"16\" y=\"" << fmt((kTop + kHeight - kBottom) / 2.0)
        << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
        << fmt((kTop + kHeight - kBottom) / 2.0) << ")\">precision / recall</text>\n";
    out << "</svg>\n";

    out.flush();
    if (!out) throw std::runtime_error(path + ": write failed");
}

}  // namespace wskdc
