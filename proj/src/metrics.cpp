#include "wskdc/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace wskdc {

namespace {

constexpr std::size_t kGridSteps = 1000;  // grid has kGridSteps + 1 points

// Linearly interpolated empirical quantile of a sorted sample.
double quantile_sorted(const std::vector<double>& sorted, double p) {
    const std::size_t m = sorted.size();
    if (m == 1) return sorted[0];
    const double pos = p * static_cast<double>(m - 1);
    const auto lo = static_cast<std::size_t>(pos);
    if (lo + 1 >= m) return sorted[m - 1];
    const double frac = pos - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

// Value of a step curve (one entry per rejection level, coverage (N-i)/N) at
// grid coverage num/1000. The retained count at coverage g is ceil(g * N),
// done in integer arithmetic so grid points falling exactly on a level never
// misround.
double step_sample(const std::vector<double>& levels, std::size_t num) {
    const auto n = static_cast<std::uint64_t>(levels.size());
    const std::uint64_t retained = (num * n + kGridSteps - 1) / kGridSteps;
    const std::uint64_t rejected = n - retained;
    return levels[std::min<std::uint64_t>(rejected, n - 1)];
}

}  // namespace

MeanStd mean_std(std::span<const double> values) {
    if (values.empty()) throw std::domain_error("mean_std: empty sample");
    const auto n = static_cast<double>(values.size());
    double sum = 0.0;
    for (const double v : values) sum += v;
    const double mean = sum / n;
    if (values.size() == 1) return {mean, 0.0};
    double ss = 0.0;
    for (const double v : values) ss += (v - mean) * (v - mean);
    return {mean, std::sqrt(ss / (n - 1.0))};
}

RejectCurves reject_curves(std::span<const double> scores, std::span<const int> predicted,
                           std::span<const int> labels, std::optional<double> tau) {
    const std::size_t n = scores.size();
    if (n == 0 || predicted.size() != n || labels.size() != n)
        throw std::domain_error("reject_curves: inputs must be nonempty and of equal length");
    for (std::size_t i = 0; i < n; ++i) {
        if (!std::isfinite(scores[i]))
            throw std::invalid_argument("reject_curves: non-finite score");
        if ((predicted[i] != 0 && predicted[i] != 1) || (labels[i] != 0 && labels[i] != 1))
            throw std::invalid_argument("reject_curves: predictions and labels must be 0 or 1");
    }
    if (tau && !std::isfinite(*tau))
        throw std::invalid_argument("reject_curves: non-finite tau");

    // Ascending by score; equal scores keep input order, so the sweep below
    // is deterministic.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return scores[a] != scores[b] ? scores[a] < scores[b] : a < b;
    });

    RejectCurves out;
    out.coverage.resize(n);
    out.precision.resize(n);
    out.recall.resize(n);

    // Rejection level i keeps order[i..n); grow the retained set from the
    // most confident end so each level costs O(1).
    std::size_t tp = 0, fp = 0, fn = 0;
    for (std::size_t i = n; i-- > 0;) {
        const std::size_t s = order[i];
        if (predicted[s] == 1) {
            if (labels[s] == 1)
                ++tp;
            else
                ++fp;
        } else if (labels[s] == 1) {
            ++fn;
        }
        out.coverage[i] = static_cast<double>(n - i) / static_cast<double>(n);
        out.precision[i] =
            tp + fp == 0 ? 1.0 : static_cast<double>(tp) / static_cast<double>(tp + fp);
        out.recall[i] =
            tp + fn == 0 ? 1.0 : static_cast<double>(tp) / static_cast<double>(tp + fn);
    }

    double psum = 0.0, rsum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        psum += out.precision[i];
        rsum += out.recall[i];
    }
    out.auprc = psum / static_cast<double>(n);
    out.aurrc = rsum / static_cast<double>(n);

    if (tau) {
        // The worst retained score at level i is scores[order[i]]; the first
        // level that clears tau has the largest qualifying coverage.
        for (std::size_t i = 0; i < n; ++i) {
            if (scores[order[i]] > *tau) {
                out.tau_coverage = out.coverage[i];
                break;
            }
        }
    }
    return out;
}

std::vector<CurveRow> curve_to_table(const RejectCurves& curves) {
    const std::size_t n = curves.coverage.size();
    if (n == 0 || curves.precision.size() != n || curves.recall.size() != n)
        throw std::invalid_argument("curve_to_table: malformed curves");
    std::vector<CurveRow> rows(n);
    for (std::size_t i = 0; i < n; ++i) {
        rows[i].coverage = curves.coverage[i];
        rows[i].precision = curves.precision[i];
        rows[i].recall = curves.recall[i];
        rows[i].tau_marker = curves.tau_coverage && curves.coverage[i] == *curves.tau_coverage;
    }
    return rows;
}

RunSummary summarize_runs(std::span<const RejectCurves> runs) {
    if (runs.empty()) throw std::domain_error("summarize_runs: no runs");

    RunSummary out;
    std::vector<double> auprcs, aurrcs;
    auprcs.reserve(runs.size());
    aurrcs.reserve(runs.size());
    for (const auto& run : runs) {
        if (run.coverage.empty() || run.precision.size() != run.coverage.size() ||
            run.recall.size() != run.coverage.size())
            throw std::invalid_argument("summarize_runs: malformed run curves");
        auprcs.push_back(run.auprc);
        aurrcs.push_back(run.aurrc);
    }
    out.auprc = mean_std(auprcs);
    out.aurrc = mean_std(aurrcs);

    const std::size_t points = kGridSteps + 1;
    out.grid_coverage.resize(points);
    out.precision_mean.resize(points);
    out.precision_q05.resize(points);
    out.precision_q95.resize(points);
    out.recall_mean.resize(points);
    out.recall_q05.resize(points);
    out.recall_q95.resize(points);

    std::vector<double> pvals(runs.size()), rvals(runs.size());
    for (std::size_t t = 0; t < points; ++t) {
        const std::size_t num = kGridSteps - t;
        out.grid_coverage[t] = static_cast<double>(num) / static_cast<double>(kGridSteps);
        for (std::size_t r = 0; r < runs.size(); ++r) {
            pvals[r] = step_sample(runs[r].precision, num);
            rvals[r] = step_sample(runs[r].recall, num);
        }
        out.precision_mean[t] = mean_std(pvals).mean;
        out.recall_mean[t] = mean_std(rvals).mean;
        std::sort(pvals.begin(), pvals.end());
        std::sort(rvals.begin(), rvals.end());
        out.precision_q05[t] = quantile_sorted(pvals, 0.05);
        out.precision_q95[t] = quantile_sorted(pvals, 0.95);
        out.recall_q05[t] = quantile_sorted(rvals, 0.05);
        out.recall_q95[t] = quantile_sorted(rvals, 0.95);
    }

    std::vector<double> markers;
    for (const auto& run : runs)
        if (run.tau_coverage) markers.push_back(*run.tau_coverage);
    if (!markers.empty()) {
        const double mean = mean_std(markers).mean;
        const double snapped =
            std::clamp(std::round(mean * kGridSteps), 0.0, static_cast<double>(kGridSteps));
        out.tau_coverage = snapped / static_cast<double>(kGridSteps);
    }
    return out;
}

}  // namespace wskdc
