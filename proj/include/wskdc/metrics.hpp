#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace wskdc {

/// Precision/recall reject curves over N rejection levels. Row i keeps the
/// N - i highest-ranked samples, so coverage[i] = (N - i) / N runs strictly
/// down from 1.0. auprc/aurrc are the arithmetic means of the curve arrays
/// (Riemann sums over the rejection levels).
struct RejectCurves {
    std::vector<double> coverage;
    std::vector<double> precision;
    std::vector<double> recall;
    double auprc;
    double aurrc;
    // Largest coverage whose every retained sample scores strictly above the
    // requested threshold; unset when no threshold was given or no level
    // qualifies.
    std::optional<double> tau_coverage;
};

/// One exported row of a reject curve.
struct CurveRow {
    double coverage;
    double precision;
    double recall;
    bool tau_marker;
};

struct MeanStd {
    double mean;
    double std;  // n-1 divisor; 0.0 for a single value
};

/// Aggregate of repeated runs: scalar metric statistics plus pointwise
/// curve statistics on a common 1001-point coverage grid (1.000 down to
/// 0.000 in steps of 0.001; each run's step curve is sampled exactly).
struct RunSummary {
    MeanStd auprc;
    MeanStd aurrc;
    std::vector<double> grid_coverage;
    std::vector<double> precision_mean, precision_q05, precision_q95;
    std::vector<double> recall_mean, recall_q05, recall_q95;
    // Mean of the runs' tau_coverage markers, snapped to the nearest grid
    // point; unset when no run carried a marker.
    std::optional<double> tau_coverage;
};

MeanStd mean_std(std::span<const double> values);

/// Builds the reject curves by ranking samples ascending on score (ties keep
/// input order) and sweeping the rejection level. Selective precision and
/// recall use the convention that an empty denominator counts as 1.0: a
/// retained subset with no predicted or actual positives has no failures.
RejectCurves reject_curves(std::span<const double> scores, std::span<const int> predicted,
                           std::span<const int> labels, std::optional<double> tau = std::nullopt);

/// One row per rejection level, ordered by decreasing coverage; tau_marker
/// is true exactly on the row matching curves.tau_coverage, if any.
std::vector<CurveRow> curve_to_table(const RejectCurves& curves);

/// Pointwise mean and 5%/95% quantile bands (linearly interpolated empirical
/// quantiles) across runs, plus mean/std of the scalar metrics.
RunSummary summarize_runs(std::span<const RejectCurves> runs);

}  // namespace wskdc
