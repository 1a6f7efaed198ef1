#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "wskdc/bandwidth.hpp"
#include "wskdc/dataset.hpp"
#include "wskdc/metrics.hpp"

namespace wskdc {

/// One repeated-experiment protocol: per repeat, split the data, select the
/// bandwidth on the training part, fit, and score reject curves on the test
/// part. bandwidth_config.alpha and .seed are overridden per run (the run
/// uses one confidence level throughout and one seed per repeat).
struct ExperimentConfig {
    double train_fraction = 0.8;
    std::size_t repeats = 50;
    std::uint64_t base_seed = 0;
    double alpha = 0.95;
    double tau = 0.95;
    BandwidthSearchConfig bandwidth_config;
};

struct RunRecord {
    std::uint64_t seed;
    double bandwidth_h;
    double auprc;
    double aurrc;
    double t_optim_seconds;
    double t_infer_seconds;
    RejectCurves curves;
};

/// Everything except the timing fields is a pure function of (data, config).
struct ExperimentReport {
    std::vector<RunRecord> runs;
    RunSummary summary;
    MeanStd t_optim;
    MeanStd t_infer;
};

/// Seeded uniform shuffle, then the first floor(N * train_fraction) rows
/// train and the rest test. Either side ending up empty is a domain error.
std::pair<Dataset, Dataset> split_train_test(const Dataset& data, double train_fraction,
                                             std::uint64_t seed);

/// One seeded repeat: split, optimize the bandwidth on the training split
/// (wall-clock timed as t_optim), fit, predict the test split (timed as
/// t_infer), and build the reject curves at config.tau.
RunRecord run_experiment(const Dataset& data, const ExperimentConfig& config, std::uint64_t seed);

/// Runs repeats with seeds base_seed .. base_seed + repeats - 1 and
/// aggregates the records.
ExperimentReport run_repeated(const Dataset& data, const ExperimentConfig& config);

}  // namespace wskdc
