#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "wskdc/dataset.hpp"
#include "wskdc/estimator.hpp"
#include "wskdc/kernel.hpp"

namespace wskdc {

/// Controls the cross-validated linesearch in optimize_bandwidth. The grid
/// spans [range_lo_factor * d, range_hi_factor * d] where d is the mean
/// pairwise distance of the data.
struct BandwidthSearchConfig {
    std::size_t folds = 10;
    std::size_t steps = 20;
    double range_lo_factor = 1e-2;
    double range_hi_factor = 1e-1;
    double alpha = 0.95;
    std::uint64_t seed = 0;
    bool stratified = false;
    std::optional<std::uint64_t> max_pairs;  // subsample cap for the mean-distance scan
    unsigned threads = 0;                    // 0 = one worker per hardware thread
};

struct FoldSplit {
    std::vector<std::size_t> train;
    std::vector<std::size_t> holdout;
};

struct BandwidthCandidate {
    double h;
    double mean_nll;
    std::vector<double> fold_nlls;
};

struct BandwidthSearchReport {
    std::vector<BandwidthCandidate> candidates;  // ascending in h
    Bandwidth selected;
    double mean_distance;  // the d anchoring the candidate grid
};

/// Shuffles 0..n-1 with the seeded generator and deals the result into
/// `folds` contiguous holdout chunks of size floor(n/folds) or
/// ceil(n/folds). Every index lands in exactly one holdout; each fold's
/// train set is the shuffled remainder.
std::vector<FoldSplit> kfold_split(std::size_t n, std::size_t folds, std::uint64_t seed);

/// Same contract, but the shuffle-and-deal runs within each label class, so
/// every fold sees both classes whenever the class counts allow it.
std::vector<FoldSplit> kfold_split_stratified(std::span<const int> labels, std::size_t folds,
                                              std::uint64_t seed);

/// Mean Bernoulli negative log-likelihood of the holdout labels under the
/// model's interval midpoints, each clamped to [1e-12, 1 - 1e-12].
double holdout_nll(const WskdeModel& model, const Dataset& holdout);

/// Evaluates a `steps`-point log-uniform bandwidth grid by `folds`-fold
/// cross-validated holdout_nll and selects the candidate with the smallest
/// mean NLL; ties go to the smaller bandwidth. Candidate/fold cells may be
/// scored in parallel; the report never depends on the schedule.
BandwidthSearchReport optimize_bandwidth(const Dataset& data, const BandwidthSearchConfig& config);

}  // namespace wskdc
