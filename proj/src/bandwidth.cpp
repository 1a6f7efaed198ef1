#include "wskdc/bandwidth.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "wskdc/interval.hpp"
#include "wskdc/parallel.hpp"
#include "wskdc/rng.hpp"

namespace wskdc {

namespace {

constexpr double kLikelihoodClamp = 1e-12;

double bernoulli_nll_term(double q, int y) {
    q = std::clamp(q, kLikelihoodClamp, 1.0 - kLikelihoodClamp);
    return y == 1 ? -std::log(q) : -std::log1p(-q);
}

// Deals a pre-shuffled index sequence into `folds` contiguous holdout
// chunks; the first (n mod folds) chunks take the extra element.
std::vector<FoldSplit> deal_folds(const std::vector<std::size_t>& order, std::size_t folds) {
    const std::size_t n = order.size();
    std::vector<FoldSplit> splits(folds);
    std::size_t begin = 0;
    for (std::size_t f = 0; f < folds; ++f) {
        const std::size_t size = n / folds + (f < n % folds ? 1 : 0);
        const std::size_t end = begin + size;
        splits[f].holdout.assign(order.begin() + begin, order.begin() + end);
        splits[f].train.reserve(n - size);
        splits[f].train.insert(splits[f].train.end(), order.begin(), order.begin() + begin);
        splits[f].train.insert(splits[f].train.end(), order.begin() + end, order.end());
        begin = end;
    }
    return splits;
}

}  // namespace

std::vector<FoldSplit> kfold_split(std::size_t n, std::size_t folds, std::uint64_t seed) {
    if (folds == 0) throw std::invalid_argument("kfold_split: folds must be positive");
    if (folds > n)
        throw std::domain_error("kfold_split: more folds (" + std::to_string(folds) +
                                ") than samples (" + std::to_string(n) + ")");
    return deal_folds(shuffled_indices(n, seed), folds);
}

std::vector<FoldSplit> kfold_split_stratified(std::span<const int> labels, std::size_t folds,
                                              std::uint64_t seed) {
    const std::size_t n = labels.size();
    if (folds == 0) throw std::invalid_argument("kfold_split: folds must be positive");
    if (folds > n)
        throw std::domain_error("kfold_split: more folds (" + std::to_string(folds) +
                                ") than samples (" + std::to_string(n) + ")");

    // One shuffled index list per class, each dealt into contiguous chunks
    // exactly as in the unstratified version.
    Rng rng(seed);
    std::vector<std::size_t> by_class[2];
    for (std::size_t i = 0; i < n; ++i) by_class[labels[i] == 1 ? 1 : 0].push_back(i);
    for (auto& indices : by_class) rng.shuffle(indices);

    std::vector<FoldSplit> splits(folds);
    for (const auto& indices : by_class) {
        const auto class_splits = deal_folds(indices, folds);
        for (std::size_t f = 0; f < folds; ++f) {
            auto& dst = splits[f];
            const auto& src = class_splits[f];
            dst.holdout.insert(dst.holdout.end(), src.holdout.begin(), src.holdout.end());
            dst.train.insert(dst.train.end(), src.train.begin(), src.train.end());
        }
    }
    return splits;
}

double holdout_nll(const WskdeModel& model, const Dataset& holdout) {
    validate_dataset(holdout);
    if (holdout.size() == 0) throw std::domain_error("holdout_nll: empty holdout set");
    double sum = 0.0;
    for (std::size_t j = 0; j < holdout.size(); ++j) {
        const double q = model.predict_bounds(holdout.features.row(j)).center;
        sum += bernoulli_nll_term(q, holdout.labels[j]);
    }
    return sum / static_cast<double>(holdout.size());
}

BandwidthSearchReport optimize_bandwidth(const Dataset& data,
                                         const BandwidthSearchConfig& config) {
    validate_dataset(data);
    if (data.size() < 2) throw std::domain_error("optimize_bandwidth: need at least 2 samples");
    if (config.folds < 2 || config.steps < 2)
        throw std::invalid_argument("optimize_bandwidth: folds and steps must both be >= 2");
    if (data.size() < config.folds)
        throw std::domain_error("optimize_bandwidth: fewer samples than folds");
    if (!(config.range_lo_factor > 0.0) || !(config.range_lo_factor < config.range_hi_factor))
        throw std::invalid_argument(
            "optimize_bandwidth: need 0 < range_lo_factor < range_hi_factor");

    const double d = mean_pairwise_distance(data.features, config.max_pairs, config.seed);
    if (d <= 0.0)
        throw std::domain_error(
            "optimize_bandwidth: mean pairwise distance is zero (all points identical); "
            "the bandwidth grid is undefined for degenerate data");

    const double z = z_quantile(config.alpha);
    const std::size_t steps = config.steps;
    const std::size_t folds = config.folds;

    std::vector<double> grid(steps);
    const double ratio = config.range_hi_factor / config.range_lo_factor;
    for (std::size_t k = 0; k < steps; ++k)
        grid[k] = d * config.range_lo_factor *
                  std::pow(ratio, static_cast<double>(k) / static_cast<double>(steps - 1));

    const auto splits = config.stratified
                            ? kfold_split_stratified(data.labels, folds, config.seed)
                            : kfold_split(data.size(), folds, config.seed);

    // Per-fold query-to-train squared distances are bandwidth-independent, so
    // they are computed once and reused by every candidate. Summation order
    // matches weighted_counts exactly, keeping the scores equal to a plain
    // fit-then-holdout_nll evaluation.
    struct FoldData {
        Dataset train;
        std::vector<int> holdout_labels;
        std::vector<double> sqd;  // holdout x train, row-major
    };
    std::vector<FoldData> fold_data(folds);
    for (std::size_t f = 0; f < folds; ++f) {
        auto& fd = fold_data[f];
        fd.train = select_rows(data, splits[f].train);
        const std::size_t m = splits[f].holdout.size();
        const std::size_t t = fd.train.size();
        fd.holdout_labels.reserve(m);
        fd.sqd.resize(m * t);
        for (std::size_t j = 0; j < m; ++j) {
            const auto query = data.features.row(splits[f].holdout[j]);
            fd.holdout_labels.push_back(data.labels[splits[f].holdout[j]]);
            for (std::size_t i = 0; i < t; ++i)
                fd.sqd[j * t + i] = squared_distance(query, fd.train.features.row(i));
        }
    }

    // Candidate x fold cells are independent; each writes one slot.
    std::vector<double> cell_nll(steps * folds);
    parallel_for(steps * folds, config.threads, [&](std::size_t cell) {
        const std::size_t k = cell / folds;
        const std::size_t f = cell % folds;
        const Bandwidth h(grid[k]);
        const auto& fd = fold_data[f];
        const std::size_t m = fd.holdout_labels.size();
        const std::size_t t = fd.train.size();
        double sum = 0.0;
        for (std::size_t j = 0; j < m; ++j) {
            const std::span<const double> row(fd.sqd.data() + j * t, t);
            const Counts c = weighted_counts_from_squared(row, fd.train.labels, h);
            sum += bernoulli_nll_term(wilson_interval(c, z).center, fd.holdout_labels[j]);
        }
        cell_nll[cell] = sum / static_cast<double>(m);
    });

    std::vector<BandwidthCandidate> candidates;
    candidates.reserve(steps);
    std::size_t best = 0;
    for (std::size_t k = 0; k < steps; ++k) {
        BandwidthCandidate cand;
        cand.h = grid[k];
        cand.fold_nlls.assign(cell_nll.begin() + static_cast<std::ptrdiff_t>(k * folds),
                              cell_nll.begin() + static_cast<std::ptrdiff_t>((k + 1) * folds));
        double sum = 0.0;
        for (const double v : cand.fold_nlls) sum += v;
        cand.mean_nll = sum / static_cast<double>(folds);
        candidates.push_back(std::move(cand));
        if (candidates[k].mean_nll < candidates[best].mean_nll) best = k;
    }

    return BandwidthSearchReport{std::move(candidates), Bandwidth(grid[best]), d};
}

}  // namespace wskdc
