#include "wskdc/harness.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "wskdc/classifier.hpp"
#include "wskdc/estimator.hpp"
#include "wskdc/rng.hpp"

namespace wskdc {

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

RunRecord run_one(const Dataset& data, const ExperimentConfig& config, std::uint64_t seed) {
    auto [train, test] = split_train_test(data, config.train_fraction, seed);

    BandwidthSearchConfig search = config.bandwidth_config;
    search.alpha = config.alpha;
    search.seed = seed;

    const auto t0 = std::chrono::steady_clock::now();
    const BandwidthSearchReport search_report = optimize_bandwidth(train, search);
    const double t_optim = seconds_since(t0);

    const WskdeModel model = WskdeModel::fit(std::move(train), search_report.selected,
                                             config.alpha);

    const auto t1 = std::chrono::steady_clock::now();
    const auto bounds = model.predict_batch(test.features, search.threads);
    const double t_infer = seconds_since(t1);

    std::vector<double> scores(bounds.size());
    std::vector<int> predicted(bounds.size());
    for (std::size_t i = 0; i < bounds.size(); ++i) {
        scores[i] = ranking_score(bounds[i]);
        predicted[i] = predicted_class(bounds[i]);
    }
    RejectCurves curves = reject_curves(scores, predicted, test.labels, config.tau);

    RunRecord record;
    record.seed = seed;
    record.bandwidth_h = search_report.selected.value();
    record.auprc = curves.auprc;
    record.aurrc = curves.aurrc;
    record.t_optim_seconds = t_optim;
    record.t_infer_seconds = t_infer;
    record.curves = std::move(curves);
    return record;
}

}  // namespace

std::pair<Dataset, Dataset> split_train_test(const Dataset& data, double train_fraction,
                                             std::uint64_t seed) {
    validate_dataset(data);
    if (data.size() < 2) throw std::domain_error("split_train_test: need at least 2 samples");
    if (!(train_fraction > 0.0 && train_fraction < 1.0))
        throw std::invalid_argument("split_train_test: train_fraction must lie in (0,1)");

    const std::size_t n = data.size();
    const auto train_count = static_cast<std::size_t>(
        std::floor(static_cast<double>(n) * train_fraction));
    if (train_count == 0 || train_count == n)
        throw std::domain_error("split_train_test: a split would be empty at fraction " +
                                std::to_string(train_fraction));

    const auto order = shuffled_indices(n, seed);
    const std::span<const std::size_t> all(order);
    return {select_rows(data, all.subspan(0, train_count)),
            select_rows(data, all.subspan(train_count))};
}

RunRecord run_experiment(const Dataset& data, const ExperimentConfig& config,
                         std::uint64_t seed) {
    try {
        return run_one(data, config, seed);
    } catch (const std::exception& e) {
        throw std::runtime_error("run_experiment(seed=" + std::to_string(seed) +
                                 "): " + e.what());
    }
}

ExperimentReport run_repeated(const Dataset& data, const ExperimentConfig& config) {
    if (config.repeats == 0) throw std::invalid_argument("run_repeated: repeats must be >= 1");

    ExperimentReport report;
    report.runs.reserve(config.repeats);
    for (std::size_t r = 0; r < config.repeats; ++r)
        report.runs.push_back(run_experiment(data, config, config.base_seed + r));

    std::vector<RejectCurves> curves;
    std::vector<double> t_optim, t_infer;
    curves.reserve(config.repeats);
    for (const auto& run : report.runs) {
        curves.push_back(run.curves);
        t_optim.push_back(run.t_optim_seconds);
        t_infer.push_back(run.t_infer_seconds);
    }
    report.summary = summarize_runs(curves);
    report.t_optim = mean_std(t_optim);
    report.t_infer = mean_std(t_infer);
    return report;
}

}  // namespace wskdc
