#include "wskdc/cli.hpp"

#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wskdc/bandwidth.hpp"
#include "wskdc/classifier.hpp"
#include "wskdc/estimator.hpp"
#include "wskdc/harness.hpp"
#include "wskdc/io.hpp"
#include "wskdc/plot.hpp"
#include "wskdc/rng.hpp"

namespace wskdc {

void cmd_fit(const FitOptions& options) {
    if (options.optimize == options.h.has_value())
        throw std::invalid_argument(
            "cmd_fit: pass exactly one of an explicit bandwidth or --optimize");

    LabeledCsv csv = load_feature_csv(options.data_path);
    if (options.optimize) {
        BandwidthSearchConfig config;
        config.folds = options.folds;
        config.steps = options.steps;
        config.alpha = options.alpha;
        config.seed = options.seed;
        config.stratified = options.stratified;
        config.threads = options.threads;
        const BandwidthSearchReport report = optimize_bandwidth(csv.data, config);
        write_search_csv(options.out_model_path + ".search.csv", report);
        save_model(WskdeModel::fit(std::move(csv.data), report.selected, options.alpha),
                   options.out_model_path);
    } else {
        save_model(WskdeModel::fit(std::move(csv.data), Bandwidth(*options.h), options.alpha),
                   options.out_model_path);
    }
}

void cmd_predict(const PredictOptions& options) {
    const WskdeModel model = load_model(options.model_path);
    const QueryCsv queries = load_query_csv(options.query_path);
    if (queries.feature_names.size() != model.data().dim())
        throw std::invalid_argument("cmd_predict: query file has " +
                                    std::to_string(queries.feature_names.size()) +
                                    " feature columns, the model expects " +
                                    std::to_string(model.data().dim()));

    const auto bounds = model.predict_batch(queries.features, options.threads);
    std::vector<PredictionRow> rows(bounds.size());
    for (std::size_t i = 0; i < bounds.size(); ++i)
        rows[i] = PredictionRow{bounds[i], classify(bounds[i], options.tau)};
    write_predictions_csv(options.out_path, rows);
}

void cmd_eval(const EvalOptions& options) {
    const LabeledCsv csv = load_feature_csv(options.data_path);

    ExperimentConfig config;
    config.train_fraction = options.train_fraction;
    config.repeats = options.repeats;
    config.base_seed = options.seed;
    config.alpha = options.alpha;
    config.tau = options.tau;
    config.bandwidth_config.folds = options.folds;
    config.bandwidth_config.steps = options.steps;
    config.bandwidth_config.stratified = options.stratified;
    config.bandwidth_config.threads = options.threads;

    const ExperimentReport report = run_repeated(csv.data, config);

    std::filesystem::create_directories(options.out_dir);
    const auto in_dir = [&](const char* name) {
        return (std::filesystem::path(options.out_dir) / name).string();
    };
    write_runs_csv(in_dir("runs.csv"), report.runs);
    write_summary_csv(in_dir("summary.csv"), "ws-kdc", report);
    write_curves_csv(in_dir("curves.csv"), report.summary);
    if (options.plot) write_reject_curve_svg(in_dir("curves.svg"), report.summary);
}

void cmd_bench(const BenchOptions& options) {
    if (options.sizes.empty()) throw std::invalid_argument("cmd_bench: no sizes given");
    if (options.draws == 0) throw std::invalid_argument("cmd_bench: draws must be >= 1");

    const LabeledCsv csv = load_feature_csv(options.data_path);
    const std::size_t n = csv.data.size();

    ExperimentConfig config;
    config.alpha = options.alpha;
    config.bandwidth_config.folds = options.folds;
    config.bandwidth_config.steps = options.steps;
    config.bandwidth_config.threads = options.threads;

    std::ofstream out(options.out_path);
    if (!out) throw std::runtime_error(options.out_path + ": cannot open for writing");
    out << "size,t_optim_mean,t_optim_std,t_infer_mean,t_infer_std\n";

    std::uint64_t run_seed = options.seed;
    for (const std::size_t size : options.sizes) {
        if (size > n)
            throw std::domain_error("cmd_bench: size " + std::to_string(size) +
                                    " exceeds the dataset's " + std::to_string(n) + " rows");
        std::vector<double> t_optim, t_infer;
        for (std::size_t draw = 0; draw < options.draws; ++draw, ++run_seed) {
            const auto order = shuffled_indices(n, run_seed);
            const Dataset subset =
                select_rows(csv.data, std::span<const std::size_t>(order).subspan(0, size));
            const RunRecord record = run_experiment(subset, config, run_seed);
            t_optim.push_back(record.t_optim_seconds);
            t_infer.push_back(record.t_infer_seconds);
        }
        const MeanStd optim = mean_std(t_optim);
        const MeanStd infer = mean_std(t_infer);
        out << size << "," << format_double(optim.mean) << "," << format_double(optim.std)
            << "," << format_double(infer.mean) << "," << format_double(infer.std) << "\n";
    }
    out.flush();
    if (!out) throw std::runtime_error(options.out_path + ": write failed");
}

}  // namespace wskdc
