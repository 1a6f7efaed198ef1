#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace wskdc {

struct FitOptions {
    std::string data_path;
    std::string out_model_path;
    std::optional<double> h;  // explicit bandwidth; exclusive with optimize
    bool optimize = false;
    double alpha = 0.95;
    std::uint64_t seed = 0;
    std::size_t folds = 10;
    std::size_t steps = 20;
    bool stratified = false;
    unsigned threads = 0;
};

/// Fits a model from a labeled CSV and writes it to out_model_path. With
/// optimize, runs the bandwidth search first and writes its candidate table
/// beside the model as "<out_model_path>.search.csv".
void cmd_fit(const FitOptions& options);

struct PredictOptions {
    std::string model_path;
    std::string query_path;
    std::string out_path;
    double tau = 0.95;
    unsigned threads = 0;
};

/// Writes one output row per query row, order preserved:
/// lower,center,upper,decision,confidence,ranking_score.
void cmd_predict(const PredictOptions& options);

struct EvalOptions {
    std::string data_path;
    std::string out_dir;
    double train_fraction = 0.8;
    std::size_t repeats = 50;
    std::uint64_t seed = 0;
    double alpha = 0.95;
    double tau = 0.95;
    std::size_t folds = 10;
    std::size_t steps = 20;
    bool stratified = false;
    bool plot = false;
    unsigned threads = 0;
};

/// Runs the repeated experiment and writes runs.csv, summary.csv and
/// curves.csv (plus curves.svg with plot) into out_dir.
void cmd_eval(const EvalOptions& options);

struct BenchOptions {
    std::string data_path;
    std::string out_path;
    std::vector<std::size_t> sizes;
    std::size_t draws = 10;  // seeded subset draws per size
    std::uint64_t seed = 0;
    double alpha = 0.95;
    std::size_t folds = 10;
    std::size_t steps = 20;
    unsigned threads = 0;
};

/// For each size, repeatedly draws a subset, runs one split/optimize/fit/
/// predict cycle on it, and writes per-size timing means and stds.
void cmd_bench(const BenchOptions& options);

}  // namespace wskdc
