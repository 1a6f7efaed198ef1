#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wskdc/bandwidth.hpp"
#include "wskdc/classifier.hpp"
#include "wskdc/dataset.hpp"
#include "wskdc/estimator.hpp"
#include "wskdc/harness.hpp"
#include "wskdc/metrics.hpp"

namespace wskdc {

/// Decimal text with 17 significant digits; parses back to the same double.
std::string format_double(double v);

/// Parses a full token as a double; trailing junk or overflow throws.
double parse_double(std::string_view text);

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

/// Reads a comma-separated file: first row is the header, LF or CRLF line
/// endings, no quoting. A row whose cell count differs from the header is an
/// error naming the 1-based line.
CsvTable read_csv(const std::string& path);

struct LabeledCsv {
    std::vector<std::string> feature_names;
    Dataset data;
};

/// Loads a dataset CSV: exactly one column named "label" holding 0/1 values,
/// every other column a finite real feature.
LabeledCsv load_feature_csv(const std::string& path);

struct QueryCsv {
    std::vector<std::string> feature_names;
    FeatureMatrix features;
};

/// Loads prediction queries: all columns are features except an optional
/// "label" column, which is ignored.
QueryCsv load_query_csv(const std::string& path);

/// Versioned plain-text model file embedding the training set. All numbers
/// go through format_double, so load(save(model)) predicts bit-identically.
void save_model(const WskdeModel& model, const std::string& path);
WskdeModel load_model(const std::string& path);

void write_runs_csv(const std::string& path, std::span<const RunRecord> runs);

void write_summary_csv(const std::string& path, const std::string& method,
                       const ExperimentReport& report);

void write_curves_csv(const std::string& path, const RunSummary& summary);

void write_search_csv(const std::string& path, const BandwidthSearchReport& report);

void write_curve_table_csv(const std::string& path, const RejectCurves& curves);

struct PredictionRow {
    ConfidenceBound bound;
    SelectiveDecision decision;
};

void write_predictions_csv(const std::string& path, std::span<const PredictionRow> rows);

}  // namespace wskdc
