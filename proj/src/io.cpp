#include "wskdc/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace wskdc {

namespace {

[[noreturn]] void fail_at(const std::string& path, std::size_t line, const std::string& what) {
    throw std::runtime_error(path + ":" + std::to_string(line) + ": " + what);
}

std::vector<std::string> split_commas(const std::string& line) {
    std::vector<std::string> cells;
    std::size_t begin = 0;
    for (;;) {
        const std::size_t comma = line.find(',', begin);
        if (comma == std::string::npos) {
            cells.push_back(line.substr(begin));
            return cells;
        }
        cells.push_back(line.substr(begin, comma - begin));
        begin = comma + 1;
    }
}

std::ofstream open_for_write(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error(path + ": cannot open for writing");
    return out;
}

void finish_write(std::ofstream& out, const std::string& path) {
    out.flush();
    if (!out) throw std::runtime_error(path + ": write failed");
}

double parse_cell(const std::string& cell, const std::string& path, std::size_t line) {
    try {
        return parse_double(cell);
    } catch (const std::exception& e) {
        fail_at(path, line, e.what());
    }
}

// The grid rows land exactly on the written tau marker because both were
// produced by the same division.
int marker_flag(const RunSummary& summary, double coverage) {
    return summary.tau_coverage && coverage == *summary.tau_coverage ? 1 : 0;
}

}  // namespace

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

double parse_double(std::string_view text) {
    double value = 0.0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end)
        throw std::runtime_error("not a number: \"" + std::string(text) + "\"");
    return value;
}

CsvTable read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(path + ": cannot open");

    CsvTable table;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() && in.peek() == std::char_traits<char>::eof()) break;
        auto cells = split_commas(line);
        if (line_no == 1) {
            table.header = std::move(cells);
            continue;
        }
        if (cells.size() != table.header.size())
            fail_at(path, line_no,
                    "expected " + std::to_string(table.header.size()) + " cells, got " +
                        std::to_string(cells.size()));
        table.rows.push_back(std::move(cells));
    }
    if (line_no == 0) throw std::runtime_error(path + ": empty file, expected a header row");
    return table;
}

LabeledCsv load_feature_csv(const std::string& path) {
    const CsvTable table = read_csv(path);

    std::size_t label_col = table.header.size();
    LabeledCsv out;
    for (std::size_t c = 0; c < table.header.size(); ++c) {
        if (table.header[c] == "label") {
            if (label_col != table.header.size())
                fail_at(path, 1, "more than one \"label\" column");
            label_col = c;
        } else {
            out.feature_names.push_back(table.header[c]);
        }
    }
    if (label_col == table.header.size())
        fail_at(path, 1, "a column named \"label\" is required");
    if (out.feature_names.empty()) fail_at(path, 1, "no feature columns besides \"label\"");

    std::vector<double> row(out.feature_names.size());
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        const std::size_t line = r + 2;
        std::size_t f = 0;
        for (std::size_t c = 0; c < table.rows[r].size(); ++c) {
            const double v = parse_cell(table.rows[r][c], path, line);
            if (c == label_col) {
                if (v != 0.0 && v != 1.0) fail_at(path, line, "label must be 0 or 1");
                out.data.labels.push_back(v == 1.0 ? 1 : 0);
            } else {
                if (!std::isfinite(v)) fail_at(path, line, "non-finite feature value");
                row[f++] = v;
            }
        }
        out.data.features.append_row(row);
    }
    return out;
}

QueryCsv load_query_csv(const std::string& path) {
    const CsvTable table = read_csv(path);

    std::size_t label_col = table.header.size();
    QueryCsv out;
    for (std::size_t c = 0; c < table.header.size(); ++c) {
        if (table.header[c] == "label" && label_col == table.header.size())
            label_col = c;
        else
            out.feature_names.push_back(table.header[c]);
    }
    if (out.feature_names.empty()) fail_at(path, 1, "no feature columns");

    std::vector<double> row(out.feature_names.size());
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        const std::size_t line = r + 2;
        std::size_t f = 0;
        for (std::size_t c = 0; c < table.rows[r].size(); ++c) {
            if (c == label_col) continue;
            const double v = parse_cell(table.rows[r][c], path, line);
            if (!std::isfinite(v)) fail_at(path, line, "non-finite feature value");
            row[f++] = v;
        }
        out.features.append_row(row);
    }
    return out;
}

void save_model(const WskdeModel& model, const std::string& path) {
    auto out = open_for_write(path);
    const Dataset& data = model.data();
    out << "wskdc-model 1\n";
    out << "alpha " << format_double(model.alpha()) << "\n";
    out << "z " << format_double(model.z()) << "\n";
    out << "h " << format_double(model.bandwidth().value()) << "\n";
    out << "rows " << data.size() << "\n";
    out << "cols " << data.dim() << "\n";
    for (std::size_t i = 0; i < data.size(); ++i) {
        const auto row = data.features.row(i);
        for (const double v : row) out << format_double(v) << " ";
        out << data.labels[i] << "\n";
    }
    finish_write(out, path);
}

WskdeModel load_model(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(path + ": cannot open");

    std::string line;
    std::size_t line_no = 0;
    const auto next_line = [&]() -> std::string& {
        if (!std::getline(in, line)) fail_at(path, line_no + 1, "unexpected end of file");
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        return line;
    };
    const auto keyed_value = [&](const std::string& key) {
        next_line();
        const std::string prefix = key + " ";
        if (line.rfind(prefix, 0) != 0) fail_at(path, line_no, "expected \"" + key + " <value>\"");
        return line.substr(prefix.size());
    };

    if (next_line() != "wskdc-model 1")
        fail_at(path, line_no, "not a wskdc-model version 1 file");
    const auto parse_keyed = [&](const std::string& key) {
        const std::string text = keyed_value(key);
        return parse_cell(text, path, line_no);
    };
    const double alpha = parse_keyed("alpha");
    const double z = parse_keyed("z");
    const double h = parse_keyed("h");
    const double rows_value = parse_keyed("rows");
    const double cols_value = parse_keyed("cols");
    if (rows_value < 1 || rows_value != std::floor(rows_value))
        fail_at(path, line_no, "rows must be a positive integer");
    if (cols_value < 1 || cols_value != std::floor(cols_value))
        fail_at(path, line_no, "cols must be a positive integer");
    const auto rows = static_cast<std::size_t>(rows_value);
    const auto cols = static_cast<std::size_t>(cols_value);

    Dataset data;
    std::vector<double> row(cols);
    for (std::size_t r = 0; r < rows; ++r) {
        std::istringstream cells(next_line());
        std::string token;
        for (std::size_t c = 0; c < cols; ++c) {
            if (!(cells >> token)) fail_at(path, line_no, "truncated data row");
            row[c] = parse_cell(token, path, line_no);
        }
        if (!(cells >> token)) fail_at(path, line_no, "missing label");
        if (token != "0" && token != "1") fail_at(path, line_no, "label must be 0 or 1");
        if (cells >> token) fail_at(path, line_no, "trailing cells in data row");
        data.features.append_row(row);
        data.labels.push_back(token == "1" ? 1 : 0);
    }

    try {
        return WskdeModel::restore(std::move(data), Bandwidth(h), z, alpha);
    } catch (const std::exception& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

void write_runs_csv(const std::string& path, std::span<const RunRecord> runs) {
    auto out = open_for_write(path);
    out << "seed,bandwidth_h,auprc,aurrc,t_optim_seconds,t_infer_seconds\n";
    for (const auto& run : runs) {
        out << run.seed << "," << format_double(run.bandwidth_h) << ","
            << format_double(run.auprc) << "," << format_double(run.aurrc) << ","
            << format_double(run.t_optim_seconds) << "," << format_double(run.t_infer_seconds)
            << "\n";
    }
    finish_write(out, path);
}

void write_summary_csv(const std::string& path, const std::string& method,
                       const ExperimentReport& report) {
    auto out = open_for_write(path);
    out << "method,auprc_mean,auprc_std,aurrc_mean,aurrc_std,"
           "t_optim_mean,t_optim_std,t_infer_mean,t_infer_std\n";
    out << method << "," << format_double(report.summary.auprc.mean) << ","
        << format_double(report.summary.auprc.std) << ","
        << format_double(report.summary.aurrc.mean) << ","
        << format_double(report.summary.aurrc.std) << "," << format_double(report.t_optim.mean)
        << "," << format_double(report.t_optim.std) << "," << format_double(report.t_infer.mean)
        << "," << format_double(report.t_infer.std) << "\n";
    finish_write(out, path);
}

void write_curves_csv(const std::string& path, const RunSummary& summary) {
    auto out = open_for_write(path);
    out << "coverage,precision_mean,precision_q05,precision_q95,"
           "recall_mean,recall_q05,recall_q95,tau_marker\n";
    for (std::size_t t = 0; t < summary.grid_coverage.size(); ++t) {
        out << format_double(summary.grid_coverage[t]) << ","
            << format_double(summary.precision_mean[t]) << ","
            << format_double(summary.precision_q05[t]) << ","
            << format_double(summary.precision_q95[t]) << ","
            << format_double(summary.recall_mean[t]) << ","
            << format_double(summary.recall_q05[t]) << ","
            << format_double(summary.recall_q95[t]) << ","
            << marker_flag(summary, summary.grid_coverage[t]) << "\n";
    }
    finish_write(out, path);
}

void write_search_csv(const std::string& path, const BandwidthSearchReport& report) {
    auto out = open_for_write(path);
    out << "h,mean_nll\n";
    for (const auto& candidate : report.candidates)
        out << format_double(candidate.h) << "," << format_double(candidate.mean_nll) << "\n";
    finish_write(out, path);
}

void write_curve_table_csv(const std::string& path, const RejectCurves& curves) {
    auto out = open_for_write(path);
    out << "coverage,precision,recall,tau_marker\n";
    for (const auto& row : curve_to_table(curves)) {
        out << format_double(row.coverage) << "," << format_double(row.precision) << ","
            << format_double(row.recall) << "," << (row.tau_marker ? 1 : 0) << "\n";
    }
    finish_write(out, path);
}

void write_predictions_csv(const std::string& path, std::span<const PredictionRow> rows) {
    auto out = open_for_write(path);
    out << "lower,center,upper,decision,confidence,ranking_score\n";
    for (const auto& row : rows) {
        out << format_double(row.bound.lower()) << "," << format_double(row.bound.center) << ","
            << format_double(row.bound.upper()) << "," << to_string(row.decision.label) << ","
            << format_double(row.decision.confidence) << ","
            << format_double(row.decision.ranking_score) << "\n";
    }
    finish_write(out, path);
}

}  // namespace wskdc
