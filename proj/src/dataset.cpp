#include "wskdc/dataset.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace wskdc {

FeatureMatrix::FeatureMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

FeatureMatrix::FeatureMatrix(std::size_t cols, std::vector<double> row_major)
    : cols_(cols), data_(std::move(row_major)) {
    if (cols == 0) throw std::invalid_argument("FeatureMatrix: zero columns");
    if (data_.size() % cols != 0)
        throw std::invalid_argument("FeatureMatrix: data size not a multiple of column count");
    rows_ = data_.size() / cols;
}

void FeatureMatrix::append_row(std::span<const double> values) {
    if (rows_ == 0 && cols_ == 0) cols_ = values.size();
    if (values.size() != cols_)
        throw std::invalid_argument("FeatureMatrix: row has " + std::to_string(values.size()) +
                                    " values, expected " + std::to_string(cols_));
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
}

void validate_dataset(const Dataset& data) {
    if (data.features.rows() != data.labels.size())
        throw std::invalid_argument("dataset: feature rows (" + std::to_string(data.features.rows()) +
                                    ") and label count (" + std::to_string(data.labels.size()) +
                                    ") differ");
    if (data.features.rows() > 0 && data.features.cols() == 0)
        throw std::invalid_argument("dataset: feature dimension must be at least 1");
    for (int y : data.labels)
        if (y != 0 && y != 1)
            throw std::invalid_argument("dataset: labels must be 0 or 1");
    for (double v : data.features.data())
        if (!std::isfinite(v))
            throw std::invalid_argument("dataset: non-finite feature value");
}

Dataset select_rows(const Dataset& data, std::span<const std::size_t> indices) {
    Dataset out;
    out.features = select_rows(data.features, indices);
    out.labels.reserve(indices.size());
    for (std::size_t i : indices) out.labels.push_back(data.labels[i]);
    return out;
}

FeatureMatrix select_rows(const FeatureMatrix& m, std::span<const std::size_t> indices) {
    FeatureMatrix out(indices.size(), m.cols());
    std::size_t r = 0;
    for (std::size_t i : indices) {
        if (i >= m.rows()) throw std::invalid_argument("select_rows: index out of range");
        auto src = m.row(i);
        auto dst = out.row(r++);
        std::copy(src.begin(), src.end(), dst.begin());
    }
    return out;
}

}  // namespace wskdc
