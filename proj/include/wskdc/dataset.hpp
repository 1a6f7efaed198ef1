#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace wskdc {

/// Dense row-major matrix of feature vectors.
class FeatureMatrix {
public:
    FeatureMatrix() = default;
    FeatureMatrix(std::size_t rows, std::size_t cols);
    FeatureMatrix(std::size_t cols, std::vector<double> row_major);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0; }

    std::span<const double> row(std::size_t i) const {
        return {data_.data() + i * cols_, cols_};
    }
    std::span<double> row(std::size_t i) {
        return {data_.data() + i * cols_, cols_};
    }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

    void append_row(std::span<const double> values);

    const std::vector<double>& data() const { return data_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

/// Supervised binary-classification data: N feature rows with {0,1} labels.
struct Dataset {
    FeatureMatrix features;
    std::vector<int> labels;

    std::size_t size() const { return labels.size(); }
    std::size_t dim() const { return features.cols(); }
};

/// Throws std::invalid_argument if rows/labels disagree, a label is not 0/1,
/// a feature value is non-finite, or the feature dimension is zero.
void validate_dataset(const Dataset& data);

/// New dataset holding the given rows, in index order.
Dataset select_rows(const Dataset& data, std::span<const std::size_t> indices);

/// New matrix holding the given rows, in index order.
FeatureMatrix select_rows(const FeatureMatrix& m, std::span<const std::size_t> indices);

}  // namespace wskdc
