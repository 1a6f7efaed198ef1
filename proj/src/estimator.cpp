#include "wskdc/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "wskdc/parallel.hpp"

namespace wskdc {

WskdeModel::WskdeModel(Dataset data, Bandwidth h, double z, double alpha)
    : data_(std::move(data)), h_(h), z_(z), alpha_(alpha) {}

WskdeModel WskdeModel::fit(Dataset data, Bandwidth h, double alpha) {
    return restore(std::move(data), h, z_quantile(alpha), alpha);
}

WskdeModel WskdeModel::restore(Dataset data, Bandwidth h, double z, double alpha) {
    validate_dataset(data);
    if (data.size() == 0) throw std::invalid_argument("WskdeModel: empty dataset");
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::invalid_argument("WskdeModel: confidence level must lie in (0,1)");
    if (std::abs(z - z_quantile(alpha)) > 1e-8)
        throw std::invalid_argument("restore: z does not match z_quantile(alpha)");
    return WskdeModel(std::move(data), h, z, alpha);
}

ConfidenceBound WskdeModel::predict_bounds(std::span<const double> query) const {
    return wilson_interval(weighted_counts(query, data_.features, data_.labels, h_), z_);
}

std::vector<ConfidenceBound> WskdeModel::predict_batch(const FeatureMatrix& queries,
                                                       unsigned threads) const {
    if (queries.rows() > 0 && queries.cols() != data_.dim())
        throw std::invalid_argument("predict_batch: query dimension " +
                                    std::to_string(queries.cols()) + " does not match model " +
                                    std::to_string(data_.dim()));
    std::vector<ConfidenceBound> out(queries.rows(), ConfidenceBound{0.0, 0.0, z_});
    parallel_for(queries.rows(), threads,
                 [&](std::size_t i) { out[i] = predict_bounds(queries.row(i)); });
    return out;
}

ConfidenceBound binned_wilson_bounds(const Dataset& data,
                                     const std::vector<std::vector<double>>& bin_edges, double z,
                                     std::span<const double> query) {
    validate_dataset(data);
    if (bin_edges.size() != data.dim() || query.size() != data.dim())
        throw std::invalid_argument("binned_wilson_bounds: dimension mismatch");
    for (const auto& edges : bin_edges) {
        if (edges.size() < 2)
            throw std::invalid_argument("binned_wilson_bounds: need at least 2 edges per dimension");
        for (std::size_t k = 0; k + 1 < edges.size(); ++k)
            if (!(edges[k] < edges[k + 1]))
                throw std::invalid_argument("binned_wilson_bounds: edges must be strictly increasing");
    }

    // Bin of v along one dimension: [e_k, e_{k+1}), with the top edge closed.
    // Returns npos for values outside the grid.
    constexpr std::size_t npos = static_cast<std::size_t>(-1);
    auto locate = [&](double v, const std::vector<double>& edges) -> std::size_t {
        if (v < edges.front() || v > edges.back()) return npos;
        if (v == edges.back()) return edges.size() - 2;
        const auto it = std::upper_bound(edges.begin(), edges.end(), v);
        return static_cast<std::size_t>(it - edges.begin()) - 1;
    };

    std::vector<std::size_t> query_bin(data.dim());
    for (std::size_t k = 0; k < data.dim(); ++k) {
        query_bin[k] = locate(query[k], bin_edges[k]);
        if (query_bin[k] == npos)
            throw std::domain_error("binned_wilson_bounds: query outside the gridded region");
    }

    Counts c;
    for (std::size_t i = 0; i < data.size(); ++i) {
        const auto row = data.features.row(i);
        bool same_bin = true;
        for (std::size_t k = 0; k < data.dim() && same_bin; ++k)
            same_bin = locate(row[k], bin_edges[k]) == query_bin[k];
        if (same_bin) {
            c.total += 1.0;
            if (data.labels[i] == 1) c.successes += 1.0;
        }
    }
    return wilson_interval(c, z);
}

}  // namespace wskdc
