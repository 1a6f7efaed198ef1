#pragma once

#include <span>
#include <vector>

#include "wskdc/dataset.hpp"
#include "wskdc/interval.hpp"
#include "wskdc/kernel.hpp"

namespace wskdc {

/// Kernel-density confidence-bound estimator over binary labels.
///
/// A lazy learner: fitting stores the training data and hyperparameters;
/// prediction forms kernel-weighted pseudo-counts around the query and maps
/// them through the Wilson score interval. Immutable after fit and safe to
/// share across threads.
class WskdeModel {
public:
    /// Stores the data and computes z from alpha. No further training work.
    static WskdeModel fit(Dataset data, Bandwidth h, double alpha);

    /// Rebuilds a model from persisted state. The stored z must agree with
    /// z_quantile(alpha) to 1e-8.
    static WskdeModel restore(Dataset data, Bandwidth h, double z, double alpha);

    /// Confidence bound on the positive-class probability at the query.
    ConfidenceBound predict_bounds(std::span<const double> query) const;

    /// Row-wise predict_bounds. Order preserved; per-row work is independent,
    /// so the result does not depend on the thread count (0 = auto).
    std::vector<ConfidenceBound> predict_batch(const FeatureMatrix& queries,
                                               unsigned threads = 1) const;

    const Dataset& data() const { return data_; }
    Bandwidth bandwidth() const { return h_; }
    double z() const { return z_; }
    double alpha() const { return alpha_; }

private:
    WskdeModel(Dataset data, Bandwidth h, double z, double alpha);

    Dataset data_;
    Bandwidth h_;
    double z_;
    double alpha_;
};

/// Grid-binned baseline: locates the query's bin, counts the training points
/// that share it, and returns their plain Wilson interval. bin_edges holds
/// one strictly increasing edge list per feature dimension; a query outside
/// the gridded region is a domain error, an empty bin yields the no-data
/// interval.
ConfidenceBound binned_wilson_bounds(const Dataset& data,
                                     const std::vector<std::vector<double>>& bin_edges, double z,
                                     std::span<const double> query);

}  // namespace wskdc
