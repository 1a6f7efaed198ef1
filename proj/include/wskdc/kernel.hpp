#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "wskdc/dataset.hpp"
#include "wskdc/interval.hpp"

namespace wskdc {

/// Lengthscale of the isotropic Gaussian kernel, in feature-space units.
class Bandwidth {
public:
    explicit Bandwidth(double lengthscale);
    double value() const { return h_; }

private:
    double h_;
};

/// How weighted_counts treats far-away points. The truncated mode skips
/// points beyond 5h (per-point weight < 3.8e-6), trading a per-query count
/// error of at most N * exp(-12.5) for speed on large datasets. Exact
/// summation is the default; the classifier path always uses it.
enum class KernelSum { exact, truncated5h };

/// Squared Euclidean distance. Spans must have equal length.
double squared_distance(std::span<const double> a, std::span<const double> b);

/// Max-normalized isotropic Gaussian weight exp(-d^2 / (2 h^2)), so a point
/// coincident with the query contributes exactly one pseudo-observation.
double kernel_weight(double squared_dist, Bandwidth h);

/// Kernel-weighted pseudo-counts around a query:
///   total     = sum_i w_i,   w_i = kernel_weight(|query - x_i|^2, h)
///   successes = sum_i y_i * w_i
/// Summation runs in row order so repeated calls reproduce bit-identical
/// results. An empty training set yields Counts{0, 0}.
Counts weighted_counts(std::span<const double> query, const FeatureMatrix& train_x,
                       std::span<const int> train_y, Bandwidth h,
                       KernelSum mode = KernelSum::exact);

/// Same aggregation over precomputed squared distances; used where distance
/// matrices are reused across many bandwidth candidates.
Counts weighted_counts_from_squared(std::span<const double> squared_dists,
                                    std::span<const int> train_y, Bandwidth h,
                                    KernelSum mode = KernelSum::exact);

/// Mean Euclidean distance over unordered point pairs. Exact over all
/// N(N-1)/2 pairs when max_pairs is unset or covers the full pair count;
/// otherwise the mean over max_pairs pairs sampled uniformly without
/// replacement with the given seed. Requires at least 2 rows.
double mean_pairwise_distance(const FeatureMatrix& x,
                              std::optional<std::uint64_t> max_pairs = std::nullopt,
                              std::uint64_t seed = 0);

}  // namespace wskdc
