#include "wskdc/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "wskdc/rng.hpp"

namespace wskdc {

Bandwidth::Bandwidth(double lengthscale) : h_(lengthscale) {
    if (!(lengthscale > 0.0) || !std::isfinite(lengthscale))
        throw std::invalid_argument("Bandwidth: lengthscale must be positive and finite, got " +
                                    std::to_string(lengthscale));
}

double squared_distance(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size())
        throw std::invalid_argument("squared_distance: dimension mismatch (" +
                                    std::to_string(a.size()) + " vs " + std::to_string(b.size()) +
                                    ")");
    double acc = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const double d = a[k] - b[k];
        acc += d * d;
    }
    return acc;
}

double kernel_weight(double squared_dist, Bandwidth h) {
    if (!(squared_dist >= 0.0))
        throw std::invalid_argument("kernel_weight: squared distance must be nonnegative");
    return std::exp(-squared_dist / (2.0 * h.value() * h.value()));
}

namespace {

inline void accumulate(Counts& c, double weight, int label) {
    c.total += weight;
    if (label == 1) c.successes += weight;
}

inline Counts finish(Counts c) {
    // Successes sum a subset of total's terms in a different association
    // order; shave any float dust so 0 <= successes <= total holds exactly.
    c.successes = std::clamp(c.successes, 0.0, c.total);
    return c;
}

}  // namespace

Counts weighted_counts(std::span<const double> query, const FeatureMatrix& train_x,
                       std::span<const int> train_y, Bandwidth h, KernelSum mode) {
    if (train_x.rows() != train_y.size())
        throw std::invalid_argument("weighted_counts: rows and labels differ");
    if (train_x.rows() > 0 && query.size() != train_x.cols())
        throw std::invalid_argument("weighted_counts: query dimension " +
                                    std::to_string(query.size()) + " does not match training " +
                                    std::to_string(train_x.cols()));
    for (double v : query)
        if (!std::isfinite(v))
            throw std::invalid_argument("weighted_counts: non-finite query value");

    const double cutoff = 25.0 * h.value() * h.value();
    Counts c;
    for (std::size_t i = 0; i < train_x.rows(); ++i) {
        const double sq = squared_distance(query, train_x.row(i));
        if (mode == KernelSum::truncated5h && sq > cutoff) continue;
        accumulate(c, kernel_weight(sq, h), train_y[i]);
    }
    return finish(c);
}

Counts weighted_counts_from_squared(std::span<const double> squared_dists,
                                    std::span<const int> train_y, Bandwidth h, KernelSum mode) {
    if (squared_dists.size() != train_y.size())
        throw std::invalid_argument("weighted_counts_from_squared: distances and labels differ");
    const double cutoff = 25.0 * h.value() * h.value();
    Counts c;
    for (std::size_t i = 0; i < squared_dists.size(); ++i) {
        if (mode == KernelSum::truncated5h && squared_dists[i] > cutoff) continue;
        accumulate(c, kernel_weight(squared_dists[i], h), train_y[i]);
    }
    return finish(c);
}

namespace {

// Pairs (i, j), i < j, enumerated row-major; offset(i) is the linear index
// of pair (i, i+1).
inline std::uint64_t pair_offset(std::uint64_t i, std::uint64_t n) {
    return i * n - i * (i + 1) / 2;
}

std::pair<std::size_t, std::size_t> decode_pair(std::uint64_t linear, std::size_t n) {
    const double nd = static_cast<double>(n);
    const double disc = (nd - 0.5) * (nd - 0.5) - 2.0 * static_cast<double>(linear);
    double guess = nd - 0.5 - std::sqrt(std::max(disc, 0.0));
    std::size_t i = guess <= 0.0 ? 0 : static_cast<std::size_t>(guess);
    if (i > n - 2) i = n - 2;
    while (i > 0 && pair_offset(i, n) > linear) --i;
    while (i < n - 2 && pair_offset(i + 1, n) <= linear) ++i;
    const std::size_t j = i + 1 + static_cast<std::size_t>(linear - pair_offset(i, n));
    return {i, j};
}

}  // namespace

double mean_pairwise_distance(const FeatureMatrix& x, std::optional<std::uint64_t> max_pairs,
                              std::uint64_t seed) {
    const std::size_t n = x.rows();
    if (n < 2)
        throw std::invalid_argument("mean_pairwise_distance: need at least 2 rows, got " +
                                    std::to_string(n));
    const std::uint64_t pair_count = static_cast<std::uint64_t>(n) * (n - 1) / 2;

    if (!max_pairs || *max_pairs >= pair_count) {
        double acc = 0.0;
        for (std::size_t i = 0; i + 1 < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                acc += std::sqrt(squared_distance(x.row(i), x.row(j)));
        return acc / static_cast<double>(pair_count);
    }

    if (*max_pairs == 0)
        throw std::invalid_argument("mean_pairwise_distance: max_pairs must be positive");

    // Floyd's sampling without replacement over linear pair indices.
    const std::uint64_t m = *max_pairs;
    Rng rng(seed);
    std::unordered_set<std::uint64_t> chosen;
    chosen.reserve(static_cast<std::size_t>(m) * 2);
    for (std::uint64_t j = pair_count - m; j < pair_count; ++j) {
        const std::uint64_t t = rng.below(j + 1);
        if (!chosen.insert(t).second) chosen.insert(j);
    }
    std::vector<std::uint64_t> sample(chosen.begin(), chosen.end());
    std::sort(sample.begin(), sample.end());

    double acc = 0.0;
    for (std::uint64_t linear : sample) {
        const auto [i, j] = decode_pair(linear, n);
        acc += std::sqrt(squared_distance(x.row(i), x.row(j)));
    }
    return acc / static_cast<double>(m);
}

}  // namespace wskdc
