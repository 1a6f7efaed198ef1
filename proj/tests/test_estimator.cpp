#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "wskdc/estimator.hpp"
#include "wskdc/rng.hpp"

using namespace wskdc;

namespace {

Dataset one_dim(const std::vector<double>& xs, const std::vector<int>& ys) {
    Dataset d;
    for (double x : xs) d.features.append_row(std::vector<double>{x});
    d.labels = ys;
    return d;
}

}  // namespace

TEST_CASE("fit stores hyperparameters and exposes z(alpha)") {
    const WskdeModel m = WskdeModel::fit(one_dim({0.0}, {1}), Bandwidth(1.0), 0.95);
    CHECK(m.alpha() == 0.95);
    CHECK(m.bandwidth().value() == 1.0);
    CHECK(m.z() == doctest::Approx(1.9599639845400536).epsilon(1e-12));
    CHECK(m.data().size() == 1);
}

TEST_CASE("fit rejects empty data and bad alpha") {
    CHECK_THROWS_AS(WskdeModel::fit(Dataset{}, Bandwidth(1.0), 0.95),
                    std::invalid_argument);
    CHECK_THROWS_AS(WskdeModel::fit(one_dim({0.0}, {1}), Bandwidth(1.0), 0.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(WskdeModel::fit(one_dim({0.0}, {1}), Bandwidth(1.0), 1.0),
                    std::invalid_argument);
}

TEST_CASE("restore demands a z consistent with alpha") {
    const double z = z_quantile(0.95);
    CHECK_NOTHROW(WskdeModel::restore(one_dim({0.0}, {1}), Bandwidth(1.0), z, 0.95));
    CHECK_THROWS_AS(
        WskdeModel::restore(one_dim({0.0}, {1}), Bandwidth(1.0), z + 1e-6, 0.95),
        std::invalid_argument);
}

TEST_CASE("coincident training points reduce to the integer-count interval") {
    // All mass sits exactly at the query, so every kernel weight is exactly 1
    // and the weighted counts equal the integer counts.
    Rng rng(2024);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 1 + rng.below(30);
        std::vector<double> xs(n, 3.25);
        std::vector<int> ys(n);
        std::uint64_t s = 0;
        for (auto& y : ys) {
            y = rng.below(2) == 1 ? 1 : 0;
            s += static_cast<std::uint64_t>(y);
        }
        const WskdeModel m = WskdeModel::fit(one_dim(xs, ys), Bandwidth(0.7), 0.95);
        const double query = 3.25;
        const ConfidenceBound got = m.predict_bounds(std::span(&query, 1));
        const ConfidenceBound want = wilson_interval(
            Counts{static_cast<double>(s), static_cast<double>(n)}, m.z());
        CHECK(std::abs(got.center - want.center) <= 1e-12);
        CHECK(std::abs(got.halfwidth - want.halfwidth) <= 1e-12);
    }
}

TEST_CASE("a far query degrades to the no-data interval") {
    const WskdeModel m =
        WskdeModel::fit(one_dim({0.0, 0.1, 0.2}, {1, 0, 1}), Bandwidth(0.05), 0.95);
    const double query = 1e9;
    const ConfidenceBound b = m.predict_bounds(std::span(&query, 1));
    CHECK(b.center == 0.5);
    CHECK(b.halfwidth == 0.5);
}

TEST_CASE("a single successful observation matches the one-count interval") {
    const WskdeModel m = WskdeModel::fit(one_dim({5.0}, {1}), Bandwidth(1.0), 0.95);
    const double query = 5.0;
    const ConfidenceBound b = m.predict_bounds(std::span(&query, 1));
    CHECK(b.center == doctest::Approx(0.6033).epsilon(5e-4));
    CHECK(b.halfwidth == doctest::Approx(0.3967).epsilon(5e-4));
}

TEST_CASE("predict_bounds validates the query") {
    const WskdeModel m = WskdeModel::fit(one_dim({0.0}, {1}), Bandwidth(1.0), 0.95);
    const std::vector<double> wrong_dim{0.0, 1.0};
    CHECK_THROWS_AS(m.predict_bounds(wrong_dim), std::invalid_argument);
    const double nan = std::nan("");
    CHECK_THROWS_AS(m.predict_bounds(std::span(&nan, 1)), std::invalid_argument);
}

TEST_CASE("predict_batch equals a plain loop and ignores the thread count") {
    Rng rng(99);
    Dataset d;
    for (int i = 0; i < 60; ++i) {
        d.features.append_row(std::vector<double>{rng.uniform01(), rng.uniform01()});
        d.labels.push_back(rng.below(2) == 1 ? 1 : 0);
    }
    const WskdeModel m = WskdeModel::fit(std::move(d), Bandwidth(0.2), 0.9);

    FeatureMatrix queries;
    for (int i = 0; i < 25; ++i)
        queries.append_row(std::vector<double>{rng.uniform01(), rng.uniform01()});

    const std::vector<ConfidenceBound> batch1 = m.predict_batch(queries, 1);
    const std::vector<ConfidenceBound> batch3 = m.predict_batch(queries, 3);
    REQUIRE(batch1.size() == queries.rows());
    for (std::size_t i = 0; i < queries.rows(); ++i) {
        const ConfidenceBound one = m.predict_bounds(queries.row(i));
        CHECK(batch1[i].center == one.center);
        CHECK(batch1[i].halfwidth == one.halfwidth);
        CHECK(batch3[i].center == one.center);
        CHECK(batch3[i].halfwidth == one.halfwidth);
    }

    CHECK(m.predict_batch(FeatureMatrix{}, 2).empty());
    FeatureMatrix wrong;
    wrong.append_row(std::vector<double>{1.0});
    CHECK_THROWS_AS(m.predict_batch(wrong, 1), std::invalid_argument);
}

TEST_CASE("binned baseline counts only the query's bin") {
    const Dataset d = one_dim({0.5, 0.6, 0.7, 1.5}, {1, 1, 0, 1});
    const std::vector<std::vector<double>> edges{{0.0, 1.0, 2.0}};
    const double z = z_quantile(0.95);

    // Bin [0,1) holds labels {1,1,0}.
    const double q0 = 0.25;
    const ConfidenceBound got = binned_wilson_bounds(d, edges, z, std::span(&q0, 1));
    const ConfidenceBound want = wilson_interval(Counts{2.0, 3.0}, z);
    CHECK(got.center == want.center);
    CHECK(got.halfwidth == want.halfwidth);

    // Bin [1,2] (closed top edge) holds the single positive.
    const double q1 = 2.0;
    const ConfidenceBound top = binned_wilson_bounds(d, edges, z, std::span(&q1, 1));
    const ConfidenceBound top_want = wilson_interval(Counts{1.0, 1.0}, z);
    CHECK(top.center == top_want.center);
    CHECK(top.halfwidth == top_want.halfwidth);
}

TEST_CASE("binned baseline yields the no-data interval for an empty bin") {
    const Dataset d = one_dim({0.5}, {1});
    const std::vector<std::vector<double>> edges{{0.0, 1.0, 2.0}};
    const double q = 1.5;
    const ConfidenceBound b = binned_wilson_bounds(d, edges, z_quantile(0.95),
                                                   std::span(&q, 1));
    CHECK(b.center == 0.5);
    CHECK(b.halfwidth == 0.5);
}

TEST_CASE("binned baseline rejects queries outside the grid and bad edges") {
    const Dataset d = one_dim({0.5}, {1});
    const std::vector<std::vector<double>> edges{{0.0, 1.0}};
    const double z = z_quantile(0.95);
    const double below = -0.1;
    const double above = 1.1;
    CHECK_THROWS_AS(binned_wilson_bounds(d, edges, z, std::span(&below, 1)),
                    std::domain_error);
    CHECK_THROWS_AS(binned_wilson_bounds(d, edges, z, std::span(&above, 1)),
                    std::domain_error);

    const double q = 0.5;
    const std::vector<std::vector<double>> short_edges{{0.0}};
    CHECK_THROWS_AS(binned_wilson_bounds(d, short_edges, z, std::span(&q, 1)),
                    std::invalid_argument);
    const std::vector<std::vector<double>> unsorted{{1.0, 0.0}};
    CHECK_THROWS_AS(binned_wilson_bounds(d, unsorted, z, std::span(&q, 1)),
                    std::invalid_argument);
    const std::vector<std::vector<double>> wrong_dims{{0.0, 1.0}, {0.0, 1.0}};
    CHECK_THROWS_AS(binned_wilson_bounds(d, wrong_dims, z, std::span(&q, 1)),
                    std::invalid_argument);
}

TEST_CASE("binned baseline agrees with the kernel model at vanishing bandwidth") {
    // Clusters far apart relative to h: kernel weights within a cluster are
    // exactly 1 and across clusters vanish, so both estimators see the same
    // per-cluster counts.
    Rng rng(7);
    Dataset d;
    std::vector<std::vector<double>> edges{std::vector<double>{}};
    const std::size_t clusters = 6;
    for (std::size_t c = 0; c < clusters; ++c) {
        edges[0].push_back(static_cast<double>(c) * 10.0 - 5.0);
        const std::size_t m = 2 + rng.below(5);
        for (std::size_t i = 0; i < m; ++i) {
            d.features.append_row(std::vector<double>{static_cast<double>(c) * 10.0});
            d.labels.push_back(rng.below(2) == 1 ? 1 : 0);
        }
    }
    edges[0].push_back(static_cast<double>(clusters) * 10.0 - 5.0);

    const double h = 1e-6 * 10.0;
    const WskdeModel m = WskdeModel::fit(d, Bandwidth(h), 0.95);
    for (std::size_t c = 0; c < clusters; ++c) {
        const double q = static_cast<double>(c) * 10.0;
        const ConfidenceBound kernel = m.predict_bounds(std::span(&q, 1));
        const ConfidenceBound binned =
            binned_wilson_bounds(d, edges, m.z(), std::span(&q, 1));
        CHECK(std::abs(kernel.center - binned.center) <= 1e-9);
        CHECK(std::abs(kernel.halfwidth - binned.halfwidth) <= 1e-9);
    }
}
