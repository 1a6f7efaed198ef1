#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "wskdc/bandwidth.hpp"
#include "wskdc/rng.hpp"

using namespace wskdc;

namespace {

Dataset random_dataset(std::size_t n, std::size_t dims, std::uint64_t seed) {
    Rng rng(seed);
    Dataset d;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<double> row(dims);
        for (auto& v : row) v = rng.uniform01();
        d.features.append_row(row);
        d.labels.push_back(rng.below(2) == 1 ? 1 : 0);
    }
    return d;
}

// Every index appears in exactly one holdout, and each fold's train set is
// the complement of its holdout.
void check_partition(const std::vector<FoldSplit>& splits, std::size_t n) {
    std::vector<int> holdout_hits(n, 0);
    for (const auto& split : splits) {
        REQUIRE(split.train.size() + split.holdout.size() == n);
        std::vector<int> in_holdout(n, 0);
        for (std::size_t i : split.holdout) {
            REQUIRE(i < n);
            ++holdout_hits[i];
            in_holdout[i] = 1;
        }
        for (std::size_t i : split.train) {
            REQUIRE(i < n);
            REQUIRE(in_holdout[i] == 0);
        }
    }
    CHECK(std::all_of(holdout_hits.begin(), holdout_hits.end(),
                      [](int c) { return c == 1; }));
}

}  // namespace

TEST_CASE("kfold_split partitions the indices into balanced holdouts") {
    const auto singletons = kfold_split(10, 10, 1);
    REQUIRE(singletons.size() == 10);
    for (const auto& split : singletons) {
        CHECK(split.holdout.size() == 1);
        CHECK(split.train.size() == 9);
    }
    check_partition(singletons, 10);

    const auto uneven = kfold_split(10, 3, 1);
    REQUIRE(uneven.size() == 3);
    CHECK(uneven[0].holdout.size() == 4);
    CHECK(uneven[1].holdout.size() == 3);
    CHECK(uneven[2].holdout.size() == 3);
    check_partition(uneven, 10);
}

TEST_CASE("kfold_split is seeded and validated") {
    const auto a = kfold_split(50, 5, 7);
    const auto b = kfold_split(50, 5, 7);
    for (std::size_t f = 0; f < 5; ++f) {
        CHECK(a[f].holdout == b[f].holdout);
        CHECK(a[f].train == b[f].train);
    }
    const auto c = kfold_split(50, 5, 8);
    CHECK(a[0].holdout != c[0].holdout);

    CHECK_THROWS_AS(kfold_split(10, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(kfold_split(3, 4, 0), std::domain_error);
}

TEST_CASE("stratified folds keep the class ratio in every holdout") {
    std::vector<int> labels(60, 0);
    for (std::size_t i = 40; i < 60; ++i) labels[i] = 1;
    Rng rng(5);
    rng.shuffle(labels);

    const auto splits = kfold_split_stratified(labels, 5, 3);
    REQUIRE(splits.size() == 5);
    check_partition(splits, 60);
    for (const auto& split : splits) {
        std::size_t ones = 0;
        for (std::size_t i : split.holdout) ones += labels[i] == 1 ? 1 : 0;
        CHECK(split.holdout.size() == 12);
        CHECK(ones == 4);
    }
    CHECK_THROWS_AS(kfold_split_stratified(labels, 61, 0), std::domain_error);
}

TEST_CASE("holdout_nll of an uninformative model is log 2 per point") {
    Dataset train;
    train.features.append_row(std::vector<double>{0.0});
    train.labels = {1};
    const WskdeModel m = WskdeModel::fit(std::move(train), Bandwidth(1.0), 0.95);

    Dataset holdout;
    for (int i = 0; i < 3; ++i)
        holdout.features.append_row(std::vector<double>{1e6});
    holdout.labels = {0, 1, 1};
    // All kernel mass vanishes, so every midpoint is exactly 1/2.
    CHECK(holdout_nll(m, holdout) == doctest::Approx(std::log(2.0)).epsilon(1e-12));

    CHECK_THROWS_AS(holdout_nll(m, Dataset{}), std::domain_error);
}

TEST_CASE("holdout_nll matches the closed-form midpoint likelihood") {
    Dataset train;
    for (int i = 0; i < 5; ++i) train.features.append_row(std::vector<double>{0.0});
    train.labels.assign(5, 1);
    const WskdeModel m = WskdeModel::fit(std::move(train), Bandwidth(1.0), 0.95);

    Dataset holdout;
    holdout.features.append_row(std::vector<double>{0.0});
    holdout.labels = {1};
    const double q = wilson_interval(Counts{5.0, 5.0}, z_quantile(0.95)).center;
    CHECK(holdout_nll(m, holdout) == -std::log(q));

    holdout.labels = {0};
    CHECK(holdout_nll(m, holdout) == -std::log1p(-q));
}

TEST_CASE("holdout_nll clamps the midpoint away from 0 and 1") {
    // A minuscule confidence level drives z, and with it the midpoint's pull
    // toward 1/2, nearly to zero; the likelihood clamp keeps the loss finite.
    Dataset train;
    train.features.append_row(std::vector<double>{0.0});
    train.labels = {0};
    const WskdeModel m = WskdeModel::fit(std::move(train), Bandwidth(1.0), 1e-12);

    Dataset holdout;
    holdout.features.append_row(std::vector<double>{0.0});
    holdout.labels = {1};
    CHECK(holdout_nll(m, holdout) == doctest::Approx(-std::log(1e-12)).epsilon(1e-9));
}

TEST_CASE("optimize_bandwidth lays a log-uniform grid anchored at d") {
    const Dataset data = random_dataset(30, 1, 21);
    BandwidthSearchConfig config;
    config.folds = 5;
    config.steps = 8;
    const BandwidthSearchReport report = optimize_bandwidth(data, config);

    CHECK(report.mean_distance == mean_pairwise_distance(data.features));
    REQUIRE(report.candidates.size() == 8);
    const double d = report.mean_distance;
    CHECK(report.candidates.front().h == d * config.range_lo_factor);
    CHECK(report.candidates.back().h ==
          doctest::Approx(d * config.range_hi_factor).epsilon(1e-12));
    const double step = report.candidates[1].h / report.candidates[0].h;
    for (std::size_t k = 0; k + 1 < 8; ++k) {
        CHECK(report.candidates[k].h < report.candidates[k + 1].h);
        CHECK(report.candidates[k + 1].h / report.candidates[k].h ==
              doctest::Approx(step).epsilon(1e-12));
    }
}

TEST_CASE("optimize_bandwidth scores cells exactly like fit plus holdout_nll") {
    const Dataset data = random_dataset(40, 2, 33);
    BandwidthSearchConfig config;
    config.folds = 4;
    config.steps = 5;
    config.alpha = 0.9;
    config.seed = 17;
    const BandwidthSearchReport report = optimize_bandwidth(data, config);

    const auto splits = kfold_split(data.size(), config.folds, config.seed);
    for (const BandwidthCandidate& cand : report.candidates) {
        REQUIRE(cand.fold_nlls.size() == config.folds);
        double sum = 0.0;
        for (std::size_t f = 0; f < config.folds; ++f) {
            const WskdeModel m = WskdeModel::fit(select_rows(data, splits[f].train),
                                                 Bandwidth(cand.h), config.alpha);
            const double naive = holdout_nll(m, select_rows(data, splits[f].holdout));
            CHECK(cand.fold_nlls[f] == naive);
            sum += cand.fold_nlls[f];
        }
        CHECK(cand.mean_nll == sum / static_cast<double>(config.folds));
    }
}

TEST_CASE("optimize_bandwidth selects the grid argmin") {
    const Dataset data = random_dataset(50, 2, 4);
    BandwidthSearchConfig config;
    config.folds = 5;
    config.steps = 10;
    const BandwidthSearchReport report = optimize_bandwidth(data, config);

    std::size_t best = 0;
    for (std::size_t k = 1; k < report.candidates.size(); ++k)
        if (report.candidates[k].mean_nll < report.candidates[best].mean_nll) best = k;
    CHECK(report.selected.value() == report.candidates[best].h);
    for (const auto& cand : report.candidates)
        CHECK(cand.mean_nll >= report.candidates[best].mean_nll);
}

TEST_CASE("an exact score tie resolves to the smallest bandwidth") {
    // Two point clusters separated by far more than the largest grid
    // bandwidth: within-cluster weights are exactly 1 and cross-cluster
    // weights are absorbed below double precision, so every candidate earns
    // bit-identical fold scores.
    Dataset data;
    for (int i = 0; i < 30; ++i) {
        data.features.append_row(std::vector<double>{0.0});
        data.labels.push_back(0);
    }
    for (int i = 0; i < 10; ++i) {
        data.features.append_row(std::vector<double>{1e6});
        data.labels.push_back(1);
    }
    BandwidthSearchConfig config;
    config.folds = 5;
    config.steps = 6;
    const BandwidthSearchReport report = optimize_bandwidth(data, config);

    for (const auto& cand : report.candidates)
        CHECK(cand.mean_nll == report.candidates[0].mean_nll);
    CHECK(report.selected.value() == report.candidates[0].h);
}

TEST_CASE("optimize_bandwidth is deterministic and schedule-independent") {
    const Dataset data = random_dataset(36, 3, 91);
    BandwidthSearchConfig config;
    config.folds = 4;
    config.steps = 6;
    config.seed = 2;
    config.threads = 1;
    const BandwidthSearchReport serial = optimize_bandwidth(data, config);
    config.threads = 3;
    const BandwidthSearchReport threaded = optimize_bandwidth(data, config);

    CHECK(serial.mean_distance == threaded.mean_distance);
    CHECK(serial.selected.value() == threaded.selected.value());
    REQUIRE(serial.candidates.size() == threaded.candidates.size());
    for (std::size_t k = 0; k < serial.candidates.size(); ++k) {
        CHECK(serial.candidates[k].h == threaded.candidates[k].h);
        CHECK(serial.candidates[k].mean_nll == threaded.candidates[k].mean_nll);
        CHECK(serial.candidates[k].fold_nlls == threaded.candidates[k].fold_nlls);
    }
}

TEST_CASE("optimize_bandwidth honors stratified splitting and max_pairs") {
    Dataset data = random_dataset(60, 2, 12);
    for (std::size_t i = 0; i < 60; ++i) data.labels[i] = i < 45 ? 0 : 1;

    BandwidthSearchConfig config;
    config.folds = 5;
    config.steps = 4;
    config.stratified = true;
    config.max_pairs = 50;
    config.seed = 9;
    const BandwidthSearchReport report = optimize_bandwidth(data, config);
    CHECK(report.mean_distance == mean_pairwise_distance(data.features, 50, 9));

    // Reproduce one cell through the stratified splits to pin which splitter
    // ran.
    const auto splits = kfold_split_stratified(data.labels, config.folds, config.seed);
    const WskdeModel m = WskdeModel::fit(select_rows(data, splits[0].train),
                                         Bandwidth(report.candidates[0].h), config.alpha);
    CHECK(report.candidates[0].fold_nlls[0] ==
          holdout_nll(m, select_rows(data, splits[0].holdout)));
}

TEST_CASE("optimize_bandwidth validates its inputs") {
    const Dataset data = random_dataset(10, 1, 1);
    BandwidthSearchConfig config;
    config.folds = 5;
    config.steps = 4;

    Dataset tiny = random_dataset(1, 1, 2);
    CHECK_THROWS_AS(optimize_bandwidth(tiny, config), std::domain_error);

    BandwidthSearchConfig bad = config;
    bad.folds = 1;
    CHECK_THROWS_AS(optimize_bandwidth(data, bad), std::invalid_argument);
    bad = config;
    bad.steps = 1;
    CHECK_THROWS_AS(optimize_bandwidth(data, bad), std::invalid_argument);
    bad = config;
    bad.range_lo_factor = 0.2;
    bad.range_hi_factor = 0.1;
    CHECK_THROWS_AS(optimize_bandwidth(data, bad), std::invalid_argument);
    bad = config;
    bad.folds = 11;
    CHECK_THROWS_AS(optimize_bandwidth(data, bad), std::domain_error);

    Dataset degenerate;
    for (int i = 0; i < 10; ++i) {
        degenerate.features.append_row(std::vector<double>{3.0, 3.0});
        degenerate.labels.push_back(i % 2);
    }
    CHECK_THROWS_AS(optimize_bandwidth(degenerate, config), std::domain_error);
}
