#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "doctest.h"
#include "wskdc/rng.hpp"

using namespace wskdc;

TEST_CASE("same seed reproduces the same stream") {
    Rng a(42);
    Rng b(42);
    for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
    Rng c(43);
    Rng d(42);
    bool differs = false;
    for (int i = 0; i < 100; ++i)
        if (c.next_u64() != d.next_u64()) differs = true;
    CHECK(differs);
}

TEST_CASE("below stays within its bound and covers small ranges") {
    Rng r(7);
    std::vector<bool> seen(5, false);
    for (int i = 0; i < 1000; ++i) {
        const std::uint64_t v = r.below(5);
        REQUIRE(v < 5);
        seen[static_cast<std::size_t>(v)] = true;
    }
    CHECK(std::all_of(seen.begin(), seen.end(), [](bool s) { return s; }));
    CHECK(r.below(1) == 0);
}

TEST_CASE("uniform01 lies in the half-open unit interval") {
    Rng r(11);
    for (int i = 0; i < 10000; ++i) {
        const double u = r.uniform01();
        REQUIRE(u >= 0.0);
        REQUIRE(u < 1.0);
    }
}

TEST_CASE("shuffle produces a permutation, deterministically per seed") {
    std::vector<std::size_t> base(50);
    std::iota(base.begin(), base.end(), std::size_t{0});

    std::vector<std::size_t> x = base;
    Rng r1(3);
    r1.shuffle(x);
    std::vector<std::size_t> sorted = x;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == base);

    std::vector<std::size_t> y = base;
    Rng r2(3);
    r2.shuffle(y);
    CHECK(x == y);

    std::vector<std::size_t> z = base;
    Rng r3(4);
    r3.shuffle(z);
    CHECK(x != z);
}

TEST_CASE("shuffled_indices is a seeded permutation of 0..n-1") {
    const std::vector<std::size_t> a = shuffled_indices(20, 5);
    const std::vector<std::size_t> b = shuffled_indices(20, 5);
    CHECK(a == b);
    std::vector<std::size_t> sorted = a;
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::size_t> expect(20);
    std::iota(expect.begin(), expect.end(), std::size_t{0});
    CHECK(sorted == expect);
    CHECK(shuffled_indices(0, 1).empty());
}
