#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "transclust/benchmark.hpp"

using namespace transclust;

TEST(Benchmark, NeedsThreeIncreasingSizes) {
    EXPECT_THROW(scaling_benchmark({.sizes = {100}}), std::invalid_argument);
    EXPECT_THROW(scaling_benchmark({.sizes = {100, 50, 200}}), std::invalid_argument);
}

TEST(Benchmark, SmallRunProducesEveryStage) {
    auto table = scaling_benchmark({.sizes = {30, 60, 90}, .repeats = 1});
    for (std::size_t n : {30u, 60u, 90u})
        for (const char* stage : {"distance", "mst", "forest_cut", "kmeans", "transitive_total"})
            EXPECT_GE(table.median(n, stage), 0.0) << n << " " << stage;
    EXPECT_THROW(table.median(31, "mst"), std::out_of_range);
    EXPECT_TRUE(std::isfinite(table.transitive_slope));

    std::ostringstream out;
    write_benchmark_csv(table, out);
    EXPECT_EQ(out.str().rfind("n,stage,ms\n", 0), 0u);
}

TEST(Benchmark, SlopeOfExactPowerLaw) {
    std::vector<double> x{10, 20, 40, 80}, y;
    for (double v : x) y.push_back(3.0 * v * v);
    EXPECT_NEAR(loglog_slope(x, y), 2.0, 1e-12);
}
