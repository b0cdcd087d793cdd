#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "oracles.hpp"
#include "transclust/kmeans.hpp"

using namespace transclust;

namespace {

Matrix rows_of(std::initializer_list<std::initializer_list<double>> rows) {
    Matrix m(rows.size(), rows.begin()->size());
    std::size_t i = 0;
    for (auto r : rows) {
        std::size_t j = 0;
        for (double v : r) m(i, j++) = v;
        ++i;
    }
    return m;
}

}  // namespace

TEST(KMeans, TwoTightPairs) {
    auto m = rows_of({{0, 0}, {0, 0.1}, {5, 5}, {5, 5.1}});
    auto a = kmeans(m, {.k = 2, .seed = 1});
    EXPECT_EQ(a.labels[0], a.labels[1]);
    EXPECT_EQ(a.labels[2], a.labels[3]);
    EXPECT_NE(a.labels[0], a.labels[2]);
    EXPECT_NEAR(a.inertia, 0.01, 1e-12);
    EXPECT_EQ(a.k, 2);
    EXPECT_EQ(a.restarts_used, 10);
}

TEST(KMeans, KEqualsNGivesZeroInertia) {
    auto m = oracle::random_points(7, 3, 1).points();
    auto a = kmeans(m, {.k = 7, .seed = 2});
    EXPECT_EQ(a.inertia, 0.0);
    EXPECT_EQ(std::set<int>(a.labels.begin(), a.labels.end()).size(), 7u);
}

TEST(KMeans, KOneIsTheMean) {
    auto m = oracle::random_points(20, 2, 3).points();
    auto a = kmeans(m, {.k = 1});
    for (std::size_t c = 0; c < 2; ++c) {
        double mean = 0.0;
        for (std::size_t i = 0; i < 20; ++i) mean += m(i, c);
        EXPECT_NEAR(a.centroids(0, c), mean / 20.0, 1e-12);
    }
    EXPECT_TRUE(std::all_of(a.labels.begin(), a.labels.end(), [](int l) { return l == 0; }));
}

TEST(KMeans, RejectsBadConfigs) {
    auto m = oracle::random_points(5, 2, 0).points();
    EXPECT_THROW(kmeans(m, {.k = 0}), std::invalid_argument);
    EXPECT_THROW(kmeans(m, {.k = 6}), std::invalid_argument);
    EXPECT_THROW(kmeans(m, {.k = 2, .restarts = 0}), std::invalid_argument);
    EXPECT_THROW(kmeans(m, {.k = 2, .max_iterations = 0}), std::invalid_argument);
    EXPECT_THROW(parse_seeding("forgy"), std::invalid_argument);
}

TEST(KMeans, SameSeedSameResult) {
    auto m = oracle::random_points(200, 4, 5).points();
    KMeansConfig cfg{.k = 5, .seed = 42};
    auto a = kmeans(m, cfg);
    auto b = kmeans(m, cfg);
    EXPECT_EQ(a.labels, b.labels);
    EXPECT_EQ(a.centroids, b.centroids);
    EXPECT_EQ(a.inertia, b.inertia);
}

TEST(KMeans, ThreadCountDoesNotChangeResult) {
    auto m = oracle::random_points(300, 3, 6).points();
    for (Seeding s : {Seeding::PlusPlus, Seeding::RandomPartition}) {
        KMeansConfig cfg{.k = 6, .seeding = s, .seed = 9, .threads = 1};
        auto serial = kmeans(m, cfg);
        cfg.threads = 4;
        auto parallel = kmeans(m, cfg);
        EXPECT_EQ(serial.labels, parallel.labels);
        EXPECT_EQ(serial.inertia, parallel.inertia);
        EXPECT_EQ(serial.inertia_trace, parallel.inertia_trace);
    }
}

TEST(KMeans, TraceIsNonIncreasingAndEndsAtReportedInertia) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto m = oracle::random_points(150, 2, 70 + seed).points();
        for (Seeding s : {Seeding::PlusPlus, Seeding::RandomPartition}) {
            auto a = kmeans(m, {.k = 4, .seeding = s, .seed = seed});
            ASSERT_FALSE(a.inertia_trace.empty());
            for (std::size_t t = 1; t < a.inertia_trace.size(); ++t)
                EXPECT_LE(a.inertia_trace[t], a.inertia_trace[t - 1] * (1 + 1e-12));
            EXPECT_NEAR(a.inertia, compute_inertia(m, a.labels, a.centroids), 1e-9);
            EXPECT_LE(a.inertia, a.inertia_trace.back() * (1 + 1e-12));
        }
    }
}

// Restarts only ever help: with one restart the result can be no better than
// the best of ten.
TEST(KMeans, MoreRestartsNeverWorse) {
    auto m = oracle::random_points(120, 2, 8).points();
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        auto one = kmeans(m, {.k = 5, .restarts = 1, .seed = seed});
        auto ten = kmeans(m, {.k = 5, .restarts = 10, .seed = seed});
        EXPECT_LE(ten.inertia, one.inertia);
    }
}

TEST(KMeans, EveryClusterNonEmptyWithDuplicates) {
    // Eight copies of one point and two others: seeding lands on duplicates
    // often, which forces the empty-cluster repair.
    Matrix m(10, 1);
    m(8, 0) = 1.0;
    m(9, 0) = 2.0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        for (Seeding s : {Seeding::PlusPlus, Seeding::RandomPartition}) {
            auto a = kmeans(m, {.k = 3, .restarts = 1, .seeding = s, .seed = seed});
            std::set<int> used(a.labels.begin(), a.labels.end());
            EXPECT_EQ(used.size(), 3u) << "seed " << seed;
            EXPECT_EQ(a.inertia, 0.0);
        }
    }
}

TEST(KMeans, RandomPartitionSeedingConverges) {
    auto m = rows_of({{0, 0}, {0, 0.1}, {0.1, 0}, {9, 9}, {9, 9.1}, {9.1, 9}});
    auto a = kmeans(m, {.k = 2, .seeding = Seeding::RandomPartition, .seed = 3});
    EXPECT_EQ(a.labels[0], a.labels[2]);
    EXPECT_EQ(a.labels[3], a.labels[5]);
    EXPECT_NE(a.labels[0], a.labels[3]);
}

TEST(KMeans, InertiaOracle) {
    auto m = rows_of({{0, 0}, {2, 0}, {10, 10}});
    Matrix centroids = rows_of({{1, 0}, {10, 10}});
    EXPECT_DOUBLE_EQ(compute_inertia(m, {0, 0, 1}, centroids), 2.0);
}
