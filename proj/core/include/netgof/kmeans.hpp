#pragma once

#include "netgof/graph.hpp"
#include "netgof/rng.hpp"

#include <vector>

namespace netgof {

struct KMeansOptions {
    int restarts = 10;
    int max_iterations = 100;
};

struct KMeansResult {
    std::vector<int> labels;  // 0-based cluster index per row
    Matrix centers;           // k x m
    double wcss = 0.0;        // within-cluster sum of squares
};

/// Lloyd's algorithm with k-means++ seeding, best of `restarts` runs.
/// Rows are points. Distance ties go to the lowest cluster index.
/// Throws InvalidArgument when k exceeds the number of distinct rows.
KMeansResult kmeans(const Matrix& points, int k, SeededStream& stream,
                    const KMeansOptions& options = {});

/// Number of distinct rows (exact comparison).
int distinct_rows(const Matrix& points);

}  // namespace netgof
