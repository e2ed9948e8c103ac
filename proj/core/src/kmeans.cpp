#include "netgof/kmeans.hpp"

#include "netgof/error.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace netgof {

int distinct_rows(const Matrix& points) {
    std::vector<std::vector<double>> rows(static_cast<std::size_t>(points.rows()));
    for (Eigen::Index i = 0; i < points.rows(); ++i) {
        rows[i].resize(static_cast<std::size_t>(points.cols()));
        for (Eigen::Index j = 0; j < points.cols(); ++j) rows[i][j] = points(i, j);
    }
    std::sort(rows.begin(), rows.end());
    return static_cast<int>(std::unique(rows.begin(), rows.end()) - rows.begin());
}

namespace {

struct Assignment {
    std::vector<int> labels;
    double wcss = 0.0;
};

Assignment assign(const Matrix& points, const Matrix& centers) {
    const Eigen::Index n = points.rows();
    Assignment out;
    out.labels.resize(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) {
        double best = std::numeric_limits<double>::infinity();
        int arg = 0;
        for (Eigen::Index c = 0; c < centers.rows(); ++c) {
            const double d = (points.row(i) - centers.row(c)).squaredNorm();
            if (d < best) {
                best = d;
                arg = static_cast<int>(c);
            }
        }
        out.labels[i] = arg;
        out.wcss += best;
    }
    return out;
}

Matrix seed_plus_plus(const Matrix& points, int k, SeededStream& stream) {
    const Eigen::Index n = points.rows();
    Matrix centers(k, points.cols());
    centers.row(0) = points.row(static_cast<Eigen::Index>(stream.below(static_cast<std::uint64_t>(n))));
    Vector dist(n);
    for (Eigen::Index i = 0; i < n; ++i) dist(i) = (points.row(i) - centers.row(0)).squaredNorm();
    for (int c = 1; c < k; ++c) {
        const double total = dist.sum();
        Eigen::Index pick = 0;
        if (total > 0) {
            double u = stream.uniform() * total;
            pick = n - 1;
            for (Eigen::Index i = 0; i < n; ++i) {
                u -= dist(i);
                if (u < 0 && dist(i) > 0) {
                    pick = i;
                    break;
                }
            }
            while (dist(pick) == 0 && pick > 0) --pick;
        }
        centers.row(c) = points.row(pick);
        for (Eigen::Index i = 0; i < n; ++i)
            dist(i) = std::min(dist(i), (points.row(i) - centers.row(c)).squaredNorm());
    }
    return centers;
}

KMeansResult lloyd(const Matrix& points, Matrix centers, int max_iterations) {
    const Eigen::Index n = points.rows();
    const int k = static_cast<int>(centers.rows());
    Assignment current = assign(points, centers);
    for (int it = 0; it < max_iterations; ++it) {
        Matrix sums = Matrix::Zero(k, points.cols());
        std::vector<int> counts(static_cast<std::size_t>(k), 0);
        for (Eigen::Index i = 0; i < n; ++i) {
            sums.row(current.labels[i]) += points.row(i);
            ++counts[current.labels[i]];
        }
        for (int c = 0; c < k; ++c) {
            if (counts[c] > 0) {
                centers.row(c) = sums.row(c) / counts[c];
                continue;
            }
            // Empty cluster: move it onto the point farthest from its center.
            Eigen::Index far = 0;
            double worst = -1.0;
            for (Eigen::Index i = 0; i < n; ++i) {
                const double d = (points.row(i) - centers.row(current.labels[i])).squaredNorm();
                if (d > worst) {
                    worst = d;
                    far = i;
                }
            }
            centers.row(c) = points.row(far);
        }
        Assignment next = assign(points, centers);
        const bool stable = next.labels == current.labels;
        current = std::move(next);
        if (stable) break;
    }
    return {std::move(current.labels), std::move(centers), current.wcss};
}

}  // namespace

KMeansResult kmeans(const Matrix& points, int k, SeededStream& stream, const KMeansOptions& options) {
    if (k < 1) throw InvalidArgument("kmeans: k must be positive");
    if (k > points.rows()) throw InvalidArgument("kmeans: k exceeds the number of points");
    if (k > distinct_rows(points)) throw InvalidArgument("kmeans: k exceeds the number of distinct points");

    KMeansResult best;
    best.wcss = std::numeric_limits<double>::infinity();
    const int restarts = std::max(1, options.restarts);
    for (int r = 0; r < restarts; ++r) {
        KMeansResult run = lloyd(points, seed_plus_plus(points, k, stream), options.max_iterations);
        if (run.wcss < best.wcss) best = std::move(run);
    }
    return best;
}

}  // namespace netgof
