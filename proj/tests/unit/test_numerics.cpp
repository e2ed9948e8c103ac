#include "netgof/error.hpp"
#include "netgof/kmeans.hpp"
#include "netgof/linalg.hpp"
#include "netgof/normal.hpp"
#include "netgof/simplex.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <map>
#include <numbers>
#include <set>

using namespace netgof;

namespace {

Matrix random_symmetric(int n, SeededStream& s) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j) m(i, j) = m(j, i) = s.uniform(-1.0, 1.0);
    return m;
}

double triple_sum(const Matrix& m) {
    double t = 0.0;
    const auto n = m.rows();
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            for (Eigen::Index k = 0; k < n; ++k) t += m(i, j) * m(j, k) * m(k, i);
    return t;
}

std::vector<int> random_permutation(int n, SeededStream& s) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    for (int i = n - 1; i > 0; --i) std::swap(p[i], p[s.below(static_cast<std::uint64_t>(i + 1))]);
    return p;
}

// Same partition up to relabelling.
bool same_partition(const std::vector<int>& a, const std::vector<int>& b) {
    std::map<int, int> ab, ba;
    for (std::size_t i = 0; i < a.size(); ++i) {
        auto [x, inserted] = ab.emplace(a[i], b[i]);
        if (!inserted && x->second != b[i]) return false;
        auto [y, inserted2] = ba.emplace(b[i], a[i]);
        if (!inserted2 && y->second != a[i]) return false;
    }
    return true;
}

// Standard normal CDF by composite Simpson integration of the density.
double simpson_cdf(double x) {
    const int steps = 200'000;
    const double h = x / steps;
    auto phi = [](double t) { return std::exp(-0.5 * t * t) / std::sqrt(2.0 * std::numbers::pi); };
    double acc = phi(0.0) + phi(x);
    for (int i = 1; i < steps; ++i) acc += (i % 2 ? 4.0 : 2.0) * phi(i * h);
    return 0.5 + acc * h / 3.0;
}

}  // namespace

TEST(TraceCubed, ZeroMatrix) { EXPECT_EQ(trace_cubed(Matrix::Zero(5, 5)), 0.0); }

TEST(TraceCubed, OffDiagonalConstant) {
    Matrix m = Matrix::Constant(3, 3, 0.5);
    m.diagonal().setZero();
    EXPECT_NEAR(trace_cubed(m), 0.75, 1e-15);
}

TEST(TraceCubed, MatchesTripleLoopOracle) {
    SeededStream s(1, 0);
    for (int rep = 0; rep < 100; ++rep) {
        const Matrix m = random_symmetric(8, s);
        EXPECT_NEAR(trace_cubed(m), triple_sum(m), 1e-10);
    }
}

TEST(TraceCubed, MatchesEigenvalueCubes) {
    SeededStream s(2, 0);
    for (int rep = 0; rep < 20; ++rep) {
        const Matrix m = random_symmetric(12, s);
        const auto e = sym_eigs(m, 12);
        EXPECT_NEAR(trace_cubed(m), e.values.array().cube().sum(), 1e-6);
    }
}

TEST(TraceCubed, PermutationInvariant) {
    SeededStream s(3, 0);
    for (int rep = 0; rep < 20; ++rep) {
        const Matrix m = random_symmetric(15, s);
        const auto p = random_permutation(15, s);
        Matrix q(15, 15);
        for (int i = 0; i < 15; ++i)
            for (int j = 0; j < 15; ++j) q(i, j) = m(p[i], p[j]);
        EXPECT_NEAR(trace_cubed(q), trace_cubed(m), 1e-10);
    }
}

TEST(TraceCubed, NonSquareThrows) { EXPECT_THROW(trace_cubed(Matrix::Zero(2, 3)), InvalidArgument); }

TEST(SymEigs, Identity) {
    const auto e = sym_eigs(Matrix::Identity(4, 4), 2);
    ASSERT_EQ(e.count(), 2);
    EXPECT_NEAR(e.values(0), 1.0, 1e-14);
    EXPECT_NEAR(e.values(1), 1.0, 1e-14);
    EXPECT_NEAR((e.vectors.transpose() * e.vectors - Matrix::Identity(2, 2)).norm(), 0.0, 1e-14);
}

TEST(SymEigs, RankOne) {
    const Vector x = Vector::Constant(3, 0.5);
    const auto e = sym_eigs(x * x.transpose(), 1);
    EXPECT_NEAR(e.values(0), 0.75, 1e-14);
    for (int i = 0; i < 3; ++i) EXPECT_NEAR(e.vectors(i, 0), 1.0 / std::sqrt(3.0), 1e-14);
}

TEST(SymEigs, TraceIdentitiesAndResiduals) {
    SeededStream s(4, 0);
    for (int rep = 0; rep < 10; ++rep) {
        const Matrix m = random_symmetric(10, s);
        const auto e = sym_eigs(m, 10);
        EXPECT_NEAR(e.values.sum(), m.trace(), 1e-8);
        EXPECT_NEAR(e.values.squaredNorm(), m.squaredNorm(), 1e-8);
        const double scale = m.cwiseAbs().rowwise().sum().maxCoeff();
        for (int k = 0; k < 10; ++k) {
            EXPECT_LE((m * e.vectors.col(k) - e.values(k) * e.vectors.col(k)).cwiseAbs().maxCoeff(), 1e-12 * scale);
            if (k > 0) EXPECT_GE(std::abs(e.values(k - 1)), std::abs(e.values(k)));
            // Largest-magnitude entry is positive.
            Eigen::Index arg = 0;
            e.vectors.col(k).cwiseAbs().maxCoeff(&arg);
            EXPECT_GT(e.vectors(arg, k), 0.0);
        }
        EXPECT_NEAR((e.vectors.transpose() * e.vectors - Matrix::Identity(10, 10)).cwiseAbs().maxCoeff(), 0.0, 1e-12);
    }
}

TEST(SymEigs, BadRankThrows) {
    EXPECT_THROW(sym_eigs(Matrix::Identity(3, 3), 0), InvalidArgument);
    EXPECT_THROW(sym_eigs(Matrix::Identity(3, 3), 4), InvalidArgument);
}

TEST(KMeans, SeparatedClouds) {
    Matrix pts(4, 1);
    pts << 0.0, 0.1, 10.0, 10.1;
    SeededStream s(1, 0);
    const auto r = kmeans(pts, 2, s);
    EXPECT_EQ(r.labels[0], r.labels[1]);
    EXPECT_EQ(r.labels[2], r.labels[3]);
    EXPECT_NE(r.labels[0], r.labels[2]);
    EXPECT_NEAR(r.wcss, 0.01, 1e-12);
}

TEST(KMeans, EveryPointItsOwnCluster) {
    SeededStream s(2, 0);
    Matrix pts(6, 2);
    for (int i = 0; i < 6; ++i) pts.row(i) << i, i * i;
    const auto r = kmeans(pts, 6, s);
    EXPECT_EQ(std::set<int>(r.labels.begin(), r.labels.end()).size(), 6u);
    EXPECT_EQ(r.wcss, 0.0);
}

TEST(KMeans, PlantedBlobs) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        SeededStream s(seed, 5);
        const int per = 30;
        Matrix pts(3 * per, 2);
        std::vector<int> truth;
        const double centers[3][2] = {{0, 0}, {10, 0}, {0, 10}};
        for (int c = 0; c < 3; ++c)
            for (int i = 0; i < per; ++i) {
                // Bounded noise, sigma about 0.58, so the blobs stay 10 sigma apart.
                pts.row(c * per + i) << centers[c][0] + s.uniform(-1, 1), centers[c][1] + s.uniform(-1, 1);
                truth.push_back(c);
            }
        const auto r = kmeans(pts, 3, s);
        EXPECT_TRUE(same_partition(r.labels, truth)) << "seed " << seed;
    }
}

TEST(KMeans, InvariantUnderIsometry) {
    SeededStream g(7, 0);
    Matrix pts(60, 2);
    for (int i = 0; i < 60; ++i) pts.row(i) << g.uniform(-5, 5) + (i % 3) * 8, g.uniform(-5, 5);
    const double c = std::cos(0.7), sn = std::sin(0.7);
    Matrix rot(2, 2);
    rot << c, -sn, sn, c;
    const Matrix moved = (pts * rot.transpose()).rowwise() + Eigen::RowVector2d(3.0, -2.0);
    SeededStream a(1, 1), b(1, 1);
    EXPECT_TRUE(same_partition(kmeans(pts, 3, a).labels, kmeans(moved, 3, b).labels));
}

TEST(KMeans, DeterministicGivenStream) {
    SeededStream g(8, 0);
    Matrix pts(50, 3);
    for (int i = 0; i < 50; ++i)
        for (int j = 0; j < 3; ++j) pts(i, j) = g.uniform();
    SeededStream a(3, 3), b(3, 3);
    EXPECT_EQ(kmeans(pts, 4, a).labels, kmeans(pts, 4, b).labels);
}

TEST(KMeans, TooFewDistinctPoints) {
    Matrix pts = Matrix::Zero(5, 2);
    pts(4, 0) = 1.0;
    SeededStream s(1, 0);
    EXPECT_EQ(distinct_rows(pts), 2);
    EXPECT_THROW(kmeans(pts, 3, s), InvalidArgument);
}

TEST(Spa, TriangleCornersWithInteriorPoints) {
    Matrix pts(6, 2);
    const double h = std::sqrt(3.0) / 2.0;
    pts << 0.2, 0.3,  // interior
        -1.0, 0.0,    // corner
        0.0, 0.1,     // interior
        1.0, 0.0,     // corner
        0.0, 2 * h,   // corner
        -0.1, 0.5;    // interior
    auto v = spa_vertices(pts, 3);
    std::sort(v.begin(), v.end());
    EXPECT_EQ(v, (std::vector<int>{1, 3, 4}));
}

TEST(Spa, SingleVertexIsMaxNorm) {
    Matrix pts(4, 1);
    pts << 0.5, -3.0, 2.0, 1.0;
    EXPECT_EQ(spa_vertices(pts, 1), std::vector<int>{1});
}

TEST(Spa, FirstIndexMaximisesNorm) {
    SeededStream s(3, 0);
    Matrix pts(30, 2);
    for (int i = 0; i < 30; ++i) pts.row(i) << s.uniform(-1, 1), s.uniform(-1, 1);
    Eigen::Index arg = 0;
    pts.rowwise().norm().maxCoeff(&arg);
    EXPECT_EQ(spa_vertices(pts, 3).front(), static_cast<int>(arg));
}

TEST(Spa, RecoversCornersOfRandomConvexCombinations) {
    Matrix corners(4, 3);
    corners << 3, 0, 0,
               0, 3, 0,
               0, 0, 3,
               -2, -2, -2;
    SeededStream s(11, 0);
    Matrix pts(204, 3);
    for (int c = 0; c < 4; ++c) pts.row(50 * c) = corners.row(c);
    std::set<int> corner_rows{0, 50, 100, 150};
    int row = 0;
    for (int i = 0; i < 204; ++i) {
        if (corner_rows.count(i)) continue;
        Vector w(4);
        for (int c = 0; c < 4; ++c) w(c) = s.uniform(0.05, 1.0);
        w /= w.sum();
        pts.row(i) = w.transpose() * corners;
        ++row;
    }
    const auto v = spa_vertices(pts, 4);
    EXPECT_EQ(std::set<int>(v.begin(), v.end()), corner_rows);
}

TEST(Spa, AllZeroInputThrows) { EXPECT_THROW(spa_vertices(Matrix::Zero(5, 2), 2), NumericalError); }

TEST(Normal, CdfBasics) {
    EXPECT_DOUBLE_EQ(normal_cdf(0.0), 0.5);
    for (double x : {0.5, 1.0, 2.0, 3.0}) EXPECT_NEAR(normal_cdf(-x) + normal_cdf(x), 1.0, 1e-15);
    EXPECT_NEAR(normal_sf(10.0), 7.619853024160527e-24, 1e-36);
}

TEST(Normal, QuantileAgainstIntegrationOracle) {
    // Invert the Simpson-integrated CDF by bisection.
    double lo = 1.0, hi = 3.0;
    for (int i = 0; i < 60; ++i) {
        const double mid = 0.5 * (lo + hi);
        (simpson_cdf(mid) < 0.975 ? lo : hi) = mid;
    }
    EXPECT_NEAR(lo, 1.959964, 5e-7);
    EXPECT_NEAR(normal_quantile(0.975), lo, 1e-9);
    EXPECT_NEAR(normal_quantile(0.975), 1.959964, 5e-7);
    EXPECT_NEAR(normal_cdf(1.5), simpson_cdf(1.5), 1e-12);
}

TEST(Normal, QuantileRoundTrip) {
    for (double q : {1e-12, 1e-6, 0.001, 0.025, 0.3, 0.5, 0.7, 0.975, 0.999, 1 - 1e-9})
        EXPECT_NEAR(normal_cdf(normal_quantile(q)), q, 1e-10) << q;
}

TEST(Normal, CdfMonotoneOnGrid) {
    double prev = -1.0;
    for (int i = 0; i <= 10'000; ++i) {
        const double v = normal_cdf(-10.0 + 20.0 * i / 10'000.0);
        EXPECT_GE(v, prev);
        prev = v;
    }
}

TEST(Normal, QuantileDomain) {
    EXPECT_THROW(normal_quantile(0.0), InvalidArgument);
    EXPECT_THROW(normal_quantile(1.0), InvalidArgument);
    EXPECT_THROW(normal_quantile(std::nan("")), InvalidArgument);
}

TEST(Normal, TwoSidedPValue) {
    EXPECT_DOUBLE_EQ(two_sided_p_value(0.0), 1.0);
    EXPECT_NEAR(two_sided_p_value(1.959963984540054), 0.05, 1e-12);
    EXPECT_DOUBLE_EQ(two_sided_p_value(-1.3), two_sided_p_value(1.3));
}
