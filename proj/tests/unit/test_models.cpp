#include "netgof/error.hpp"
#include "netgof/models.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace netgof;

namespace {

double off_diagonal_max_gap(const Matrix& a, const Matrix& b) {
    Matrix d = (a - b).cwiseAbs();
    d.diagonal().setZero();
    return d.maxCoeff();
}

const Preset kPresets[] = {Preset::ErdosRenyi, Preset::BetaLinear, Preset::SbmPlanted,
                           Preset::DcsbmZhao,  Preset::LsmSine,    Preset::DcmmTable11};

PresetParams small_params() {
    PresetParams p;
    p.rho = 0.1;
    p.k = 3;
    p.ln = 1.0;
    p.n0 = 10;
    p.z = 3.0;
    return p;
}

Matrix random_stochastic_columns(int rows, int cols, SeededStream& s) {
    Matrix q(rows, cols);
    for (int c = 0; c < cols; ++c) {
        for (int r = 0; r < rows; ++r) q(r, c) = s.uniform();
        q.col(c) /= q.col(c).sum();
    }
    return q;
}

}  // namespace

TEST(BuildProbability, ErdosRenyiConstant) {
    const auto p = build_probability_matrix(ErdosRenyiModel{4, 0.3});
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) EXPECT_DOUBLE_EQ(p(i, j), i == j ? 0.0 : 0.3);
}

TEST(BuildProbability, BetaZeroIsOneHalf) {
    const auto p = build_probability_matrix(BetaModel{Vector::Zero(3)});
    EXPECT_DOUBLE_EQ(p(0, 1), 0.5);
    EXPECT_DOUBLE_EQ(p(1, 2), 0.5);
}

TEST(BuildProbability, BetaLogistic) {
    Vector beta(2);
    beta << 0.3, -1.1;
    const auto p = build_probability_matrix(BetaModel{beta});
    EXPECT_NEAR(p(0, 1), std::exp(-0.8) / (1 + std::exp(-0.8)), 1e-15);
}

TEST(BuildProbability, ReductionChainIsBitwise) {
    SeededStream s(1, 0);
    Matrix b(2, 2);
    b << 0.4, 0.1, 0.1, 0.3;
    std::vector<int> labels;
    for (int i = 0; i < 12; ++i) labels.push_back(static_cast<int>(s.below(2)));
    const Vector ones = Vector::Ones(12);
    const auto sbm = build_probability_matrix(BlockModel{b, labels});
    const auto dcsbm = build_probability_matrix(DegreeCorrectedBlockModel{b, labels, ones});
    const auto dcmm = build_probability_matrix(MixedMembershipModel{b, MembershipMatrix::from_labels(labels, 2), ones});
    EXPECT_EQ(sbm.dense(), dcsbm.dense());
    EXPECT_EQ(sbm.dense(), dcmm.dense());
}

TEST(BuildProbability, LatentSpaceSignature) {
    Matrix x(2, 2);
    x << 0.6, 0.2, 0.5, 0.4;
    const auto p = build_probability_matrix(LatentSpaceModel{x, 1, 1});
    EXPECT_NEAR(p(0, 1), 0.6 * 0.5 - 0.2 * 0.4, 1e-15);
}

TEST(BuildProbability, OutOfRangeNamesThePair) {
    Matrix x(3, 1);
    x << 0.5, 0.5, 3.0;
    try {
        build_probability_matrix(LatentSpaceModel{x, 1, 0});
        FAIL();
    } catch (const InvalidArgument& e) {
        EXPECT_NE(std::string(e.what()).find("(0, 2)"), std::string::npos) << e.what();
    }
    Matrix neg(2, 1);
    neg << 0.5, 0.5;
    EXPECT_THROW(build_probability_matrix(LatentSpaceModel{neg, 0, 1}), InvalidArgument);
}

TEST(BuildProbability, RejectsBadBlocks) {
    Matrix asym(2, 2);
    asym << 0.1, 0.2, 0.3, 0.1;
    EXPECT_THROW(build_probability_matrix(BlockModel{asym, {0, 1}}), InvalidArgument);
    Matrix ok = Matrix::Constant(2, 2, 0.1);
    EXPECT_THROW(build_probability_matrix(BlockModel{ok, {0, 2}}), InvalidArgument);
}

TEST(Sample, DegenerateProbabilities) {
    SeededStream s(1, 0);
    EXPECT_EQ(sample_adjacency(ProbabilityMatrix(Matrix::Zero(5, 5)), s).edge_count(), 0);
    EXPECT_EQ(sample_adjacency(ProbabilityMatrix(Matrix::Ones(5, 5)), s).edge_count(), 10);
}

TEST(Sample, ErdosRenyiEdgeCountWithinFourSigma) {
    const int n = 1000;
    const double p = 0.1;
    const double pairs = n * (n - 1) / 2.0;
    const double sigma = std::sqrt(pairs * p * (1 - p));
    const auto prob = build_probability_matrix(ErdosRenyiModel{n, p});
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        SeededStream s(seed, 0);
        EXPECT_LE(std::abs(static_cast<double>(sample_adjacency(prob, s).edge_count()) - p * pairs), 4 * sigma);
    }
}

TEST(Sample, DeterministicGivenStream) {
    const auto p = build_probability_matrix(ErdosRenyiModel{60, 0.2});
    SeededStream a(4, 4), b(4, 4);
    EXPECT_EQ(sample_adjacency(p, a), sample_adjacency(p, b));
}

TEST(Presets, BetaLinearFlat) {
    SeededStream s(1, 0);
    PresetParams params;
    params.ln = 0.0;
    const auto m = std::get<BetaModel>(make_preset(Preset::BetaLinear, 4, params, s));
    EXPECT_EQ(m.beta, Vector::Zero(4));
}

TEST(Presets, BetaLinearSlope) {
    SeededStream s(1, 0);
    PresetParams params;
    params.ln = 2.0;
    const auto m = std::get<BetaModel>(make_preset(Preset::BetaLinear, 4, params, s));
    EXPECT_DOUBLE_EQ(m.beta(0), 0.5);
    EXPECT_DOUBLE_EQ(m.beta(3), 2.0);
}

TEST(Presets, SbmPlantedBlocks) {
    SeededStream s(1, 0);
    PresetParams params;
    params.rho = 0.05;
    params.k = 3;
    const auto m = std::get<BlockModel>(make_preset(Preset::SbmPlanted, 30, params, s));
    for (int u = 0; u < 3; ++u)
        for (int v = 0; v < 3; ++v) EXPECT_DOUBLE_EQ(m.block_probs(u, v), u == v ? 0.25 : 0.05);
    for (int l : m.labels) EXPECT_TRUE(l >= 0 && l < 3);
}

TEST(Presets, DcsbmThetaLaw) {
    SeededStream s(2, 0);
    PresetParams params;
    params.rho = 0.05;
    const auto m = std::get<DegreeCorrectedBlockModel>(make_preset(Preset::DcsbmZhao, 4000, params, s));
    int low = 0, high = 0, uniform = 0;
    for (Eigen::Index i = 0; i < m.theta.size(); ++i) {
        const double t = m.theta(i);
        if (t == 9.0 / 11.0) ++low;
        else if (t == 13.0 / 11.0) ++high;
        else if (t >= 0.8 && t <= 1.2) ++uniform;
    }
    EXPECT_EQ(low + high + uniform, 4000);
    EXPECT_NEAR(low / 4000.0, 0.1, 0.02);
    EXPECT_NEAR(high / 4000.0, 0.1, 0.02);
}

TEST(Presets, LsmSinePositions) {
    SeededStream s(1, 0);
    PresetParams params;
    params.rho = 1.0;
    const auto m = std::get<LatentSpaceModel>(make_preset(Preset::LsmSine, 5, params, s));
    EXPECT_DOUBLE_EQ(m.positions(0, 0), 0.1);
    EXPECT_NEAR(m.positions(2, 0), 0.9, 1e-15);
    EXPECT_EQ(m.positive, 1);
    EXPECT_EQ(m.negative, 0);
    // Off the diagonal the peak pairs the centre with a neighbour.
    EXPECT_NEAR(build_probability_matrix(m).dense().maxCoeff(), m.positions(1, 0) * 0.9, 1e-12);
    EXPECT_LE(build_probability_matrix(m).dense().maxCoeff(), 0.81);
}

TEST(Presets, DcmmTable11Layout) {
    SeededStream s(3, 0);
    PresetParams params;
    params.x = 0.4;
    params.n0 = 80;
    params.rho = 0.1;
    params.z = 1.0;
    params.k = 3;
    const auto m = std::get<MixedMembershipModel>(make_preset(Preset::DcmmTable11, 500, params, s));
    int pure = 0;
    for (int i = 0; i < 500; ++i) pure += m.memberships.is_pure(i);
    EXPECT_EQ(pure, 240);
    for (int i = 0; i < 240; ++i) EXPECT_EQ(m.memberships.dense()(i, i / 80), 1.0);
    for (int u = 0; u < 3; ++u)
        for (int v = 0; v < 3; ++v) EXPECT_DOUBLE_EQ(m.block_probs(u, v), u == v ? 1.0 : 0.1);
    EXPECT_EQ(m.theta, Vector::Ones(500));
    // Mixed rows are drawn from the four listed rows.
    for (int i = 240; i < 500; ++i) {
        const auto row = m.memberships.dense().row(i);
        const bool barycentre = (row.array() - 1.0 / 3.0).abs().maxCoeff() < 1e-15;
        int at_x = 0, at_rest = 0;
        for (int c = 0; c < 3; ++c) {
            at_x += std::abs(row(c) - 0.4) < 1e-15;
            at_rest += std::abs(row(c) - 0.2) < 1e-15;
        }
        EXPECT_TRUE(barycentre || (at_x == 2 && at_rest == 1)) << "row " << i;
    }
}

TEST(Presets, DcmmThetaRange) {
    SeededStream s(4, 0);
    PresetParams params = small_params();
    params.z = 5.0;
    const auto m = std::get<MixedMembershipModel>(make_preset(Preset::DcmmTable11, 200, params, s));
    EXPECT_GE(m.theta.minCoeff(), 0.2);
    EXPECT_LE(m.theta.maxCoeff(), 1.0);
}

TEST(Presets, InvalidRanges) {
    SeededStream s(1, 0);
    PresetParams params = small_params();
    params.x = 0.6;
    EXPECT_THROW(make_preset(Preset::DcmmTable11, 100, params, s), InvalidArgument);
    params = small_params();
    params.n0 = 40;
    EXPECT_THROW(make_preset(Preset::DcmmTable11, 100, params, s), InvalidArgument);
    params = small_params();
    params.rho = 0.3;
    EXPECT_THROW(make_preset(Preset::SbmPlanted, 100, params, s), InvalidArgument);
    EXPECT_THROW(make_preset(Preset::ErdosRenyi, 1, small_params(), s), InvalidArgument);
    EXPECT_THROW(parse_preset("nope"), InvalidArgument);
}

TEST(Presets, EveryPresetBuildsAndSamples) {
    for (Preset preset : kPresets) {
        EXPECT_EQ(parse_preset(preset_name(preset)), preset);
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            SeededStream s(seed, 9);
            const auto model = make_preset(preset, 60, small_params(), s);
            EXPECT_EQ(node_count(model), 60);
            const auto p = build_probability_matrix(model);
            EXPECT_GE(p.dense().minCoeff(), 0.0);
            EXPECT_LE(p.dense().maxCoeff(), 1.0);
            EXPECT_EQ(p.dense(), p.dense().transpose());
            const auto a = sample_adjacency(p, s);
            EXPECT_EQ(a.dense(), a.dense().transpose());
            EXPECT_EQ(a.dense().diagonal().cwiseAbs().sum(), 0.0);
        }
    }
}

TEST(Membership, Validation) {
    Matrix w(2, 2);
    w << 0.5, 0.5, 1.0, 0.0;
    EXPECT_NO_THROW(MembershipMatrix{w});
    w(1, 1) = 1e-9;
    EXPECT_THROW(MembershipMatrix{w}, InvalidArgument);
    w << 1.5, -0.5, 1.0, 0.0;
    EXPECT_THROW(MembershipMatrix{w}, InvalidArgument);
}

TEST(Membership, ClosureUnderColumnStochasticMaps) {
    SeededStream s(17, 0);
    for (int trial = 0; trial < 1000; ++trial) {
        const int k = 1 + static_cast<int>(s.below(6));
        const int l = 1 + static_cast<int>(s.below(6));
        const Matrix q = random_stochastic_columns(k, l, s);
        Vector y(l);
        for (int c = 0; c < l; ++c) y(c) = s.uniform();
        y /= y.sum();
        const Vector qy = q * y;
        EXPECT_NEAR(qy.sum(), 1.0, 1e-12);
        EXPECT_GE(qy.minCoeff(), 0.0);

        Matrix rows(3, l);
        for (int r = 0; r < 3; ++r) rows.row(r) = y.transpose();
        const auto re = MembershipMatrix(rows).reparameterize(q);
        EXPECT_EQ(re.communities(), k);
        EXPECT_LE((re.dense().row(0).transpose() - qy).cwiseAbs().maxCoeff(), 1e-12);
    }
}

TEST(Membership, ReparameterizeRejectsNonStochastic) {
    const auto m = MembershipMatrix::from_labels({0, 1}, 2);
    Matrix q = Matrix::Constant(2, 2, 0.6);
    EXPECT_THROW(m.reparameterize(q), InvalidArgument);
    q << 1.2, 0.5, -0.2, 0.5;
    EXPECT_THROW(m.reparameterize(q), InvalidArgument);
}

TEST(Models, FamilyNames) {
    EXPECT_EQ(family_name(GroundTruthModel{ErdosRenyiModel{3, 0.1}}), "er");
    EXPECT_EQ(family_name(GroundTruthModel{BetaModel{Vector::Zero(3)}}), "beta");
    EXPECT_LT(off_diagonal_max_gap(Matrix::Zero(2, 2), Matrix::Identity(2, 2)), 1e-15);
}
