#include "netgof/models.hpp"

#include "netgof/error.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace netgof {

MembershipMatrix::MembershipMatrix(Matrix weights) : weights_(std::move(weights)) {
    if (weights_.cols() < 1) throw InvalidArgument("membership matrix needs at least one community");
    for (Eigen::Index i = 0; i < weights_.rows(); ++i) {
        if (weights_.row(i).minCoeff() < 0.0)
            throw InvalidArgument("membership row " + std::to_string(i) + " has a negative weight");
        if (std::abs(weights_.row(i).sum() - 1.0) > kRowTolerance)
            throw InvalidArgument("membership row " + std::to_string(i) + " does not sum to one");
    }
}

MembershipMatrix MembershipMatrix::from_labels(const std::vector<int>& labels, int k) {
    Matrix w = Matrix::Zero(static_cast<Eigen::Index>(labels.size()), k);
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] < 0 || labels[i] >= k) throw InvalidArgument("label out of range");
        w(static_cast<Eigen::Index>(i), labels[i]) = 1.0;
    }
    return MembershipMatrix(std::move(w));
}

bool MembershipMatrix::is_pure(int i) const { return weights_.row(i).maxCoeff() == 1.0; }

MembershipMatrix MembershipMatrix::reparameterize(const Matrix& q) const {
    if (q.cols() != weights_.cols()) throw InvalidArgument("reparameterize: Q must have K columns");
    if (q.minCoeff() < 0.0) throw InvalidArgument("reparameterize: Q must be nonnegative");
    for (Eigen::Index c = 0; c < q.cols(); ++c)
        if (std::abs(q.col(c).sum() - 1.0) > 1e-12)
            throw InvalidArgument("reparameterize: columns of Q must sum to one");
    Matrix out = weights_ * q.transpose();
    // Row sums are one up to rounding; restore them exactly.
    for (Eigen::Index i = 0; i < out.rows(); ++i) out.row(i) /= out.row(i).sum();
    return MembershipMatrix(std::move(out));
}

namespace {

struct NodeCount {
    int operator()(const ErdosRenyiModel& m) const { return m.n; }
    int operator()(const BetaModel& m) const { return static_cast<int>(m.beta.size()); }
    int operator()(const BlockModel& m) const { return static_cast<int>(m.labels.size()); }
    int operator()(const DegreeCorrectedBlockModel& m) const { return static_cast<int>(m.labels.size()); }
    int operator()(const MixedMembershipModel& m) const { return m.memberships.nodes(); }
    int operator()(const LatentSpaceModel& m) const { return static_cast<int>(m.positions.rows()); }
};

void check_block_matrix(const Matrix& b) {
    if (b.rows() != b.cols() || b.rows() < 1) throw InvalidArgument("block matrix must be square");
    if ((b - b.transpose()).cwiseAbs().maxCoeff() > 0.0)
        throw InvalidArgument("block matrix must be symmetric");
}

void check_labels(const std::vector<int>& labels, int k) {
    for (int l : labels)
        if (l < 0 || l >= k) throw InvalidArgument("community label out of range");
}

Matrix expand_blocks(const Matrix& b, const std::vector<int>& labels) {
    const auto n = static_cast<Eigen::Index>(labels.size());
    Matrix p(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) p(i, j) = b(labels[i], labels[j]);
    return p;
}

Matrix raw_probabilities(const GroundTruthModel& model) {
    return std::visit(
        [](const auto& m) -> Matrix {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, ErdosRenyiModel>) {
                if (m.n < 2) throw InvalidArgument("E-R model needs n >= 2");
                return Matrix::Constant(m.n, m.n, m.p);
            } else if constexpr (std::is_same_v<T, BetaModel>) {
                const Eigen::Index n = m.beta.size();
                Matrix p(n, n);
                for (Eigen::Index i = 0; i < n; ++i)
                    for (Eigen::Index j = 0; j < n; ++j) {
                        // logistic(beta_i + beta_j), written to avoid overflow
                        const double s = m.beta(i) + m.beta(j);
                        p(i, j) = s >= 0 ? 1.0 / (1.0 + std::exp(-s)) : std::exp(s) / (1.0 + std::exp(s));
                    }
                return p;
            } else if constexpr (std::is_same_v<T, BlockModel>) {
                check_block_matrix(m.block_probs);
                check_labels(m.labels, static_cast<int>(m.block_probs.rows()));
                return expand_blocks(m.block_probs, m.labels);
            } else if constexpr (std::is_same_v<T, DegreeCorrectedBlockModel>) {
                check_block_matrix(m.block_probs);
                check_labels(m.labels, static_cast<int>(m.block_probs.rows()));
                if (m.theta.size() != static_cast<Eigen::Index>(m.labels.size()))
                    throw InvalidArgument("theta length must equal n");
                if (m.theta.minCoeff() < 0) throw InvalidArgument("theta must be nonnegative");
                Matrix p = expand_blocks(m.block_probs, m.labels);
                return m.theta.asDiagonal() * p * m.theta.asDiagonal();
            } else if constexpr (std::is_same_v<T, MixedMembershipModel>) {
                check_block_matrix(m.block_probs);
                if (m.memberships.communities() != m.block_probs.rows())
                    throw InvalidArgument("membership width must equal K");
                if (m.theta.size() != m.memberships.nodes()) throw InvalidArgument("theta length must equal n");
                if (m.theta.minCoeff() < 0) throw InvalidArgument("theta must be nonnegative");
                const Matrix weighted = m.theta.asDiagonal() * m.memberships.dense();
                return weighted * m.block_probs * weighted.transpose();
            } else {
                if (m.positive < 0 || m.negative < 0 || m.positive + m.negative != m.positions.cols())
                    throw InvalidArgument("signature must match the latent dimension");
                Vector sign(m.positions.cols());
                for (Eigen::Index s = 0; s < sign.size(); ++s) sign(s) = s < m.positive ? 1.0 : -1.0;
                return m.positions * sign.asDiagonal() * m.positions.transpose();
            }
        },
        model);
}

}  // namespace

int node_count(const GroundTruthModel& model) { return std::visit(NodeCount{}, model); }

std::string family_name(const GroundTruthModel& model) {
    static constexpr const char* names[] = {"er", "beta", "sbm", "dcsbm", "dcmm", "lsm"};
    return names[model.index()];
}

ProbabilityMatrix build_probability_matrix(const GroundTruthModel& model) {
    Matrix p = raw_probabilities(model);
    const Eigen::Index n = p.rows();
    for (Eigen::Index i = 0; i < n; ++i) {
        p(i, i) = 0.0;
        for (Eigen::Index j = i + 1; j < n; ++j) {
            const double v = p(i, j);
            if (!(v >= 0.0 && v <= 1.0))
                throw InvalidArgument(family_name(model) + " model: p(" + std::to_string(i) + ", " +
                                      std::to_string(j) + ") = " + std::to_string(v) + " outside [0, 1]");
            p(j, i) = v;
        }
    }
    return ProbabilityMatrix(std::move(p));
}

AdjacencyMatrix sample_adjacency(const ProbabilityMatrix& p, SeededStream& stream) {
    const int n = p.size();
    Matrix a = Matrix::Zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (stream.uniform() < p(i, j)) a(i, j) = a(j, i) = 1.0;
    return AdjacencyMatrix(std::move(a));
}

Preset parse_preset(std::string_view name) {
    if (name == "er") return Preset::ErdosRenyi;
    if (name == "beta_linear") return Preset::BetaLinear;
    if (name == "sbm_planted") return Preset::SbmPlanted;
    if (name == "dcsbm_zhao") return Preset::DcsbmZhao;
    if (name == "lsm_sine") return Preset::LsmSine;
    if (name == "dcmm_table11") return Preset::DcmmTable11;
    throw InvalidArgument("unknown preset '" + std::string(name) + "'");
}

std::string_view preset_name(Preset preset) {
    switch (preset) {
        case Preset::ErdosRenyi: return "er";
        case Preset::BetaLinear: return "beta_linear";
        case Preset::SbmPlanted: return "sbm_planted";
        case Preset::DcsbmZhao: return "dcsbm_zhao";
        case Preset::LsmSine: return "lsm_sine";
        case Preset::DcmmTable11: return "dcmm_table11";
    }
    return "?";
}

namespace {

Matrix planted_blocks(double rho, int k) {
    Matrix b = Matrix::Constant(k, k, rho);
    b.diagonal().setConstant(5.0 * rho);
    return b;
}

std::vector<int> uniform_labels(int n, int k, SeededStream& stream) {
    std::vector<int> labels(static_cast<std::size_t>(n));
    for (auto& l : labels) l = static_cast<int>(stream.below(static_cast<std::uint64_t>(k)));
    return labels;
}

void require(bool ok, const std::string& what) {
    if (!ok) throw InvalidArgument(what);
}

}  // namespace

GroundTruthModel make_preset(Preset preset, int n, const PresetParams& params, SeededStream& stream) {
    require(n >= 2, "preset: n must be at least 2");
    switch (preset) {
        case Preset::ErdosRenyi:
            require(params.rho >= 0 && params.rho <= 1, "er: rho must lie in [0, 1]");
            return ErdosRenyiModel{n, params.rho};

        case Preset::BetaLinear: {
            Vector beta(n);
            for (int i = 0; i < n; ++i) beta(i) = (i + 1) * params.ln / n;
            return BetaModel{std::move(beta)};
        }

        case Preset::SbmPlanted:
            require(params.k >= 1, "sbm_planted: K must be positive");
            require(params.rho >= 0 && 5 * params.rho <= 1, "sbm_planted: need 0 <= 5 rho <= 1");
            return BlockModel{planted_blocks(params.rho, params.k), uniform_labels(n, params.k, stream)};

        case Preset::DcsbmZhao: {
            require(params.k >= 1, "dcsbm_zhao: K must be positive");
            require(params.rho >= 0, "dcsbm_zhao: rho must be nonnegative");
            auto labels = uniform_labels(n, params.k, stream);
            Vector theta(n);
            for (int i = 0; i < n; ++i) {
                const double u = stream.uniform();
                if (u < 0.8)
                    theta(i) = stream.uniform(0.8, 1.2);
                else if (u < 0.9)
                    theta(i) = 9.0 / 11.0;
                else
                    theta(i) = 13.0 / 11.0;
            }
            return DegreeCorrectedBlockModel{planted_blocks(params.rho, params.k), std::move(labels),
                                             std::move(theta)};
        }

        case Preset::LsmSine: {
            require(params.rho > 0 && params.rho <= 1, "lsm_sine: rho must lie in (0, 1]");
            Matrix x(n, 1);
            for (int i = 0; i < n; ++i)
                x(i, 0) = params.rho * (0.8 * std::sin(std::numbers::pi * i / (n - 1)) + 0.1);
            return LatentSpaceModel{std::move(x), 1, 0};
        }

        case Preset::DcmmTable11: {
            const int k = params.k;
            require(k >= 2, "dcmm_table11: K must be at least 2");
            require(params.x > 0 && params.x < 1.0 / (k - 1),
                    "dcmm_table11: x must lie in (0, 1/(K-1))");
            require(params.n0 >= 0 && static_cast<long long>(k) * params.n0 <= n,
                    "dcmm_table11: K * n0 exceeds n");
            require(params.rho > 0 && params.rho < 1, "dcmm_table11: rho must lie in (0, 1)");
            require(params.z >= 1, "dcmm_table11: z must be at least 1");

            Matrix b = Matrix::Constant(k, k, params.rho);
            b.diagonal().setOnes();

            // K rows with 1 - (K-1)x on one coordinate, then the barycentre.
            Matrix mixed(k + 1, k);
            for (int r = 0; r < k; ++r) {
                mixed.row(r).setConstant(params.x);
                mixed(r, k - 1 - r) = 1.0 - (k - 1) * params.x;
            }
            mixed.row(k).setConstant(1.0 / k);

            Matrix pi = Matrix::Zero(n, k);
            const int pure = k * params.n0;
            for (int i = 0; i < pure; ++i) pi(i, i / params.n0) = 1.0;
            for (int i = pure; i < n; ++i)
                pi.row(i) = mixed.row(static_cast<Eigen::Index>(stream.below(static_cast<std::uint64_t>(k + 1))));

            Vector theta(n);
            for (int i = 0; i < n; ++i) theta(i) = params.z > 1 ? 1.0 / stream.uniform(1.0, params.z) : 1.0;
            return MixedMembershipModel{std::move(b), MembershipMatrix(std::move(pi)), std::move(theta)};
        }
    }
    throw InvalidArgument("unknown preset");
}

}  // namespace netgof
