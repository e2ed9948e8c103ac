#pragma once

#include "netgof/graph.hpp"
#include "netgof/rng.hpp"

#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace netgof {

/// n x K nonnegative matrix whose rows sum to one.
class MembershipMatrix {
public:
    static constexpr double kRowTolerance = 1e-12;

    explicit MembershipMatrix(Matrix weights);

    /// Pure memberships from 0-based labels.
    static MembershipMatrix from_labels(const std::vector<int>& labels, int k);

    int nodes() const noexcept { return static_cast<int>(weights_.rows()); }
    int communities() const noexcept { return static_cast<int>(weights_.cols()); }
    const Matrix& dense() const noexcept { return weights_; }

    bool is_pure(int i) const;

    /// Re-expresses memberships over k communities through a nonnegative
    /// k x l matrix whose columns sum to one: returns Pi * Q^T.
    MembershipMatrix reparameterize(const Matrix& q) const;

private:
    Matrix weights_;
};

struct ErdosRenyiModel {
    int n = 0;
    double p = 0.0;
};

struct BetaModel {
    Vector beta;
};

struct BlockModel {
    Matrix block_probs;       // K x K, symmetric
    std::vector<int> labels;  // 0-based community of each node
};

struct DegreeCorrectedBlockModel {
    Matrix block_probs;
    std::vector<int> labels;
    Vector theta;
};

struct MixedMembershipModel {
    Matrix block_probs;
    MembershipMatrix memberships;
    Vector theta;
};

/// Generalised random dot product graph: p_ij = x_i^T I_{a,b} x_j with the
/// first `positive` coordinates weighted +1 and the remaining ones -1.
struct LatentSpaceModel {
    Matrix positions;  // n x d
    int positive = 1;
    int negative = 0;
};

using GroundTruthModel = std::variant<ErdosRenyiModel, BetaModel, BlockModel,
                                      DegreeCorrectedBlockModel, MixedMembershipModel,
                                      LatentSpaceModel>;

int node_count(const GroundTruthModel& model);
std::string family_name(const GroundTruthModel& model);

/// Closed-form edge probabilities with a zero diagonal. Throws
/// InvalidArgument naming the first pair that leaves [0, 1].
ProbabilityMatrix build_probability_matrix(const GroundTruthModel& model);

/// Independent Bernoulli draws over the upper triangle in row-major order,
/// mirrored to the lower triangle.
AdjacencyMatrix sample_adjacency(const ProbabilityMatrix& p, SeededStream& stream);

/// Parameters for the simulation presets. Fields not used by a preset are
/// ignored.
struct PresetParams {
    double rho = 0.05;  // sparsity / scale
    int k = 3;          // communities
    double ln = 0.0;    // beta_linear spread, beta_i = i * ln / n
    double x = 0.4;     // dcmm_table11 mixing weight
    int n0 = 80;        // dcmm_table11 pure nodes per community
    double z = 1.0;     // dcmm_table11: 1/theta_i ~ Unif[1, z]
};

enum class Preset { ErdosRenyi, BetaLinear, SbmPlanted, DcsbmZhao, LsmSine, DcmmTable11 };

Preset parse_preset(std::string_view name);
std::string_view preset_name(Preset preset);

/// Simulation generators:
///   er            p = rho
///   beta_linear   beta_i = i * ln / n, i = 1..n
///   sbm_planted   B_uv = rho (1 + 4 [u = v]), labels iid uniform over K
///   dcsbm_zhao    as sbm_planted; theta_i ~ Unif[4/5, 6/5] w.p. 0.8,
///                 9/11 w.p. 0.1, 13/11 w.p. 0.1
///   lsm_sine      x_i = rho (0.8 sin(pi (i-1)/(n-1)) + 0.1), d = 1
///   dcmm_table11  B = rho 11^T + (1 - rho) I; the first K * n0 nodes are
///                 pure in community blocks, the rest draw one of K + 1
///                 mixed rows uniformly; 1/theta_i ~ Unif[1, z]
GroundTruthModel make_preset(Preset preset, int n, const PresetParams& params,
                             SeededStream& stream);

}  // namespace netgof
