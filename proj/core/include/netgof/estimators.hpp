#pragma once

#include "netgof/graph.hpp"
#include "netgof/models.hpp"
#include "netgof/rng.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace netgof {

struct Signature {
    int positive = 1;
    int negative = 0;
};

namespace candidate {
struct ErdosRenyi {};
struct Beta {};
struct Sbm { int k = 1; };
struct Dcsbm { int k = 1; };
struct Dcmm { int k = 1; };
struct Lsm {
    int d = 1;
    std::optional<Signature> signature;
};
}  // namespace candidate

using CandidateModel = std::variant<candidate::ErdosRenyi, candidate::Beta, candidate::Sbm,
                                    candidate::Dcsbm, candidate::Dcmm, candidate::Lsm>;

/// Parses "er", "beta", "sbm:3", "dcsbm:2", "dcmm:3", "lsm:1" or "lsm:2:1,1".
CandidateModel parse_candidate(std::string_view text);
std::string to_string(const CandidateModel& candidate);

enum class Family { ErdosRenyi, Beta, Sbm, Dcsbm, Dcmm, Lsm };
std::string_view family_name(Family family);

enum class Labeling {
    Score,        // k-means on ratios of eigenvectors
    Eigenvector,  // k-means on the raw leading eigenvectors
};

enum class BetaStart { Zero, LogitDegree };

struct FitOptions {
    double clip = 1e-6;
    double beta_tol = 1e-8;
    int beta_max_iter = 500;
    BetaStart beta_start = BetaStart::Zero;
    Labeling labeling = Labeling::Score;
    int kmeans_restarts = 10;
    int als_sweeps = 20;
    /// Clusters used to denoise SCORE rows before vertex hunting; 0 means 3K.
    int vertex_clusters = 0;
    /// Skip clustering and use these 0-based labels (block fitters only).
    std::optional<std::vector<int>> labels;
};

namespace estimate {
struct ErdosRenyi { double p = 0.0; };
struct Beta { Vector beta; };
struct Block {
    std::vector<int> labels;
    Matrix block_probs;
};
struct DegreeCorrectedBlock {
    std::vector<int> labels;
    Vector theta;
    Matrix block_edges;
};
struct MixedMembership {
    Matrix memberships;  // n x K
    Vector theta;
    Matrix block_probs;  // unit diagonal
    std::vector<int> corners;
};
struct LatentSpace {
    Matrix positions;
    Signature signature;
    Vector eigenvalues;
};
}  // namespace estimate

using EstimatedParameters =
    std::variant<estimate::ErdosRenyi, estimate::Beta, estimate::Block,
                 estimate::DegreeCorrectedBlock, estimate::MixedMembership,
                 estimate::LatentSpace>;

struct FitDiagnostics {
    int iterations = 0;
    double residual = 0.0;
    std::vector<std::string> warnings;
};

struct FittedModel {
    Family family;
    EstimatedParameters parameters;
    ProbabilityMatrix phat;  // clipped off the diagonal
    FitDiagnostics diagnostics;
};

FittedModel fit_er(const AdjacencyMatrix& a, const FitOptions& options = {});

/// Maximum likelihood for the beta-model by the fixed-point map
///   beta_i <- log d_i - log sum_{j != i} 1 / (exp(-beta_j) + exp(beta_i)).
/// Throws FitError(MleNonexistence) when some degree is 0 or n - 1, and
/// FitError(NonConvergence) when the likelihood equations are not met
/// within `beta_tol` after `beta_max_iter` iterations.
FittedModel fit_beta(const AdjacencyMatrix& a, const FitOptions& options = {});

FittedModel fit_sbm(const AdjacencyMatrix& a, int k, SeededStream& stream,
                    const FitOptions& options = {});
FittedModel fit_dcsbm(const AdjacencyMatrix& a, int k, SeededStream& stream,
                      const FitOptions& options = {});
FittedModel fit_lsm(const AdjacencyMatrix& a, int d, std::optional<Signature> signature,
                    const FitOptions& options = {});
/// Spectral embedding of any symmetric matrix, diagonal included.
FittedModel fit_lsm(const Matrix& m, int d, std::optional<Signature> signature,
                    const FitOptions& options = {});

/// Mixed-membership fit on any symmetric input (an adjacency matrix or an
/// exact probability matrix with zero diagonal).
FittedModel fit_dcmm(const Matrix& a, int k, SeededStream& stream,
                     const FitOptions& options = {});
FittedModel fit_dcmm(const AdjacencyMatrix& a, int k, SeededStream& stream,
                     const FitOptions& options = {});

FittedModel fit(const AdjacencyMatrix& a, const CandidateModel& candidate,
                SeededStream& stream, const FitOptions& options = {});

/// Community labels from the top-k eigenvectors (SCORE or plain).
std::vector<int> spectral_labels(const Matrix& a, int k, SeededStream& stream,
                                 Labeling labeling, int restarts);

/// Max over nodes of |d_i - sum_{j != i} p_ij| for the beta-model likelihood
/// equations.
double beta_mle_residual(const AdjacencyMatrix& a, const Vector& beta);

}  // namespace netgof
