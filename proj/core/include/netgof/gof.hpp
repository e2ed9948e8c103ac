#pragma once

#include "netgof/estimators.hpp"
#include "netgof/graph.hpp"
#include "netgof/rng.hpp"

#include <optional>
#include <string>
#include <vector>

namespace netgof {

/// (A_ij - p_ij) / sqrt(n p_ij (1 - p_ij)) off the diagonal, zero on it.
struct NormalizedResidualMatrix {
    enum class Provenance { Fitted, Oracle };

    Matrix values;
    Provenance provenance = Provenance::Fitted;
};

/// Residuals under fitted probabilities. Every off-diagonal entry of `phat`
/// must lie strictly inside (0, 1).
NormalizedResidualMatrix normalize_residuals(const AdjacencyMatrix& a,
                                             const ProbabilityMatrix& phat);

/// Residuals under the true probabilities.
NormalizedResidualMatrix normalize_true(const AdjacencyMatrix& a, const ProbabilityMatrix& p);

/// T_n = tr(R^3) / sqrt(6).
double statistic(const NormalizedResidualMatrix& r);

enum class Decision { Accept, Reject };

struct TestResult {
    double statistic = 0.0;
    double p_value = 1.0;
    double alpha = 0.05;
    Decision decision = Decision::Accept;
    FittedModel fit;
    NormalizedResidualMatrix residuals;
};

/// Rejects when |t| >= u_{1 - alpha/2}.
Decision decide(double t, double alpha);

/// Fits the candidate, normalises residuals and evaluates T_n. Fit failures
/// surface as UntestableCandidate, never as a rejection.
TestResult gof_test(const AdjacencyMatrix& a, const CandidateModel& candidate, double alpha,
                    SeededStream& stream, const FitOptions& options = {});

struct SelectionStep {
    int k = 0;
    std::optional<double> statistic;
    std::optional<double> p_value;
    bool accepted = false;
    std::string warning;
};

struct SelectionResult {
    std::optional<int> k_hat;
    std::vector<SelectionStep> trace;
    int k_max = 10;
    double alpha = 0.001;
};

struct SelectOptions {
    /// Evaluate every K0 up to k_max instead of stopping at the first accept.
    bool exhaustive = false;
    FitOptions fit;
};

/// Smallest K0 in 1..k_max whose DCMM{K0} test accepts at level alpha.
/// A K0 that cannot be fitted counts as rejected and leaves a warning.
SelectionResult select_k_dcmm(const AdjacencyMatrix& a, int k_max, double alpha,
                              SeededStream& stream, const SelectOptions& options = {});

/// tr(D^3) with D_ij = (p_ij - phat_ij) / sqrt(n p_ij (1 - p_ij)).
double delta_cubed_diagnostic(const ProbabilityMatrix& p, const ProbabilityMatrix& phat);

/// max_{i != j} |phat_ij - p_ij|.
double max_abs_deviation(const ProbabilityMatrix& p, const ProbabilityMatrix& phat);

}  // namespace netgof
