#include "netgof/gof.hpp"

#include "netgof/error.hpp"
#include "netgof/linalg.hpp"
#include "netgof/normal.hpp"

#include <cmath>
#include <string>

namespace netgof {

namespace {

Matrix residuals(const AdjacencyMatrix& a, const ProbabilityMatrix& p, bool strict) {
    const int n = a.size();
    if (p.size() != n)
        throw InvalidArgument("dimension mismatch: adjacency is " + std::to_string(n) + " x " +
                              std::to_string(n) + ", probabilities are " + std::to_string(p.size()) +
                              " x " + std::to_string(p.size()));
    Matrix r = Matrix::Zero(n, n);
    const double nn = n;
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            if (i == j) continue;
            const double pij = p(i, j);
            if (!(pij > 0.0 && pij < 1.0)) {
                throw InvalidArgument(std::string(strict ? "fitted" : "true") + " probability at (" +
                                      std::to_string(i) + ", " + std::to_string(j) +
                                      ") is outside (0, 1)");
            }
            r(i, j) = (a(i, j) - pij) / std::sqrt(nn * pij * (1.0 - pij));
        }
    return r;
}

}  // namespace

NormalizedResidualMatrix normalize_residuals(const AdjacencyMatrix& a, const ProbabilityMatrix& phat) {
    return {residuals(a, phat, true), NormalizedResidualMatrix::Provenance::Fitted};
}

NormalizedResidualMatrix normalize_true(const AdjacencyMatrix& a, const ProbabilityMatrix& p) {
    return {residuals(a, p, false), NormalizedResidualMatrix::Provenance::Oracle};
}

double statistic(const NormalizedResidualMatrix& r) { return trace_cubed(r.values) / std::sqrt(6.0); }

Decision decide(double t, double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw InvalidArgument("alpha must lie in (0, 1)");
    return std::abs(t) >= normal_quantile(1.0 - alpha / 2.0) ? Decision::Reject : Decision::Accept;
}

TestResult gof_test(const AdjacencyMatrix& a, const CandidateModel& candidate, double alpha,
                    SeededStream& stream, const FitOptions& options) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw InvalidArgument("alpha must lie in (0, 1)");
    FittedModel fitted = [&] {
        try {
            return fit(a, candidate, stream, options);
        } catch (const FitError& err) {
            throw UntestableCandidate("untestable candidate " + to_string(candidate) + ": " + err.what(),
                                      err.kind());
        }
    }();
    NormalizedResidualMatrix r = normalize_residuals(a, fitted.phat);
    const double t = statistic(r);
    return TestResult{t, two_sided_p_value(t), alpha, decide(t, alpha), std::move(fitted), std::move(r)};
}

SelectionResult select_k_dcmm(const AdjacencyMatrix& a, int k_max, double alpha, SeededStream& stream,
                              const SelectOptions& options) {
    if (k_max < 1) throw InvalidArgument("k_max must be at least 1");
    if (!(alpha > 0.0 && alpha < 1.0)) throw InvalidArgument("alpha must lie in (0, 1)");
    SelectionResult result;
    result.k_max = k_max;
    result.alpha = alpha;
    for (int k = 1; k <= k_max; ++k) {
        SelectionStep step;
        step.k = k;
        // Each K0 gets its own child stream so the trace does not depend on
        // how many earlier candidates were evaluated.
        SeededStream child = stream.split(static_cast<std::uint64_t>(k));
        try {
            if (k > a.size()) throw FitError(FitError::Kind::InvalidInput, "more communities than nodes");
            const TestResult t = gof_test(a, candidate::Dcmm{k}, alpha, child, options.fit);
            step.statistic = t.statistic;
            step.p_value = t.p_value;
            step.accepted = t.decision == Decision::Accept;
        } catch (const UntestableCandidate& err) {
            step.warning = err.what();
        } catch (const FitError& err) {
            step.warning = std::string("untestable candidate dcmm:") + std::to_string(k) + ": " + err.what();
        }
        result.trace.push_back(step);
        if (step.accepted && !result.k_hat) {
            result.k_hat = k;
            if (!options.exhaustive) break;
        }
    }
    return result;
}

namespace {

Matrix scaled_difference(const ProbabilityMatrix& p, const ProbabilityMatrix& phat) {
    const int n = p.size();
    if (phat.size() != n) throw InvalidArgument("dimension mismatch between true and fitted probabilities");
    Matrix d = Matrix::Zero(n, n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            if (i == j) continue;
            const double pij = p(i, j);
            if (!(pij > 0.0 && pij < 1.0))
                throw InvalidArgument("true probability at (" + std::to_string(i) + ", " + std::to_string(j) +
                                      ") is degenerate");
            d(i, j) = (pij - phat(i, j)) / std::sqrt(n * pij * (1.0 - pij));
        }
    return d;
}

}  // namespace

double delta_cubed_diagnostic(const ProbabilityMatrix& p, const ProbabilityMatrix& phat) {
    return trace_cubed(scaled_difference(p, phat));
}

double max_abs_deviation(const ProbabilityMatrix& p, const ProbabilityMatrix& phat) {
    if (phat.size() != p.size()) throw InvalidArgument("dimension mismatch between true and fitted probabilities");
    Matrix d = (p.dense() - phat.dense()).cwiseAbs();
    d.diagonal().setZero();
    return d.maxCoeff();
}

}  // namespace netgof
