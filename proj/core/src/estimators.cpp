#include "netgof/estimators.hpp"

#include "netgof/error.hpp"
#include "netgof/kmeans.hpp"
#include "netgof/linalg.hpp"
#include "netgof/simplex.hpp"

#include <Eigen/LU>
#include <Eigen/QR>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <string>

namespace netgof {

namespace {

constexpr double kThetaFloor = 1e-8;

int parse_positive(std::string_view token, std::string_view context) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc() || ptr != token.data() + token.size() || v < 1)
        throw InvalidArgument("candidate '" + std::string(context) + "': expected a positive integer, got '" +
                              std::string(token) + "'");
    return v;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

FittedModel make_fit(Family family, EstimatedParameters params, const Matrix& raw, double clip,
                     FitDiagnostics diagnostics = {}) {
    Matrix p = raw.cwiseMax(clip).cwiseMin(1.0 - clip);
    p.diagonal().setZero();
    // Restore exact symmetry after floating-point products.
    p = (0.5 * (p + p.transpose())).eval();
    return FittedModel{family, std::move(params), ProbabilityMatrix(std::move(p)), std::move(diagnostics)};
}

std::vector<int> labels_for(const AdjacencyMatrix& a, int k, SeededStream& stream,
                            const FitOptions& options) {
    if (k < 1) throw InvalidArgument("number of communities must be positive");
    if (k > a.size()) throw InvalidArgument("more communities than nodes");
    if (options.labels) {
        if (static_cast<int>(options.labels->size()) != a.size())
            throw InvalidArgument("injected labels must cover every node");
        for (int l : *options.labels)
            if (l < 0 || l >= k) throw InvalidArgument("injected label out of range");
        return *options.labels;
    }
    return spectral_labels(a.dense(), k, stream, options.labeling, options.kmeans_restarts);
}

// Sums of A over community blocks, Z^T A Z.
Matrix block_sums(const AdjacencyMatrix& a, const std::vector<int>& labels, int k) {
    Matrix m = Matrix::Zero(k, k);
    const int n = a.size();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (a(i, j) != 0.0) m(labels[i], labels[j]) += 1.0;
    return m;
}

// Rows of xi_2..xi_K divided by xi_1, truncated to [-log n, log n].
Matrix score_ratios(const EigenPairs& e, int n, int* zero_rows = nullptr) {
    const int k = e.count();
    Matrix r = Matrix::Zero(n, k - 1);
    const double bound = std::log(static_cast<double>(n));
    int zeros = 0;
    for (int i = 0; i < n; ++i) {
        const double lead = e.vectors(i, 0);
        if (std::abs(lead) < 1e-12) {
            ++zeros;
            continue;
        }
        for (int s = 1; s < k; ++s) r(i, s - 1) = std::clamp(e.vectors(i, s) / lead, -bound, bound);
    }
    if (zero_rows) *zero_rows = zeros;
    return r;
}

EigenPairs leading_pairs(const Matrix& a, int k) {
    try {
        EigenPairs e = sym_eigs(a, k);
        if (e.vectors.col(0).sum() < 0) e.vectors.col(0) *= -1.0;
        return e;
    } catch (const NumericalError& err) {
        throw FitError(FitError::Kind::EigenFailure, err.what());
    }
}

}  // namespace

CandidateModel parse_candidate(std::string_view text) {
    const auto parts = split(text, ':');
    const auto family = parts[0];
    auto need = [&](std::size_t count) {
        if (parts.size() != count)
            throw InvalidArgument("candidate '" + std::string(text) + "' has the wrong number of fields");
    };
    if (family == "er") {
        need(1);
        return candidate::ErdosRenyi{};
    }
    if (family == "beta") {
        need(1);
        return candidate::Beta{};
    }
    if (family == "sbm") {
        need(2);
        return candidate::Sbm{parse_positive(parts[1], text)};
    }
    if (family == "dcsbm") {
        need(2);
        return candidate::Dcsbm{parse_positive(parts[1], text)};
    }
    if (family == "dcmm") {
        need(2);
        return candidate::Dcmm{parse_positive(parts[1], text)};
    }
    if (family == "lsm") {
        if (parts.size() == 2) return candidate::Lsm{parse_positive(parts[1], text), std::nullopt};
        need(3);
        const auto sig = split(parts[2], ',');
        if (sig.size() != 2) throw InvalidArgument("candidate '" + std::string(text) + "': signature is a,b");
        int a = 0, b = 0;
        auto [p1, e1] = std::from_chars(sig[0].data(), sig[0].data() + sig[0].size(), a);
        auto [p2, e2] = std::from_chars(sig[1].data(), sig[1].data() + sig[1].size(), b);
        if (e1 != std::errc() || e2 != std::errc() || a < 0 || b < 0)
            throw InvalidArgument("candidate '" + std::string(text) + "': bad signature");
        const int d = parse_positive(parts[1], text);
        if (a + b != d) throw InvalidArgument("candidate '" + std::string(text) + "': a + b must equal d");
        return candidate::Lsm{d, Signature{a, b}};
    }
    throw InvalidArgument("unknown candidate family '" + std::string(family) + "'");
}

std::string to_string(const CandidateModel& c) {
    return std::visit(
        [](const auto& m) -> std::string {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, candidate::ErdosRenyi>) return "er";
            else if constexpr (std::is_same_v<T, candidate::Beta>) return "beta";
            else if constexpr (std::is_same_v<T, candidate::Sbm>) return "sbm:" + std::to_string(m.k);
            else if constexpr (std::is_same_v<T, candidate::Dcsbm>) return "dcsbm:" + std::to_string(m.k);
            else if constexpr (std::is_same_v<T, candidate::Dcmm>) return "dcmm:" + std::to_string(m.k);
            else {
                std::string s = "lsm:" + std::to_string(m.d);
                if (m.signature)
                    s += ":" + std::to_string(m.signature->positive) + "," + std::to_string(m.signature->negative);
                return s;
            }
        },
        c);
}

std::string_view family_name(Family family) {
    switch (family) {
        case Family::ErdosRenyi: return "er";
        case Family::Beta: return "beta";
        case Family::Sbm: return "sbm";
        case Family::Dcsbm: return "dcsbm";
        case Family::Dcmm: return "dcmm";
        case Family::Lsm: return "lsm";
    }
    return "?";
}

std::vector<int> spectral_labels(const Matrix& a, int k, SeededStream& stream, Labeling labeling,
                                 int restarts) {
    const int n = static_cast<int>(a.rows());
    if (k == 1) return std::vector<int>(static_cast<std::size_t>(n), 0);
    const EigenPairs e = leading_pairs(a, k);
    const Matrix features = labeling == Labeling::Score ? score_ratios(e, n) : e.vectors;
    if (distinct_rows(features) < k)
        throw FitError(FitError::Kind::InvalidInput,
                       "spectral embedding has fewer distinct rows than communities");
    KMeansOptions opts;
    opts.restarts = restarts;
    return kmeans(features, k, stream, opts).labels;
}

FittedModel fit_er(const AdjacencyMatrix& a, const FitOptions& options) {
    const double n = a.size();
    const double p = a.dense().sum() / (n * (n - 1.0));
    return make_fit(Family::ErdosRenyi, estimate::ErdosRenyi{p}, Matrix::Constant(a.size(), a.size(), p),
                    options.clip);
}

double beta_mle_residual(const AdjacencyMatrix& a, const Vector& beta) {
    const int n = a.size();
    const auto d = degrees(a);
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        double expected = 0.0;
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            const double s = beta(i) + beta(j);
            expected += s >= 0 ? 1.0 / (1.0 + std::exp(-s)) : std::exp(s) / (1.0 + std::exp(s));
        }
        worst = std::max(worst, std::abs(static_cast<double>(d[i]) - expected));
    }
    return worst;
}

FittedModel fit_beta(const AdjacencyMatrix& a, const FitOptions& options) {
    const int n = a.size();
    const auto d = degrees(a);
    std::vector<int> bad;
    for (int i = 0; i < n; ++i)
        if (d[i] == 0 || d[i] == n - 1) bad.push_back(i);
    if (!bad.empty()) {
        std::string nodes;
        for (std::size_t t = 0; t < bad.size() && t < 10; ++t) nodes += (t ? ", " : "") + std::to_string(bad[t]);
        if (bad.size() > 10) nodes += ", ...";
        throw FitError(FitError::Kind::MleNonexistence,
                       "beta-model MLE does not exist: degree 0 or n-1 at node(s) " + nodes, bad);
    }

    Vector beta = Vector::Zero(n);
    if (options.beta_start == BetaStart::LogitDegree)
        for (int i = 0; i < n; ++i)
            beta(i) = 0.5 * std::log(static_cast<double>(d[i]) / static_cast<double>(n - 1 - d[i]));

    Vector log_d(n);
    for (int i = 0; i < n; ++i) log_d(i) = std::log(static_cast<double>(d[i]));

    // With s_i = sum_{j != i} 1 / (exp(-beta_j) + exp(beta_i)), the expected
    // degree is exp(beta_i) s_i, so the residual comes for free with the map.
    Vector e_pos(n), e_neg(n), s(n);
    double residual = 0.0;
    int it = 0;
    for (;; ++it) {
        e_pos = beta.array().exp();
        e_neg = (-beta.array()).exp();
        for (int i = 0; i < n; ++i) {
            double acc = 0.0;
            for (int j = 0; j < n; ++j)
                if (j != i) acc += 1.0 / (e_neg(j) + e_pos(i));
            s(i) = acc;
        }
        residual = 0.0;
        for (int i = 0; i < n; ++i)
            residual = std::max(residual, std::abs(static_cast<double>(d[i]) - e_pos(i) * s(i)));
        if (residual <= options.beta_tol) break;
        if (it >= options.beta_max_iter)
            throw FitError(FitError::Kind::NonConvergence,
                           "beta-model MLE did not converge in " + std::to_string(options.beta_max_iter) +
                               " iterations (residual " + std::to_string(residual) + ")");
        beta = log_d.array() - s.array().log();
    }

    Matrix p(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) p(i, j) = e_pos(i) / (e_neg(j) + e_pos(i));
    FitDiagnostics diag;
    diag.iterations = it;
    diag.residual = residual;
    return make_fit(Family::Beta, estimate::Beta{std::move(beta)}, p, options.clip, std::move(diag));
}

FittedModel fit_sbm(const AdjacencyMatrix& a, int k, SeededStream& stream, const FitOptions& options) {
    const int n = a.size();
    auto labels = labels_for(a, k, stream, options);
    const Matrix sums = block_sums(a, labels, k);
    std::vector<double> counts(static_cast<std::size_t>(k), 0.0);
    for (int l : labels) counts[l] += 1.0;

    FitDiagnostics diag;
    const double density = a.dense().sum() / (static_cast<double>(n) * (n - 1.0));
    Matrix b(k, k);
    for (int u = 0; u < k; ++u)
        for (int v = 0; v < k; ++v) {
            const double pairs = u == v ? counts[u] * (counts[u] - 1.0) : counts[u] * counts[v];
            if (pairs > 0) {
                b(u, v) = sums(u, v) / pairs;
            } else {
                b(u, v) = density;
                if (u <= v)
                    diag.warnings.push_back("block (" + std::to_string(u) + ", " + std::to_string(v) +
                                            ") has no node pairs; using the global density");
            }
        }

    Matrix p(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) p(i, j) = b(labels[i], labels[j]);
    return make_fit(Family::Sbm, estimate::Block{std::move(labels), std::move(b)}, p, options.clip,
                    std::move(diag));
}

FittedModel fit_dcsbm(const AdjacencyMatrix& a, int k, SeededStream& stream, const FitOptions& options) {
    const int n = a.size();
    auto labels = labels_for(a, k, stream, options);
    const Matrix sums = block_sums(a, labels, k);
    const auto d = degrees(a);

    std::vector<double> block_degree(static_cast<std::size_t>(k), 0.0);
    for (int i = 0; i < n; ++i) block_degree[labels[i]] += static_cast<double>(d[i]);

    FitDiagnostics diag;
    Vector theta(n);
    for (int i = 0; i < n; ++i) {
        const double total = block_degree[labels[i]];
        theta(i) = total > 0 ? static_cast<double>(d[i]) / total : 0.0;
    }
    for (int u = 0; u < k; ++u)
        if (block_degree[u] == 0)
            diag.warnings.push_back("community " + std::to_string(u) + " has no edges");

    Matrix p(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) p(i, j) = theta(i) * theta(j) * sums(labels[i], labels[j]);
    return make_fit(Family::Dcsbm, estimate::DegreeCorrectedBlock{std::move(labels), std::move(theta), sums}, p,
                    options.clip, std::move(diag));
}

FittedModel fit_lsm(const AdjacencyMatrix& a, int d, std::optional<Signature> signature,
                    const FitOptions& options) {
    return fit_lsm(a.dense(), d, signature, options);
}

FittedModel fit_lsm(const Matrix& a, int d, std::optional<Signature> signature, const FitOptions& options) {
    if (a.rows() != a.cols()) throw InvalidArgument("fit_lsm: matrix must be square");
    const int n = static_cast<int>(a.rows());
    if (d < 1 || d > n) throw InvalidArgument("latent dimension must lie in [1, n]");
    if (signature && (signature->positive < 0 || signature->negative < 0 ||
                      signature->positive + signature->negative != d))
        throw InvalidArgument("signature must split the latent dimension");

    EigenPairs all;
    try {
        all = sym_eigs(a, n);
    } catch (const NumericalError& err) {
        throw FitError(FitError::Kind::EigenFailure, err.what());
    }

    // Positive-eigenvalue coordinates first, matching I_{a,b}.
    std::vector<int> pos, neg;
    if (!signature) {
        for (int s = 0; s < d; ++s) (all.values(s) > 0 ? pos : neg).push_back(s);
    } else {
        for (int s = 0; s < n; ++s) {
            if (all.values(s) > 0 && static_cast<int>(pos.size()) < signature->positive) pos.push_back(s);
            if (all.values(s) < 0 && static_cast<int>(neg.size()) < signature->negative) neg.push_back(s);
        }
        if (static_cast<int>(pos.size()) < signature->positive || static_cast<int>(neg.size()) < signature->negative)
            throw FitError(FitError::Kind::InvalidInput, "not enough eigenvalues of the requested signs");
    }

    std::vector<int> order = pos;
    order.insert(order.end(), neg.begin(), neg.end());
    Matrix x(n, d);
    Vector values(d);
    Vector sign(d);
    for (int c = 0; c < d; ++c) {
        const int s = order[c];
        values(c) = all.values(s);
        sign(c) = c < static_cast<int>(pos.size()) ? 1.0 : -1.0;
        x.col(c) = all.vectors.col(s) * std::sqrt(std::abs(all.values(s)));
    }
    const Matrix p = x * sign.asDiagonal() * x.transpose();
    Signature used{static_cast<int>(pos.size()), static_cast<int>(neg.size())};
    return make_fit(Family::Lsm, estimate::LatentSpace{std::move(x), used, std::move(values)}, p,
                    options.clip);
}

namespace {

// Least-squares block matrix for fixed G = Theta Pi over off-diagonal pairs:
// sum_{i != j} g_ik g_jl (G B G^T)_ij = (G^T A G)_kl, a K^2 linear system.
Matrix solve_blocks(const Matrix& a, const Matrix& g) {
    const int k = static_cast<int>(g.cols());
    const int kk = k * k;
    const Matrix s = g.transpose() * g;
    Matrix lhs(kk, kk);
    for (int l = 0; l < k; ++l)
        for (int kr = 0; kr < k; ++kr)
            for (int l2 = 0; l2 < k; ++l2)
                for (int k2 = 0; k2 < k; ++k2) lhs(kr + k * l, k2 + k * l2) = s(kr, k2) * s(l, l2);
    for (Eigen::Index i = 0; i < g.rows(); ++i) {
        const Vector gi = g.row(i).transpose();
        const Matrix outer = gi * gi.transpose();
        for (int l = 0; l < k; ++l)
            for (int kr = 0; kr < k; ++kr)
                for (int l2 = 0; l2 < k; ++l2)
                    for (int k2 = 0; k2 < k; ++k2) lhs(kr + k * l, k2 + k * l2) -= outer(kr, k2) * outer(l, l2);
    }
    const Matrix rhs_m = g.transpose() * a * g;
    const Vector rhs = Eigen::Map<const Vector>(rhs_m.data(), kk);
    const Vector sol = lhs.colPivHouseholderQr().solve(rhs);
    Matrix b = Eigen::Map<const Matrix>(sol.data(), k, k);
    return 0.5 * (b + b.transpose());
}

}  // namespace

FittedModel fit_dcmm(const Matrix& input, int k, SeededStream& stream, const FitOptions& options) {
    const int n = static_cast<int>(input.rows());
    if (input.rows() != input.cols()) throw InvalidArgument("fit_dcmm: matrix must be square");
    if (k < 1 || k > n) throw InvalidArgument("fit_dcmm: need 1 <= K <= n");
    Matrix a = input;
    a.diagonal().setZero();

    const EigenPairs e = leading_pairs(a, k);
    FitDiagnostics diag;

    if (k == 1) {
        Vector theta = (std::sqrt(std::max(e.values(0), 0.0)) * e.vectors.col(0)).cwiseMax(0.0);
        const Matrix p = theta * theta.transpose();
        estimate::MixedMembership est{Matrix::Ones(n, 1), theta, Matrix::Ones(1, 1), {}};
        return make_fit(Family::Dcmm, std::move(est), p, options.clip, std::move(diag));
    }

    int zero_rows = 0;
    const Matrix ratios = score_ratios(e, n, &zero_rows);
    if (zero_rows > 0)
        diag.warnings.push_back(std::to_string(zero_rows) + " node(s) have a zero leading eigenvector entry");

    // Vertex hunting on k-means centres of the SCORE rows; the centres are
    // far less noisy than individual rows.
    const int distinct = distinct_rows(ratios);
    if (distinct < k) throw FitError(FitError::Kind::DegenerateSimplex, "degenerate simplex: too few distinct rows");
    const int clusters = std::min(options.vertex_clusters > 0 ? options.vertex_clusters : 3 * k, distinct);
    KMeansOptions km;
    km.restarts = options.kmeans_restarts;
    const Matrix centers = kmeans(ratios, clusters, stream, km).centers;

    std::vector<int> corner_rows;
    try {
        corner_rows = spa_vertices(centers, k);
    } catch (const NumericalError& err) {
        throw FitError(FitError::Kind::DegenerateSimplex, std::string("degenerate simplex: ") + err.what());
    }
    Matrix vertices(k, k - 1);
    for (int c = 0; c < k; ++c) vertices.row(c) = centers.row(corner_rows[c]);

    std::vector<int> corners;
    for (int c = 0; c < k; ++c) {
        Eigen::Index nearest = 0;
        (ratios.rowwise() - vertices.row(c)).rowwise().squaredNorm().minCoeff(&nearest);
        corners.push_back(static_cast<int>(nearest));
    }

    // Barycentric coordinates: [V^T; 1^T] w_i = [r_i; 1].
    Matrix system(k, k);
    system.topRows(k - 1) = vertices.transpose();
    system.row(k - 1).setOnes();
    Eigen::FullPivLU<Matrix> lu(system);
    if (lu.rank() < k || lu.rcond() < 1e-10)
        throw FitError(FitError::Kind::DegenerateSimplex, "degenerate simplex: vertices are affinely dependent");
    Matrix targets(k, n);
    targets.topRows(k - 1) = ratios.transpose();
    targets.row(k - 1).setOnes();
    Matrix weights = lu.solve(targets).transpose().cwiseMax(0.0);

    // b1(k) = (lambda_1 + sum_s lambda_s v_k(s)^2)^(-1/2) is the first
    // column of the map from memberships to eigenvectors once B has a unit
    // diagonal; dividing by it turns simplex weights into memberships.
    Vector b1(k);
    for (int c = 0; c < k; ++c) {
        double q = e.values(0);
        for (int s = 1; s < k; ++s) q += e.values(s) * vertices(c, s - 1) * vertices(c, s - 1);
        if (q <= 0) {
            diag.warnings.push_back("vertex " + std::to_string(c) + " has a nonpositive scale; clamped");
            q = 1e-12 * std::abs(e.values(0));
        }
        b1(c) = 1.0 / std::sqrt(q);
    }
    Matrix pi(n, k);
    for (int i = 0; i < n; ++i) {
        Vector row = weights.row(i).transpose().cwiseQuotient(b1);
        const double total = row.sum();
        if (total > 0)
            pi.row(i) = (row / total).transpose();
        else
            pi.row(i).setConstant(1.0 / k);
    }

    Matrix h(k, k);
    h.col(0).setOnes();
    h.rightCols(k - 1) = vertices;
    h = b1.asDiagonal() * h;
    Matrix b = h * e.values.asDiagonal() * h.transpose();

    Vector theta(n);
    for (int i = 0; i < n; ++i) {
        const double denom = pi.row(i).dot(b1);
        theta(i) = std::max(denom > 0 ? e.vectors(i, 0) / denom : 0.0, kThetaFloor);
    }

    // Alternating least squares on ||A - Theta Pi B Pi^T Theta||_F over
    // off-diagonal entries, memberships held fixed.
    for (int sweep = 0; sweep < options.als_sweeps; ++sweep) {
        b = solve_blocks(a, theta.asDiagonal() * pi);
        Matrix m = pi * b * pi.transpose();
        m.diagonal().setZero();
        const Vector num = a.cwiseProduct(m) * theta;
        const Vector den = m.cwiseAbs2() * theta.cwiseAbs2();
        for (int i = 0; i < n; ++i)
            if (den(i) > 0) theta(i) = std::max(num(i) / den(i), kThetaFloor);
    }
    diag.iterations = options.als_sweeps;

    // Unit-diagonal normalisation: B <- D^-1 B D^-1 with D = diag(sqrt(B_kk)),
    // absorbing D into memberships and theta.
    Vector scale(k);
    for (int c = 0; c < k; ++c) {
        if (b(c, c) <= 0) {
            diag.warnings.push_back("community " + std::to_string(c) + " has a nonpositive diagonal block");
            scale(c) = 1.0;
        } else {
            scale(c) = std::sqrt(b(c, c));
        }
    }
    pi = pi * scale.asDiagonal();
    for (int i = 0; i < n; ++i) {
        const double total = pi.row(i).sum();
        theta(i) *= total;
        pi.row(i) /= total;
    }
    b = scale.cwiseInverse().asDiagonal() * b * scale.cwiseInverse().asDiagonal();

    const Matrix g = theta.asDiagonal() * pi;
    const Matrix p = g * b * g.transpose();
    Matrix resid = a - p;
    resid.diagonal().setZero();
    diag.residual = resid.norm();
    return make_fit(Family::Dcmm, estimate::MixedMembership{std::move(pi), std::move(theta), std::move(b), corners},
                    p, options.clip, std::move(diag));
}

FittedModel fit_dcmm(const AdjacencyMatrix& a, int k, SeededStream& stream, const FitOptions& options) {
    return fit_dcmm(a.dense(), k, stream, options);
}

FittedModel fit(const AdjacencyMatrix& a, const CandidateModel& c, SeededStream& stream,
                const FitOptions& options) {
    return std::visit(
        [&](const auto& m) -> FittedModel {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, candidate::ErdosRenyi>) return fit_er(a, options);
            else if constexpr (std::is_same_v<T, candidate::Beta>) return fit_beta(a, options);
            else if constexpr (std::is_same_v<T, candidate::Sbm>) return fit_sbm(a, m.k, stream, options);
            else if constexpr (std::is_same_v<T, candidate::Dcsbm>) return fit_dcsbm(a, m.k, stream, options);
            else if constexpr (std::is_same_v<T, candidate::Dcmm>) return fit_dcmm(a, m.k, stream, options);
            else return fit_lsm(a, m.d, m.signature, options);
        },
        c);
}

}  // namespace netgof
