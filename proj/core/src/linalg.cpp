#include "netgof/linalg.hpp"

#include "netgof/error.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace netgof {

EigenPairs sym_eigs(const Matrix& m, int k) {
    if (m.rows() != m.cols()) throw InvalidArgument("sym_eigs: matrix must be square");
    const int n = static_cast<int>(m.rows());
    if (k < 1 || k > n) throw InvalidArgument("sym_eigs: need 1 <= k <= n");

    Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success) throw NumericalError("sym_eigs: eigensolver did not converge");

    const Vector& all = solver.eigenvalues();
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    // Descending magnitude; positive first on exact magnitude ties.
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        const double ma = std::abs(all(a)), mb = std::abs(all(b));
        if (ma != mb) return ma > mb;
        return all(a) > all(b);
    });

    EigenPairs out;
    out.values.resize(k);
    out.vectors.resize(n, k);
    for (int s = 0; s < k; ++s) {
        out.values(s) = all(order[s]);
        Vector v = solver.eigenvectors().col(order[s]);
        Eigen::Index pivot = 0;
        double best = -1.0;
        for (Eigen::Index i = 0; i < v.size(); ++i) {
            if (std::abs(v(i)) > best + 1e-14) {
                best = std::abs(v(i));
                pivot = i;
            }
        }
        if (v(pivot) < 0) v = -v;
        out.vectors.col(s) = v;
    }
    return out;
}

double trace_cubed(const Matrix& m) {
    if (m.rows() != m.cols()) throw InvalidArgument("trace_cubed: matrix must be square");
    // Only the upper triangle of m * m is formed; m is assumed symmetric.
    Matrix sq = Matrix::Zero(m.rows(), m.cols());
    sq.triangularView<Eigen::Upper>() = m * m;
    double off = 0.0;
    double diag = 0.0;
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
        for (Eigen::Index i = 0; i < j; ++i) off += m(i, j) * sq(i, j);
        diag += m(j, j) * sq(j, j);
    }
    return 2.0 * off + diag;
}

}  // namespace netgof
