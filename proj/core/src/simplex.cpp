#include "netgof/simplex.hpp"

#include "netgof/error.hpp"

#include <cmath>

namespace netgof {

std::vector<int> spa_vertices(const Matrix& points, int k) {
    const Eigen::Index n = points.rows();
    if (k < 1) throw InvalidArgument("spa_vertices: K must be positive");
    if (n < k) throw InvalidArgument("spa_vertices: fewer rows than vertices");
    if (points.size() == 0 || points.cwiseAbs().maxCoeff() == 0.0)
        throw NumericalError("spa_vertices: degenerate all-zero input");

    Matrix residual(n, points.cols() + 1);
    residual.col(0).setOnes();
    residual.rightCols(points.cols()) = points;
    const double scale = residual.rowwise().norm().maxCoeff();

    std::vector<int> picked;
    picked.reserve(static_cast<std::size_t>(k));
    for (int step = 0; step < k; ++step) {
        Eigen::Index arg = 0;
        const double norm2 = residual.rowwise().squaredNorm().maxCoeff(&arg);
        if (norm2 <= 1e-24 * scale * scale)
            throw NumericalError("spa_vertices: rows span fewer than K vertices");
        picked.push_back(static_cast<int>(arg));
        const Vector u = residual.row(arg).transpose() / std::sqrt(norm2);
        residual -= (residual * u) * u.transpose();
    }
    return picked;
}

}  // namespace netgof
