#pragma once

#include "netgof/graph.hpp"

namespace netgof {

/// Leading eigenpairs of a symmetric matrix, ordered by descending |value|.
/// Each eigenvector is sign-normalised so that its largest-magnitude entry
/// (first one on ties) is positive.
struct EigenPairs {
    Vector values;
    Matrix vectors;  // n x k, orthonormal columns

    int count() const noexcept { return static_cast<int>(values.size()); }
};

/// Top-k eigenpairs by magnitude. Backed by a dense tridiagonal QR solver,
/// O(n^3). Throws NumericalError if the solver does not converge.
EigenPairs sym_eigs(const Matrix& m, int k);

/// tr(M^3) for symmetric M, computed as sum_ij M_ij (M^2)_ij.
double trace_cubed(const Matrix& m);

}  // namespace netgof
