#pragma once

#include <cstddef>
#include <vector>

#include "qcap/matrix.h"

namespace qcap {

/// Dense real symmetric matrix, row-major, used by the Jacobi solver.
struct RealSymmetric {
    std::size_t dim = 0;
    std::vector<double> entries;

    double &operator()(std::size_t r, std::size_t c) {
        return entries[r * dim + c];
    }
    double operator()(std::size_t r, std::size_t c) const {
        return entries[r * dim + c];
    }
};

struct SymmetricEigen {
    std::vector<double> values;        // unsorted, as the sweeps leave them
    std::vector<double> vectors;       // column k is the eigenvector of values[k]
    int sweeps = 0;
};

/// Cyclic Jacobi rotations. Throws NumericalError if the off-diagonal norm
/// has not vanished after `max_sweeps` sweeps.
SymmetricEigen jacobi_eigen(RealSymmetric a, int max_sweeps = 100);

/// The 2d x 2d real symmetric matrix [[Re H, -Im H], [Im H, Re H]]; each
/// eigenvalue of H appears in it twice.
RealSymmetric real_embedding(const ComplexMatrix &h);

/// Eigenvalues of a Hermitian matrix, descending.
///
/// Requires max |H - H^dag| <= 1e-10 (PreconditionError otherwise).
std::vector<double> hermitian_eigenvalues(const ComplexMatrix &h);

}  // namespace qcap
