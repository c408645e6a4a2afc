#include "qcap/eigen.h"

#include <algorithm>
#include <cmath>
#include <functional>

#include "qcap/errors.h"

namespace qcap {

namespace {

double off_diagonal_norm2(const RealSymmetric &a) {
    double s = 0.0;
    for (std::size_t r = 0; r < a.dim; ++r) {
        for (std::size_t c = r + 1; c < a.dim; ++c) {
            s += a(r, c) * a(r, c);
        }
    }
    return s;
}

double frobenius_norm2(const RealSymmetric &a) {
    double s = 0.0;
    for (double v : a.entries) {
        s += v * v;
    }
    return s;
}

}  // namespace

SymmetricEigen jacobi_eigen(RealSymmetric a, int max_sweeps) {
    const std::size_t n = a.dim;
    SymmetricEigen out;
    out.vectors.assign(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        out.vectors[i * n + i] = 1.0;
    }
    const double scale = frobenius_norm2(a);
    const double threshold = 1e-30 * std::max(scale, 1e-300);

    int sweep = 0;
    while (off_diagonal_norm2(a) > threshold) {
        if (sweep == max_sweeps) {
            throw NumericalError("Jacobi eigensolver did not converge after " + std::to_string(max_sweeps) +
                                 " sweeps");
        }
        ++sweep;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) {
                    continue;
                }
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a(k, p);
                    const double akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a(p, k);
                    const double aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                for (std::size_t k = 0; k < n; ++k) {
                    double &vkp = out.vectors[k * n + p];
                    double &vkq = out.vectors[k * n + q];
                    const double vp = vkp;
                    const double vq = vkq;
                    vkp = c * vp - s * vq;
                    vkq = s * vp + c * vq;
                }
            }
        }
    }
    out.values.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.values[i] = a(i, i);
    }
    out.sweeps = sweep;
    return out;
}

RealSymmetric real_embedding(const ComplexMatrix &h) {
    const std::size_t d = h.dim();
    RealSymmetric a{2 * d, std::vector<double>(4 * d * d)};
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) {
            // Symmetrize so round-off in H does not break the embedding's symmetry.
            const Complex v = 0.5 * (h(r, c) + std::conj(h(c, r)));
            a(r, c) = v.real();
            a(r + d, c + d) = v.real();
            a(r, c + d) = -v.imag();
            a(r + d, c) = v.imag();
        }
    }
    return a;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix &h) {
    if (!h.is_square()) {
        throw ShapeError("hermitian_eigenvalues needs a square matrix");
    }
    if (!h.is_hermitian(1e-10)) {
        throw PreconditionError("hermitian_eigenvalues: matrix is not Hermitian within 1e-10");
    }
    auto eig = jacobi_eigen(real_embedding(h));
    std::sort(eig.values.begin(), eig.values.end(), std::greater<>());
    std::vector<double> out(h.dim());
    for (std::size_t i = 0; i < out.size(); ++i) {
        // Each value appears twice in the embedding; average the pair.
        out[i] = 0.5 * (eig.values[2 * i] + eig.values[2 * i + 1]);
    }
    return out;
}

}  // namespace qcap
