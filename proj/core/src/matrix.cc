#include "qcap/matrix.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "qcap/errors.h"

namespace qcap {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {
    if (rows == 0 || cols == 0) {
        throw ShapeError("matrix dimensions must be positive");
    }
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (rows == 0 || cols == 0) {
        throw ShapeError("matrix dimensions must be positive");
    }
    if (data_.size() != rows * cols) {
        throw ShapeError("entry count " + std::to_string(data_.size()) + " does not match " +
                         std::to_string(rows) + "x" + std::to_string(cols));
    }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    if (rows_ == 0 || cols_ == 0) {
        throw ShapeError("matrix dimensions must be positive");
    }
    data_.reserve(rows_ * cols_);
    for (const auto &row : rows) {
        if (row.size() != cols_) {
            throw ShapeError("ragged matrix literal");
        }
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> diag) {
    ComplexMatrix m(diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) {
        m(i, i) = diag[i];
    }
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> diag) {
    ComplexMatrix m(diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) {
        m(i, i) = diag[i];
    }
    return m;
}

ComplexMatrix ComplexMatrix::basis(std::size_t dim, std::size_t i, std::size_t j) {
    if (i >= dim || j >= dim) {
        throw ShapeError("basis index out of range");
    }
    ComplexMatrix m(dim);
    m(i, j) = 1.0;
    return m;
}

std::size_t ComplexMatrix::dim() const {
    if (!is_square()) {
        throw ShapeError("dim() of a non-square " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                         " matrix");
    }
    return rows_;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            out(c, r) = (*this)(r, c);
        }
    }
    return out;
}

Complex ComplexMatrix::trace() const {
    Complex t = 0.0;
    for (std::size_t i = 0, n = dim(); i < n; ++i) {
        t += (*this)(i, i);
    }
    return t;
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const auto &v : data_) {
        m = std::max(m, std::abs(v));
    }
    return m;
}

bool ComplexMatrix::is_diagonal(double tol) const {
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (r != c && std::abs((*this)(r, c)) > tol) {
                return false;
            }
        }
    }
    return true;
}

bool ComplexMatrix::is_hermitian(double tol) const {
    if (!is_square()) {
        return false;
    }
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = r; c < cols_; ++c) {
            if (std::abs((*this)(r, c) - std::conj((*this)(c, r))) > tol) {
                return false;
            }
        }
    }
    return true;
}

void require_same_shape(const ComplexMatrix &a, const ComplexMatrix &b, const char *what) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw ShapeError(std::string(what) + ": shape " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()));
    }
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &other) {
    require_same_shape(*this, other, "matrix addition");
    for (std::size_t k = 0; k < data_.size(); ++k) {
        data_[k] += other.data_[k];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &other) {
    require_same_shape(*this, other, "matrix subtraction");
    for (std::size_t k = 0; k < data_.size(); ++k) {
        data_[k] -= other.data_[k];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(Complex scale) {
    for (auto &v : data_) {
        v *= scale;
    }
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.cols() != b.rows()) {
        throw ShapeError("matrix product: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                         " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    }
    ComplexMatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex av = a(r, k);
            if (av == Complex{}) {
                continue;
            }
            for (std::size_t c = 0; c < b.cols(); ++c) {
                out(r, c) += av * b(k, c);
            }
        }
    }
    return out;
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ar = 0; ar < a.rows(); ++ar) {
        for (std::size_t ac = 0; ac < a.cols(); ++ac) {
            const Complex av = a(ar, ac);
            for (std::size_t br = 0; br < b.rows(); ++br) {
                for (std::size_t bc = 0; bc < b.cols(); ++bc) {
                    out(ar * b.rows() + br, ac * b.cols() + bc) = av * b(br, bc);
                }
            }
        }
    }
    return out;
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_shape(a, b, "max_abs_diff");
    double m = 0.0;
    for (std::size_t k = 0; k < a.data().size(); ++k) {
        m = std::max(m, std::abs(a.data()[k] - b.data()[k]));
    }
    return m;
}

std::vector<double> real_diagonal(const ComplexMatrix &m) {
    std::vector<double> d(m.dim());
    for (std::size_t i = 0; i < d.size(); ++i) {
        d[i] = m(i, i).real();
    }
    return d;
}

}  // namespace qcap
