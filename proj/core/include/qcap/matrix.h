#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace qcap {

using Complex = std::complex<double>;

/// Dense complex matrix, row-major. Holds states, Kraus operators and Choi
/// matrices. Kraus operators of non-square channels are rectangular, so the
/// shape is rows x cols rather than a single dimension.
class ComplexMatrix {
   public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);
    /// Square zero matrix.
    explicit ComplexMatrix(std::size_t dim) : ComplexMatrix(dim, dim) {
    }
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(std::size_t dim);
    static ComplexMatrix diagonal(std::span<const double> diag);
    static ComplexMatrix diagonal(std::span<const Complex> diag);
    /// |i><j| in a dim-dimensional space.
    static ComplexMatrix basis(std::size_t dim, std::size_t i, std::size_t j);

    std::size_t rows() const {
        return rows_;
    }
    std::size_t cols() const {
        return cols_;
    }
    bool is_square() const {
        return rows_ == cols_;
    }
    /// Side length of a square matrix.
    std::size_t dim() const;

    Complex &operator()(std::size_t r, std::size_t c) {
        return data_[r * cols_ + c];
    }
    const Complex &operator()(std::size_t r, std::size_t c) const {
        return data_[r * cols_ + c];
    }
    std::span<const Complex> data() const {
        return data_;
    }
    std::span<Complex> data() {
        return data_;
    }

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    Complex trace() const;
    double max_abs() const;
    bool is_diagonal(double tol = 0.0) const;
    bool is_hermitian(double tol = 1e-10) const;

    ComplexMatrix &operator+=(const ComplexMatrix &other);
    ComplexMatrix &operator-=(const ComplexMatrix &other);
    ComplexMatrix &operator*=(Complex scale);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b) {
        return a += b;
    }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b) {
        return a -= b;
    }
    friend ComplexMatrix operator*(ComplexMatrix a, Complex s) {
        return a *= s;
    }
    friend ComplexMatrix operator*(Complex s, ComplexMatrix a) {
        return a *= s;
    }
    friend ComplexMatrix operator-(ComplexMatrix a) {
        return a *= -1.0;
    }

    bool operator==(const ComplexMatrix &other) const = default;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b);

/// a ⊗ b with a as the leading (most significant) factor.
ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);

/// Largest entrywise modulus of a - b.
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);

/// Diagonal entries (real parts) of a square matrix.
std::vector<double> real_diagonal(const ComplexMatrix &m);

/// Raises ShapeError unless a and b have the same shape.
void require_same_shape(const ComplexMatrix &a, const ComplexMatrix &b, const char *what);

}  // namespace qcap
