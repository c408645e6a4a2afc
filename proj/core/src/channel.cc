#include "qcap/channel.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "qcap/eigen.h"
#include "qcap/errors.h"
#include "qcap/pauli.h"

namespace qcap {

KrausChannel::KrausChannel(std::size_t in_dim, std::size_t out_dim, std::vector<ComplexMatrix> kraus_ops)
    : in_dim_(in_dim), out_dim_(out_dim), kraus_ops_(std::move(kraus_ops)) {
    if (in_dim == 0 || out_dim == 0) {
        throw ShapeError("channel dimensions must be positive");
    }
    if (kraus_ops_.empty()) {
        throw ShapeError("a channel needs at least one Kraus operator");
    }
    for (const auto &a : kraus_ops_) {
        if (a.rows() != out_dim || a.cols() != in_dim) {
            throw ShapeError("Kraus operator is " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                             ", expected " + std::to_string(out_dim) + "x" + std::to_string(in_dim));
        }
    }
}

KrausChannel::KrausChannel(std::vector<ComplexMatrix> kraus_ops)
    : KrausChannel(kraus_ops.empty() ? 0 : kraus_ops.front().cols(), kraus_ops.empty() ? 0 : kraus_ops.front().rows(),
                   std::move(kraus_ops)) {
}

KrausChannel KrausChannel::identity(std::size_t dim) {
    return KrausChannel(dim, dim, {ComplexMatrix::identity(dim)});
}

double KrausChannel::trace_preservation_error() const {
    ComplexMatrix sum(in_dim_);
    for (const auto &a : kraus_ops_) {
        sum += a.adjoint() * a;
    }
    return max_abs_diff(sum, ComplexMatrix::identity(in_dim_));
}

void KrausChannel::require_trace_preserving(double tol) const {
    const double err = trace_preservation_error();
    if (!(err <= tol)) {
        throw ParameterError("Kraus operators are not trace preserving: max |sum A^dag A - 1| = " +
                             std::to_string(err));
    }
}

ComplexMatrix apply(const KrausChannel &ch, const ComplexMatrix &rho) {
    if (!rho.is_square() || rho.rows() != ch.in_dim()) {
        throw ShapeError("apply: state is " + std::to_string(rho.rows()) + "x" + std::to_string(rho.cols()) +
                         ", channel input dimension is " + std::to_string(ch.in_dim()));
    }
    ComplexMatrix out(ch.out_dim());
    for (const auto &a : ch.kraus_ops()) {
        out += a * rho * a.adjoint();
    }
    return out;
}

KrausChannel complementary(const KrausChannel &ch) {
    const std::size_t n = ch.num_kraus();
    std::vector<ComplexMatrix> r;
    r.reserve(ch.out_dim());
    for (std::size_t mu = 0; mu < ch.out_dim(); ++mu) {
        ComplexMatrix rm(n, ch.in_dim());
        for (std::size_t j = 0; j < n; ++j) {
            const auto &a = ch.kraus_ops()[j];
            for (std::size_t c = 0; c < ch.in_dim(); ++c) {
                rm(j, c) = a(mu, c);
            }
        }
        r.push_back(std::move(rm));
    }
    return KrausChannel(ch.in_dim(), n, std::move(r));
}

ChoiMatrix choi(const KrausChannel &ch) {
    const std::size_t din = ch.in_dim();
    const std::size_t dout = ch.out_dim();
    ChoiMatrix c{din, dout, ComplexMatrix(din * dout)};
    // Block (i, j) is Phi(|i><j|) = sum_k A_k|i><j|A_k^dag, i.e. column i of A_k
    // times the conjugate of column j.
    for (const auto &a : ch.kraus_ops()) {
        for (std::size_t i = 0; i < din; ++i) {
            for (std::size_t j = 0; j < din; ++j) {
                for (std::size_t r = 0; r < dout; ++r) {
                    const Complex air = a(r, i);
                    if (air == Complex{}) {
                        continue;
                    }
                    for (std::size_t s = 0; s < dout; ++s) {
                        c.matrix(i * dout + r, j * dout + s) += air * std::conj(a(s, j));
                    }
                }
            }
        }
    }
    return c;
}

double choi_distance(const KrausChannel &a, const KrausChannel &b) {
    if (a.in_dim() != b.in_dim() || a.out_dim() != b.out_dim()) {
        throw ShapeError("choi_distance: channels have different dimensions");
    }
    return max_abs_diff(choi(a).matrix, choi(b).matrix);
}

bool channels_equal(const KrausChannel &a, const KrausChannel &b, double tol) {
    return choi_distance(a, b) <= tol;
}

ComplexMatrix choi_input_marginal(const ChoiMatrix &c) {
    ComplexMatrix out(c.in_dim);
    for (std::size_t i = 0; i < c.in_dim; ++i) {
        for (std::size_t j = 0; j < c.in_dim; ++j) {
            for (std::size_t r = 0; r < c.out_dim; ++r) {
                out(i, j) += c.matrix(i * c.out_dim + r, j * c.out_dim + r);
            }
        }
    }
    return out;
}

KrausChannel compose(const KrausChannel &outer, const KrausChannel &inner) {
    if (outer.in_dim() != inner.out_dim()) {
        throw ShapeError("compose: outer input dimension " + std::to_string(outer.in_dim()) +
                         " != inner output dimension " + std::to_string(inner.out_dim()));
    }
    std::vector<ComplexMatrix> ops;
    ops.reserve(outer.num_kraus() * inner.num_kraus());
    for (const auto &g : outer.kraus_ops()) {
        for (const auto &a : inner.kraus_ops()) {
            ops.push_back(g * a);
        }
    }
    return KrausChannel(inner.in_dim(), outer.out_dim(), std::move(ops));
}

KrausChannel conjugate_output(const KrausChannel &ch, const ComplexMatrix &u) {
    std::vector<ComplexMatrix> ops;
    for (const auto &a : ch.kraus_ops()) {
        ops.push_back(u * a);
    }
    return KrausChannel(ch.in_dim(), u.rows(), std::move(ops));
}

KrausChannel conjugate_input(const KrausChannel &ch, const ComplexMatrix &u) {
    std::vector<ComplexMatrix> ops;
    for (const auto &a : ch.kraus_ops()) {
        ops.push_back(a * u);
    }
    return KrausChannel(u.cols(), ch.out_dim(), std::move(ops));
}

KrausChannel mix(std::span<const KrausChannel> channels, std::span<const double> weights) {
    if (channels.empty() || channels.size() != weights.size()) {
        throw ShapeError("mix: need one weight per channel");
    }
    std::vector<ComplexMatrix> ops;
    for (std::size_t i = 0; i < channels.size(); ++i) {
        if (weights[i] < 0.0) {
            throw ParameterError("mix: negative weight");
        }
        if (channels[i].in_dim() != channels[0].in_dim() || channels[i].out_dim() != channels[0].out_dim()) {
            throw ShapeError("mix: channels have different dimensions");
        }
        if (weights[i] == 0.0) {
            continue;
        }
        const double s = std::sqrt(weights[i]);
        for (const auto &a : channels[i].kraus_ops()) {
            ops.push_back(a * s);
        }
    }
    if (ops.empty()) {
        throw ParameterError("mix: all weights are zero");
    }
    return KrausChannel(channels[0].in_dim(), channels[0].out_dim(), std::move(ops));
}

KrausChannel tensor(const KrausChannel &a, const KrausChannel &b) {
    std::vector<ComplexMatrix> ops;
    for (const auto &ka : a.kraus_ops()) {
        for (const auto &kb : b.kraus_ops()) {
            ops.push_back(kron(ka, kb));
        }
    }
    return KrausChannel(a.in_dim() * b.in_dim(), a.out_dim() * b.out_dim(), std::move(ops));
}

ComplexMatrix random_density_matrix(std::size_t dim, std::mt19937_64 &rng) {
    std::uniform_int_distribution<int> grid(-1000, 1000);
    ComplexMatrix m(dim);
    for (auto &v : m.data()) {
        v = Complex(grid(rng) / 1000.0, grid(rng) / 1000.0);
    }
    ComplexMatrix rho = m * m.adjoint();
    const double tr = rho.trace().real();
    if (tr == 0.0) {
        return ComplexMatrix::identity(dim) * (1.0 / static_cast<double>(dim));
    }
    rho *= 1.0 / tr;
    // Exact hermiticity after the division.
    for (std::size_t r = 0; r < dim; ++r) {
        rho(r, r) = rho(r, r).real();
        for (std::size_t c = r + 1; c < dim; ++c) {
            rho(c, r) = std::conj(rho(r, c));
        }
    }
    return rho;
}

std::vector<double> random_probability_vector(std::size_t dim, std::mt19937_64 &rng) {
    std::exponential_distribution<double> e(1.0);
    std::vector<double> p(dim);
    double sum = 0.0;
    for (auto &v : p) {
        v = e(rng);
        sum += v;
    }
    for (auto &v : p) {
        v /= sum;
    }
    return p;
}

KrausChannel random_channel(std::size_t in_dim, std::size_t out_dim, std::size_t num_kraus, std::mt19937_64 &rng) {
    const std::size_t rows = out_dim * num_kraus;
    if (in_dim == 0 || rows < in_dim) {
        throw ShapeError("random_channel needs out_dim * num_kraus >= in_dim > 0");
    }
    std::normal_distribution<double> g(0.0, 1.0);
    ComplexMatrix v(rows, in_dim);
    for (std::size_t c = 0; c < in_dim; ++c) {
        for (;;) {
            for (std::size_t r = 0; r < rows; ++r) {
                v(r, c) = Complex(g(rng), g(rng));
            }
            for (int pass = 0; pass < 2; ++pass) {
                for (std::size_t k = 0; k < c; ++k) {
                    Complex dot = 0.0;
                    for (std::size_t r = 0; r < rows; ++r) {
                        dot += std::conj(v(r, k)) * v(r, c);
                    }
                    for (std::size_t r = 0; r < rows; ++r) {
                        v(r, c) -= dot * v(r, k);
                    }
                }
            }
            double norm = 0.0;
            for (std::size_t r = 0; r < rows; ++r) {
                norm += std::norm(v(r, c));
            }
            if (norm > 1e-6) {
                const double s = 1.0 / std::sqrt(norm);
                for (std::size_t r = 0; r < rows; ++r) {
                    v(r, c) *= s;
                }
                break;
            }
        }
    }
    std::vector<ComplexMatrix> ops(num_kraus, ComplexMatrix(out_dim, in_dim));
    for (std::size_t k = 0; k < num_kraus; ++k) {
        for (std::size_t r = 0; r < out_dim; ++r) {
            for (std::size_t c = 0; c < in_dim; ++c) {
                ops[k](r, c) = v(k * out_dim + r, c);
            }
        }
    }
    return KrausChannel(in_dim, out_dim, std::move(ops));
}

bool is_density_matrix(const ComplexMatrix &rho, double tol_trace, double tol_eig) {
    if (!rho.is_hermitian(1e-10)) {
        return false;
    }
    if (std::abs(rho.trace() - 1.0) > tol_trace) {
        return false;
    }
    const auto ev = hermitian_eigenvalues(rho);
    return ev.back() >= -tol_eig;
}

bool check_covariance(const KrausChannel &ch, int trials, std::uint64_t seed) {
    if (ch.in_dim() != ch.out_dim()) {
        return false;
    }
    const unsigned m = qubits_for_dimension(ch.in_dim());
    std::vector<ComplexMatrix> lambdas;
    for (std::uint32_t z = 0; z < (1u << m); ++z) {
        lambdas.push_back(pauli_matrix(PauliString{static_cast<std::uint8_t>(m), 0, z}));
    }
    std::mt19937_64 rng(seed);
    for (int t = 0; t < trials; ++t) {
        const ComplexMatrix rho = random_density_matrix(ch.in_dim(), rng);
        const ComplexMatrix out = apply(ch, rho);
        for (const auto &l : lambdas) {
            if (max_abs_diff(apply(ch, l * rho * l), l * out * l) > 1e-9) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace qcap
