#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "qcap/matrix.h"

namespace qcap {

/// A linear map rho -> sum_k A_k rho A_k^dag given by its Kraus operators.
///
/// Construction checks shapes only. Trace preservation is a separate check
/// because channels are also built from intermediate operator lists.
class KrausChannel {
   public:
    KrausChannel(std::size_t in_dim, std::size_t out_dim, std::vector<ComplexMatrix> kraus_ops);
    /// Square channel; dimensions are taken from the first operator.
    explicit KrausChannel(std::vector<ComplexMatrix> kraus_ops);

    static KrausChannel identity(std::size_t dim);

    std::size_t in_dim() const {
        return in_dim_;
    }
    std::size_t out_dim() const {
        return out_dim_;
    }
    std::span<const ComplexMatrix> kraus_ops() const {
        return kraus_ops_;
    }
    std::size_t num_kraus() const {
        return kraus_ops_.size();
    }

    /// max |sum_k A_k^dag A_k - 1|.
    double trace_preservation_error() const;
    bool is_trace_preserving(double tol = 1e-10) const {
        return trace_preservation_error() <= tol;
    }
    /// Throws ParameterError unless trace preserving within `tol`.
    void require_trace_preserving(double tol = 1e-10) const;

   private:
    std::size_t in_dim_;
    std::size_t out_dim_;
    std::vector<ComplexMatrix> kraus_ops_;
};

/// sum_ij |i><j| ⊗ Phi(|i><j|), of dimension in_dim * out_dim.
struct ChoiMatrix {
    std::size_t in_dim = 0;
    std::size_t out_dim = 0;
    ComplexMatrix matrix;
};

/// Channels are equal when their Choi matrices agree within this max-norm.
inline constexpr double kChannelEqualityTol = 1e-9;

ComplexMatrix apply(const KrausChannel &ch, const ComplexMatrix &rho);

/// Canonical complement: row j of R_mu is row mu of A_j. The result maps
/// in_dim to num_kraus dimensions and has out_dim Kraus operators.
KrausChannel complementary(const KrausChannel &ch);

ChoiMatrix choi(const KrausChannel &ch);

double choi_distance(const KrausChannel &a, const KrausChannel &b);
bool channels_equal(const KrausChannel &a, const KrausChannel &b, double tol = kChannelEqualityTol);

/// Partial trace of a Choi matrix over its output factor.
ComplexMatrix choi_input_marginal(const ChoiMatrix &c);

/// outer ∘ inner, with every product G_k A_l kept as its own Kraus operator.
KrausChannel compose(const KrausChannel &outer, const KrausChannel &inner);

/// rho -> U Phi(rho) U^dag.
KrausChannel conjugate_output(const KrausChannel &ch, const ComplexMatrix &u);
/// rho -> Phi(U rho U^dag).
KrausChannel conjugate_input(const KrausChannel &ch, const ComplexMatrix &u);
/// sum_i w_i Phi_i, realized as the union of sqrt(w_i)-scaled Kraus sets.
KrausChannel mix(std::span<const KrausChannel> channels, std::span<const double> weights);
KrausChannel tensor(const KrausChannel &a, const KrausChannel &b);

/// rho = M M^dag / tr(M M^dag) with M's entries drawn from the grid
/// {-1, -0.999, ..., 1} + i{...}.
ComplexMatrix random_density_matrix(std::size_t dim, std::mt19937_64 &rng);
/// Diagonal state with Dirichlet(1,...,1) weights.
std::vector<double> random_probability_vector(std::size_t dim, std::mt19937_64 &rng);
/// Channel whose stacked Kraus operators form a random isometry
/// (Gram-Schmidt on Gaussian columns).
KrausChannel random_channel(std::size_t in_dim, std::size_t out_dim, std::size_t num_kraus, std::mt19937_64 &rng);

/// Hermitian, unit trace and eigenvalues >= -tol_eig.
bool is_density_matrix(const ComplexMatrix &rho, double tol_trace = 1e-10, double tol_eig = 1e-9);

/// True iff Phi(L rho L) = L Phi(rho) L within 1e-9 for every L in {1,Z}^m
/// and `trials` seeded random density matrices.
bool check_covariance(const KrausChannel &ch, int trials, std::uint64_t seed);

}  // namespace qcap
