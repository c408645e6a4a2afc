#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "qcap/channel.h"
#include "qcap/families.h"

namespace qcap {

/// eta(z) = -z log2 z with eta(0) = 0. Values down to -1e-12 are clamped to 0;
/// anything outside [-1e-12, 1 + 1e-12] raises DomainError.
double eta(double z);

/// d eta / dz = -(1 + ln z) / ln 2, with z clamped at 1e-300.
double eta_derivative(double z);

/// Shannon entropy (bits) of a probability vector.
double shannon_entropy(std::span<const double> probs);

/// S(rho) = -tr(rho log2 rho) = sum_i eta(lambda_i).
double von_neumann_entropy(const ComplexMatrix &rho);

/// S(Phi(rho)) - S(Phi^C(rho)).
double coherent_information(const KrausChannel &ch, const ComplexMatrix &rho);

/// A diagonal density matrix, stored as its probability vector.
class DiagonalState {
   public:
    explicit DiagonalState(std::vector<double> probs);
    static DiagonalState uniform(std::size_t dim);

    std::span<const double> probs() const {
        return probs_;
    }
    ComplexMatrix matrix() const;

   private:
    std::vector<double> probs_;
};

/// Coherent information of Phi_{x,y,z} on diag(p1, p2, p3, p4), written as a
/// signed sum of eta over linear forms of p. Concave on the simplex whenever
/// the channel is degradable.
class DiagonalObjective {
   public:
    explicit DiagonalObjective(const ChannelParamsXYZ &params);

    double value(std::span<const double, 4> p) const;
    std::array<double, 4> gradient(std::span<const double, 4> p) const;

   private:
    struct Term {
        double sign;
        std::array<double, 4> coeff;
    };
    std::vector<Term> terms_;
};

struct OptimizerConfig {
    double tol = 1e-9;
    int max_iter = 50000;
    int starts = 16;
    std::uint64_t seed = 1;
};

struct CapacityResult {
    double value = 0.0;
    DiagonalState argmax = DiagonalState::uniform(4);
    int iterations = 0;
    bool converged = false;
};

/// One exponentiated-gradient ascent run from `start`. The objective sequence
/// is nondecreasing: a step that would lower it is halved until it does not.
/// If `trace` is non-null the objective after every iteration is appended.
CapacityResult maximize_from(const DiagonalObjective &objective, std::array<double, 4> start,
                             const OptimizerConfig &cfg, std::vector<double> *trace = nullptr);

/// Quantum capacity of a degradable Phi_{x,y,z}: the maximum of its coherent
/// information over diagonal inputs, by multi-start mirror ascent.
/// RegimeError outside the degradable regime.
CapacityResult capacity_diagonal_program(const ChannelParamsXYZ &params, const OptimizerConfig &cfg = {});

struct DiagonalSufficiencyReport {
    double diagonal_optimum = 0.0;
    /// max over samples of I_coh(rho) - diagonal_optimum.
    double max_excess = 0.0;
    /// min over samples of I_coh(dephased rho) - I_coh(rho).
    double min_dephasing_gain = 0.0;
    bool holds = false;
};

/// Samples seeded non-diagonal states and compares their coherent information
/// with the diagonal optimum (tolerance 1e-8). Also checks that completely
/// dephasing the input never lowers the coherent information (tolerance 1e-10).
DiagonalSufficiencyReport diagonal_sufficiency_report(const ChannelParamsXYZ &params, int trials, std::uint64_t seed,
                                                      const OptimizerConfig &cfg = {});

bool verify_diagonal_sufficiency(const ChannelParamsXYZ &params, int trials, std::uint64_t seed);

}  // namespace qcap
