#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>

#include "qcap/channel.h"
#include "qcap/pauli.h"

namespace qcap {

/// Parameters of the two-qubit amplitude damping channel Phi_{x,y,z}.
///
/// The channel exists for 0 <= x <= 1, y, z >= 0 and 2y + z <= 1. Basis
/// states |0>,|1>,|2>,|3> are |00>,|01>,|10>,|11>.
struct ChannelParamsXYZ {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

/// Coefficients (g, h, k) of the degrading map Phi_{g,h,k}.
struct DegradingParams {
    double g = 0.0;
    double h = 0.0;
    double k = 0.0;
};

/// Slack applied to the strict inequalities of the degradable regime.
inline constexpr double kRegimeGuard = 1e-12;

/// Message naming the first violated validity constraint, if any.
std::optional<std::string> channel_params_violation(const ChannelParamsXYZ &p);

/// Message naming the first violated constraint of the degradable regime:
/// x, y, z >= 0, x < 1/2, 2y + z < 1, and a completely positive degrading
/// map (k >= 0, equivalently 2y(1 + g) + 2z <= 1).
std::optional<std::string> degradable_regime_violation(const ChannelParamsXYZ &p);

/// Throws RegimeError carrying `degradable_regime_violation`'s message.
void require_degradable_regime(const ChannelParamsXYZ &p);

/// (g, h, k) as raw formulas; no validity checks. Needs x < 1 and 2y + z < 1.
DegradingParams degrading_params(const ChannelParamsXYZ &p);

/// Parameters (1 - x, y, 1 - 2y - z) of the canonical complement.
ChannelParamsXYZ complement_params(const ChannelParamsXYZ &p);

/// Phi_a with coefficient order (a00, a01, a02, a03, a11, a12, a21, a22, a31):
///   K0 = sum_i a0i |i><i|,  K1 = a11|0><1| + a12|2><3|,
///   K2 = a21|0><2| + a22|1><3|,  K3 = a31|0><3|.
KrausChannel make_phi_a(const std::array<double, 9> &a);

KrausChannel make_phi_xyz(const ChannelParamsXYZ &p);

/// The degrading map G = Phi_{g,h,k} with G ∘ Phi_{x,y,z} = Phi_{x,y,z}^C.
///
/// RegimeError when x >= 1/2 or 2y + z >= 1 (or a parameter is negative);
/// ConsistencyError when the derived (g, h, k) do not form a channel.
KrausChannel make_degrading_map(const ChannelParamsXYZ &p);

using PauliDistribution = std::map<PauliString, double>;

/// Kraus operators sqrt(q_P) P for every P with q_P > 0.
KrausChannel make_pauli_channel(const PauliDistribution &probs);

/// D_{p,d} for d = 2^m: identity mass 1 - p(d^2-1)/d^2, the rest uniform.
PauliDistribution depolarizing_distribution(double p, unsigned num_qubits);
KrausChannel make_depolarizing(double p, unsigned num_qubits);

/// Qubit amplitude damping: sqrt(gamma)|0><1| and |0><0| + sqrt(1-gamma)|1><1|.
KrausChannel make_qubit_amplitude_damping(double gamma);

/// Kraus operators 1/sqrt2 and Z/sqrt2.
KrausChannel make_qubit_dephasing();

}  // namespace qcap
