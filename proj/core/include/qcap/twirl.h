#pragma once

#include <array>
#include <vector>

#include "qcap/channel.h"
#include "qcap/families.h"
#include "qcap/pauli.h"

namespace qcap {

/// A probability distribution over all 4^m Pauli strings.
///
/// Entries in [-1e-12, 0) are clamped to 0 and entries below 1e-14 are stored
/// as exact zeros. The total must be 1 within 1e-10.
class PauliChannel {
   public:
    PauliChannel(unsigned num_qubits, PauliDistribution probs);

    unsigned num_qubits() const {
        return num_qubits_;
    }
    /// Every string of the m-qubit group appears as a key.
    const PauliDistribution &probs() const {
        return probs_;
    }
    double probability(const PauliString &p) const;
    /// Total mass on each weight class 0..m.
    std::vector<double> weight_class_masses() const;
    KrausChannel to_kraus() const;

   private:
    unsigned num_qubits_;
    PauliDistribution probs_;
};

/// Pauli twirl via the trace formula q_P = sum_A |tr(P A) / 2^m|^2.
PauliChannel pauli_twirl(const KrausChannel &ch, unsigned num_qubits);

/// Pauli twirl as the literal 4^m-term conjugation average, materialized as
/// the Kraus set {P A P / 2^m}. Limited to m <= 3.
KrausChannel pauli_twirl_bruteforce(const KrausChannel &ch, unsigned num_qubits);

/// The six single-qubit unitaries 1, H_XY, H_XZ, H_YZ, H_XZ H_XY, H_XY H_XZ
/// with H_ab = (a + b)/sqrt2. Conjugation by them permutes {X, Y, Z} (up to
/// sign) through all of S_3.
std::array<ComplexMatrix, 6> clifford_b_set();

/// Localized Clifford twirl of a two-qubit Pauli channel, in closed form:
/// the identity mass is kept, and masses are averaged within the classes
/// {P⊗1}, {1⊗P} and {P⊗P'} for P, P' in {X, Y, Z}.
PauliChannel local_clifford_twirl(const PauliChannel &channel);

/// The same twirl as the literal average over B⊗1 and then 1⊗B, using
/// rho -> U^dag N(U rho U^dag) U; produces 36 |Kraus| operators.
KrausChannel local_clifford_twirl_bruteforce(const KrausChannel &channel);

/// Closed-form weight-class masses of pauli_twirl(Phi_{x,y,z}):
///   P0 = ((1 + 2 s1 + s2)/4)^2
///   P1 = 2((1 - s2)/4)^2 + ((sqrt x + sqrt y)/2)^2
///   P2 = ((1 - 2 s1 + s2)/4)^2 + ((sqrt x - sqrt y)/2)^2 + z/4
/// with s1 = sqrt(1 - x), s2 = sqrt(1 - 2y - z).
std::array<double, 3> phi_xyz_twirl_weight_masses(const ChannelParamsXYZ &params);

}  // namespace qcap
