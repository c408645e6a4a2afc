#include "qcap/twirl.h"

#include <cmath>
#include <string>

#include "qcap/errors.h"

namespace qcap {

namespace {

constexpr double kClampTol = 1e-12;
constexpr double kZeroTol = 1e-14;
constexpr double kSumTol = 1e-10;

// Pauli letter index in {X, Y, Z} -> 1, 2, 3 as used by from_index.
PauliString two_qubit(unsigned a, unsigned b) {
    return PauliString::from_index(2, a * 4 + b);
}

}  // namespace

PauliChannel::PauliChannel(unsigned num_qubits, PauliDistribution probs) : num_qubits_(num_qubits) {
    for (const auto &s : all_paulis(num_qubits)) {
        probs_[s] = 0.0;
    }
    double total = 0.0;
    for (auto [p, q] : probs) {
        if (p.num_qubits != num_qubits) {
            throw ShapeError("Pauli channel on " + std::to_string(num_qubits) + " qubits got string " + p.to_text());
        }
        if (!(q >= -kClampTol)) {
            throw ParameterError("negative Pauli probability on " + p.to_text());
        }
        if (q < kZeroTol) {
            q = 0.0;
        }
        probs_[p] = q;
        total += q;
    }
    if (std::abs(total - 1.0) > kSumTol) {
        throw ParameterError("Pauli probabilities sum to " + std::to_string(total));
    }
}

double PauliChannel::probability(const PauliString &p) const {
    const auto it = probs_.find(p);
    if (it == probs_.end()) {
        throw ShapeError("string " + p.to_text() + " not in this channel's Pauli group");
    }
    return it->second;
}

std::vector<double> PauliChannel::weight_class_masses() const {
    std::vector<double> masses(num_qubits_ + 1, 0.0);
    for (const auto &[p, q] : probs_) {
        masses[p.weight()] += q;
    }
    return masses;
}

KrausChannel PauliChannel::to_kraus() const {
    // make_pauli_channel insists on 1e-12 normalization; rescale the stored
    // distribution, which is only guaranteed to 1e-10.
    double total = 0.0;
    for (const auto &[p, q] : probs_) {
        total += q;
    }
    PauliDistribution d;
    for (const auto &[p, q] : probs_) {
        d[p] = q / total;
    }
    return make_pauli_channel(d);
}

PauliChannel pauli_twirl(const KrausChannel &ch, unsigned num_qubits) {
    const std::size_t dim = std::size_t{1} << num_qubits;
    if (ch.in_dim() != dim || ch.out_dim() != dim) {
        throw ShapeError("pauli_twirl: channel is not square on " + std::to_string(num_qubits) + " qubits");
    }
    PauliDistribution q;
    const auto paulis = all_paulis(num_qubits);
    for (const auto &p : paulis) {
        q[p] = 0.0;
    }
    for (const auto &a : ch.kraus_ops()) {
        const auto coeffs = pauli_expand(a, num_qubits);
        for (const auto &[p, c] : coeffs) {
            // c_P = tr(P A)/2^m because P is Hermitian.
            q[p] += std::norm(c);
        }
    }
    return PauliChannel(num_qubits, std::move(q));
}

KrausChannel pauli_twirl_bruteforce(const KrausChannel &ch, unsigned num_qubits) {
    if (num_qubits > 3) {
        throw ShapeError("pauli_twirl_bruteforce supports at most 3 qubits");
    }
    const std::size_t dim = std::size_t{1} << num_qubits;
    if (ch.in_dim() != dim || ch.out_dim() != dim) {
        throw ShapeError("pauli_twirl_bruteforce: channel is not square on " + std::to_string(num_qubits) + " qubits");
    }
    const double scale = 1.0 / static_cast<double>(dim);
    std::vector<ComplexMatrix> ops;
    for (const auto &p : all_paulis(num_qubits)) {
        const ComplexMatrix pm = pauli_matrix(p);
        for (const auto &a : ch.kraus_ops()) {
            ops.push_back(pm * a * pm * scale);
        }
    }
    return KrausChannel(dim, dim, std::move(ops));
}

std::array<ComplexMatrix, 6> clifford_b_set() {
    const ComplexMatrix x = pauli_matrix(PauliString::from_text("X"));
    const ComplexMatrix y = pauli_matrix(PauliString::from_text("Y"));
    const ComplexMatrix z = pauli_matrix(PauliString::from_text("Z"));
    const double r = 1.0 / std::sqrt(2.0);
    const ComplexMatrix hxy = (x + y) * r;
    const ComplexMatrix hxz = (x + z) * r;
    const ComplexMatrix hyz = (y + z) * r;
    return {ComplexMatrix::identity(2), hxy, hxz, hyz, hxz * hxy, hxy * hxz};
}

PauliChannel local_clifford_twirl(const PauliChannel &channel) {
    if (channel.num_qubits() != 2) {
        throw ShapeError("local_clifford_twirl needs a two-qubit Pauli channel");
    }
    double first = 0.0;   // P⊗1
    double second = 0.0;  // 1⊗P
    double both = 0.0;    // P⊗P'
    for (unsigned a = 1; a < 4; ++a) {
        first += channel.probability(two_qubit(a, 0));
        second += channel.probability(two_qubit(0, a));
        for (unsigned b = 1; b < 4; ++b) {
            both += channel.probability(two_qubit(a, b));
        }
    }
    PauliDistribution out;
    out[two_qubit(0, 0)] = channel.probability(two_qubit(0, 0));
    for (unsigned a = 1; a < 4; ++a) {
        out[two_qubit(a, 0)] = first / 3.0;
        out[two_qubit(0, a)] = second / 3.0;
        for (unsigned b = 1; b < 4; ++b) {
            out[two_qubit(a, b)] = both / 9.0;
        }
    }
    return PauliChannel(2, std::move(out));
}

namespace {

KrausChannel twirl_over(const KrausChannel &ch, const std::array<ComplexMatrix, 6> &unitaries) {
    const double scale = 1.0 / std::sqrt(static_cast<double>(unitaries.size()));
    std::vector<ComplexMatrix> ops;
    for (const auto &u : unitaries) {
        const ComplexMatrix ud = u.adjoint();
        for (const auto &a : ch.kraus_ops()) {
            ops.push_back(ud * a * u * scale);
        }
    }
    return KrausChannel(ch.in_dim(), ch.out_dim(), std::move(ops));
}

}  // namespace

KrausChannel local_clifford_twirl_bruteforce(const KrausChannel &channel) {
    if (channel.in_dim() != 4 || channel.out_dim() != 4) {
        throw ShapeError("local_clifford_twirl_bruteforce needs a two-qubit channel");
    }
    const auto b = clifford_b_set();
    const ComplexMatrix id = ComplexMatrix::identity(2);
    std::array<ComplexMatrix, 6> on_first;
    std::array<ComplexMatrix, 6> on_second;
    for (std::size_t i = 0; i < b.size(); ++i) {
        on_first[i] = kron(b[i], id);
        on_second[i] = kron(id, b[i]);
    }
    return twirl_over(twirl_over(channel, on_first), on_second);
}

std::array<double, 3> phi_xyz_twirl_weight_masses(const ChannelParamsXYZ &params) {
    if (auto v = channel_params_violation(params)) {
        throw ParameterError(*v);
    }
    const double s1 = std::sqrt(1.0 - params.x);
    const double s2 = std::sqrt(std::max(0.0, 1.0 - 2.0 * params.y - params.z));
    const double sx = std::sqrt(params.x);
    const double sy = std::sqrt(params.y);
    const double p0 = std::pow((1.0 + 2.0 * s1 + s2) / 4.0, 2);
    const double p1 = 2.0 * std::pow((1.0 - s2) / 4.0, 2) + std::pow((sx + sy) / 2.0, 2);
    const double p2 = std::pow((1.0 - 2.0 * s1 + s2) / 4.0, 2) + std::pow((sx - sy) / 2.0, 2) + params.z / 4.0;
    return {p0, p1, p2};
}

}  // namespace qcap
