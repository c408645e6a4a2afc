#include "qcap/families.h"

#include <cmath>
#include <sstream>

#include "qcap/errors.h"

namespace qcap {

namespace {

constexpr double kNormalizationTol = 1e-12;

ComplexMatrix op(std::size_t i, std::size_t j, double amplitude) {
    return ComplexMatrix::basis(4, i, j) * amplitude;
}

std::string format(double v) {
    std::ostringstream s;
    s.precision(12);
    s << v;
    return s.str();
}

}  // namespace

std::optional<std::string> channel_params_violation(const ChannelParamsXYZ &p) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y) || !std::isfinite(p.z)) {
        return "x, y, z must be finite";
    }
    if (p.x < 0.0) {
        return "x >= 0 required";
    }
    if (p.y < 0.0) {
        return "y >= 0 required";
    }
    if (p.z < 0.0) {
        return "z >= 0 required";
    }
    if (p.x > 1.0) {
        return "x <= 1 required";
    }
    if (2.0 * p.y + p.z > 1.0 + kNormalizationTol) {
        return "2y + z <= 1 required";
    }
    return std::nullopt;
}

std::optional<std::string> degradable_regime_violation(const ChannelParamsXYZ &p) {
    if (auto v = channel_params_violation(p)) {
        return v;
    }
    if (!(p.x < 0.5 - kRegimeGuard)) {
        return "x < 1/2 required";
    }
    if (!(2.0 * p.y + p.z < 1.0 - kRegimeGuard)) {
        return "2y + z < 1 required";
    }
    const DegradingParams d = degrading_params(p);
    if (2.0 * p.y * (1.0 + d.g) + 2.0 * p.z > 1.0 + kRegimeGuard) {
        return "2y(1 + g) + 2z <= 1 required, g = (1 - 2x)/(1 - x) (degrading map must be completely positive)";
    }
    return std::nullopt;
}

void require_degradable_regime(const ChannelParamsXYZ &p) {
    if (auto v = degradable_regime_violation(p)) {
        throw RegimeError(*v);
    }
}

DegradingParams degrading_params(const ChannelParamsXYZ &p) {
    const double s2sq = 1.0 - 2.0 * p.y - p.z;
    const double g = (1.0 - 2.0 * p.x) / (1.0 - p.x);
    const double h = g * p.y / s2sq;
    const double k = 1.0 - 2.0 * h - p.z / s2sq;
    return {g, h, k};
}

ChannelParamsXYZ complement_params(const ChannelParamsXYZ &p) {
    return {1.0 - p.x, p.y, 1.0 - 2.0 * p.y - p.z};
}

KrausChannel make_phi_a(const std::array<double, 9> &a) {
    static constexpr const char *kNames[9] = {"a00", "a01", "a02", "a03", "a11", "a12", "a21", "a22", "a31"};
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!(a[i] >= 0.0)) {
            throw ParameterError(std::string(kNames[i]) + " >= 0 required");
        }
    }
    const auto [a00, a01, a02, a03, a11, a12, a21, a22, a31] = a;
    if (std::abs(a00 - 1.0) > kNormalizationTol) {
        throw ParameterError("a00 = 1 required, got " + format(a00));
    }
    if (std::abs(a01 * a01 + a11 * a11 - 1.0) > kNormalizationTol) {
        throw ParameterError("a01^2 + a11^2 = 1 required");
    }
    if (std::abs(a02 * a02 + a21 * a21 - 1.0) > kNormalizationTol) {
        throw ParameterError("a02^2 + a21^2 = 1 required");
    }
    if (std::abs(a03 * a03 + a12 * a12 + a22 * a22 + a31 * a31 - 1.0) > kNormalizationTol) {
        throw ParameterError("a03^2 + a12^2 + a22^2 + a31^2 = 1 required");
    }
    const double diag[4] = {a00, a01, a02, a03};
    std::vector<ComplexMatrix> ops;
    ops.push_back(ComplexMatrix::diagonal(std::span<const double>(diag)));
    ops.push_back(op(0, 1, a11) + op(2, 3, a12));
    ops.push_back(op(0, 2, a21) + op(1, 3, a22));
    ops.push_back(op(0, 3, a31));
    return KrausChannel(4, 4, std::move(ops));
}

KrausChannel make_phi_xyz(const ChannelParamsXYZ &p) {
    if (auto v = channel_params_violation(p)) {
        throw ParameterError(*v);
    }
    const double s1 = std::sqrt(1.0 - p.x);
    const double s2 = std::sqrt(std::max(0.0, 1.0 - 2.0 * p.y - p.z));
    const double sx = std::sqrt(p.x);
    const double sy = std::sqrt(p.y);
    std::vector<ComplexMatrix> ops;
    ops.push_back(op(0, 0, 1.0) + op(1, 1, s1) + op(2, 2, s1) + op(3, 3, s2));
    ops.push_back(op(0, 1, sx) + op(2, 3, sy));
    ops.push_back(op(0, 2, sx) + op(1, 3, sy));
    ops.push_back(op(0, 3, std::sqrt(p.z)));
    return KrausChannel(4, 4, std::move(ops));
}

KrausChannel make_degrading_map(const ChannelParamsXYZ &p) {
    if (auto v = channel_params_violation(p)) {
        throw RegimeError(*v);
    }
    if (!(p.x < 0.5 - kRegimeGuard)) {
        throw RegimeError("x < 1/2 required");
    }
    if (!(2.0 * p.y + p.z < 1.0 - kRegimeGuard)) {
        throw RegimeError("2y + z < 1 required");
    }
    DegradingParams d = degrading_params(p);
    const double tol = kRegimeGuard;
    if (d.g < -tol || d.h < -tol || d.k < -tol || 2.0 * d.h + d.k > 1.0 + tol) {
        throw ConsistencyError("degrading map parameters (g, h, k) = (" + format(d.g) + ", " + format(d.h) + ", " +
                               format(d.k) + ") do not define a channel");
    }
    d.g = std::max(d.g, 0.0);
    d.h = std::max(d.h, 0.0);
    d.k = std::max(d.k, 0.0);
    // Clamp the boundary 2h + k = 1 reached at x = y = z = 0.
    const ChannelParamsXYZ gp{d.g, d.h, std::min(d.k, 1.0 - 2.0 * d.h)};
    KrausChannel g = make_phi_xyz(gp);
    g.require_trace_preserving(1e-10);
    return g;
}

KrausChannel make_pauli_channel(const PauliDistribution &probs) {
    if (probs.empty()) {
        throw ParameterError("Pauli distribution is empty");
    }
    const unsigned m = probs.begin()->first.num_qubits;
    double total = 0.0;
    for (const auto &[p, q] : probs) {
        if (p.num_qubits != m) {
            throw ShapeError("Pauli distribution mixes qubit counts");
        }
        if (!(q >= 0.0)) {
            throw ParameterError("negative probability " + format(q) + " on " + p.to_text());
        }
        total += q;
    }
    if (std::abs(total - 1.0) > kNormalizationTol) {
        throw ParameterError("Pauli probabilities sum to " + format(total) + ", expected 1");
    }
    std::vector<ComplexMatrix> ops;
    for (const auto &[p, q] : probs) {
        if (q > 0.0) {
            ops.push_back(pauli_matrix(p) * std::sqrt(q));
        }
    }
    const std::size_t dim = std::size_t{1} << m;
    return KrausChannel(dim, dim, std::move(ops));
}

PauliDistribution depolarizing_distribution(double p, unsigned num_qubits) {
    const double d2 = std::pow(4.0, num_qubits);
    const double noise = p * (d2 - 1.0) / d2;
    if (!(p >= 0.0) || noise > 1.0 + kNormalizationTol) {
        throw ParameterError("depolarizing parameter " + format(p) + " out of range");
    }
    PauliDistribution dist;
    for (const auto &s : all_paulis(num_qubits)) {
        dist[s] = s.is_identity() ? 1.0 - noise : p / d2;
    }
    return dist;
}

KrausChannel make_depolarizing(double p, unsigned num_qubits) {
    return make_pauli_channel(depolarizing_distribution(p, num_qubits));
}

KrausChannel make_qubit_amplitude_damping(double gamma) {
    if (!(gamma >= 0.0 && gamma <= 1.0)) {
        throw ParameterError("amplitude damping needs 0 <= gamma <= 1");
    }
    ComplexMatrix k0{{1.0, 0.0}, {0.0, std::sqrt(1.0 - gamma)}};
    ComplexMatrix k1{{0.0, std::sqrt(gamma)}, {0.0, 0.0}};
    return KrausChannel(2, 2, {std::move(k0), std::move(k1)});
}

KrausChannel make_qubit_dephasing() {
    const double s = 1.0 / std::sqrt(2.0);
    return KrausChannel(2, 2, {ComplexMatrix::identity(2) * s, pauli_matrix(PauliString::from_text("Z")) * s});
}

}  // namespace qcap
