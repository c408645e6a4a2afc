#include "qcap/capacity.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>

#include "qcap/eigen.h"
#include "qcap/errors.h"
#include "qcap/pauli.h"

namespace qcap {

namespace {

constexpr double kDomainTol = 1e-12;
constexpr double kBoundaryRound = 1e-7;

double dot(const std::array<double, 4> &c, std::span<const double, 4> p) {
    return c[0] * p[0] + c[1] * p[1] + c[2] * p[2] + c[3] * p[3];
}

std::array<double, 4> round_boundary(std::array<double, 4> p) {
    double sum = 0.0;
    for (auto &v : p) {
        if (v < kBoundaryRound) {
            v = 0.0;
        }
        sum += v;
    }
    for (auto &v : p) {
        v /= sum;
    }
    return p;
}

}  // namespace

double eta(double z) {
    if (!(z >= -kDomainTol && z <= 1.0 + kDomainTol)) {
        throw DomainError("eta is defined on [0, 1], got " + std::to_string(z));
    }
    if (z <= 0.0) {
        return 0.0;
    }
    return -z * std::log2(z);
}

double eta_derivative(double z) {
    return -(1.0 + std::log(std::max(z, 1e-300))) / std::numbers::ln2;
}

double shannon_entropy(std::span<const double> probs) {
    double s = 0.0;
    for (double p : probs) {
        s += eta(p);
    }
    return s;
}

double von_neumann_entropy(const ComplexMatrix &rho) {
    if (!rho.is_square() || !rho.is_hermitian(1e-10)) {
        throw PreconditionError("von_neumann_entropy: input is not Hermitian");
    }
    if (std::abs(rho.trace() - 1.0) > 1e-9) {
        throw PreconditionError("von_neumann_entropy: trace is not 1");
    }
    double s = 0.0;
    for (double lambda : hermitian_eigenvalues(rho)) {
        if (lambda < -1e-9) {
            throw PreconditionError("von_neumann_entropy: negative eigenvalue " + std::to_string(lambda));
        }
        if (lambda > 1e-10) {
            s += eta(std::min(lambda, 1.0));
        }
    }
    return s;
}

double coherent_information(const KrausChannel &ch, const ComplexMatrix &rho) {
    return von_neumann_entropy(apply(ch, rho)) - von_neumann_entropy(apply(complementary(ch), rho));
}

DiagonalState::DiagonalState(std::vector<double> probs) : probs_(std::move(probs)) {
    if (probs_.empty()) {
        throw ShapeError("diagonal state needs at least one entry");
    }
    double sum = 0.0;
    for (double p : probs_) {
        if (!(p >= 0.0)) {
            throw ParameterError("diagonal state entries must be nonnegative");
        }
        sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-12) {
        throw ParameterError("diagonal state entries sum to " + std::to_string(sum));
    }
}

DiagonalState DiagonalState::uniform(std::size_t dim) {
    return DiagonalState(std::vector<double>(dim, 1.0 / static_cast<double>(dim)));
}

ComplexMatrix DiagonalState::matrix() const {
    return ComplexMatrix::diagonal(std::span<const double>(probs_));
}

DiagonalObjective::DiagonalObjective(const ChannelParamsXYZ &params) {
    const double x = params.x;
    const double y = params.y;
    const double z = params.z;
    const double s2sq = 1.0 - 2.0 * y - z;
    const Term all[] = {
        // Output of Phi on diag(p).
        {+1.0, {1.0, x, x, z}},
        {+1.0, {0.0, 1.0 - x, 0.0, y}},
        {+1.0, {0.0, 0.0, 1.0 - x, y}},
        {+1.0, {0.0, 0.0, 0.0, s2sq}},
        // Output of the complement.
        {-1.0, {1.0, 1.0 - x, 1.0 - x, s2sq}},
        {-1.0, {0.0, x, 0.0, y}},
        {-1.0, {0.0, 0.0, x, y}},
        {-1.0, {0.0, 0.0, 0.0, z}},
    };
    for (const auto &t : all) {
        // Terms whose linear form is identically zero contribute eta(0) = 0.
        if (std::any_of(t.coeff.begin(), t.coeff.end(), [](double c) { return c != 0.0; })) {
            terms_.push_back(t);
        }
    }
}

double DiagonalObjective::value(std::span<const double, 4> p) const {
    double v = 0.0;
    for (const auto &t : terms_) {
        v += t.sign * eta(std::clamp(dot(t.coeff, p), 0.0, 1.0));
    }
    return v;
}

std::array<double, 4> DiagonalObjective::gradient(std::span<const double, 4> p) const {
    std::array<double, 4> g{};
    for (const auto &t : terms_) {
        const double d = t.sign * eta_derivative(dot(t.coeff, p));
        for (int i = 0; i < 4; ++i) {
            g[i] += d * t.coeff[i];
        }
    }
    return g;
}

CapacityResult maximize_from(const DiagonalObjective &objective, std::array<double, 4> start,
                             const OptimizerConfig &cfg, std::vector<double> *trace) {
    std::array<double, 4> p = start;
    double f = objective.value(p);
    if (trace) {
        trace->push_back(f);
    }
    CapacityResult out;
    int iter = 0;
    bool converged = false;
    while (iter < cfg.max_iter && !converged) {
        ++iter;
        const auto g = objective.gradient(p);
        const double gmax = *std::max_element(g.begin(), g.end());
        double step = 0.5 / (1.0 + std::sqrt(static_cast<double>(iter)));
        bool accepted = false;
        for (int halving = 0; halving < 60 && !accepted; ++halving, step *= 0.5) {
            std::array<double, 4> q{};
            double sum = 0.0;
            for (int i = 0; i < 4; ++i) {
                q[i] = p[i] * std::exp(step * (g[i] - gmax));
                sum += q[i];
            }
            for (auto &v : q) {
                v /= sum;
            }
            const double fq = objective.value(q);
            if (fq >= f) {
                converged = fq - f < cfg.tol;
                p = q;
                f = fq;
                accepted = true;
            }
        }
        if (!accepted) {
            // No ascent direction survives at machine precision: stationary.
            converged = true;
        }
        if (trace) {
            trace->push_back(f);
        }
    }
    out.iterations = iter;
    out.converged = converged;
    const auto rounded = round_boundary(p);
    const double f_rounded = objective.value(rounded);
    out.value = std::max(f, f_rounded);
    out.argmax = DiagonalState(std::vector<double>(rounded.begin(), rounded.end()));
    return out;
}

CapacityResult capacity_diagonal_program(const ChannelParamsXYZ &params, const OptimizerConfig &cfg) {
    require_degradable_regime(params);
    if (cfg.starts < 1 || cfg.max_iter < 1 || !(cfg.tol > 0.0)) {
        throw ParameterError("optimizer needs starts >= 1, max_iter >= 1 and tol > 0");
    }
    const DiagonalObjective objective(params);
    std::mt19937_64 rng(cfg.seed);
    CapacityResult best;
    bool have_best = false;
    for (int s = 0; s < cfg.starts; ++s) {
        std::array<double, 4> start{0.25, 0.25, 0.25, 0.25};
        if (s > 0) {
            const auto v = random_probability_vector(4, rng);
            std::copy(v.begin(), v.end(), start.begin());
        }
        CapacityResult r = maximize_from(objective, start, cfg);
        // Strict comparison keeps the lowest start index on ties.
        if (!have_best || r.value > best.value) {
            best = std::move(r);
            have_best = true;
        }
    }
    return best;
}

DiagonalSufficiencyReport diagonal_sufficiency_report(const ChannelParamsXYZ &params, int trials, std::uint64_t seed,
                                                      const OptimizerConfig &cfg) {
    DiagonalSufficiencyReport report;
    report.diagonal_optimum = capacity_diagonal_program(params, cfg).value;
    const KrausChannel ch = make_phi_xyz(params);
    const KrausChannel dephase2 = tensor(make_qubit_dephasing(), make_qubit_dephasing());
    std::mt19937_64 rng(seed);
    report.max_excess = -std::numeric_limits<double>::infinity();
    report.min_dephasing_gain = std::numeric_limits<double>::infinity();
    for (int t = 0; t < trials; ++t) {
        const ComplexMatrix rho = random_density_matrix(4, rng);
        const double ic = coherent_information(ch, rho);
        const double ic_dephased = coherent_information(ch, apply(dephase2, rho));
        report.max_excess = std::max(report.max_excess, ic - report.diagonal_optimum);
        report.min_dephasing_gain = std::min(report.min_dephasing_gain, ic_dephased - ic);
    }
    report.holds = report.max_excess <= 1e-8 && report.min_dephasing_gain >= -1e-10;
    return report;
}

bool verify_diagonal_sufficiency(const ChannelParamsXYZ &params, int trials, std::uint64_t seed) {
    return diagonal_sufficiency_report(params, trials, seed).holds;
}

}  // namespace qcap
