#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <tuple>

#include "commands.h"
#include "qcap/bounds.h"
#include "qcap/pauli.h"

namespace qcap::cli {

namespace {

ChannelParamsXYZ draw_degradable(std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> half(0.0, 0.5);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (;;) {
        const ChannelParamsXYZ p{half(rng), half(rng), unit(rng)};
        if (!degradable_regime_violation(p)) {
            return p;
        }
    }
}

ChannelParamsXYZ draw_valid(std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double x = unit(rng);
    const double y = 0.5 * unit(rng);
    const double z = (1.0 - 2.0 * y) * unit(rng);
    return {x, y, z};
}

std::array<double, 9> draw_phi_a(std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> angle(0.0, std::numbers::pi / 2.0);
    std::normal_distribution<double> g(0.0, 1.0);
    const double t1 = angle(rng);
    const double t2 = angle(rng);
    std::array<double, 4> v{};
    double norm = 0.0;
    for (auto &e : v) {
        e = std::abs(g(rng));
        norm += e * e;
    }
    norm = std::sqrt(norm);
    // (a00, a01, a02, a03, a11, a12, a21, a22, a31)
    return {1.0, std::cos(t1), std::cos(t2), v[0] / norm, std::sin(t1), v[1] / norm, std::sin(t2), v[2] / norm,
            v[3] / norm};
}

PauliChannel draw_pauli_channel(unsigned m, std::mt19937_64 &rng) {
    const auto all = all_paulis(m);
    const auto w = random_probability_vector(all.size(), rng);
    PauliDistribution d;
    for (std::size_t i = 0; i < all.size(); ++i) {
        d[all[i]] = w[i];
    }
    return PauliChannel(m, std::move(d));
}

ComplexMatrix diagonal_state(std::span<const double> p) {
    return ComplexMatrix::diagonal(p);
}

// Qubit amplitude-damping capacity by a direct scan over the input weight.
double qubit_ad_capacity_scan(double gamma) {
    double best = 0.0;
    const int n = 20000;
    for (int i = 0; i <= n; ++i) {
        const double t = static_cast<double>(i) / n;
        const double a = (1.0 - gamma) * t;
        const double b = gamma * t;
        best = std::max(best, eta(a) + eta(1.0 - a) - eta(b) - eta(1.0 - b));
    }
    return best;
}

double appendix_error() {
    const Complex i(0.0, 1.0);
    auto ket_bra = [](std::size_t r, std::size_t c, double s) { return ComplexMatrix::basis(4, r, c) * s; };
    const std::vector<std::pair<ComplexMatrix, std::vector<std::pair<const char *, Complex>>>> sums = {
        {ket_bra(0, 3, 4), {{"XX", 1}, {"YY", -1}, {"XY", i}, {"YX", i}}},
        {ket_bra(1, 2, 4), {{"XX", 1}, {"YY", 1}, {"XY", -i}, {"YX", i}}},
        {ket_bra(0, 2, 4), {{"XI", 1}, {"XZ", 1}, {"YI", i}, {"YZ", i}}},
        {ket_bra(1, 3, 4), {{"XI", 1}, {"XZ", -1}, {"YI", i}, {"YZ", -i}}},
        {ket_bra(0, 1, 4), {{"IX", 1}, {"ZX", 1}, {"IY", i}, {"ZY", i}}},
        {ket_bra(2, 3, 4), {{"IX", 1}, {"ZX", -1}, {"IY", i}, {"ZY", -i}}},
        {ket_bra(0, 0, 4), {{"II", 1}, {"IZ", 1}, {"ZI", 1}, {"ZZ", 1}}},
        {ket_bra(1, 1, 4), {{"II", 1}, {"IZ", -1}, {"ZI", 1}, {"ZZ", -1}}},
        {ket_bra(2, 2, 4), {{"II", 1}, {"IZ", 1}, {"ZI", -1}, {"ZZ", -1}}},
        {ket_bra(3, 3, 4), {{"II", 1}, {"IZ", -1}, {"ZI", -1}, {"ZZ", 1}}},
    };
    double worst = 0.0;
    for (const auto &[lhs, terms] : sums) {
        ComplexMatrix rhs(4);
        for (const auto &[text, c] : terms) {
            rhs += pauli_matrix(PauliString::from_text(text)) * c;
        }
        worst = std::max(worst, max_abs_diff(lhs, rhs));
    }
    const std::vector<std::tuple<ComplexMatrix, ComplexMatrix, const char *>> products = {
        {ket_bra(0, 3, 1), ket_bra(0, 0, 1), "XX"}, {ket_bra(0, 2, 1), ket_bra(0, 0, 1), "XZ"},
        {ket_bra(1, 3, 1), ket_bra(1, 1, -1), "XZ"}, {ket_bra(0, 1, 1), ket_bra(0, 0, 1), "ZX"},
        {ket_bra(2, 3, 1), ket_bra(2, 2, -1), "ZX"},
    };
    for (const auto &[lhs, proj, text] : products) {
        worst = std::max(worst, max_abs_diff(lhs, proj * pauli_matrix(PauliString::from_text(text))));
    }
    return worst;
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions &opts) {
    std::vector<CheckResult> results;
    auto record = [&](const std::string &name, double error, double tol) {
        const double scaled = tol * opts.tolerance_scale;
        results.push_back({name, error, scaled, std::isfinite(error) && error <= scaled});
    };
    std::mt19937_64 rng(opts.seed);

    {
        double worst = 0.0;
        for (int t = 0; t < 10; ++t) {
            worst = std::max(worst, make_phi_a(draw_phi_a(rng)).trace_preservation_error());
            worst = std::max(worst, make_phi_xyz(draw_valid(rng)).trace_preservation_error());
            worst = std::max(worst, draw_pauli_channel(2, rng).to_kraus().trace_preservation_error());
            std::uniform_real_distribution<double> p(0.0, 16.0 / 15.0);
            worst = std::max(worst, make_depolarizing(p(rng), 2).trace_preservation_error());
        }
        record("trace_preservation", worst, 1e-10);
    }
    {
        double degrade = 0.0;
        double complement = 0.0;
        for (int t = 0; t < 20; ++t) {
            const ChannelParamsXYZ p = draw_degradable(rng);
            const KrausChannel phi = make_phi_xyz(p);
            const KrausChannel phic = complementary(phi);
            degrade = std::max(degrade, choi_distance(compose(make_degrading_map(p), phi), phic));
            complement = std::max(complement, choi_distance(phic, make_phi_xyz(complement_params(p))));
        }
        record("degrading_map_identity", degrade, 1e-9);
        record("complement_parameters", complement, 1e-9);
    }
    {
        double twirl = 0.0;
        for (int t = 0; t < 10; ++t) {
            const KrausChannel ch = random_channel(4, 4, 3, rng);
            twirl = std::max(twirl, choi_distance(pauli_twirl(ch, 2).to_kraus(), pauli_twirl_bruteforce(ch, 2)));
        }
        record("pauli_twirl_vs_bruteforce", twirl, 1e-9);
        double masses = 0.0;
        for (double x : {0.0, 0.3, 0.9}) {
            for (double y : {0.0, 0.1, 0.4}) {
                for (double z : {0.0, 0.1, 0.2}) {
                    const ChannelParamsXYZ p{x, y, z};
                    const auto got = pauli_twirl(make_phi_xyz(p), 2).weight_class_masses();
                    const auto want = phi_xyz_twirl_weight_masses(p);
                    for (int k = 0; k < 3; ++k) {
                        masses = std::max(masses, std::abs(got[k] - want[k]));
                    }
                }
            }
        }
        record("twirl_weight_class_masses", masses, 1e-10);
    }
    {
        double closed = 0.0;
        double idem = 0.0;
        for (int t = 0; t < 10; ++t) {
            const PauliChannel pc = draw_pauli_channel(2, rng);
            const PauliChannel once = local_clifford_twirl(pc);
            closed = std::max(closed, choi_distance(once.to_kraus(), local_clifford_twirl_bruteforce(pc.to_kraus())));
            idem = std::max(idem, choi_distance(local_clifford_twirl(once).to_kraus(), once.to_kraus()));
        }
        record("local_twirl_vs_bruteforce", closed, 1e-9);
        record("local_twirl_idempotent", idem, 1e-9);
    }
    {
        record("capacity_identity_channel", std::abs(capacity_diagonal_program({0.0, 0.0, 0.0}).value - 2.0), 1e-9);
        const ChannelParamsXYZ p = draw_degradable(rng);
        const DiagonalObjective obj(p);
        // Interior point: every weight at least 0.1.
        const auto w = random_probability_vector(4, rng);
        std::array<double, 4> at{};
        for (int k = 0; k < 4; ++k) {
            at[k] = (0.2 + w[k]) / 1.8;
        }
        const auto grad = obj.gradient(at);
        double fd = 0.0;
        const double h = 1e-6;
        for (int k = 0; k < 4; ++k) {
            auto up = at;
            auto dn = at;
            up[k] += h;
            dn[k] -= h;
            fd = std::max(fd, std::abs((obj.value(up) - obj.value(dn)) / (2.0 * h) - grad[k]));
        }
        record("capacity_gradient", fd, 1e-5);

        const CapacityResult r = capacity_diagonal_program(p);
        const KrausChannel phi = make_phi_xyz(p);
        record("capacity_matches_coherent_information",
               std::abs(r.value - coherent_information(phi, r.argmax.matrix())), 1e-9);
        double grid_best = -1.0;
        const int n = 40;
        for (int a = 0; a <= n; ++a) {
            for (int b = 0; a + b <= n; ++b) {
                for (int c = 0; a + b + c <= n; ++c) {
                    const std::array<double, 4> q{double(a) / n, double(b) / n, double(c) / n,
                                                  double(n - a - b - c) / n};
                    grid_best = std::max(grid_best, coherent_information(phi, diagonal_state(q)));
                }
            }
        }
        record("capacity_dominates_grid", std::max(0.0, grid_best - r.value), 1e-9);
        const double gamma = 0.2;
        const double two_ad = 2.0 * qubit_ad_capacity_scan(gamma);
        record("capacity_amplitude_damping_product",
               std::abs(capacity_diagonal_program({gamma, gamma * (1.0 - gamma), gamma * gamma}).value - two_ad), 5e-4);
    }
    {
        double excess = 0.0;
        for (int t = 0; t < 2; ++t) {
            const auto report = diagonal_sufficiency_report(draw_degradable(rng), 50, rng());
            excess = std::max(excess, report.max_excess);
        }
        record("diagonal_inputs_suffice", excess, 1e-8);
    }
    {
        double cov = 0.0;
        double inv = 0.0;
        std::vector<ComplexMatrix> lambdas;
        const ComplexMatrix id = ComplexMatrix::identity(2);
        const ComplexMatrix z = pauli_matrix(PauliString::from_text("Z"));
        for (const auto &a : {id, z}) {
            for (const auto &b : {id, z}) {
                lambdas.push_back(kron(a, b));
            }
        }
        for (int t = 0; t < 3; ++t) {
            const ChannelParamsXYZ p = draw_valid(rng);
            const KrausChannel phi = make_phi_xyz(p);
            for (const KrausChannel &ch : {phi, complementary(phi)}) {
                const ComplexMatrix rho = random_density_matrix(4, rng);
                const ComplexMatrix out = apply(ch, rho);
                const double base = coherent_information(ch, rho);
                for (const auto &l : lambdas) {
                    const ComplexMatrix moved = l * rho * l;
                    cov = std::max(cov, max_abs_diff(apply(ch, moved), l * out * l));
                    inv = std::max(inv, std::abs(coherent_information(ch, moved) - base));
                }
            }
        }
        record("diagonal_unitary_covariance", cov, 1e-9);
        record("coherent_information_invariance", inv, 1e-10);
    }
    {
        const BoundCurve c = dep4_bound_curve(0.0, 3.0 / 8.0, 121);
        record("dep4_start_anchor", std::abs(c.samples.front().second - 2.0), 1e-10);
        record("dep4_no_cloning_zero", std::abs(c.samples.back().second), 1e-10);
        double convex = 0.0;
        double special = 0.0;
        for (std::size_t k = 0; k < c.samples.size(); ++k) {
            if (k > 0 && k + 1 < c.samples.size()) {
                const double mid = 0.5 * (c.samples[k - 1].second + c.samples[k + 1].second);
                convex = std::max(convex, c.samples[k].second - mid);
            }
            const double x = dep4_x_of_p(c.samples[k].first);
            special = std::max(special, std::abs(dep4_candidate(x) - main_theorem_bound({x, 0.0, x})));
        }
        record("dep4_convex", convex, 1e-9);
        record("dep4_candidate_specialization", special, 1e-10);
    }
    {
        double gap = 0.0;
        const ComplexMatrix mixed = ComplexMatrix::identity(4) * 0.25;
        for (int t = 0; t < 10; ++t) {
            const ChannelParamsXYZ p = draw_degradable(rng);
            const double lhs = coherent_information(pauli_twirl(make_phi_xyz(p), 2).to_kraus(), mixed);
            gap = std::max(gap, lhs - main_theorem_bound(p));
        }
        record("twirled_coherent_information_below_bound", std::max(0.0, gap), 1e-9);
    }
    record("appendix_identities", appendix_error(), 1e-15);
    return results;
}

}  // namespace qcap::cli
