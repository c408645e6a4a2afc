// Runs every acceptance criterion and prints one PASS/FAIL line for each.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "cli/commands.h"
#include "qcap/bounds.h"
#include "support.h"

namespace {

using namespace qcap;
namespace fs = std::filesystem;

struct Outcome {
    bool passed = true;
    std::string detail;

    void require(bool ok, const std::string &what) {
        if (!ok && passed) {
            passed = false;
            detail = what;
        }
    }
};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

const ComplexMatrix &maximally_mixed() {
    static const ComplexMatrix m = ComplexMatrix::identity(4) * 0.25;
    return m;
}

Outcome trace_preservation() {
    std::mt19937_64 rng(101);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double worst = 0.0;
    for (int t = 0; t < 50; ++t) {
        worst = std::max(worst, make_phi_a(testing::draw_phi_a(rng)).trace_preservation_error());
        worst = std::max(worst, make_phi_xyz(testing::draw_valid(rng)).trace_preservation_error());
        worst = std::max(worst, make_pauli_channel(testing::draw_pauli_distribution(2, rng)).trace_preservation_error());
        worst = std::max(worst, make_depolarizing(unit(rng), 2).trace_preservation_error());
    }
    Outcome o;
    o.require(worst <= 1e-10, "max trace-preservation error " + num(worst));
    return o;
}

Outcome degrading_identity() {
    std::mt19937_64 rng(102);
    double worst = 0.0;
    for (int t = 0; t < 100; ++t) {
        const ChannelParamsXYZ p = testing::draw_degradable(rng);
        const KrausChannel phi = make_phi_xyz(p);
        worst = std::max(worst, choi_distance(compose(make_degrading_map(p), phi), complementary(phi)));
    }
    Outcome o;
    o.require(worst <= 1e-9, "max Choi distance " + num(worst));
    return o;
}

Outcome complement_parameters() {
    std::mt19937_64 rng(103);
    double worst = 0.0;
    for (int t = 0; t < 100; ++t) {
        const ChannelParamsXYZ p = testing::draw_valid(rng);
        const ChannelParamsXYZ c{1.0 - p.x, p.y, 1.0 - 2.0 * p.y - p.z};
        worst = std::max(worst, choi_distance(complementary(make_phi_xyz(p)), make_phi_xyz(c)));
    }
    Outcome o;
    o.require(worst <= 1e-9, "max Choi distance " + num(worst));
    return o;
}

Outcome twirl_equivalence() {
    Outcome o;
    std::mt19937_64 rng(104);
    std::uniform_int_distribution<int> kraus_count(1, 6);
    double worst = 0.0;
    for (int t = 0; t < 50; ++t) {
        const KrausChannel ch = random_channel(4, 4, kraus_count(rng), rng);
        worst = std::max(worst, choi_distance(pauli_twirl(ch, 2).to_kraus(), pauli_twirl_bruteforce(ch, 2)));
    }
    o.require(worst <= 1e-9, "formula vs brute force Choi distance " + num(worst));

    double mass_err = 0.0;
    for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 5; ++j) {
            for (int k = 0; k < 5; ++k) {
                const double x = 0.2 * i;
                const double y = 0.1 * j;
                const double z = (1.0 - 2.0 * y) * 0.2 * k;
                const double s1 = std::sqrt(1.0 - x);
                const double s2 = std::sqrt(1.0 - 2.0 * y - z);
                const double sx = std::sqrt(x);
                const double sy = std::sqrt(y);
                const double want[3] = {
                    std::pow((1 + 2 * s1 + s2) / 4, 2),
                    2 * std::pow((1 - s2) / 4, 2) + std::pow((sx + sy) / 2, 2),
                    std::pow((1 - 2 * s1 + s2) / 4, 2) + std::pow((sx - sy) / 2, 2) + z / 4,
                };
                const auto got = pauli_twirl(make_phi_xyz({x, y, z}), 2).weight_class_masses();
                for (int w = 0; w < 3; ++w) {
                    mass_err = std::max(mass_err, std::abs(got[w] - want[w]));
                }
            }
        }
    }
    o.require(mass_err <= 1e-10, "weight-class mass error " + num(mass_err));
    return o;
}

Outcome local_twirl() {
    Outcome o;
    std::mt19937_64 rng(105);
    double worst = 0.0;
    double idem = 0.0;
    for (int t = 0; t < 50; ++t) {
        const PauliChannel pc(2, testing::draw_pauli_distribution(2, rng));
        const PauliChannel once = local_clifford_twirl(pc);
        worst = std::max(worst, choi_distance(once.to_kraus(), local_clifford_twirl_bruteforce(pc.to_kraus())));
        idem = std::max(idem, choi_distance(local_clifford_twirl(once).to_kraus(), once.to_kraus()));
    }
    o.require(worst <= 1e-9, "formula vs brute force Choi distance " + num(worst));
    o.require(idem <= 1e-9, "idempotence Choi distance " + num(idem));
    return o;
}

Outcome capacity_program() {
    Outcome o;
    std::mt19937_64 rng(106);
    double grid_err = 0.0;
    for (int t = 0; t < 20; ++t) {
        const ChannelParamsXYZ p = testing::draw_degradable(rng);
        const double value = capacity_diagonal_program(p).value;
        const double grid = testing::simplex_grid_max(testing::DiagonalCoherentOracle(p), 500);
        grid_err = std::max(grid_err, std::abs(value - grid));
    }
    o.require(grid_err <= 2e-4, "optimizer vs grid oracle " + num(grid_err));

    double grad_err = 0.0;
    for (int t = 0; t < 20; ++t) {
        const DiagonalObjective f(testing::draw_degradable(rng));
        const auto w = random_probability_vector(4, rng);
        std::array<double, 4> p{};
        for (int k = 0; k < 4; ++k) {
            p[k] = (0.1 + w[k]) / 1.4;
        }
        const auto g = f.gradient(p);
        for (int k = 0; k < 4; ++k) {
            auto up = p;
            auto dn = p;
            up[k] += 1e-6;
            dn[k] -= 1e-6;
            grad_err = std::max(grad_err, std::abs(g[k] - (f.value(up) - f.value(dn)) / 2e-6));
        }
    }
    o.require(grad_err <= 1e-5, "gradient vs finite differences " + num(grad_err));

    const double id = capacity_diagonal_program({0, 0, 0}).value;
    o.require(std::abs(id - 2.0) <= 1e-9, "capacity of the identity " + num(id));

    for (double g : {0.1, 0.2, 0.3, 0.4}) {
        const double v = capacity_diagonal_program({g, g * (1 - g), g * g}).value;
        const double want = 2.0 * testing::qubit_ad_capacity(g);
        o.require(std::abs(v - want) <= 5e-4, "amplitude damping at gamma " + num(g) + " off by " + num(v - want));
    }
    return o;
}

Outcome diagonal_sufficiency() {
    Outcome o;
    std::mt19937_64 rng(107);
    for (int t = 0; t < 10; ++t) {
        const ChannelParamsXYZ p = testing::draw_degradable(rng);
        const auto r = diagonal_sufficiency_report(p, 200, 1000 + t);
        o.require(r.holds && r.max_excess <= 1e-8, "non-diagonal excess " + num(r.max_excess));
    }
    return o;
}

Outcome covariance() {
    Outcome o;
    std::mt19937_64 rng(108);
    const auto lambdas = testing::z_type_diagonals(2);
    double cov = 0.0;
    double inv = 0.0;
    for (int t = 0; t < 20; ++t) {
        const KrausChannel phi = make_phi_xyz(testing::draw_valid(rng));
        const KrausChannel comp = complementary(phi);
        const ComplexMatrix rho = random_density_matrix(4, rng);
        for (const KrausChannel *ch : {&phi, &comp}) {
            const ComplexMatrix out = apply(*ch, rho);
            const double base = coherent_information(*ch, rho);
            for (const auto &l : lambdas) {
                cov = std::max(cov, max_abs_diff(apply(*ch, l * rho * l), l * out * l));
                inv = std::max(inv, std::abs(coherent_information(*ch, l * rho * l) - base));
            }
        }
    }
    o.require(cov <= 1e-9, "covariance error " + num(cov));
    o.require(inv <= 1e-10, "coherent information change " + num(inv));
    return o;
}

Outcome dep4_curve() {
    Outcome o;
    const BoundCurve c = dep4_bound_curve(0.0, 0.375, 2001);
    const auto &s = c.samples;
    o.require(std::abs(s.front().second - 2.0) <= 1e-10, "bound at p = 0 is " + num(s.front().second));
    // Continuous approach to the anchor: small steps between neighbours near p = 0.
    for (std::size_t k = 1; k < 20; ++k) {
        o.require(s[k].second <= s[k - 1].second && s[k - 1].second - s[k].second <= 1e-2,
                  "jump near p = 0 at " + num(s[k].first));
    }
    o.require(s.back().first == 0.375 && std::abs(s.back().second) <= 1e-10,
              "bound at 3/8 is " + num(s.back().second));
    for (std::size_t k = 1; k + 1 < s.size(); ++k) {
        const double mid = 0.5 * (s[k - 1].second + s[k + 1].second);
        o.require(s[k].second <= mid + 1e-9, "not convex at p = " + num(s[k].first));
    }
    auto eta_oracle = [](double v) { return testing::plain_eta(v); };
    double spec_err = 0.0;
    for (const auto &[p, b] : s) {
        const double x = (8.0 / 9.0) * (std::sqrt(1.0 - p) - 1.0 + 2.0 * p);
        const double want = eta_oracle((1 + 3 * x) / 4) + 3 * eta_oracle((1 - x) / 4) - eta_oracle(1 - 3 * x / 4) -
                            3 * eta_oracle(x / 4);
        spec_err = std::max(spec_err, std::abs(main_theorem_bound({x, 0.0, x}) - want));
        spec_err = std::max(spec_err, std::abs(dep4_candidate(dep4_x_of_p(p)) - want));
    }
    o.require(spec_err <= 1e-10, "slice specialization error " + num(spec_err));
    return o;
}

Outcome sandwich() {
    Outcome o;
    std::mt19937_64 rng(110);
    double worst = -1.0;
    for (int t = 0; t < 50; ++t) {
        const ChannelParamsXYZ p = testing::draw_degradable(rng);
        const double lower = coherent_information(pauli_twirl(make_phi_xyz(p), 2).to_kraus(), maximally_mixed());
        worst = std::max(worst, lower - main_theorem_bound(p));
    }
    o.require(worst <= 1e-9, "twirled coherent information exceeds bound by " + num(worst));
    return o;
}

Outcome appendix_identities() {
    Outcome o;
    const Complex i(0.0, 1.0);
    auto pm = [](const char *text) { return pauli_matrix(PauliString::from_text(text)); };
    using Terms = std::vector<std::pair<const char *, Complex>>;
    const std::vector<std::tuple<int, int, Terms>> sums = {
        {0, 3, {{"XX", 1}, {"YY", -1}, {"XY", i}, {"YX", i}}},
        {1, 2, {{"XX", 1}, {"YY", 1}, {"XY", -i}, {"YX", i}}},
        {0, 2, {{"XI", 1}, {"XZ", 1}, {"YI", i}, {"YZ", i}}},
        {1, 3, {{"XI", 1}, {"XZ", -1}, {"YI", i}, {"YZ", -i}}},
        {0, 1, {{"IX", 1}, {"ZX", 1}, {"IY", i}, {"ZY", i}}},
        {2, 3, {{"IX", 1}, {"ZX", -1}, {"IY", i}, {"ZY", -i}}},
        {0, 0, {{"II", 1}, {"IZ", 1}, {"ZI", 1}, {"ZZ", 1}}},
        {1, 1, {{"II", 1}, {"IZ", -1}, {"ZI", 1}, {"ZZ", -1}}},
        {2, 2, {{"II", 1}, {"IZ", 1}, {"ZI", -1}, {"ZZ", -1}}},
        {3, 3, {{"II", 1}, {"IZ", -1}, {"ZI", -1}, {"ZZ", 1}}},
    };
    for (const auto &[r, c, terms] : sums) {
        ComplexMatrix rhs(4);
        for (const auto &[text, coeff] : terms) {
            rhs += pm(text) * coeff;
        }
        const double err = max_abs_diff(ComplexMatrix::basis(4, r, c) * 4.0, rhs);
        o.require(err <= 1e-15, "4|" + std::to_string(r) + "><" + std::to_string(c) + "| off by " + num(err));
    }
    // Off-diagonal units as a projector times a Pauli string.
    const std::vector<std::tuple<int, int, int, double, const char *>> products = {
        {0, 3, 0, 1, "XX"}, {0, 2, 0, 1, "XZ"}, {1, 3, 1, -1, "XZ"}, {0, 1, 0, 1, "ZX"}, {2, 3, 2, -1, "ZX"},
    };
    for (const auto &[r, c, d, sign, text] : products) {
        const double err =
            max_abs_diff(ComplexMatrix::basis(4, r, c), ComplexMatrix::basis(4, d, d) * sign * pm(text));
        o.require(err <= 1e-15, std::string("product form with ") + text + " off by " + num(err));
    }
    return o;
}

Outcome curve_determinism() {
    Outcome o;
    const fs::path dir = fs::temp_directory_path() / "qcap_acceptance_determinism";
    fs::remove_all(dir);
    fs::create_directories(dir);
    auto run = [&](const std::string &kind, const std::string &name) {
        cli::CurveOptions opts;
        opts.kind = kind;
        opts.steps = kind == "ad" ? 101 : 2001;
        opts.out_path = (dir / name).string();
        std::ostringstream out, err;
        o.require(cli::cmd_curve(opts, out, err) == cli::kExitOk, kind + " curve failed: " + err.str());
        std::ifstream in(dir / name, std::ios::binary);
        std::ostringstream s;
        s << in.rdbuf();
        return s.str();
    };
    for (const char *kind : {"dep4", "symmetric", "ad"}) {
        const std::string a = run(kind, std::string(kind) + "_a.csv");
        const std::string b = run(kind, std::string(kind) + "_b.csv");
        o.require(!a.empty() && a == b, std::string(kind) + " curve files differ");
    }
    fs::remove_all(dir);
    return o;
}

struct Criterion {
    const char *name;
    double time_limit_s;  // 0: no limit
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    const Criterion criteria[] = {
        {"cpt_suite", 5.0, trace_preservation},
        {"degradability_identity", 10.0, degrading_identity},
        {"complement_parameters", 0.0, complement_parameters},
        {"twirl_oracle_equivalence", 0.0, twirl_equivalence},
        {"localized_clifford_twirl", 0.0, local_twirl},
        {"capacity_program", 120.0, capacity_program},
        {"diagonal_sufficiency", 0.0, diagonal_sufficiency},
        {"covariance_and_invariance", 0.0, covariance},
        {"dep4_curve_anchors", 0.0, dep4_curve},
        {"sandwich", 0.0, sandwich},
        {"appendix_identities", 0.0, appendix_identities},
        {"curve_determinism", 0.0, curve_determinism},
    };
    int failures = 0;
    int index = 0;
    for (const auto &c : criteria) {
        ++index;
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception &e) {
            o.passed = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.time_limit_s > 0.0 && secs > c.time_limit_s) {
            o.require(false, "took " + num(secs) + " s, limit " + num(c.time_limit_s) + " s");
        }
        std::cout << (o.passed ? "PASS" : "FAIL") << " " << index << " " << c.name << " (" << num(secs) << " s)";
        if (!o.passed) {
            std::cout << ": " << o.detail;
            ++failures;
        }
        std::cout << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
