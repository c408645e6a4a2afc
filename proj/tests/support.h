#pragma once

// Seeded samplers and independent oracles shared by the test binaries.

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

#include "qcap/capacity.h"
#include "qcap/channel.h"
#include "qcap/families.h"
#include "qcap/pauli.h"
#include "qcap/twirl.h"

namespace qcap::testing {

/// Uniform draw from the region where the degrading map exists.
inline ChannelParamsXYZ draw_degradable(std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> half(0.0, 0.5);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (;;) {
        const ChannelParamsXYZ p{half(rng), half(rng), unit(rng)};
        if (!degradable_regime_violation(p)) {
            return p;
        }
    }
}

inline ChannelParamsXYZ draw_valid(std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double x = unit(rng);
    const double y = 0.5 * unit(rng);
    const double z = (1.0 - 2.0 * y) * unit(rng);
    return {x, y, z};
}

/// (a00, a01, a02, a03, a11, a12, a21, a22, a31) meeting the normalization.
inline std::array<double, 9> draw_phi_a(std::mt19937_64 &rng) {
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
    return {1.0, std::cos(t1), std::cos(t2), v[0] / norm, std::sin(t1), v[1] / norm, std::sin(t2), v[2] / norm,
            v[3] / norm};
}

inline PauliDistribution draw_pauli_distribution(unsigned m, std::mt19937_64 &rng) {
    const auto all = all_paulis(m);
    const auto w = random_probability_vector(all.size(), rng);
    PauliDistribution d;
    for (std::size_t i = 0; i < all.size(); ++i) {
        d[all[i]] = w[i];
    }
    return d;
}

inline ComplexMatrix random_hermitian(std::size_t dim, std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    ComplexMatrix a(dim);
    for (auto &v : a.data()) {
        v = Complex(u(rng), u(rng));
    }
    return a + a.adjoint();
}

// Polynomial helpers, coefficients lowest degree first.
inline double poly_eval(const std::vector<double> &c, double t) {
    double v = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        v = v * t + *it;
    }
    return v;
}

/// Real roots of a polynomial whose roots are all real and simple, found by
/// bisection between consecutive roots of its derivative.
inline std::vector<double> real_roots(const std::vector<double> &c) {
    const std::size_t n = c.size() - 1;
    if (n == 1) {
        return {-c[0] / c[1]};
    }
    double bound = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        bound = std::max(bound, std::abs(c[i] / c[n]));
    }
    bound += 1.0;
    std::vector<double> d(n);
    for (std::size_t i = 1; i <= n; ++i) {
        d[i - 1] = c[i] * static_cast<double>(i);
    }
    std::vector<double> cuts{-bound};
    for (double r : real_roots(d)) {
        cuts.push_back(r);
    }
    cuts.push_back(bound);
    std::vector<double> roots;
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
        double lo = cuts[k];
        double hi = cuts[k + 1];
        double flo = poly_eval(c, lo);
        if (flo * poly_eval(c, hi) > 0.0) {
            continue;
        }
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (lo + hi);
            const double fm = poly_eval(c, mid);
            if ((fm < 0.0) == (flo < 0.0)) {
                lo = mid;
                flo = fm;
            } else {
                hi = mid;
            }
        }
        roots.push_back(0.5 * (lo + hi));
    }
    return roots;
}

/// Eigenvalues (descending) of a Hermitian matrix from its characteristic
/// polynomial, built with the Faddeev-LeVerrier recursion.
inline std::vector<double> characteristic_eigenvalues(const ComplexMatrix &h) {
    const std::size_t n = h.dim();
    std::vector<double> c(n + 1, 0.0);
    c[n] = 1.0;
    ComplexMatrix m = ComplexMatrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        const ComplexMatrix am = h * m;
        const double ck = -am.trace().real() / static_cast<double>(k);
        c[n - k] = ck;
        m = am + ComplexMatrix::identity(n) * ck;
    }
    auto roots = real_roots(c);
    std::sort(roots.begin(), roots.end(), std::greater<>());
    return roots;
}

/// Column-stochastic map taking the input diagonal to the output diagonal.
/// Valid for channels that send diagonal inputs to diagonal outputs.
using Transition = std::array<std::array<double, 4>, 4>;

inline Transition diagonal_transition(const KrausChannel &ch) {
    Transition t{};
    for (const auto &a : ch.kraus_ops()) {
        for (std::size_t i = 0; i < 4; ++i) {
            for (std::size_t j = 0; j < 4; ++j) {
                t[i][j] += std::norm(a(i, j));
            }
        }
    }
    return t;
}

/// Largest off-diagonal output entry over basis-state inputs; zero exactly
/// when diagonal_transition describes the channel on diagonal inputs.
inline double diagonal_leakage(const KrausChannel &ch) {
    double worst = 0.0;
    for (std::size_t j = 0; j < ch.in_dim(); ++j) {
        const ComplexMatrix out = apply(ch, ComplexMatrix::basis(ch.in_dim(), j, j));
        for (std::size_t r = 0; r < out.rows(); ++r) {
            for (std::size_t c = 0; c < out.cols(); ++c) {
                if (r != c) {
                    worst = std::max(worst, std::abs(out(r, c)));
                }
            }
        }
    }
    return worst;
}

inline double plain_eta(double v) {
    return v <= 0.0 ? 0.0 : -v * std::log2(v);
}

/// Coherent information on diag(p) through the two transition maps.
struct DiagonalCoherentOracle {
    Transition out;
    Transition env;

    explicit DiagonalCoherentOracle(const ChannelParamsXYZ &params) {
        const KrausChannel phi = make_phi_xyz(params);
        out = diagonal_transition(phi);
        env = diagonal_transition(complementary(phi));
    }

    double operator()(const std::array<double, 4> &p) const {
        double v = 0.0;
        for (std::size_t i = 0; i < 4; ++i) {
            double a = 0.0;
            double b = 0.0;
            for (std::size_t j = 0; j < 4; ++j) {
                a += out[i][j] * p[j];
                b += env[i][j] * p[j];
            }
            v += plain_eta(a) - plain_eta(b);
        }
        return v;
    }
};

/// Maximum of the oracle over the simplex grid with spacing 1/n.
inline double simplex_grid_max(const DiagonalCoherentOracle &f, int n) {
    double best = -1e300;
    const double inv = 1.0 / n;
    for (int a = 0; a <= n; ++a) {
        for (int b = 0; a + b <= n; ++b) {
            for (int c = 0; a + b + c <= n; ++c) {
                const std::array<double, 4> p{a * inv, b * inv, c * inv, (n - a - b - c) * inv};
                best = std::max(best, f(p));
            }
        }
    }
    return best;
}

/// Qubit amplitude-damping capacity, max over t of
/// h((1-g)t) - h(g t) with h the binary entropy, by a dense scan.
inline double qubit_ad_capacity(double gamma, int n = 100000) {
    auto h = [](double v) { return plain_eta(v) + plain_eta(1.0 - v); };
    double best = 0.0;
    for (int i = 0; i <= n; ++i) {
        const double t = static_cast<double>(i) / n;
        best = std::max(best, h((1.0 - gamma) * t) - h(gamma * t));
    }
    return best;
}

inline std::vector<ComplexMatrix> z_type_diagonals(unsigned m) {
    std::vector<ComplexMatrix> out;
    for (const auto &p : all_paulis(m)) {
        if (p.x_mask == 0) {
            out.push_back(pauli_matrix(p));
        }
    }
    return out;
}

}  // namespace qcap::testing
