#include "qcap/bounds.h"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "qcap/errors.h"
#include "qcap/parallel.h"
#include "qcap/twirl.h"

namespace qcap {

namespace {

constexpr double kNoCloning4 = 3.0 / 8.0;
constexpr double kHullTol = 1e-12;

std::string format_g12(double v) {
    char buf[64];
    // +0.0 turns a negative zero into "0".
    std::snprintf(buf, sizeof buf, "%.12g", v + 0.0);
    return buf;
}

std::vector<double> grid_points(const SweepGrid &grid) {
    std::vector<double> at(static_cast<std::size_t>(grid.steps));
    const double h = (grid.max - grid.min) / static_cast<double>(grid.steps - 1);
    for (int i = 0; i < grid.steps; ++i) {
        at[i] = grid.min + h * i;
    }
    at.back() = grid.max;
    return at;
}

void require_grid(const SweepGrid &grid) {
    if (grid.steps < 2) {
        throw DomainError("a curve needs steps >= 2");
    }
    if (!(grid.min < grid.max)) {
        throw DomainError("curve range needs min < max");
    }
}

}  // namespace

std::string BoundCurve::to_csv() const {
    std::string out = parameter + "," + value + "\n";
    for (const auto &[p, v] : samples) {
        out += format_g12(p);
        out += ',';
        out += format_g12(v);
        out += '\n';
    }
    return out;
}

double main_theorem_bound(const ChannelParamsXYZ &params) {
    require_degradable_regime(params);
    const double x = params.x;
    const double y = params.y;
    const double z = params.z;
    return eta((1.0 + 2.0 * x + z) / 4.0) + 2.0 * eta((1.0 - x + y) / 4.0) + eta((1.0 - 2.0 * y - z) / 4.0) -
           eta(1.0 - (2.0 * x + 2.0 * y + z) / 4.0) - 2.0 * eta((x + y) / 4.0) - eta(z / 4.0);
}

double dep4_x_of_p(double p) {
    if (!(p >= 0.0 && p <= kNoCloning4)) {
        throw DomainError("p must lie in [0, 3/8] (p <= 3/8 required)");
    }
    return (8.0 / 9.0) * (std::sqrt(1.0 - p) - 1.0 + 2.0 * p);
}

double dep4_candidate(double x) {
    return eta((1.0 + 3.0 * x) / 4.0) + 3.0 * eta((1.0 - x) / 4.0) - eta(1.0 - 3.0 * x / 4.0) - 3.0 * eta(x / 4.0);
}

double dep4_line(double p) {
    return 2.0 - 16.0 * p / 3.0;
}

double no_cloning_p(double d) {
    if (!(d >= 2.0)) {
        throw DomainError("no-cloning point needs dimension d >= 2");
    }
    return (d - 1.0) / (2.0 * d);
}

std::vector<double> lower_convex_envelope(std::vector<std::pair<double, double>> points,
                                          const std::vector<double> &at) {
    if (points.empty()) {
        throw DomainError("lower_convex_envelope needs points");
    }
    std::sort(points.begin(), points.end());
    std::vector<std::pair<double, double>> hull;
    for (const auto &pt : points) {
        if (!hull.empty() && hull.back().first == pt.first) {
            continue;  // sorted: the earlier point has the lower value
        }
        while (hull.size() >= 2) {
            const auto &a = hull[hull.size() - 2];
            const auto &b = hull.back();
            const double cross = (b.first - a.first) * (pt.second - a.second) - (b.second - a.second) * (pt.first - a.first);
            if (cross > kHullTol) {
                break;
            }
            hull.pop_back();
        }
        hull.push_back(pt);
    }
    std::vector<double> out;
    out.reserve(at.size());
    for (double t : at) {
        if (t < hull.front().first || t > hull.back().first) {
            throw DomainError("envelope evaluated outside its support");
        }
        auto hi = std::lower_bound(hull.begin(), hull.end(), t,
                                   [](const std::pair<double, double> &h, double v) { return h.first < v; });
        if (hi->first == t) {
            out.push_back(hi->second);
            continue;
        }
        const auto lo = std::prev(hi);
        const double w = (t - lo->first) / (hi->first - lo->first);
        out.push_back(lo->second + w * (hi->second - lo->second));
    }
    return out;
}

BoundCurve dep4_bound_curve(double pmin, double pmax, int steps) {
    if (!(pmin >= 0.0 && pmin <= kNoCloning4 && pmax >= 0.0 && pmax <= kNoCloning4)) {
        throw DomainError("dep4 grid out of range: 0 <= p <= 3/8 required");
    }
    const SweepGrid grid{pmin, pmax, steps};
    require_grid(grid);
    const auto at = grid_points(grid);
    std::vector<std::pair<double, double>> points;
    points.reserve(at.size() + 2);
    points.emplace_back(0.0, 2.0);
    points.emplace_back(kNoCloning4, 0.0);
    for (double p : at) {
        points.emplace_back(p, std::min(dep4_candidate(dep4_x_of_p(p)), dep4_line(p)));
    }
    const auto env = lower_convex_envelope(std::move(points), at);
    BoundCurve c{"p", "bound", {}};
    for (std::size_t i = 0; i < at.size(); ++i) {
        c.samples.emplace_back(at[i], env[i]);
    }
    return c;
}

LocallySymmetricBound locally_symmetric_bound(const ChannelParamsXYZ &params) {
    require_degradable_regime(params);
    const PauliChannel twirled = local_clifford_twirl(pauli_twirl(make_phi_xyz(params), 2));
    const auto masses = twirled.weight_class_masses();
    return {masses[0], masses[1], masses[2], main_theorem_bound(params)};
}

std::array<double, 3> printed_symmetric_coefficients(const ChannelParamsXYZ &params) {
    const double s1 = std::sqrt(1.0 - params.x);
    const double s2 = std::sqrt(std::max(0.0, 1.0 - 2.0 * params.y - params.z));
    const double sx = std::sqrt(params.x);
    const double sy = std::sqrt(params.y);
    const double q0 = (1.0 + 2.0 * s1 + s2) / 4.0;
    const double q1 = std::sqrt(std::pow(1.0 - s2, 2) / 8.0 + std::pow(sx + sy, 2) / 4.0);
    const double q2 = std::sqrt(std::pow(1.0 - 2.0 * s1 + s2, 2) / 16.0 + std::pow(sx - sy, 2) / 4.0 + params.z / 4.0);
    return {q0, q1, q2};
}

CurveKind parse_curve_kind(std::string_view name) {
    if (name == "dep4") {
        return CurveKind::Dep4;
    }
    if (name == "symmetric" || name == "symmetric-slice") {
        return CurveKind::SymmetricSlice;
    }
    if (name == "ad" || name == "amplitude-damping-capacity") {
        return CurveKind::AmplitudeDampingCapacity;
    }
    throw ParameterError("unknown curve kind '" + std::string(name) + "' (expected dep4, symmetric or ad)");
}

SweepGrid default_grid(CurveKind kind, int steps) {
    switch (kind) {
        case CurveKind::Dep4:
            return {0.0, kNoCloning4, steps};
        case CurveKind::SymmetricSlice:
            return {0.0, 0.49, steps};
        case CurveKind::AmplitudeDampingCapacity:
            return {0.0, 0.5, steps};
    }
    throw ParameterError("unknown curve kind");
}

BoundCurve sweep_curve(CurveKind kind, const SweepGrid &grid, const OptimizerConfig &cfg) {
    if (kind == CurveKind::Dep4) {
        return dep4_bound_curve(grid.min, grid.max, grid.steps);
    }
    require_grid(grid);
    const auto at = grid_points(grid);
    // Validate every point before starting any work.
    for (double t : at) {
        if (kind == CurveKind::SymmetricSlice) {
            require_degradable_regime({t, 0.0, 0.0});
        } else if (!(t >= 0.0 && t <= 0.5 + kRegimeGuard)) {
            throw RegimeError("gamma must lie in [0, 1/2]");
        }
    }
    std::vector<double> values(at.size());
    parallel_for(at.size(), [&](std::size_t i) {
        const double t = at[i];
        if (kind == CurveKind::SymmetricSlice) {
            values[i] = main_theorem_bound({t, 0.0, 0.0});
        } else if (t >= 0.5 - kRegimeGuard) {
            // gamma = 1/2: complement parameters equal the channel's own, so
            // the coherent information vanishes for every input.
            values[i] = 0.0;
        } else {
            values[i] = capacity_diagonal_program({t, t * (1.0 - t), t * t}, cfg).value;
        }
    });
    BoundCurve c = kind == CurveKind::SymmetricSlice ? BoundCurve{"x", "bound", {}} : BoundCurve{"gamma", "capacity", {}};
    for (std::size_t i = 0; i < at.size(); ++i) {
        c.samples.emplace_back(at[i], values[i]);
    }
    return c;
}

}  // namespace qcap
