#pragma once

#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qcap/capacity.h"
#include "qcap/families.h"

namespace qcap {

/// A sampled function parameter -> value.
struct BoundCurve {
    std::string parameter;  // CSV column names
    std::string value;
    std::vector<std::pair<double, double>> samples;

    /// `parameter,value` header, then one `%.12g,%.12g` row per sample, LF
    /// line endings.
    std::string to_csv() const;
};

/// Upper bound on the capacity of the Pauli twirl of Phi_{x,y,z}:
///   eta((1+2x+z)/4) + 2 eta((1-x+y)/4) + eta((1-2y-z)/4)
///   - eta(1-(2x+2y+z)/4) - 2 eta((x+y)/4) - eta(z/4),
/// which is I_coh(Phi_{x,y,z}, 1/4). RegimeError outside the degradable regime.
double main_theorem_bound(const ChannelParamsXYZ &params);

/// x(p) = (8/9)(sqrt(1-p) - 1 + 2p) on 0 <= p <= 3/8.
double dep4_x_of_p(double p);

/// The bound above on the slice (x, 0, x):
/// eta((1+3x)/4) + 3 eta((1-x)/4) - eta(1-3x/4) - 3 eta(x/4).
double dep4_candidate(double x);

/// Chord between the identity channel (capacity 2) at p = 0 and the
/// zero-capacity no-cloning channel at p = 3/8: 2 - 16p/3.
double dep4_line(double p);

/// (d - 1)/(2d), the depolarizing strength where D_{p,d} is both degradable
/// and antidegradable.
double no_cloning_p(double d);

/// Greatest convex function below `points`, evaluated at `at`. Points are
/// combined by a monotone-chain lower hull; `at` must lie inside the points'
/// parameter range.
std::vector<double> lower_convex_envelope(std::vector<std::pair<double, double>> points,
                                          const std::vector<double> &at);

/// Upper bound on Q(D_{p,4}) over an inclusive grid of `steps` points: the
/// lower convex envelope of min(dep4_candidate(x(p)), dep4_line(p)) together
/// with the achievable anchors (0, 2) and (3/8, 0).
BoundCurve dep4_bound_curve(double pmin, double pmax, int steps);

struct LocallySymmetricBound {
    double q0 = 0.0;  // weight-class masses of the locally symmetric channel
    double q1 = 0.0;
    double q2 = 0.0;
    double bound = 0.0;
};

/// The locally symmetric Pauli channel obtained by Pauli twirling and then
/// local-Clifford twirling Phi_{x,y,z}, and its capacity bound.
LocallySymmetricBound locally_symmetric_bound(const ChannelParamsXYZ &params);

/// Closed-form coefficients for the locally symmetric channel:
///   q0 = (1 + 2 s1 + s2)/4
///   q1 = sqrt((1 - s2)^2/8 + (sqrt x + sqrt y)^2/4)
///   q2 = sqrt((1 - 2 s1 + s2)^2/16 + (sqrt x - sqrt y)^2/4 + z/4)
/// These are amplitudes: q0^2, q1^2 and q2^2 equal the weight-class masses.
std::array<double, 3> printed_symmetric_coefficients(const ChannelParamsXYZ &params);

enum class CurveKind { Dep4, SymmetricSlice, AmplitudeDampingCapacity };

/// Accepts "dep4", "symmetric" / "symmetric-slice", "ad" /
/// "amplitude-damping-capacity"; ParameterError otherwise.
CurveKind parse_curve_kind(std::string_view name);

struct SweepGrid {
    double min = 0.0;
    double max = 0.0;
    int steps = 2;
};

/// Default inclusive grid for a curve kind.
SweepGrid default_grid(CurveKind kind, int steps);

/// Deterministic curve for one of the supported kinds:
///   Dep4: dep4_bound_curve over p.
///   SymmetricSlice: main_theorem_bound(x, 0, 0) over x.
///   AmplitudeDampingCapacity: capacity of Phi_{g, g(1-g), g^2} over gamma.
/// Grid points are evaluated in parallel (QCAP_THREADS caps the workers)
/// and written back by index.
BoundCurve sweep_curve(CurveKind kind, const SweepGrid &grid, const OptimizerConfig &cfg = {});

}  // namespace qcap
