#ifndef WABL_DEFUZZ_HPP_
#define WABL_DEFUZZ_HPP_

#include "wabl/fuzzy_num.hpp"

namespace wabl {

/// Parameters of the level-weighted average: side weights c_left/c_right
/// (nonnegative, summing to 1) and the exponent m > 0 of the level-weight
/// density p(xi) = m * xi^(m-1).
///
/// Note on the exponent convention: the same power-law family is often
/// written (k+1) * xi^k; that is m = k + 1 here. The fan-controller
/// scenario default m = 2 is k = 1 in that convention.
struct WablParams {
    double c_left;
    double c_right;
    double m;

    /// Validates the constraints; throws DomainError.
    WablParams(double c_left, double c_right, double m);

    /// Equal side weights.
    static WablParams symmetric(double m) { return {0.5, 0.5, m}; }
    /// c_right = 1 - c_left.
    static WablParams with_left_weight(double c_left, double m) {
        return {c_left, 1.0 - c_left, m};
    }
};

/// Level-weight density p(xi) = m * xi^(m-1); integrates to 1 on [0, 1].
/// Throws DomainError for xi outside [0, 1] and RangeError at xi = 0 when
/// m < 1 (the density is unbounded there).
double weight_density(const WablParams& params, double xi);

/// Level-weighted average c_left * integral(L * p) + c_right * integral(R * p),
/// evaluated exactly: on each level segment where a side is affine
/// a*xi + b, the antiderivative of (a*xi + b) * m * xi^(m-1) is
/// a * m/(m+1) * xi^(m+1) + b * xi^m. The result always lies within the
/// support [L(0), R(0)].
double wabl_analytic(const LevelRep& rep, const WablParams& params);

/// Independent numeric cross-check of wabl_analytic: composite open
/// midpoint rule with `nodes` panels, so the density's xi = 0 endpoint is
/// never sampled. Panels are uniform for m >= 1 and graded toward 0 as
/// (j/n)^(2/m) for m < 1, where a uniform mesh cannot resolve the
/// endpoint singularity. Panel weights are renormalized to unit total
/// mass, making the rule exact for constant sides at any node count.
double wabl_quadrature(const LevelRep& rep, const WablParams& params, int nodes);

/// Center of area: integral(x * mu) / integral(mu) over the universe,
/// constant edge extensions included, computed exactly per linear segment.
/// Throws ArgumentError when the membership has zero area (degenerate
/// input, e.g. a crisp singleton).
double centroid(const PiecewiseLinearMF& mf);

/// Midpoint of the interval where the degree attains its maximum
/// (the core, edge extensions included).
double median_of_maximum(const PiecewiseLinearMF& mf);

} // namespace wabl

#endif
