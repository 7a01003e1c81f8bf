#ifndef WABL_FUZZY_NUM_HPP_
#define WABL_FUZZY_NUM_HPP_

#include <cstddef>
#include <vector>

#include "wabl/errors.hpp"

namespace wabl {

/// Absolute tolerance for breakpoint deduplication, in universe units.
inline constexpr double kBreakpointTol = 1e-9;

/// Closed interval [lo, hi].
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    double width() const { return hi - lo; }
    bool contains(double x) const { return x >= lo && x <= hi; }
};

/// One membership breakpoint: degree mu at coordinate x.
struct MfPoint {
    double x = 0.0;
    double mu = 0.0;
};

/// A normal, quasi-concave membership function given as ordered (x, mu)
/// breakpoints over a closed universe. Between breakpoints the degree is
/// linearly interpolated; outside [first x, last x] the boundary degree
/// extends constantly to the universe edges.
///
/// A single breakpoint (which must carry mu = 1) denotes the crisp
/// singleton: degree 1 at that coordinate and 0 elsewhere, with no
/// constant extension.
class PiecewiseLinearMF {
public:
    /// Validates all invariants; throws RepresentationError or DomainError.
    PiecewiseLinearMF(std::vector<MfPoint> points, Interval universe);

    /// Membership degree at x. Throws DomainError when x is outside the
    /// universe.
    double membership(double x) const;

    /// Interval on which the degree attains 1, constant extensions included.
    Interval core() const;

    bool is_singleton() const { return points_.size() == 1; }
    const std::vector<MfPoint>& points() const { return points_; }
    const Interval& universe() const { return universe_; }

private:
    std::vector<MfPoint> points_;
    Interval universe_;
    std::size_t first_top_ = 0; // first index with mu == 1
    std::size_t last_top_ = 0;  // last index with mu == 1
};

/// Triangular membership function with support [a, b] and peak at `peak`.
PiecewiseLinearMF triangular_mf(double a, double peak, double b, Interval universe);

/// Trapezoidal membership function: support [a, d], plateau [b, c].
PiecewiseLinearMF trapezoidal_mf(double a, double b, double c, double d, Interval universe);

/// Crisp singleton at x0.
PiecewiseLinearMF singleton_mf(double x0, Interval universe);

/// One breakpoint of a piecewise-linear function of the level xi.
struct LevelPoint {
    double xi = 0.0;
    double value = 0.0;
};

/// Level (LR) form of a fuzzy number: the cut at level xi is the interval
/// [left(xi), right(xi)], with left nondecreasing and right nonincreasing
/// in xi. Both sides are stored as breakpoint lists over xi in [0, 1];
/// a repeated xi encodes a jump (the cut endpoint of a membership plateau
/// below level 1). Evaluation is right-continuous.
class LevelRep {
public:
    /// Validates side monotonicity, xi coverage of [0, 1] and the
    /// left <= right ordering; throws RepresentationError.
    LevelRep(std::vector<LevelPoint> left, std::vector<LevelPoint> right);

    /// Degenerate number whose every cut is [x0, x0].
    static LevelRep singleton(double x0);

    double left(double xi) const;
    double right(double xi) const;
    const std::vector<LevelPoint>& left_points() const { return left_; }
    const std::vector<LevelPoint>& right_points() const { return right_; }

    /// Membership degree reconstructed from the cuts:
    /// sup{ xi : left(xi) <= x <= right(xi) }, 0 outside the support.
    double membership(double x) const;

    Interval support() const { return {left_.front().value, right_.front().value}; }
    Interval core() const { return {left_.back().value, right_.back().value}; }

private:
    std::vector<LevelPoint> left_;
    std::vector<LevelPoint> right_;
};

/// Converts a membership function to level form: left is the inverse of
/// the nondecreasing side, right the inverse of the nonincreasing side.
/// A side that holds degree 1 out to a universe edge maps to a constant
/// at that edge.
LevelRep to_level_rep(const PiecewiseLinearMF& mf);

/// Level-wise interval sum: the cut of the result at xi is the sum of the
/// operands' cuts at xi. The breakpoint grid is the union of the operands'
/// grids.
LevelRep level_add(const LevelRep& a, const LevelRep& b);

} // namespace wabl

#endif
