#include "wabl/fuzzy_num.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace wabl {

namespace {

std::string describe(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

/// Right-continuous evaluation of a breakpoint list (xi ascending, repeats
/// allowed). At a repeated xi the later value wins.
double polyline_at(const std::vector<LevelPoint>& pts, double xi) {
    if (xi < pts.front().xi) return pts.front().value;
    if (xi >= pts.back().xi) return pts.back().value;
    auto it = std::upper_bound(pts.begin(), pts.end(), xi,
                               [](double v, const LevelPoint& p) { return v < p.xi; });
    const LevelPoint& hi = *it;
    const LevelPoint& lo = *(it - 1);
    if (hi.xi == lo.xi) return hi.value;
    const double t = (xi - lo.xi) / (hi.xi - lo.xi);
    return std::lerp(lo.value, hi.value, t);
}

/// Left-continuous counterpart; at a repeated xi the earlier value wins.
double polyline_before(const std::vector<LevelPoint>& pts, double xi) {
    if (xi <= pts.front().xi) return pts.front().value;
    if (xi > pts.back().xi) return pts.back().value;
    auto it = std::lower_bound(pts.begin(), pts.end(), xi,
                               [](const LevelPoint& p, double v) { return p.xi < v; });
    if (it != pts.end() && it->xi == xi) return it->value;
    const LevelPoint& hi = *it;
    const LevelPoint& lo = *(it - 1);
    const double t = (xi - lo.xi) / (hi.xi - lo.xi);
    return std::lerp(lo.value, hi.value, t);
}

void validate_side(const std::vector<LevelPoint>& pts, bool nondecreasing, const char* label) {
    if (pts.size() < 2) {
        throw RepresentationError(std::string(label) + " side needs at least two breakpoints");
    }
    if (pts.front().xi != 0.0 || pts.back().xi != 1.0) {
        throw RepresentationError(std::string(label) + " side must span levels 0 to 1");
    }
    for (std::size_t i = 1; i < pts.size(); ++i) {
        if (pts[i].xi < pts[i - 1].xi) {
            throw RepresentationError(std::string(label) + " side has decreasing level breakpoints");
        }
        const bool ok = nondecreasing ? pts[i].value >= pts[i - 1].value - kBreakpointTol
                                      : pts[i].value <= pts[i - 1].value + kBreakpointTol;
        if (!ok) {
            throw RepresentationError(std::string(label) + " side is not monotone in the level");
        }
    }
}

} // namespace

PiecewiseLinearMF::PiecewiseLinearMF(std::vector<MfPoint> points, Interval universe)
    : points_(std::move(points)), universe_(universe) {
    if (!(universe_.lo < universe_.hi) && points_.size() != 1) {
        throw DomainError("universe must be a nondegenerate interval");
    }
    if (points_.empty()) {
        throw RepresentationError("membership function needs at least one breakpoint");
    }

    // Deduplicate breakpoints closer than kBreakpointTol in x.
    std::vector<MfPoint> dedup;
    dedup.reserve(points_.size());
    for (const MfPoint& p : points_) {
        if (!dedup.empty() && std::abs(p.x - dedup.back().x) <= kBreakpointTol) {
            if (std::abs(p.mu - dedup.back().mu) > kBreakpointTol) {
                throw RepresentationError("two breakpoints at x=" + describe(p.x) +
                                          " carry different degrees");
            }
            continue;
        }
        dedup.push_back(p);
    }
    points_ = std::move(dedup);

    double max_mu = 0.0;
    for (std::size_t i = 0; i < points_.size(); ++i) {
        const MfPoint& p = points_[i];
        if (i > 0 && p.x <= points_[i - 1].x) {
            throw RepresentationError("breakpoint x values must be strictly increasing");
        }
        if (p.x < universe_.lo - kBreakpointTol || p.x > universe_.hi + kBreakpointTol) {
            throw DomainError("breakpoint x=" + describe(p.x) + " outside universe [" +
                              describe(universe_.lo) + ", " + describe(universe_.hi) + "]");
        }
        if (p.mu < 0.0 || p.mu > 1.0) {
            throw RepresentationError("degree " + describe(p.mu) + " outside [0, 1]");
        }
        max_mu = std::max(max_mu, p.mu);
    }
    if (max_mu != 1.0) {
        throw RepresentationError("membership function is not normal (max degree " +
                                  describe(max_mu) + " < 1)");
    }

    first_top_ = 0;
    while (points_[first_top_].mu != 1.0) ++first_top_;
    last_top_ = points_.size() - 1;
    while (points_[last_top_].mu != 1.0) --last_top_;

    // Quasi-concavity: nondecreasing up to the first top, flat at 1 across
    // the top, nonincreasing after the last top.
    for (std::size_t i = 1; i <= first_top_; ++i) {
        if (points_[i].mu < points_[i - 1].mu) {
            throw RepresentationError("membership function is not quasi-concave "
                                      "(dip before the peak)");
        }
    }
    for (std::size_t i = first_top_; i <= last_top_; ++i) {
        if (points_[i].mu != 1.0) {
            throw RepresentationError("membership function is not quasi-concave "
                                      "(dip inside the level-1 plateau)");
        }
    }
    for (std::size_t i = last_top_ + 1; i < points_.size(); ++i) {
        if (points_[i].mu > points_[i - 1].mu) {
            throw RepresentationError("membership function is not quasi-concave "
                                      "(rise after the peak)");
        }
    }
}

double PiecewiseLinearMF::membership(double x) const {
    if (x < universe_.lo - kBreakpointTol || x > universe_.hi + kBreakpointTol) {
        throw DomainError("x=" + describe(x) + " outside universe [" + describe(universe_.lo) +
                          ", " + describe(universe_.hi) + "]");
    }
    if (is_singleton()) {
        return std::abs(x - points_.front().x) <= kBreakpointTol ? 1.0 : 0.0;
    }
    if (x <= points_.front().x) return points_.front().mu;
    if (x >= points_.back().x) return points_.back().mu;
    auto it = std::upper_bound(points_.begin(), points_.end(), x,
                               [](double v, const MfPoint& p) { return v < p.x; });
    const MfPoint& hi = *it;
    const MfPoint& lo = *(it - 1);
    const double t = (x - lo.x) / (hi.x - lo.x);
    return std::clamp(std::lerp(lo.mu, hi.mu, t), 0.0, 1.0);
}

Interval PiecewiseLinearMF::core() const {
    if (is_singleton()) {
        return {points_.front().x, points_.front().x};
    }
    const double lo = first_top_ == 0 ? universe_.lo : points_[first_top_].x;
    const double hi = last_top_ == points_.size() - 1 ? universe_.hi : points_[last_top_].x;
    return {lo, hi};
}

PiecewiseLinearMF triangular_mf(double a, double peak, double b, Interval universe) {
    if (!(a <= peak && peak <= b)) {
        throw DomainError("triangular shape requires a <= peak <= b");
    }
    std::vector<MfPoint> pts;
    if (a < peak) pts.push_back({a, 0.0});
    pts.push_back({peak, 1.0});
    if (b > peak) pts.push_back({b, 0.0});
    return PiecewiseLinearMF(std::move(pts), universe);
}

PiecewiseLinearMF trapezoidal_mf(double a, double b, double c, double d, Interval universe) {
    if (!(a <= b && b <= c && c <= d)) {
        throw DomainError("trapezoidal shape requires a <= b <= c <= d");
    }
    std::vector<MfPoint> pts;
    if (a < b) pts.push_back({a, 0.0});
    pts.push_back({b, 1.0});
    if (c > b) pts.push_back({c, 1.0});
    if (d > c) pts.push_back({d, 0.0});
    return PiecewiseLinearMF(std::move(pts), universe);
}

PiecewiseLinearMF singleton_mf(double x0, Interval universe) {
    return PiecewiseLinearMF({{x0, 1.0}}, universe);
}

LevelRep::LevelRep(std::vector<LevelPoint> left, std::vector<LevelPoint> right)
    : left_(std::move(left)), right_(std::move(right)) {
    validate_side(left_, /*nondecreasing=*/true, "left");
    validate_side(right_, /*nondecreasing=*/false, "right");
    if (left_.back().value > right_.back().value + kBreakpointTol) {
        throw RepresentationError("empty core: left(1) > right(1)");
    }
    // left <= right pointwise; on each affine piece the difference is
    // extremal at grid levels, so checking the merged grid suffices.
    auto check = [&](double xi) {
        if (polyline_at(left_, xi) > polyline_at(right_, xi) + kBreakpointTol) {
            throw RepresentationError("left(" + describe(xi) + ") exceeds right(" + describe(xi) +
                                      ")");
        }
    };
    for (const LevelPoint& p : left_) check(p.xi);
    for (const LevelPoint& p : right_) check(p.xi);
}

LevelRep LevelRep::singleton(double x0) {
    return LevelRep({{0.0, x0}, {1.0, x0}}, {{0.0, x0}, {1.0, x0}});
}

double LevelRep::left(double xi) const {
    if (xi < 0.0 || xi > 1.0) throw DomainError("level " + describe(xi) + " outside [0, 1]");
    return polyline_at(left_, xi);
}

double LevelRep::right(double xi) const {
    if (xi < 0.0 || xi > 1.0) throw DomainError("level " + describe(xi) + " outside [0, 1]");
    return polyline_at(right_, xi);
}

double LevelRep::membership(double x) const {
    // sup{ xi : left(xi) <= x } for the rising side.
    auto sup_left = [&]() {
        if (x >= left_.back().value) return 1.0;
        // First breakpoint whose value exceeds x; the crossing lies in the
        // segment ending there.
        auto it = std::upper_bound(left_.begin(), left_.end(), x,
                                   [](double v, const LevelPoint& p) { return v < p.value; });
        if (it == left_.begin()) return -1.0; // x below the support
        const LevelPoint& hi = *it;
        const LevelPoint& lo = *(it - 1);
        if (hi.xi == lo.xi || hi.value == lo.value) return lo.xi;
        return lo.xi + (x - lo.value) / (hi.value - lo.value) * (hi.xi - lo.xi);
    };
    // sup{ xi : right(xi) >= x } for the falling side.
    auto sup_right = [&]() {
        if (x <= right_.back().value) return 1.0;
        auto it = std::upper_bound(right_.begin(), right_.end(), x,
                                   [](double v, const LevelPoint& p) { return v > p.value; });
        if (it == right_.begin()) return -1.0; // x above the support
        const LevelPoint& hi = *it;
        const LevelPoint& lo = *(it - 1);
        if (hi.xi == lo.xi || hi.value == lo.value) return lo.xi;
        return lo.xi + (x - lo.value) / (hi.value - lo.value) * (hi.xi - lo.xi);
    };
    const double a = sup_left();
    const double b = sup_right();
    if (a < 0.0 || b < 0.0) return 0.0;
    return std::clamp(std::min(a, b), 0.0, 1.0);
}

LevelRep to_level_rep(const PiecewiseLinearMF& mf) {
    const auto& pts = mf.points();
    const Interval& u = mf.universe();
    const std::size_t n = pts.size();

    if (mf.is_singleton()) {
        return LevelRep::singleton(pts.front().x);
    }

    std::size_t first_top = 0;
    while (pts[first_top].mu != 1.0) ++first_top;
    std::size_t last_top = n - 1;
    while (pts[last_top].mu != 1.0) --last_top;

    std::vector<LevelPoint> left;
    if (first_top == 0) {
        // Degree 1 extends to the universe edge: no rising side.
        left = {{0.0, u.lo}, {1.0, u.lo}};
    } else {
        // Collapse leading zero-degree breakpoints; the support starts at the
        // last of them.
        std::size_t s = 0;
        while (s + 1 < first_top && pts[s].mu == 0.0 && pts[s + 1].mu == 0.0) ++s;
        if (pts[s].mu > 0.0) {
            // Boundary plateau below level 1: cuts at or below that degree
            // reach the universe edge.
            left.push_back({0.0, u.lo});
            left.push_back({pts[s].mu, u.lo});
        }
        left.push_back({pts[s].mu, pts[s].x});
        for (std::size_t i = s + 1; i <= first_top; ++i) {
            left.push_back({pts[i].mu, pts[i].x});
        }
    }

    std::vector<LevelPoint> right;
    if (last_top == n - 1) {
        right = {{0.0, u.hi}, {1.0, u.hi}};
    } else {
        std::size_t e = n - 1;
        while (e - 1 > last_top && pts[e].mu == 0.0 && pts[e - 1].mu == 0.0) --e;
        // Build with xi descending, then reverse.
        std::vector<LevelPoint> desc;
        for (std::size_t i = last_top; i <= e; ++i) {
            desc.push_back({pts[i].mu, pts[i].x});
        }
        if (pts[e].mu > 0.0) {
            desc.push_back({pts[e].mu, u.hi});
            desc.push_back({0.0, u.hi});
        } else {
            desc.back().xi = 0.0;
        }
        right.assign(desc.rbegin(), desc.rend());
    }

    return LevelRep(std::move(left), std::move(right));
}

namespace {

std::vector<LevelPoint> add_sides(const std::vector<LevelPoint>& a,
                                  const std::vector<LevelPoint>& b) {
    std::vector<double> grid;
    grid.reserve(a.size() + b.size());
    for (const LevelPoint& p : a) grid.push_back(p.xi);
    for (const LevelPoint& p : b) grid.push_back(p.xi);
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    std::vector<LevelPoint> out;
    out.reserve(grid.size() + 2);
    for (double xi : grid) {
        const double before = polyline_before(a, xi) + polyline_before(b, xi);
        const double after = polyline_at(a, xi) + polyline_at(b, xi);
        if (before != after && xi != 0.0) out.push_back({xi, before});
        out.push_back({xi, after});
    }
    return out;
}

} // namespace

LevelRep level_add(const LevelRep& a, const LevelRep& b) {
    return LevelRep(add_sides(a.left_points(), b.left_points()),
                    add_sides(a.right_points(), b.right_points()));
}

} // namespace wabl
