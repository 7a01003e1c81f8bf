#include "wabl/defuzz.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace wabl {

namespace {

constexpr double kWeightSumTol = 1e-12;

/// Exact integral of f(xi) * m * xi^(m-1) for a breakpoint-list side f.
double weighted_side_integral(const std::vector<LevelPoint>& pts, double m) {
    auto antiderivative = [m](double a, double b, double xi) {
        // d/dxi [ a*m/(m+1)*xi^(m+1) + b*xi^m ] = (a*xi + b) * m * xi^(m-1)
        return a * m / (m + 1.0) * std::pow(xi, m + 1.0) + b * std::pow(xi, m);
    };
    double total = 0.0;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        const double x0 = pts[i - 1].xi;
        const double x1 = pts[i].xi;
        if (x1 <= x0) continue; // jump breakpoints carry no measure
        const double a = (pts[i].value - pts[i - 1].value) / (x1 - x0);
        const double b = pts[i - 1].value - a * x0;
        total += antiderivative(a, b, x1) - antiderivative(a, b, x0);
    }
    return total;
}

} // namespace

WablParams::WablParams(double c_left_, double c_right_, double m_)
    : c_left(c_left_), c_right(c_right_), m(m_) {
    if (c_left < 0.0 || c_right < 0.0) {
        throw DomainError("side weights must be nonnegative");
    }
    if (std::abs(c_left + c_right - 1.0) > kWeightSumTol) {
        throw DomainError("side weights must sum to 1 (got " +
                          std::to_string(c_left + c_right) + ")");
    }
    if (!(m > 0.0)) {
        throw DomainError("weight exponent m must be positive");
    }
}

double weight_density(const WablParams& params, double xi) {
    if (xi < 0.0 || xi > 1.0) {
        throw DomainError("level " + std::to_string(xi) + " outside [0, 1]");
    }
    if (xi == 0.0) {
        if (params.m < 1.0) {
            throw RangeError("weight density is unbounded at level 0 for m < 1");
        }
        return params.m == 1.0 ? 1.0 : 0.0;
    }
    return params.m * std::pow(xi, params.m - 1.0);
}

double wabl_analytic(const LevelRep& rep, const WablParams& params) {
    return params.c_left * weighted_side_integral(rep.left_points(), params.m) +
           params.c_right * weighted_side_integral(rep.right_points(), params.m);
}

double wabl_quadrature(const LevelRep& rep, const WablParams& params, int nodes) {
    if (nodes < 16) {
        throw ArgumentError("quadrature needs at least 16 panels");
    }
    const double m = params.m;
    // Grading exponent: 1 keeps the mesh uniform; 2/m compresses panels
    // toward 0 fast enough that the xi^(m-1) weight stays resolved.
    const double grade = m >= 1.0 ? 1.0 : 2.0 / m;

    double sum_w = 0.0;
    double sum_left = 0.0;
    double sum_right = 0.0;
    double t0 = 0.0;
    for (int j = 1; j <= nodes; ++j) {
        const double t1 = grade == 1.0 ? static_cast<double>(j) / nodes
                                       : std::pow(static_cast<double>(j) / nodes, grade);
        const double width = t1 - t0;
        if (width > 0.0) {
            const double mid = t0 + width / 2.0; // never 0: the rule is open
            const double w = weight_density(params, mid) * width;
            sum_w += w;
            sum_left += w * rep.left(mid);
            sum_right += w * rep.right(mid);
        }
        t0 = t1;
    }
    return (params.c_left * sum_left + params.c_right * sum_right) / sum_w;
}

double centroid(const PiecewiseLinearMF& mf) {
    const auto& pts = mf.points();
    const Interval& u = mf.universe();

    // Walk the universe as linear segments, including the constant
    // extensions outside [first x, last x].
    double area = 0.0;
    double moment = 0.0;
    auto add_segment = [&](double x0, double mu0, double x1, double mu1) {
        const double w = x1 - x0;
        if (w <= 0.0) return;
        area += w * (mu0 + mu1) / 2.0;
        moment += w * (x0 * (2.0 * mu0 + mu1) + x1 * (mu0 + 2.0 * mu1)) / 6.0;
    };

    if (!mf.is_singleton()) {
        add_segment(u.lo, pts.front().mu, pts.front().x, pts.front().mu);
        for (std::size_t i = 1; i < pts.size(); ++i) {
            add_segment(pts[i - 1].x, pts[i - 1].mu, pts[i].x, pts[i].mu);
        }
        add_segment(pts.back().x, pts.back().mu, u.hi, pts.back().mu);
    }

    if (area <= 0.0) {
        throw ArgumentError("centroid undefined: membership has zero area (degenerate input)");
    }
    return moment / area;
}

double median_of_maximum(const PiecewiseLinearMF& mf) {
    const Interval c = mf.core();
    return (c.lo + c.hi) / 2.0;
}

} // namespace wabl
