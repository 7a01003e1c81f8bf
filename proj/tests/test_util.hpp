#ifndef WABL_TESTS_TEST_UTIL_HPP_
#define WABL_TESTS_TEST_UTIL_HPP_

#include <random>
#include <vector>

#include "wabl/fuzzy_num.hpp"

namespace wabl::testutil {

/// Uniform draw quantized to multiples of 1/64, so breakpoint sums and
/// merges stay exact in floating point.
inline double dyadic(std::mt19937& rng, double lo, double hi) {
    std::uniform_int_distribution<int> d(0, 64);
    return lo + (hi - lo) * (d(rng) / 64.0);
}

/// Random normal quasi-concave membership function on [0, 100], with a
/// mix of triangles, trapezoids, edge plateaus and interior flats.
inline PiecewiseLinearMF random_mf(std::mt19937& rng) {
    const Interval universe{0.0, 100.0};
    std::uniform_int_distribution<int> coin(0, 9);
    std::uniform_int_distribution<int> seg_count(0, 2);

    // Support and core as distinct quantized grid coordinates.
    auto coord = [&](double lo, double hi) { return dyadic(rng, lo, hi); };
    double a = coord(0.0, 40.0);
    double c1 = a + coord(1.0, 25.0);
    double c2 = c1 + (coin(rng) < 4 ? coord(0.0, 15.0) : 0.0); // sometimes a plateau
    double b = c2 + coord(1.0, 25.0);

    std::vector<MfPoint> pts;

    const int edge_style = coin(rng); // 0-5: rise from 0, 6-7: partial edge, 8-9: no left side
    if (edge_style >= 8) {
        // Degree 1 from the universe edge.
        pts.push_back({c1, 1.0});
    } else {
        const double mu0 = edge_style >= 6 ? dyadic(rng, 1.0 / 64.0, 0.75) : 0.0;
        pts.push_back({a, mu0});
        double x = a;
        double mu = mu0;
        for (int s = seg_count(rng); s > 0 && x + 2.0 < c1; --s) {
            x += dyadic(rng, 0.5, (c1 - x) / 2.0);
            double next_mu = mu + dyadic(rng, 0.0, (1.0 - mu) / 2.0);
            if (coin(rng) < 2) next_mu = mu; // interior flat
            pts.push_back({x, next_mu});
            mu = next_mu;
        }
        pts.push_back({c1, 1.0});
    }
    if (c2 > c1) pts.push_back({c2, 1.0});
    if (coin(rng) == 0) {
        // No right side: degree 1 out to the universe edge.
    } else {
        double x = c2;
        double mu = 1.0;
        for (int s = seg_count(rng); s > 0 && x + 2.0 < b; --s) {
            x += dyadic(rng, 0.5, (b - x) / 2.0);
            // Keeping mu unchanged extends a plateau; both are valid shapes.
            const double next_mu = coin(rng) < 2 ? mu : mu - dyadic(rng, 0.0, mu / 2.0);
            pts.push_back({x, next_mu});
            mu = next_mu;
        }
        double mu_end = coin(rng) < 7 ? 0.0 : dyadic(rng, 0.0, 0.75);
        if (mu_end > mu) mu_end = mu;
        pts.push_back({b, mu_end});
    }
    return PiecewiseLinearMF(std::move(pts), universe);
}

/// Random level-form side: monotone breakpoints over quantized levels.
inline std::vector<LevelPoint> random_side(std::mt19937& rng, double from, double to) {
    std::uniform_int_distribution<int> n_mid(0, 3);
    std::uniform_int_distribution<int> xi_step(1, 31);

    std::vector<double> xis{0.0, 1.0};
    for (int i = n_mid(rng); i > 0; --i) xis.push_back(xi_step(rng) / 32.0);
    std::sort(xis.begin(), xis.end());
    xis.erase(std::unique(xis.begin(), xis.end()), xis.end());

    std::vector<double> values;
    values.reserve(xis.size());
    for (std::size_t i = 0; i < xis.size(); ++i) values.push_back(dyadic(rng, 0.0, 1.0));
    std::sort(values.begin(), values.end());
    if (to < from) std::reverse(values.begin(), values.end());

    std::vector<LevelPoint> side;
    side.reserve(xis.size());
    const double lo = std::min(from, to), hi = std::max(from, to);
    for (std::size_t i = 0; i < xis.size(); ++i) {
        side.push_back({xis[i], lo + (hi - lo) * values[i]});
    }
    side.front().value = from;
    side.back().value = to;
    return side;
}

/// Random valid level representation with support inside [0, 1000].
inline LevelRep random_level_rep(std::mt19937& rng) {
    const double support_lo = dyadic(rng, 0.0, 400.0);
    const double core_lo = support_lo + dyadic(rng, 0.0, 200.0);
    const double core_hi = core_lo + dyadic(rng, 0.0, 200.0);
    const double support_hi = core_hi + dyadic(rng, 0.0, 200.0);
    return LevelRep(random_side(rng, support_lo, core_lo),
                    random_side(rng, support_hi, core_hi));
}

} // namespace wabl::testutil

#endif
