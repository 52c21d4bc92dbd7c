#pragma once

#include <complex>
#include <vector>

#include "szj/fourier.hpp"

namespace szj {

struct PointMass {
    double position = 0.0; // theta on the circle, x on the interval
    double mass = 0.0;
};

/// Probability measure on the circle: absolutely continuous part
/// w(theta) dtheta / 2pi sampled on the midpoint grid, plus point masses.
/// Conjugation-invariant measures satisfy w(theta) = w(-theta) and carry
/// masses in +/-theta pairs (or at 0, pi).
struct CircleMeasure {
    int grid = 0;
    std::vector<double> weight; // size == grid
    std::vector<PointMass> masses;
    bool conjugation_invariant = true;

    double total_mass() const;
    /// Checks normalization (1e-10) and, when flagged, conjugation invariance.
    void validate() const;
    /// Scales the weight and masses to total mass one.
    CircleMeasure normalized() const;

    static CircleMeasure lebesgue(int grid);
    static CircleMeasure from_weight(std::vector<double> w, std::vector<PointMass> m = {});
};

/// Measure on the interval: density v(x) sampled at the images
/// x_k = 2 cos(theta) of the upper-half midpoint grid (ascending in x,
/// size grid/2, endpoints excluded), plus point masses (eigenvalues may sit
/// outside [-2, 2]).
struct IntervalMeasure {
    int grid = 0;               // the circle grid it corresponds to
    std::vector<double> density; // size == grid/2, ascending x
    std::vector<PointMass> masses;

    double node(int k) const;            // x_k
    double quad_weight(int k) const;     // weight of node k in integrals of v dx
    double total_mass() const;
    void validate() const;
    IntervalMeasure normalized() const;

    /// \int g dnu over the a.c. part and the masses.
    template <typename F>
    double integrate(const F& g) const {
        double acc = 0.0;
        for (int k = 0; k < static_cast<int>(density.size()); ++k) {
            acc += quad_weight(k) * density[static_cast<size_t>(k)] * g(node(k));
        }
        for (const PointMass& pm : masses) acc += pm.mass * g(pm.position);
        return acc;
    }

    double moment(int k) const;

    static IntervalMeasure from_density(int grid, std::vector<double> v,
                                        std::vector<PointMass> m = {});
    /// Sample an analytic density on the node set.
    template <typename F>
    static IntervalMeasure sample(int grid, const F& v, std::vector<PointMass> m = {}) {
        std::vector<double> d(static_cast<size_t>(grid / 2));
        IntervalMeasure tmp;
        tmp.grid = grid;
        for (int k = 0; k < grid / 2; ++k) d[static_cast<size_t>(k)] = v(tmp.node_for(grid, k));
        return from_density(grid, std::move(d), std::move(m));
    }

    static double node_for(int grid, int k);
};

struct ClassVReport {
    int l = 0, r = 0;           // boundary exponents in {-1, +1}
    FourierSeries log_v0;       // log v0(2 cos theta) as a series in theta
    double log_v0_norm = 0.0;   // intersection-space norm of the coefficients
    bool eigenvalues_ok = true; // all point masses strictly off [-2, 2]
};

/// Pushforward under x = 2 cos theta. The a.c. parts obey
/// v(x) = w(arccos(x/2)) / (pi sqrt(4 - x^2)) exactly at the nodes; a mass
/// pair at +/-theta0 maps to one mass at 2 cos theta0 with the combined
/// weight; masses at 0, pi map to +/-2.
IntervalMeasure szego_forward(const CircleMeasure& mu);

/// Inverse map: w(theta) = 2 pi |sin theta| v(2 cos theta); an interior mass
/// splits evenly into a +/-theta pair. Requires support inside [-2, 2].
CircleMeasure szego_inverse(const IntervalMeasure& nu);

/// F(z) = \int (e^{i theta} + z) / (e^{i theta} - z) dmu, |z| < 1 - 1e-6.
/// Evaluated through the Fourier moments of the a.c. part (exact for
/// band-limited weights) plus closed-form atom kernels.
cplx caratheodory(const CircleMeasure& mu, cplx z);

/// Detects the boundary exponents l, r from log-log slopes over the last 5%
/// of nodes at each endpoint, strips the square-root factors, and analyzes
/// log v0 as a Fourier series in theta. ExponentUndetermined when a slope is
/// not within 0.2 of +/-1/2; masses at exactly +/-2 are rejected.
ClassVReport check_class_V(const IntervalMeasure& nu);

} // namespace szj
