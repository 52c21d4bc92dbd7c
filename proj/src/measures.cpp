#include "szj/measures.hpp"

#include <algorithm>
#include <cmath>

namespace szj {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kMassTol = 1e-10;
} // namespace

double CircleMeasure::total_mass() const {
    double acc = 0.0;
    for (double w : weight) acc += w;
    acc /= static_cast<double>(grid);
    for (const PointMass& pm : masses) acc += pm.mass;
    return acc;
}

void CircleMeasure::validate() const {
    if (grid <= 0 || static_cast<int>(weight.size()) != grid) {
        throw InvalidMeasure("CircleMeasure: weight size must equal grid");
    }
    for (double w : weight) {
        if (!std::isfinite(w) || w < 0.0) throw InvalidMeasure("CircleMeasure: weight must be >= 0");
    }
    for (const PointMass& pm : masses) {
        if (!(pm.mass > 0.0)) throw InvalidMeasure("CircleMeasure: masses must be positive");
    }
    if (std::abs(total_mass() - 1.0) > kMassTol) {
        throw InvalidMeasure("CircleMeasure: total mass must be 1");
    }
    if (conjugation_invariant) {
        for (int j = 0; j < grid; ++j) {
            if (std::abs(weight[static_cast<size_t>(j)] -
                         weight[static_cast<size_t>(grid - 1 - j)]) > 1e-10) {
                throw NotConjugationInvariant("CircleMeasure: w(theta) != w(-theta)");
            }
        }
        for (const PointMass& pm : masses) {
            const double th = pm.position;
            if (std::abs(std::sin(th)) < 1e-12) continue; // at 0 or pi
            const double partner = 2.0 * kPi - th;
            bool found = false;
            for (const PointMass& q : masses) {
                if (std::abs(std::remainder(q.position - partner, 2.0 * kPi)) < 1e-10 &&
                    std::abs(q.mass - pm.mass) < 1e-10) {
                    found = true;
                    break;
                }
            }
            if (!found) throw NotConjugationInvariant("CircleMeasure: unpaired mass");
        }
    }
}

CircleMeasure CircleMeasure::normalized() const {
    CircleMeasure out = *this;
    const double m = total_mass();
    if (!(m > 0.0)) throw InvalidMeasure("CircleMeasure: cannot normalize zero mass");
    for (double& w : out.weight) w /= m;
    for (PointMass& pm : out.masses) pm.mass /= m;
    return out;
}

CircleMeasure CircleMeasure::lebesgue(int grid) {
    CircleMeasure mu;
    mu.grid = grid;
    mu.weight.assign(static_cast<size_t>(grid), 1.0);
    return mu;
}

CircleMeasure CircleMeasure::from_weight(std::vector<double> w, std::vector<PointMass> m) {
    CircleMeasure mu;
    mu.grid = static_cast<int>(w.size());
    mu.weight = std::move(w);
    mu.masses = std::move(m);
    mu.validate();
    return mu;
}

double IntervalMeasure::node_for(int grid, int k) {
    // Ascending images of the upper-half midpoint grid: x_k = 2 cos(theta_j)
    // with j = grid/2 - 1 - k.
    return 2.0 * std::cos(theta_node(grid / 2 - 1 - k, grid));
}

double IntervalMeasure::node(int k) const { return node_for(grid, k); }

double IntervalMeasure::quad_weight(int k) const {
    // dx = 2 sin(theta) dtheta pulled back to the midpoint rule in theta.
    const double x = node(k);
    return (2.0 * kPi / static_cast<double>(grid)) * std::sqrt(4.0 - x * x);
}

double IntervalMeasure::total_mass() const {
    return integrate([](double) { return 1.0; });
}

void IntervalMeasure::validate() const {
    if (grid <= 0 || static_cast<int>(density.size()) != grid / 2) {
        throw InvalidMeasure("IntervalMeasure: density size must equal grid/2");
    }
    for (double v : density) {
        if (!std::isfinite(v) || v < 0.0) throw InvalidMeasure("IntervalMeasure: density must be >= 0");
    }
    for (const PointMass& pm : masses) {
        if (!(pm.mass > 0.0)) throw InvalidMeasure("IntervalMeasure: masses must be positive");
    }
    if (std::abs(total_mass() - 1.0) > kMassTol) {
        throw InvalidMeasure("IntervalMeasure: total mass must be 1");
    }
}

IntervalMeasure IntervalMeasure::normalized() const {
    IntervalMeasure out = *this;
    const double m = total_mass();
    if (!(m > 0.0)) throw InvalidMeasure("IntervalMeasure: cannot normalize zero mass");
    for (double& v : out.density) v /= m;
    for (PointMass& pm : out.masses) pm.mass /= m;
    return out;
}

IntervalMeasure IntervalMeasure::from_density(int grid, std::vector<double> v,
                                              std::vector<PointMass> m) {
    IntervalMeasure nu;
    nu.grid = grid;
    nu.density = std::move(v);
    nu.masses = std::move(m);
    nu.validate();
    return nu;
}

double IntervalMeasure::moment(int k) const {
    return integrate([k](double x) { return std::pow(x, k); });
}

IntervalMeasure szego_forward(const CircleMeasure& mu) {
    if (!mu.conjugation_invariant) {
        throw NotConjugationInvariant("szego_forward: measure must be conjugation-invariant");
    }
    mu.validate();

    IntervalMeasure nu;
    nu.grid = mu.grid;
    const int half = mu.grid / 2;
    nu.density.assign(static_cast<size_t>(half), 0.0);
    for (int k = 0; k < half; ++k) {
        const int j = half - 1 - k; // theta index of node x_k
        const double x = nu.node(k);
        nu.density[static_cast<size_t>(k)] =
            mu.weight[static_cast<size_t>(j)] / (kPi * std::sqrt(4.0 - x * x));
    }

    std::vector<bool> used(mu.masses.size(), false);
    for (size_t i = 0; i < mu.masses.size(); ++i) {
        if (used[i]) continue;
        const PointMass& pm = mu.masses[i];
        if (std::abs(std::sin(pm.position)) < 1e-12) {
            nu.masses.push_back({2.0 * std::cos(pm.position), pm.mass});
            used[i] = true;
            continue;
        }
        // Pair +/-theta into one mass at 2 cos theta with combined weight.
        const double partner = 2.0 * kPi - pm.position;
        double combined = pm.mass;
        for (size_t q = i + 1; q < mu.masses.size(); ++q) {
            if (!used[q] &&
                std::abs(std::remainder(mu.masses[q].position - partner, 2.0 * kPi)) < 1e-10) {
                combined += mu.masses[q].mass;
                used[q] = true;
                break;
            }
        }
        used[i] = true;
        nu.masses.push_back({2.0 * std::cos(pm.position), combined});
    }
    return nu;
}

CircleMeasure szego_inverse(const IntervalMeasure& nu) {
    nu.validate();
    for (const PointMass& pm : nu.masses) {
        if (std::abs(pm.position) > 2.0) {
            throw SupportOutsideInterval("szego_inverse: mass outside [-2, 2]");
        }
    }

    CircleMeasure mu;
    mu.grid = nu.grid;
    mu.conjugation_invariant = true;
    mu.weight.assign(static_cast<size_t>(nu.grid), 0.0);
    const int half = nu.grid / 2;
    for (int j = 0; j < half; ++j) {
        const int k = half - 1 - j;
        const double x = nu.node(k);
        // 2 pi |sin theta| v = pi sqrt(4 - x^2) v at the node.
        const double w = kPi * std::sqrt(4.0 - x * x) * nu.density[static_cast<size_t>(k)];
        mu.weight[static_cast<size_t>(j)] = w;
        mu.weight[static_cast<size_t>(nu.grid - 1 - j)] = w;
    }
    for (const PointMass& pm : nu.masses) {
        if (std::abs(std::abs(pm.position) - 2.0) < 1e-14) {
            mu.masses.push_back({pm.position > 0.0 ? 0.0 : kPi, pm.mass});
        } else {
            const double th = std::acos(pm.position / 2.0);
            mu.masses.push_back({th, pm.mass / 2.0});
            mu.masses.push_back({2.0 * kPi - th, pm.mass / 2.0});
        }
    }
    return mu;
}

cplx caratheodory(const CircleMeasure& mu, cplx z) {
    if (std::abs(z) >= 1.0 - 1e-6) throw OutsideDisc("caratheodory: need |z| < 1 - 1e-6");

    // A.c. part through moments: F_ac = c_0 + 2 sum_{n>=1} c_n z^n with
    // c_n = (1/G) sum_j w_j e^{-i n theta_j}.
    std::vector<cplx> samples(static_cast<size_t>(mu.grid));
    for (int j = 0; j < mu.grid; ++j) {
        samples[static_cast<size_t>(j)] = cplx{mu.weight[static_cast<size_t>(j)], 0.0};
    }
    FourierSeries coeffs = analyze_complex(samples);

    cplx acc = coeffs.coeff(0);
    cplx zn{1.0, 0.0};
    for (int n = 1; n <= coeffs.halfw; ++n) {
        zn *= z;
        acc += 2.0 * coeffs.coeff(n) * zn; // coeff(n) is the moment of e^{-i n theta}
    }
    for (const PointMass& pm : mu.masses) {
        const cplx e = std::polar(1.0, pm.position);
        acc += pm.mass * (e + z) / (e - z);
    }
    return acc;
}

namespace {

// Least-squares slope of log(v) against log(dist) over the endpoint window.
double boundary_slope(const IntervalMeasure& nu, bool right_end) {
    const int n = static_cast<int>(nu.density.size());
    const int window = std::max(n / 20, 8); // last 5% of nodes
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    int count = 0;
    for (int i = 0; i < window; ++i) {
        const int k = right_end ? n - 1 - i : i;
        const double x = nu.node(k);
        const double dist = right_end ? 2.0 - x : 2.0 + x;
        const double v = nu.density[static_cast<size_t>(k)];
        if (!(v > 0.0)) throw RangeViolation("check_class_V: density not positive near endpoint");
        const double lx = std::log(dist), ly = std::log(v);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
        ++count;
    }
    const double denom = count * sxx - sx * sx;
    return (count * sxy - sx * sy) / denom;
}

} // namespace

ClassVReport check_class_V(const IntervalMeasure& nu) {
    nu.validate();
    for (const PointMass& pm : nu.masses) {
        if (std::abs(std::abs(pm.position) - 2.0) < 1e-12) {
            throw InvalidMeasure("check_class_V: point mass at an interval endpoint");
        }
    }
    for (double v : nu.density) {
        if (!(v > 0.0)) throw RangeViolation("check_class_V: a.c. part must be positive");
    }

    ClassVReport rep;
    rep.eigenvalues_ok = true;
    for (const PointMass& pm : nu.masses) {
        if (std::abs(pm.position) <= 2.0) rep.eigenvalues_ok = false;
    }

    const double slope_r = boundary_slope(nu, true);
    const double slope_l = boundary_slope(nu, false);
    auto classify = [](double slope) {
        if (std::abs(slope - 0.5) <= 0.2) return +1;
        if (std::abs(slope + 0.5) <= 0.2) return -1;
        throw ExponentUndetermined("check_class_V: boundary slope not near +/-1/2");
    };
    rep.r = classify(slope_r);
    rep.l = classify(slope_l);

    // v0 = v / [(sqrt(2+x))^l (sqrt(2-x))^r], analyzed in the theta variable
    // over the full circle grid (even extension).
    std::vector<double> logv0(static_cast<size_t>(nu.grid));
    const int half = nu.grid / 2;
    for (int j = 0; j < half; ++j) {
        const int k = half - 1 - j;
        const double x = nu.node(k);
        const double face = std::pow(std::sqrt(2.0 + x), rep.l) * std::pow(std::sqrt(2.0 - x), rep.r);
        const double v0 = nu.density[static_cast<size_t>(k)] / face;
        if (!(v0 > 0.0)) throw RangeViolation("check_class_V: v0 not positive");
        const double lv = std::log(v0);
        logv0[static_cast<size_t>(j)] = lv;
        logv0[static_cast<size_t>(nu.grid - 1 - j)] = lv;
    }
    rep.log_v0 = analyze(logv0);
    rep.log_v0_norm = algebra_norm(rep.log_v0, SpaceSpec::intersection());
    return rep;
}

} // namespace szj
