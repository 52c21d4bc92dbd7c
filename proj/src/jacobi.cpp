#include "szj/jacobi.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>

namespace szj {

namespace {

constexpr int kRadialKMin = 4;
constexpr int kRadialKMax = 16;
constexpr double kDivergeMag = 1e4;
constexpr double kDivergeRatio = 1.5;
constexpr double kCauchyTol = 1e-6;

int default_depth(const JacobiParams& j) { return j.length() + 1; }

/// Richardson table for samples y(h_k), h_k = 2^{-k}, eliminating integer
/// exponents h, h^2, ... Returns the extrapolation diagonal.
std::vector<double> richardson_diagonal(const std::vector<double>& y, int levels) {
    std::vector<std::vector<double>> t;
    t.push_back(y);
    for (int j = 1; j <= levels; ++j) {
        const double f = std::pow(2.0, j);
        std::vector<double> row(t.back().size() - 1);
        for (size_t i = 0; i + 1 < t.back().size(); ++i) {
            row[i] = (f * t.back()[i + 1] - t.back()[i]) / (f - 1.0);
        }
        if (row.empty()) break;
        t.push_back(std::move(row));
    }
    return t.back();
}

} // namespace

void ResonanceData::validate() const {
    auto check = [](int k, const std::optional<double>& c) {
        if (k != -1 && k != 1) throw DomainError("ResonanceData: k must be -1 or +1");
        if ((k == -1) == c.has_value()) {
            throw DomainError("ResonanceData: c present iff nonresonant");
        }
    };
    check(k_plus, c_plus);
    check(k_minus, c_minus);
}

IntervalMeasure spectral_measure(const JacobiParams& j, int n) {
    if (n < 1) throw DomainError("spectral_measure: truncation size must be >= 1");
    Eigen::VectorXd diag(n), sub(std::max(n - 1, 0));
    for (int i = 0; i < n; ++i) diag(i) = j.b_at(i + 1);
    for (int i = 0; i + 1 < n; ++i) sub(i) = j.a_at(i + 1);

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success) throw EigenFailure("spectral_measure: eigensolver failed");

    IntervalMeasure nu;
    nu.grid = 0;
    for (int i = 0; i < n; ++i) {
        const double w = solver.eigenvectors()(0, i) * solver.eigenvectors()(0, i);
        if (w > 1e-300) nu.masses.push_back({solver.eigenvalues()(i), w});
    }
    return nu;
}

cplx m_free(cplx e) {
    const cplx root = std::sqrt(e - 2.0) * std::sqrt(e + 2.0);
    return (-e + root) / 2.0;
}

cplx m_contfrac(const JacobiParams& j, cplx e, int depth) {
    if (depth < 1) throw DomainError("m_contfrac: depth must be >= 1");
    if (e.imag() == 0.0 && std::abs(e.real()) <= 2.0 + 1e-12) {
        throw NearSpectrum("m_contfrac: E within 1e-12 of [-2, 2]");
    }
    cplx m = m_free(e);
    for (int k = depth; k >= 1; --k) {
        const double ak = j.a_at(k);
        const cplx den = (j.b_at(k) - e) - ak * ak * m;
        if (std::abs(den) < 1e-12) throw NearSpectrum("m_contfrac: vanishing denominator");
        m = 1.0 / den;
    }
    return m;
}

cplx M_function(const JacobiParams& j, cplx z, int depth) {
    if (std::abs(z) >= 1.0 - 1e-6 || z == cplx{0.0, 0.0}) {
        throw OutsideDisc("M_function: need 0 < |z| < 1 - 1e-6");
    }
    return -m_contfrac(j, z + 1.0 / z, depth);
}

cplx M_function(const JacobiParams& j, cplx z) { return M_function(j, z, default_depth(j)); }

JacobiParams strip(const JacobiParams& j, int n) {
    if (n < 0) throw DomainError("strip: n must be >= 0");
    JacobiParams out;
    if (n < static_cast<int>(j.a.size())) out.a.assign(j.a.begin() + n, j.a.end());
    if (n < static_cast<int>(j.b.size())) out.b.assign(j.b.begin() + n, j.b.end());
    return out;
}

double stripping_relation(const JacobiParams& j, cplx z) {
    const cplx lhs = M_function(j, z);
    const cplx e = z + 1.0 / z;
    const cplx m1 = M_function(strip(j, 1), z);
    const double a1 = j.a_at(1);
    const cplx rhs = 1.0 / (e - j.b_at(1) - a1 * a1 * m1);
    return std::abs(lhs - rhs);
}

namespace {

struct EndpointClass {
    int k = -1;
    std::optional<double> c;
    std::vector<double> samples;
};

EndpointClass classify_endpoint(const JacobiParams& j, int sign) {
    EndpointClass out;
    const int depth = default_depth(j);
    for (int k = kRadialKMin; k <= kRadialKMax; ++k) {
        const double r = 1.0 - std::pow(2.0, -k);
        const cplx m = M_function(j, cplx{sign * r, 0.0}, depth);
        out.samples.push_back(m.real());
    }

    // Divergence: magnitude past 1e4 with per-step growth ratio >= 1.5 and
    // monotone growth over the last five samples.
    const size_t ns = out.samples.size();
    bool growing = true;
    for (size_t i = ns - 5; i + 1 < ns; ++i) {
        const double r0 = std::abs(out.samples[i]);
        const double r1 = std::abs(out.samples[i + 1]);
        if (!(r1 > r0) || r1 / std::max(r0, 1e-300) < kDivergeRatio) growing = false;
    }
    if (growing && std::abs(out.samples.back()) > kDivergeMag) {
        out.k = -1;
        return out;
    }

    // Convergence: Richardson in (1 - r), Cauchy on the diagonal.
    const std::vector<double> diag = richardson_diagonal(out.samples, 4);
    if (diag.size() >= 2 &&
        std::abs(diag.back() - diag[diag.size() - 2]) <= kCauchyTol) {
        out.k = +1;
        out.c = diag.back();
        return out;
    }
    throw Inconclusive("resonance_data: radial trend neither divergent nor Cauchy");
}

} // namespace

ResonanceData resonance_data(const JacobiParams& j) {
    if (has_eigenvalues_off_band(j)) {
        throw DomainError("resonance_data: operator has eigenvalues off [-2, 2]");
    }
    ResonanceData rd;
    EndpointClass plus = classify_endpoint(j, +1);
    EndpointClass minus = classify_endpoint(j, -1);
    rd.k_plus = plus.k;
    rd.c_plus = plus.c;
    rd.samples_plus = std::move(plus.samples);
    rd.k_minus = minus.k;
    rd.c_minus = minus.c;
    rd.samples_minus = std::move(minus.samples);
    rd.validate();
    return rd;
}

SurgeryResult make_doubly_resonant(double a1, double b1, const ResonanceData& rd) {
    rd.validate();
    if (rd.c_plus && !(*rd.c_plus > 0.25)) {
        throw InvalidC("make_doubly_resonant: c_plus must exceed 1/4");
    }
    if (rd.c_minus && !(*rd.c_minus < -0.25)) {
        throw InvalidC("make_doubly_resonant: c_minus must be below -1/4");
    }

    SurgeryResult sr;
    double a1sq = a1 * a1;
    if (rd.k_minus == -1 && rd.k_plus == -1) {
        sr.kase = SurgeryCase::BothResonant;
        sr.a1_new = a1;
        sr.b1_new = b1;
        sr.delta_a = 0.0;
        sr.delta_ab = 0.0;
        return sr;
    }
    double new_a1sq = 0.0, new_b1 = 0.0;
    if (rd.k_minus == 1 && rd.k_plus == -1) {
        const double cm = *rd.c_minus;
        sr.kase = SurgeryCase::MinusNonresonant;
        new_a1sq = a1sq * (4.0 * cm) / (4.0 * cm + 1.0);
        new_b1 = 2.0 * (2.0 * b1 * cm + 1.0) / (4.0 * cm + 1.0);
    } else if (rd.k_minus == -1 && rd.k_plus == 1) {
        const double cp = *rd.c_plus;
        sr.kase = SurgeryCase::PlusNonresonant;
        new_a1sq = a1sq * (4.0 * cp) / (4.0 * cp - 1.0);
        new_b1 = 2.0 * (2.0 * b1 * cp + 1.0) / (4.0 * cp - 1.0);
    } else {
        const double cm = *rd.c_minus, cp = *rd.c_plus;
        const double den = 4.0 * cm * cp - cm + cp;
        sr.kase = SurgeryCase::BothNonresonant;
        new_a1sq = a1sq * (4.0 * cm * cp) / den;
        new_b1 = 2.0 * (2.0 * b1 * cm * cp + cm + cp) / den;
    }
    if (!(new_a1sq > 0.0) || !std::isfinite(new_a1sq) || !std::isfinite(new_b1)) {
        throw InvalidC("make_doubly_resonant: replacement a1^2 not positive");
    }
    sr.a1_new = std::sqrt(new_a1sq);
    sr.b1_new = new_b1;
    sr.delta_a = new_a1sq - a1sq;
    sr.delta_ab = new_a1sq * b1 - a1sq * new_b1;
    return sr;
}

JacobiParams with_first(const JacobiParams& j, double a1, double b1) {
    JacobiParams out = j;
    if (out.a.empty()) out.a.push_back(a1); else out.a[0] = a1;
    if (out.b.empty()) out.b.push_back(b1); else out.b[0] = b1;
    return JacobiParams(out.a, out.b); // revalidate
}

SurgeryReport verify_surgery_spectrum(const JacobiParams& j, const SurgeryResult& sr,
                                      double endpoint_tol) {
    SurgeryReport rep;
    const double a1sq_new = sr.a1_new * sr.a1_new;
    const int depth = default_depth(j);
    auto f = [&](double e) {
        const cplx m = m_contfrac(j, cplx{e, 0.0}, depth);
        return a1sq_new + m.real() * (sr.delta_a * e - sr.delta_ab);
    };

    // Radial-path extrapolation of f to the endpoints: E(r) = r + 1/r -> 2.
    auto endpoint_value = [&](int sign) {
        std::vector<double> ys;
        for (int k = kRadialKMin; k <= kRadialKMax; ++k) {
            const double r = 1.0 - std::pow(2.0, -k);
            ys.push_back(f(sign * (r + 1.0 / r)));
        }
        return richardson_diagonal(ys, 4).back();
    };

    rep.delta_plus2 = std::abs(2.0 * sr.delta_a - sr.delta_ab);
    rep.delta_minus2 = std::abs(-2.0 * sr.delta_a - sr.delta_ab);
    rep.f_plus2 = endpoint_value(+1);
    rep.f_minus2 = endpoint_value(-1);

    double mn_r = std::numeric_limits<double>::infinity();
    double mn_l = mn_r;
    for (int i = 1; i <= 200; ++i) {
        const double e = 2.0 + 8.0 * i / 200.0;
        mn_r = std::min(mn_r, std::abs(f(e)));
        mn_l = std::min(mn_l, std::abs(f(-e)));
    }
    rep.min_abs_f_right = mn_r;
    rep.min_abs_f_left = mn_l;

    const bool identity = sr.delta_a == 0.0 && sr.delta_ab == 0.0;
    const bool plus_ok = identity || std::abs(rep.f_plus2) <= endpoint_tol;
    const bool minus_ok = identity || std::abs(rep.f_minus2) <= endpoint_tol;
    rep.pass = plus_ok && minus_ok && mn_r > 0.0 && mn_l > 0.0;
    return rep;
}

JacobiParams jacobi_from_measure(const IntervalMeasure& nu, int n) {
    if (nu.grid > 0 && n > nu.grid / 8) {
        throw DomainError("jacobi_from_measure: depth capped at grid/8");
    }

    // Quadrature nodes and weights for the a.c. part plus the atoms.
    std::vector<double> xs, ws;
    for (int k = 0; k < static_cast<int>(nu.density.size()); ++k) {
        xs.push_back(nu.node(k));
        ws.push_back(nu.quad_weight(k) * nu.density[static_cast<size_t>(k)]);
    }
    for (const PointMass& pm : nu.masses) {
        xs.push_back(pm.position);
        ws.push_back(pm.mass);
    }
    const size_t m = xs.size();
    auto dot = [&](const std::vector<double>& f, const std::vector<double>& g) {
        double acc = 0.0;
        for (size_t i = 0; i < m; ++i) acc += ws[i] * f[i] * g[i];
        return acc;
    };

    const double m0 = [&] {
        double acc = 0.0;
        for (double w : ws) acc += w;
        return acc;
    }();
    if (!(m0 > 1e-300)) throw MomentDegenerate("jacobi_from_measure: zero mass");

    std::vector<double> p_prev(m, 0.0), p_cur(m, 1.0 / std::sqrt(m0)), work(m);
    std::vector<double> a, b;
    double a_prev = 0.0;
    for (int k = 0; k < n; ++k) {
        for (size_t i = 0; i < m; ++i) work[i] = xs[i] * p_cur[i];
        const double bk = dot(work, p_cur);
        for (size_t i = 0; i < m; ++i) work[i] -= bk * p_cur[i] + a_prev * p_prev[i];
        const double norm2 = dot(work, work);
        if (!(norm2 > 1e-24) || !std::isfinite(norm2)) {
            throw MomentDegenerate("jacobi_from_measure: orthogonalization collapsed");
        }
        const double ak = std::sqrt(norm2);
        b.push_back(bk);
        if (k + 1 < n) a.push_back(ak);
        p_prev = p_cur;
        for (size_t i = 0; i < m; ++i) p_cur[i] = work[i] / ak;
        a_prev = ak;
    }
    return JacobiParams(std::move(a), std::move(b));
}

bool has_eigenvalues_off_band(const JacobiParams& j, int n, double tol) {
    IntervalMeasure nu = spectral_measure(j, n);
    for (const PointMass& pm : nu.masses) {
        if (std::abs(pm.position) > 2.0 + tol) return true;
    }
    return false;
}

} // namespace szj
