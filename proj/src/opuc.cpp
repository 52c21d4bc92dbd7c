#include "szj/opuc.hpp"

#include <algorithm>
#include <cmath>

namespace szj {

SzegoPair szego_recursion(const VerblunskySeq& alpha, cplx z, int n) {
    cplx phi{1.0, 0.0}, phi_star{1.0, 0.0};
    double norm2 = 1.0;
    for (int k = 0; k < n; ++k) {
        const double ak = alpha.alpha(k);
        if (std::abs(ak) >= 1.0) throw DomainError("szego_recursion: |alpha_k| >= 1");
        const cplx next = z * phi - ak * phi_star;
        phi_star = phi_star - ak * z * phi;
        phi = next;
        norm2 *= 1.0 - ak * ak;
    }
    const double scale = 1.0 / std::sqrt(norm2);
    return SzegoPair{phi * scale, phi_star * scale};
}

CircleMeasure bernstein_szego(const VerblunskySeq& alpha, int grid) {
    const int n = alpha.support();
    double prod = 1.0;
    for (int k = 0; k < n; ++k) {
        const double ak = alpha.alpha(k);
        prod *= 1.0 - ak * ak;
    }

    CircleMeasure mu;
    mu.grid = grid;
    mu.conjugation_invariant = true;
    mu.weight.assign(static_cast<size_t>(grid), 0.0);
    for (int j = 0; j < grid; ++j) {
        const cplx z = std::polar(1.0, theta_node(j, grid));
        // Monic Phi_n* on the boundary.
        cplx phi{1.0, 0.0}, phi_star{1.0, 0.0};
        for (int k = 0; k < n; ++k) {
            const double ak = alpha.alpha(k);
            const cplx next = z * phi - ak * phi_star;
            phi_star = phi_star - ak * z * phi;
            phi = next;
        }
        const double denom = std::norm(phi_star);
        mu.weight[static_cast<size_t>(j)] = prod / denom;
    }
    return mu;
}

std::vector<cplx> fourier_moments(const CircleMeasure& mu, int nmax) {
    std::vector<cplx> samples(static_cast<size_t>(mu.grid));
    for (int j = 0; j < mu.grid; ++j) {
        samples[static_cast<size_t>(j)] = cplx{mu.weight[static_cast<size_t>(j)], 0.0};
    }
    FourierSeries coeffs = analyze_complex(samples);

    std::vector<cplx> c(static_cast<size_t>(nmax + 1));
    for (int n = 0; n <= nmax; ++n) {
        cplx v = n <= coeffs.halfw ? coeffs.coeff(n) : cplx{0.0, 0.0};
        for (const PointMass& pm : mu.masses) {
            v += pm.mass * std::polar(1.0, -static_cast<double>(n) * pm.position);
        }
        c[static_cast<size_t>(n)] = v;
    }
    return c;
}

VerblunskySeq verblunsky_from_measure(const CircleMeasure& mu, int n) {
    if (n > mu.grid / 8) throw DomainError("verblunsky_from_measure: depth capped at grid/8");
    const std::vector<cplx> c = fourier_moments(mu, n + 1);
    auto moment = [&c](int j) -> cplx { // of z^j = e^{i j theta}
        return j >= 0 ? std::conj(c[static_cast<size_t>(j)]) : c[static_cast<size_t>(-j)];
    };

    // Monic Phi_k coefficients; alpha_k from the orthogonality of Phi_{k+1}
    // against 1: conj(alpha_k) = \int z Phi_k dmu / \int Phi_k* dmu.
    std::vector<cplx> phi{cplx{1.0, 0.0}};
    std::vector<double> alpha;
    alpha.reserve(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) {
        cplx num{0.0, 0.0}, den{0.0, 0.0};
        for (int i = 0; i <= k; ++i) {
            num += phi[static_cast<size_t>(i)] * moment(i + 1);
            den += std::conj(phi[static_cast<size_t>(k - i)]) * moment(i);
        }
        if (!(std::abs(den) > 1e-300)) throw MomentDegenerate("verblunsky_from_measure: zero norm");
        const cplx ak = num / den;
        if (std::abs(ak.imag()) > 1e-10) {
            throw DomainError("verblunsky_from_measure: coefficient has an imaginary part");
        }
        if (std::abs(ak) >= 1.0 - 1e-10) {
            throw MomentDegenerate("verblunsky_from_measure: |alpha_k| reached 1");
        }

        // Phi_{k+1} = z Phi_k - conj(alpha_k) Phi_k*, with ak = conj(alpha_k).
        std::vector<cplx> next(static_cast<size_t>(k + 2), cplx{0.0, 0.0});
        for (int i = 0; i <= k; ++i) {
            next[static_cast<size_t>(i + 1)] += phi[static_cast<size_t>(i)];
            next[static_cast<size_t>(i)] -= ak * std::conj(phi[static_cast<size_t>(k - i)]);
        }
        phi = std::move(next);
        alpha.push_back(ak.real());
    }
    return VerblunskySeq(alpha);
}

GiBaxterReport verify_gi_baxter(const VerblunskySeq& alpha, const CircleMeasure& mu,
                                const SpaceSpec& space) {
    if (!mu.masses.empty()) {
        throw RangeViolation("verify_gi_baxter: measure must be purely a.c.");
    }
    FourierSeries w_series = analyze(mu.weight);
    FourierSeries logw = analytic_calculus(w_series, Calculus::Log);

    GiBaxterReport rep;
    rep.alpha_profile = partial_norm_profile(alpha.tail_part(), space);
    MembershipDiagnostic diag = in_algebra(logw, space);
    rep.logw_profile = diag.profile;
    rep.alpha_flat = profile_is_flat(rep.alpha_profile);
    rep.logw_flat = diag.flat;
    rep.consistent = rep.alpha_flat == rep.logw_flat;
    return rep;
}

} // namespace szj
