#pragma once

#include <complex>
#include <vector>

#include "szj/geronimus.hpp"
#include "szj/measures.hpp"

namespace szj {

struct SzegoPair {
    cplx phi;      // orthonormal phi_n(z)
    cplx phi_star; // reversed polynomial phi_n*(z)
};

/// Monic recursion Phi_{k+1} = z Phi_k - conj(alpha_k) Phi_k*,
/// Phi*_{k+1} = Phi*_k - alpha_k z Phi_k, normalized at the end by
/// prod_{k<n} (1 - |alpha_k|^2)^{1/2}.
SzegoPair szego_recursion(const VerblunskySeq& alpha, cplx z, int n);

/// Bernstein-Szego measure of a finitely supported coefficient sequence:
/// w(theta) = prod_{k<n} (1 - alpha_k^2) / |Phi_n*(e^{i theta})|^2.
CircleMeasure bernstein_szego(const VerblunskySeq& alpha, int grid = 4096);

/// Trigonometric moments \int e^{-i n theta} dmu for n = 0..nmax.
std::vector<cplx> fourier_moments(const CircleMeasure& mu, int nmax);

/// Coefficient extraction by recursive orthogonalization of the monic
/// polynomials against the Toeplitz moments. Depth is capped at grid/8 to
/// stay clear of aliasing-corrupted moments. Conjugation-invariant measures
/// give real coefficients; imaginary parts above 1e-10 are an error.
VerblunskySeq verblunsky_from_measure(const CircleMeasure& mu, int n);

struct GiBaxterReport {
    std::vector<std::pair<int, double>> alpha_profile;
    std::vector<std::pair<int, double>> logw_profile;
    bool alpha_flat = false;
    bool logw_flat = false;
    bool consistent = false; // both flat or both growing
};

/// Decay diagnostics on the two sides of the Szego-type correspondences:
/// partial norms of alpha against partial norms of the coefficients of
/// log w, in the given space.
GiBaxterReport verify_gi_baxter(const VerblunskySeq& alpha, const CircleMeasure& mu,
                                const SpaceSpec& space);

} // namespace szj
