#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "szj/geronimus.hpp"
#include "szj/measures.hpp"

namespace szj {

/// Resonance classification at the spectral endpoints +/-2. k = -1 means the
/// radial limit of M diverges (resonant, c absent); k = +1 means it converges
/// to the finite c (nonresonant). For operators with no eigenvalues off
/// [-2, 2], finite limits satisfy c_plus > 1/4 and c_minus < -1/4.
struct ResonanceData {
    int k_plus = -1;
    int k_minus = -1;
    std::optional<double> c_plus;
    std::optional<double> c_minus;
    std::vector<double> samples_plus;  // M(r_k) along r_k = 1 - 2^{-k}
    std::vector<double> samples_minus; // M(-r_k)

    void validate() const;
};

enum class SurgeryCase { BothResonant, MinusNonresonant, PlusNonresonant, BothNonresonant };

/// First-row replacement making the operator doubly resonant, together with
/// the derived quantities delta_a = new_a1^2 - a1^2 and
/// delta_ab = new_a1^2 b1 - a1^2 new_b1 entering
/// Delta(E) = delta_a * E - delta_ab.
struct SurgeryResult {
    double a1_new = 0.0;
    double b1_new = 0.0;
    SurgeryCase kase = SurgeryCase::BothResonant;
    double delta_a = 0.0;
    double delta_ab = 0.0;
};

struct SurgeryReport {
    double f_plus2 = 0.0;       // extrapolated f at E = +2 (when checkable)
    double f_minus2 = 0.0;      // extrapolated f at E = -2
    double delta_plus2 = 0.0;   // |2 delta_a - delta_ab| at a resonant end
    double delta_minus2 = 0.0;  // |-2 delta_a - delta_ab|
    double min_abs_f_right = 0.0; // min |f| on a grid in (2, 10]
    double min_abs_f_left = 0.0;  // min |f| on [-10, -2)
    bool pass = false;
};

/// Spectral measure of the N x N truncation (free padding beyond the stored
/// window): point masses at the eigenvalues weighted by the squared first
/// components of the normalized eigenvectors. Weights sum to one exactly.
IntervalMeasure spectral_measure(const JacobiParams& j, int n);

/// m(E) = <delta_1, (J - E)^{-1} delta_1> by the continued fraction
///   m = 1 / ((b_1 - E) - a_1^2 m^(1)),
/// closed at the given depth with the free half-line function
/// m_free(E) = (-E + sqrt(E^2 - 4))/2 (branch with m -> 0 at infinity).
/// Exact at finite depth for zero-tail parameters. Requires E off [-2, 2];
/// NearSpectrum if a denominator falls below 1e-12.
cplx m_contfrac(const JacobiParams& j, cplx e, int depth);

/// Free half-line m-function with the branch sqrt(E-2)*sqrt(E+2) ~ E.
cplx m_free(cplx e);

/// M(z) = -m(z + 1/z), Herglotz on the punctured disc. Needs |z| < 1 - 1e-6.
cplx M_function(const JacobiParams& j, cplx z);
cplx M_function(const JacobiParams& j, cplx z, int depth);

/// Remove the first n rows and columns.
JacobiParams strip(const JacobiParams& j, int n);

/// |M(z) - 1/(z + 1/z - b_1 - a_1^2 M^(1)(z))|.
double stripping_relation(const JacobiParams& j, cplx z);

/// Samples M along the radial paths +/- (1 - 2^{-k}), k = 4..16, and
/// classifies each endpoint: divergent when |M| exceeds 1e4 with per-step
/// growth ratio >= 1.5; convergent when the Richardson-extrapolated values
/// are Cauchy within 1e-6 (the limit is returned as c). Anything else is
/// Inconclusive. The operator must have no eigenvalues off [-2, 2].
ResonanceData resonance_data(const JacobiParams& j);

/// The unique doubly-resonant first-row replacement. Case formulas:
///  (-1,-1): identity; (+1,-1): a1'^2 = a1^2 4c-/(4c-+1), b1' = 2(2 b1 c- + 1)/(4c- + 1);
///  (-1,+1): a1'^2 = a1^2 4c+/(4c+-1), b1' = 2(2 b1 c+ + 1)/(4c+ - 1);
///  (+1,+1): a1'^2 = a1^2 4c-c+/(4c-c+ - c- + c+),
///           b1' = 2(2 b1 c-c+ + c- + c+)/(4c-c+ - c- + c+).
/// InvalidC when the c bounds fail or the new a1^2 is not positive.
SurgeryResult make_doubly_resonant(double a1, double b1, const ResonanceData& rd);

/// Replace (a_1, b_1).
JacobiParams with_first(const JacobiParams& j, double a1, double b1);

/// Checks f(E) = a1'^2 + m(E) (delta_a E - delta_ab) along radial paths:
/// f(+/-2) = 0 at nonresonant endpoints (|Delta(+/-2)| = 0 at resonant ones)
/// and f != 0 on grids in (2, 10] and [-10, -2).
SurgeryReport verify_surgery_spectrum(const JacobiParams& j, const SurgeryResult& sr,
                                      double endpoint_tol = 1e-8);

/// Recurrence coefficients by orthogonalizing 1, x, x^2, ... against nu
/// (discretized Stieltjes procedure). Depth capped at grid/8.
JacobiParams jacobi_from_measure(const IntervalMeasure& nu, int n);

/// Eigenvalues of a 512-truncation outside [-2 - 1e-6, 2 + 1e-6].
bool has_eigenvalues_off_band(const JacobiParams& j, int n = 512, double tol = 1e-6);

} // namespace szj
