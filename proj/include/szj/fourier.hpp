#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "szj/seqspace.hpp"

namespace szj {

using cplx = std::complex<double>;

/// Sampling grid on the circle: theta_j = 2*pi*(j + 1/2)/G, j = 0..G-1.
/// The half-sample offset keeps theta = 0 and theta = pi off the grid, so
/// x = 2 cos(theta) never touches the interval endpoints and the circle ->
/// interval relabeling stays exact at the nodes.
inline double theta_node(int j, int grid) {
    return 2.0 * 3.14159265358979323846 * (static_cast<double>(j) + 0.5) /
           static_cast<double>(grid);
}

/// Two-sided truncated Fourier series: coefficient of e^{i n theta} for
/// n = -halfw..halfw. Real-valued series satisfy c(-n) = conj(c(n)).
struct FourierSeries {
    int halfw = 0;
    int grid = 0; // grid size the series was analyzed on (power of two)
    std::vector<cplx> c; // size 2*halfw + 1, index i <-> n = i - halfw

    FourierSeries() = default;
    FourierSeries(int halfwidth, int grid_size);

    cplx coeff(int n) const {
        if (std::abs(n) > halfw) return {0.0, 0.0};
        return c[static_cast<size_t>(n + halfw)];
    }
    void set(int n, cplx v) { c[static_cast<size_t>(n + halfw)] = v; }
    int grid_size() const { return grid; }
    bool is_real_series(double tol = 1e-12) const;
};

enum class Calculus { Exp, Log, Reciprocal };

/// Forward transform of real samples on the midpoint grid. Grid size must be
/// a power of two (GridMismatch otherwise). Band-limited inputs round-trip
/// through synthesize to machine precision.
FourierSeries analyze(const std::vector<double>& samples);
FourierSeries analyze_complex(const std::vector<cplx>& samples);

std::vector<cplx> synthesize(const FourierSeries& f, int grid);
std::vector<double> synthesize_real(const FourierSeries& f, int grid);

/// Norm of the coefficient sequence over both positive and negative n.
double algebra_norm(const FourierSeries& f, const SpaceSpec& space);
double algebra_partial_norm(const FourierSeries& f, const SpaceSpec& space, int cutoff);

/// Fourier multiplier -i * sign(n) (zero at n = 0). A contraction in every
/// norm determined by coefficient magnitudes; H^2 f = -(f - c_0).
FourierSeries hilbert_transform(const FourierSeries& f);

/// Pointwise Exp/Log/Reciprocal on the synthesis grid, re-analyzed. Log and
/// Reciprocal require min |f| > 1e-8 on the grid (RangeViolation otherwise).
FourierSeries analytic_calculus(const FourierSeries& f, Calculus op);

/// For real-valued re_f, the conjugate function im_f = H(re_f); the analytic
/// completion re_f + i*H(re_f) has vanishing negative coefficients.
FourierSeries conjugate_pair(const FourierSeries& re_f);

/// Fraction of the l^1 coefficient mass carried by the top 10% of |n| bins.
/// Used to monitor aliasing after grid-pointwise operations.
double aliasing_fraction(const FourierSeries& f);

struct MembershipDiagnostic {
    std::vector<std::pair<int, double>> profile; // dyadic cutoff -> partial norm
    bool flat = false;
};

/// Partial-norm growth across dyadic truncations. A flat profile is
/// "consistent with membership"; membership itself is never decided.
MembershipDiagnostic in_algebra(const FourierSeries& f, const SpaceSpec& space);

namespace detail {
/// Radix-2 iterative FFT; size must be a power of two.
void fft(std::vector<cplx>& a, bool inverse);
bool is_pow2(int n);
} // namespace detail

} // namespace szj
