#include "szj/fourier.hpp"

#include <algorithm>
#include <cmath>

namespace szj {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

FourierSeries::FourierSeries(int halfwidth, int grid_size)
    : halfw(halfwidth), grid(grid_size), c(static_cast<size_t>(2 * halfwidth + 1), cplx{0.0, 0.0}) {}

bool FourierSeries::is_real_series(double tol) const {
    for (int n = 0; n <= halfw; ++n) {
        if (std::abs(coeff(-n) - std::conj(coeff(n))) > tol) return false;
    }
    return true;
}

namespace detail {

bool is_pow2(int n) { return n >= 2 && (n & (n - 1)) == 0; }

void fft(std::vector<cplx>& a, bool inverse) {
    const size_t n = a.size();
    for (size_t i = 1, j = 0; i < n; ++i) {
        size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (size_t len = 2; len <= n; len <<= 1) {
        const double ang = (inverse ? 2.0 : -2.0) * kPi / static_cast<double>(len);
        for (size_t i = 0; i < n; i += len) {
            for (size_t k = 0; k < len / 2; ++k) {
                const cplx w = std::polar(1.0, ang * static_cast<double>(k));
                const cplx u = a[i + k];
                const cplx v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
            }
        }
    }
}

} // namespace detail

FourierSeries analyze_complex(const std::vector<cplx>& samples) {
    const int g = static_cast<int>(samples.size());
    if (!detail::is_pow2(g)) throw GridMismatch("analyze: grid size must be a power of two >= 2");
    std::vector<cplx> work = samples;
    detail::fft(work, false);

    const int halfw = g / 2 - 1;
    FourierSeries out(halfw, g);
    for (int n = -halfw; n <= halfw; ++n) {
        const int bin = (n % g + g) % g;
        // Half-sample grid offset contributes the twiddle e^{-i pi n / G}.
        const cplx tw = std::polar(1.0, -kPi * static_cast<double>(n) / static_cast<double>(g));
        out.set(n, tw * work[static_cast<size_t>(bin)] / static_cast<double>(g));
    }
    return out;
}

FourierSeries analyze(const std::vector<double>& samples) {
    std::vector<cplx> cs(samples.size());
    for (size_t i = 0; i < samples.size(); ++i) {
        if (!std::isfinite(samples[i])) throw DomainError("analyze: sample is not finite");
        cs[i] = cplx{samples[i], 0.0};
    }
    return analyze_complex(cs);
}

std::vector<cplx> synthesize(const FourierSeries& f, int grid) {
    if (!detail::is_pow2(grid)) throw GridMismatch("synthesize: grid size must be a power of two >= 2");
    if (2 * f.halfw >= grid) throw GridMismatch("synthesize: grid too small for the series width");
    std::vector<cplx> bins(static_cast<size_t>(grid), cplx{0.0, 0.0});
    for (int n = -f.halfw; n <= f.halfw; ++n) {
        const int bin = (n % grid + grid) % grid;
        const cplx tw = std::polar(1.0, kPi * static_cast<double>(n) / static_cast<double>(grid));
        bins[static_cast<size_t>(bin)] += tw * f.coeff(n);
    }
    detail::fft(bins, true);
    return bins;
}

std::vector<double> synthesize_real(const FourierSeries& f, int grid) {
    std::vector<cplx> cs = synthesize(f, grid);
    std::vector<double> out(cs.size());
    for (size_t i = 0; i < cs.size(); ++i) out[i] = cs[i].real();
    return out;
}

namespace {

double lp_coeff_norm(const FourierSeries& f, int p, double s, int cutoff) {
    double acc = 0.0;
    for (int n = -f.halfw; n <= f.halfw; ++n) {
        if (cutoff >= 0 && std::abs(n) > cutoff) continue;
        const double v = std::abs(f.coeff(n));
        if (v == 0.0) continue;
        acc += index_weight(n, s) * (p == 1 ? v : v * v);
    }
    return p == 1 ? acc : std::sqrt(acc);
}

double coeff_norm(const FourierSeries& f, const SpaceSpec& space, int cutoff) {
    space.validate();
    if (space.kind == SpaceSpec::Kind::Intersection) {
        return lp_coeff_norm(f, 2, 1.0, cutoff) + lp_coeff_norm(f, 1, 0.0, cutoff);
    }
    return lp_coeff_norm(f, space.p, space.s, cutoff);
}

} // namespace

double algebra_norm(const FourierSeries& f, const SpaceSpec& space) {
    return coeff_norm(f, space, -1);
}

double algebra_partial_norm(const FourierSeries& f, const SpaceSpec& space, int cutoff) {
    return coeff_norm(f, space, cutoff);
}

FourierSeries hilbert_transform(const FourierSeries& f) {
    FourierSeries out = f;
    for (int n = -f.halfw; n <= f.halfw; ++n) {
        if (n == 0) {
            out.set(0, cplx{0.0, 0.0});
        } else if (n > 0) {
            out.set(n, cplx{0.0, -1.0} * f.coeff(n));
        } else {
            out.set(n, cplx{0.0, 1.0} * f.coeff(n));
        }
    }
    return out;
}

FourierSeries analytic_calculus(const FourierSeries& f, Calculus op) {
    const int g = f.grid_size() > 0 ? f.grid_size() : 4096;
    std::vector<cplx> vals = synthesize(f, g);

    if (op == Calculus::Log || op == Calculus::Reciprocal) {
        double mn = std::abs(vals[0]);
        for (const cplx& v : vals) mn = std::min(mn, std::abs(v));
        if (mn <= 1e-8) {
            throw RangeViolation("analytic_calculus: values too close to 0 for Log/Reciprocal");
        }
    }
    for (cplx& v : vals) {
        switch (op) {
            case Calculus::Exp: v = std::exp(v); break;
            case Calculus::Log: v = std::log(v); break;
            case Calculus::Reciprocal: v = 1.0 / v; break;
        }
    }
    return analyze_complex(vals);
}

FourierSeries conjugate_pair(const FourierSeries& re_f) {
    if (!re_f.is_real_series(1e-10)) {
        throw DomainError("conjugate_pair: input must be a real-valued series");
    }
    return hilbert_transform(re_f);
}

double aliasing_fraction(const FourierSeries& f) {
    const int cut = f.halfw - f.halfw / 10;
    double total = 0.0, top = 0.0;
    for (int n = -f.halfw; n <= f.halfw; ++n) {
        const double v = std::abs(f.coeff(n));
        total += v;
        if (std::abs(n) >= cut) top += v;
    }
    return total > 0.0 ? top / total : 0.0;
}

MembershipDiagnostic in_algebra(const FourierSeries& f, const SpaceSpec& space) {
    MembershipDiagnostic d;
    int topcut = 1;
    while (topcut < f.halfw) topcut *= 2;
    for (int t = 1; t <= topcut; t *= 2) {
        d.profile.emplace_back(t, algebra_partial_norm(f, space, t));
    }
    if (d.profile.empty()) d.profile.emplace_back(1, 0.0);
    d.flat = profile_is_flat(d.profile);
    return d;
}

} // namespace szj
