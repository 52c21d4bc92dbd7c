#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "szj/seqspace.hpp"

namespace szj {

/// Verblunsky coefficients alpha_0, alpha_1, ... in (-1, 1), with the fixed
/// boundary convention alpha_{-1} = -1 and alpha_{-2} = 0 (its coefficient in
/// the recurrence vanishes).
class VerblunskySeq {
public:
    VerblunskySeq() = default;
    explicit VerblunskySeq(std::vector<double> entries);

    /// alpha(n) for any n: -1 at n = -1, stored entries for n >= 0, else 0.
    double alpha(int n) const {
        if (n == -1) return -1.0;
        if (n < 0 || n >= static_cast<int>(entries_.size())) return 0.0;
        return entries_[static_cast<size_t>(n)];
    }

    const std::vector<double>& entries() const { return entries_; }
    int size() const { return static_cast<int>(entries_.size()); }

    /// Index after the last nonzero entry (0 if all zero).
    int support() const;

    /// The full stored sequence including the boundary entry, offset -1.
    DecaySeq as_decay_seq() const;
    /// Only the n >= 0 entries, offset 0.
    DecaySeq tail_part() const;

private:
    std::vector<double> entries_;
};

/// Half-line Jacobi matrix data: off-diagonal a_n > 0 and diagonal b_n,
/// indexed from 1. Beyond the stored window a_n = 1 and b_n = 0 (free tail).
struct JacobiParams {
    std::vector<double> a;
    std::vector<double> b;

    JacobiParams() = default;
    JacobiParams(std::vector<double> a_in, std::vector<double> b_in);

    double a_at(int n) const { // n >= 1
        if (n < 1 || n > static_cast<int>(a.size())) return 1.0;
        return a[static_cast<size_t>(n - 1)];
    }
    double b_at(int n) const {
        if (n < 1 || n > static_cast<int>(b.size())) return 0.0;
        return b[static_cast<size_t>(n - 1)];
    }
    int length() const { return static_cast<int>(std::max(a.size(), b.size())); }

    DecaySeq a_seq() const { return DecaySeq(1, a); }
    DecaySeq b_seq() const { return DecaySeq(1, b); }
};

struct SolverOptions {
    double tol = 1e-12;
    int max_iter = 500;
    bool contraction_check = true;

    void validate() const;
};

/// Result of the fixed-point inversion. The solved entries always pair with
/// the conventional boundary alpha_{-1} = -1; when the data did not come from
/// such a sequence, the implied boundary values (alpha_minus1/alpha_minus2
/// solving the n = 0 relations) differ and the result corresponds to an
/// operator with a modified first row and column. Callers compare spectral
/// data, not entries.
struct SolveResult {
    VerblunskySeq alpha;
    double residual = 0.0;
    int iterations = 0;
    double alpha_minus1 = -1.0;   // implied by the kappa_0 relation
    double alpha_minus2 = 0.0;    // implied by the lambda_0 relation
    double boundary_residual = 0.0;
    bool boundary_consistent = true;
};

struct StripSolveResult {
    int n_stripped = 0;
    SolveResult result;
};

/// Geronimus relations: a_{n+1}^2 = (1 - a_{2n-1})(1 - a_{2n}^2)(1 + a_{2n+1}),
/// b_{n+1} = (1 - a_{2n-1}) a_{2n} - (1 + a_{2n-1}) a_{2n-2}, with the positive
/// square root. Output covers every index touched by the support plus one.
JacobiParams geronimus_forward(const VerblunskySeq& alpha);

/// K(alpha)_n = sum_{k>=n} [a_{2k}^2 + a_{2k-1} a_{2k+1}
///                          - a_{2k}^2 (a_{2k-1} - a_{2k+1})
///                          - a_{2k}^2 a_{2k-1} a_{2k+1}]
DecaySeq k_map(const VerblunskySeq& alpha);
/// L(alpha)_n = sum_{k>=n} a_{2k-1} (a_{2k} + a_{2k-2})
DecaySeq l_map(const VerblunskySeq& alpha);

/// kappa_n = alpha_{2n-1} + K(alpha)_n, lambda_n = alpha_{2n-2} + L(alpha)_n.
/// Agrees entrywise with tail_sums(geronimus_forward(alpha)).
std::pair<DecaySeq, DecaySeq> expanded_tails(const VerblunskySeq& alpha);

/// The interleaved map F(beta)_{2n-1} = lambda_n + L(beta)_n,
/// F(beta)_{2n} = kappa_n + K(beta)_n (output offset -1), where K, L evaluate
/// beta under the solver convention beta_{-1} = -1, beta_{-2} = 0. The
/// quadratic Lipschitz bound applies to the components with index >= 1; the
/// two boundary components carry the convention's linear term.
DecaySeq f_map(const DecaySeq& lambda, const DecaySeq& kappa, const DecaySeq& beta);

/// Banach iteration from beta = 0 on the inversion
///   beta_{2n-2} <- lambda_n - L(beta)_n, beta_{2n-1} <- kappa_n - K(beta)_n
/// for n >= 1 (the n = 0 relations determine the implied boundary pair and
/// are reported, not iterated). Residuals are successive-iterate distances in
/// `space`. Throws NoContraction when the residual ratio fails to drop below
/// 0.95 within 10 iterations, when an iterate leaves (-1, 1), or when the
/// implied alpha_{-1} reaches +1 (no valid operator carries such data);
/// MaxIterExceeded otherwise.
SolveResult solve_verblunsky(const DecaySeq& lambda, const DecaySeq& kappa,
                             const SolverOptions& opts,
                             const SpaceSpec& space = SpaceSpec::intersection(),
                             const DecaySeq* initial = nullptr);

/// Smallest N such that the data shifted by N solves cleanly, meaning
/// solve_verblunsky succeeds and the implied boundary pair stays inside the
/// coefficient domain (|alpha_minus1| <= 1, |alpha_minus2| < 1).
StripSolveResult solve_with_stripping(const DecaySeq& lambda, const DecaySeq& kappa,
                                      const SpaceSpec& space, const SolverOptions& opts);

/// tail_sums of the operator, then solve_with_stripping.
StripSolveResult strip_and_solve(const JacobiParams& j, const SpaceSpec& space,
                                 const SolverOptions& opts);

/// Convenience: tail sums (lambda, kappa) of a Jacobi operator.
std::pair<DecaySeq, DecaySeq> tail_sums(const JacobiParams& j);

} // namespace szj
