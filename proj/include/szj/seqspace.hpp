#pragma once

#include <utility>
#include <vector>

#include "szj/errors.hpp"

namespace szj {

/// A finitely truncated real sequence. Entry n lives at values[n - offset];
/// entries outside the stored window are exactly zero. The offset may be
/// negative (used to store the boundary entries alpha_{-1}, alpha_{-2}).
struct DecaySeq {
    int offset = 0;
    std::vector<double> values;

    DecaySeq() = default;
    DecaySeq(int off, std::vector<double> vals);

    double at(int n) const {
        const int i = n - offset;
        if (i < 0 || i >= static_cast<int>(values.size())) return 0.0;
        return values[static_cast<size_t>(i)];
    }

    bool empty() const { return values.empty(); }
    int size() const { return static_cast<int>(values.size()); }
    int first_index() const { return offset; }
    int last_index() const { return offset + size() - 1; }

    /// Entries with index >= from, as a new sequence.
    DecaySeq from_index(int from) const;

    /// Shift every index by delta (entry n moves to n + delta).
    DecaySeq shifted(int delta) const;
};

/// Weighted-norm descriptor: either l^p_s with p in {1,2}, s >= 0, or the
/// intersection space l^2_1 ∩ l^1 (norm = sum of the two norms).
struct SpaceSpec {
    enum class Kind { Lp, Intersection };
    Kind kind = Kind::Lp;
    int p = 1;
    double s = 1.0;

    static SpaceSpec l1(double s1) { return SpaceSpec{Kind::Lp, 1, s1}; }
    static SpaceSpec l2(double s2) { return SpaceSpec{Kind::Lp, 2, s2}; }
    static SpaceSpec intersection() { return SpaceSpec{Kind::Intersection, 0, 0.0}; }

    void validate() const;
    std::string name() const;
};

/// |n|^s with the literal convention 0^0 = 1 (so s = 0 is the plain l^p norm
/// and s > 0 kills the n = 0 term).
double index_weight(int n, double s);

/// Exact finite-sum norm of the stored entries (the tail is zero).
double norm(const DecaySeq& seq, const SpaceSpec& space);

/// Norm restricted to entries with |n| <= cutoff.
double partial_norm(const DecaySeq& seq, const SpaceSpec& space, int cutoff);

/// Partial norms at dyadic cutoffs 1, 2, 4, ... covering the support.
std::vector<std::pair<int, double>> partial_norm_profile(const DecaySeq& seq,
                                                         const SpaceSpec& space);

/// Flatness rule for a dyadic partial-norm profile: the increment over the
/// last two dyadic steps must not exceed 2% of the final value (absolute
/// floor 1e-9). This is the diagnostic window used by all decay verdicts.
bool profile_is_flat(const std::vector<std::pair<int, double>>& profile);

/// Tail sums of Jacobi-type data:
///   lambda_n = -sum_{k>n} b_k,  kappa_n = -sum_{k>n} (a_k^2 - 1),  n >= 0.
/// Both computed by reversed (backward) accumulation so each value is an
/// exact partial tail. `a` uses the multiplicative free-tail convention
/// (entries outside the stored window are 1); `b` has a zero tail.
/// Throws NonpositiveA if any stored a_k <= 0.
std::pair<DecaySeq, DecaySeq> tail_sums(const DecaySeq& a, const DecaySeq& b);

/// eta_n = sum_{k>=n} beta_k gamma_k for n from min(0, supports) upward.
/// For p in {1,2} and s >= 1 the product bound
/// ||eta|| <= ||beta|| ||gamma|| holds.
DecaySeq tail_product(const DecaySeq& beta, const DecaySeq& gamma);

/// max_n |a_n - b_n| over the union of supports.
double max_abs_diff(const DecaySeq& a, const DecaySeq& b);

} // namespace szj
