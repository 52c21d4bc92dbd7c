#include "szj/geronimus.hpp"

#include <algorithm>
#include <cmath>

namespace szj {

VerblunskySeq::VerblunskySeq(std::vector<double> entries) : entries_(std::move(entries)) {
    for (double v : entries_) {
        if (!std::isfinite(v) || std::abs(v) >= 1.0) {
            throw DomainError("VerblunskySeq: entries must lie in (-1, 1)");
        }
    }
}

int VerblunskySeq::support() const {
    int s = size();
    while (s > 0 && entries_[static_cast<size_t>(s - 1)] == 0.0) --s;
    return s;
}

DecaySeq VerblunskySeq::as_decay_seq() const {
    std::vector<double> v;
    v.reserve(entries_.size() + 1);
    v.push_back(-1.0);
    v.insert(v.end(), entries_.begin(), entries_.end());
    return DecaySeq(-1, std::move(v));
}

DecaySeq VerblunskySeq::tail_part() const {
    return DecaySeq(0, entries_);
}

JacobiParams::JacobiParams(std::vector<double> a_in, std::vector<double> b_in)
    : a(std::move(a_in)), b(std::move(b_in)) {
    for (double v : a) {
        if (!std::isfinite(v) || v <= 0.0) throw NonpositiveA("JacobiParams: a_n must be positive");
    }
    for (double v : b) {
        if (!std::isfinite(v)) throw DomainError("JacobiParams: b_n must be finite");
    }
}

void SolverOptions::validate() const {
    if (!(tol > 0.0)) throw DomainError("SolverOptions: tol must be positive");
    if (max_iter < 1) throw DomainError("SolverOptions: max_iter must be >= 1");
}

namespace {

// Summand of K at block k for a generic accessor.
template <typename F>
double k_term(const F& al, int k) {
    const double am1 = al(2 * k - 1);
    const double a0 = al(2 * k);
    const double ap1 = al(2 * k + 1);
    return a0 * a0 + am1 * ap1 - a0 * a0 * (am1 - ap1) - a0 * a0 * am1 * ap1;
}

template <typename F>
double l_term(const F& al, int k) {
    return al(2 * k - 1) * (al(2 * k) + al(2 * k - 2));
}

// Backward-accumulated tails K_n, L_n for n = 0..len-1.
template <typename F>
void kl_tails(const F& al, int len, std::vector<double>& k_out, std::vector<double>& l_out) {
    k_out.assign(static_cast<size_t>(len), 0.0);
    l_out.assign(static_cast<size_t>(len), 0.0);
    double acc_k = 0.0, acc_l = 0.0;
    for (int n = len - 1; n >= 0; --n) {
        acc_k += k_term(al, n);
        acc_l += l_term(al, n);
        k_out[static_cast<size_t>(n)] = acc_k;
        l_out[static_cast<size_t>(n)] = acc_l;
    }
}

// Blocks 0..block_count(m)-1 cover every nonzero K/L summand when the
// coefficient support ends at index m-1.
int block_count(int support) {
    return support / 2 + 2;
}

} // namespace

JacobiParams geronimus_forward(const VerblunskySeq& al) {
    const int m = al.support() - 1; // highest nonzero index, -1 if none
    const int npairs = m >= 0 ? m / 2 + 2 : 1;

    std::vector<double> a(static_cast<size_t>(npairs)), b(static_cast<size_t>(npairs));
    for (int n = 0; n < npairs; ++n) {
        const double am1 = al.alpha(2 * n - 1);
        const double a0 = al.alpha(2 * n);
        const double ap1 = al.alpha(2 * n + 1);
        const double a2 = (1.0 - am1) * (1.0 - a0 * a0) * (1.0 + ap1);
        if (!(a2 > 0.0)) throw DomainError("geronimus_forward: coefficient outside (-1, 1)");
        a[static_cast<size_t>(n)] = std::sqrt(a2);
        b[static_cast<size_t>(n)] = (1.0 - am1) * a0 - (1.0 + am1) * al.alpha(2 * n - 2);
    }
    return JacobiParams(std::move(a), std::move(b));
}

DecaySeq k_map(const VerblunskySeq& al) {
    const int len = block_count(al.support());
    std::vector<double> k, l;
    kl_tails([&al](int n) { return al.alpha(n); }, len, k, l);
    return DecaySeq(0, std::move(k));
}

DecaySeq l_map(const VerblunskySeq& al) {
    const int len = block_count(al.support());
    std::vector<double> k, l;
    kl_tails([&al](int n) { return al.alpha(n); }, len, k, l);
    return DecaySeq(0, std::move(l));
}

std::pair<DecaySeq, DecaySeq> expanded_tails(const VerblunskySeq& al) {
    const int len = block_count(al.support());
    std::vector<double> k, l;
    kl_tails([&al](int n) { return al.alpha(n); }, len, k, l);

    DecaySeq lambda(0, std::vector<double>(static_cast<size_t>(len), 0.0));
    DecaySeq kappa = lambda;
    for (int n = 0; n < len; ++n) {
        lambda.values[static_cast<size_t>(n)] = al.alpha(2 * n - 2) + l[static_cast<size_t>(n)];
        kappa.values[static_cast<size_t>(n)] = al.alpha(2 * n - 1) + k[static_cast<size_t>(n)];
    }
    return {lambda, kappa};
}

namespace {

// Solver-convention accessor over a plain one-sided vector of unknowns.
struct BetaAccess {
    const std::vector<double>* v;
    double operator()(int n) const {
        if (n == -1) return -1.0;
        if (n < 0 || n >= static_cast<int>(v->size())) return 0.0;
        return (*v)[static_cast<size_t>(n)];
    }
};

} // namespace

DecaySeq f_map(const DecaySeq& lambda, const DecaySeq& kappa, const DecaySeq& beta) {
    std::vector<double> bv(static_cast<size_t>(std::max(beta.last_index() + 1, 0)), 0.0);
    for (int n = 0; n < static_cast<int>(bv.size()); ++n) bv[static_cast<size_t>(n)] = beta.at(n);

    const int data_top = std::max({lambda.last_index(), kappa.last_index(), 0});
    const int len = std::max(block_count(static_cast<int>(bv.size())), data_top + 1);

    std::vector<double> k, l;
    kl_tails(BetaAccess{&bv}, len, k, l);

    DecaySeq out(-1, std::vector<double>(static_cast<size_t>(2 * len + 1), 0.0));
    for (int n = 0; n < len; ++n) {
        out.values[static_cast<size_t>(2 * n - 1 + 1)] = lambda.at(n) + l[static_cast<size_t>(n)];
        out.values[static_cast<size_t>(2 * n + 1)] = kappa.at(n) + k[static_cast<size_t>(n)];
    }
    return out;
}

namespace {

struct BoundaryPair {
    double alpha_minus1;
    double alpha_minus2;
    double residual;
    bool consistent;
};

// Solve the n = 0 relations for the boundary entries implied by the data:
//   kappa_0 = am1 (1 + a1)(1 - a0^2) + a0^2 (1 + a1) + K_1
//   lambda_0 = am2 (1 + am1) + am1 a0 + L_1
BoundaryPair implied_boundary(const DecaySeq& lambda, const DecaySeq& kappa,
                              const std::vector<double>& beta) {
    BetaAccess al{&beta};
    const int len = block_count(static_cast<int>(beta.size()));
    std::vector<double> k, l;
    kl_tails(al, std::max(len, 2), k, l);
    const double k1 = k.size() > 1 ? k[1] : 0.0;
    const double l1 = l.size() > 1 ? l[1] : 0.0;

    const double a0 = al(0), a1 = al(1);
    const double denom = (1.0 + a1) * (1.0 - a0 * a0);
    const double am1 = (kappa.at(0) - a0 * a0 * (1.0 + a1) - k1) / denom;

    BoundaryPair out{};
    out.alpha_minus1 = am1;
    if (std::abs(1.0 + am1) > 1e-8) {
        out.alpha_minus2 = (lambda.at(0) - am1 * a0 - l1) / (1.0 + am1);
        out.residual = std::abs(am1 + 1.0);
    } else {
        // alpha_{-1} = -1: alpha_{-2} cancels from the lambda_0 relation.
        out.alpha_minus2 = 0.0;
        out.residual = std::abs(lambda.at(0) + a0 - l1);
    }
    out.consistent = std::abs(am1 + 1.0) <= 1e-8 && out.residual <= 1e-8;
    return out;
}

} // namespace

SolveResult solve_verblunsky(const DecaySeq& lambda, const DecaySeq& kappa,
                             const SolverOptions& opts, const SpaceSpec& space,
                             const DecaySeq* initial) {
    opts.validate();
    const int nmax = std::max({lambda.last_index(), kappa.last_index(), 0});
    const int m = std::max(2 * nmax, 0); // unknowns alpha_0 .. alpha_{m-1}

    std::vector<double> beta(static_cast<size_t>(m), 0.0);
    if (initial != nullptr) {
        for (int n = 0; n < m; ++n) beta[static_cast<size_t>(n)] = initial->at(n);
    }
    const int len = std::max(block_count(m), nmax + 1);

    std::vector<double> next(beta.size(), 0.0), k, l;
    double prev_res = -1.0;
    double res = 0.0;
    bool contracted_once = false;
    int it = 0;

    for (it = 1; it <= opts.max_iter; ++it) {
        kl_tails(BetaAccess{&beta}, len, k, l);
        for (int n = 1; n <= nmax; ++n) {
            const int even = 2 * n - 2;
            const int odd = 2 * n - 1;
            if (even < m) next[static_cast<size_t>(even)] = lambda.at(n) - l[static_cast<size_t>(n)];
            if (odd < m) next[static_cast<size_t>(odd)] = kappa.at(n) - k[static_cast<size_t>(n)];
        }

        DecaySeq diff(0, {});
        diff.values.resize(beta.size());
        double maxentry = 0.0;
        for (size_t i = 0; i < beta.size(); ++i) {
            diff.values[i] = next[i] - beta[i];
            maxentry = std::max(maxentry, std::abs(next[i]));
        }
        res = norm(diff, space);
        beta = next;

        if (maxentry >= 1.0) {
            throw NoContraction("solve_verblunsky: iterate left (-1, 1)");
        }
        if (res <= opts.tol) break;
        if (prev_res >= 0.0 && prev_res > 0.0 && res / prev_res < 0.95) contracted_once = true;
        if (opts.contraction_check && it >= 10 && !contracted_once) {
            throw NoContraction("solve_verblunsky: residuals are not contracting");
        }
        prev_res = res;
    }
    if (res > opts.tol) {
        throw MaxIterExceeded("solve_verblunsky: residual above tol after max_iter");
    }

    const BoundaryPair bp = implied_boundary(lambda, kappa, beta);
    if (bp.alpha_minus1 >= 1.0 - 1e-12) {
        throw NoContraction(
            "solve_verblunsky: data implies alpha_{-1} >= 1 (no operator carries it)");
    }

    // Trim trailing zeros before constructing the result.
    size_t sz = beta.size();
    while (sz > 0 && std::abs(beta[sz - 1]) < 1e-300) --sz;
    beta.resize(sz);

    SolveResult out;
    out.alpha = VerblunskySeq(beta);
    out.residual = res;
    out.iterations = it;
    out.alpha_minus1 = bp.alpha_minus1;
    out.alpha_minus2 = bp.alpha_minus2;
    out.boundary_residual = bp.residual;
    out.boundary_consistent = bp.consistent;
    return out;
}

StripSolveResult solve_with_stripping(const DecaySeq& lambda, const DecaySeq& kappa,
                                      const SpaceSpec& space, const SolverOptions& opts) {
    const int max_strip = std::max({lambda.last_index(), kappa.last_index(), 0}) + 1;
    std::string last_err = "solve_with_stripping: no admissible level";
    for (int n = 0; n <= max_strip; ++n) {
        // The tails of J^(N): lambda^(N)_k = lambda_{N+k}.
        const DecaySeq lam = lambda.from_index(n).shifted(-n);
        const DecaySeq kap = kappa.from_index(n).shifted(-n);
        try {
            SolveResult r = solve_verblunsky(lam, kap, opts, space);
            if (std::abs(r.alpha_minus1) <= 1.0 + 1e-8 && std::abs(r.alpha_minus2) < 1.0) {
                return StripSolveResult{n, std::move(r)};
            }
            last_err = "solve_with_stripping: implied boundary outside the coefficient domain";
        } catch (const NoContraction& e) {
            last_err = e.what();
        } catch (const MaxIterExceeded& e) {
            last_err = e.what();
        }
    }
    throw NoContraction(last_err);
}

StripSolveResult strip_and_solve(const JacobiParams& j, const SpaceSpec& space,
                                 const SolverOptions& opts) {
    auto [lambda, kappa] = tail_sums(j);
    return solve_with_stripping(lambda, kappa, space, opts);
}

std::pair<DecaySeq, DecaySeq> tail_sums(const JacobiParams& j) {
    return tail_sums(j.a_seq(), j.b_seq());
}

} // namespace szj
