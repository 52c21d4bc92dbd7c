#include "szj/seqspace.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace szj {

DecaySeq::DecaySeq(int off, std::vector<double> vals) : offset(off), values(std::move(vals)) {
    for (double v : values) {
        if (!std::isfinite(v)) throw DomainError("DecaySeq entry is not finite");
    }
}

DecaySeq DecaySeq::from_index(int from) const {
    if (from <= offset) return *this;
    DecaySeq out;
    out.offset = from;
    const int drop = from - offset;
    if (drop < size()) {
        out.values.assign(values.begin() + drop, values.end());
    }
    return out;
}

DecaySeq DecaySeq::shifted(int delta) const {
    DecaySeq out = *this;
    out.offset += delta;
    return out;
}

void SpaceSpec::validate() const {
    if (kind == Kind::Lp) {
        if (p != 1 && p != 2) throw DomainError("SpaceSpec: p must be 1 or 2");
        if (!(s >= 0.0)) throw DomainError("SpaceSpec: s must be >= 0");
    }
}

std::string SpaceSpec::name() const {
    if (kind == Kind::Intersection) return "intersection";
    std::string out = "l" + std::to_string(p) + "_";
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", s);
    return out + buf;
}

double index_weight(int n, double s) {
    return std::pow(std::abs(static_cast<double>(n)), s);
}

namespace {

double lp_norm(const DecaySeq& seq, int p, double s, int cutoff) {
    double acc = 0.0;
    for (int i = 0; i < seq.size(); ++i) {
        const int n = seq.offset + i;
        if (cutoff >= 0 && std::abs(n) > cutoff) continue;
        const double v = std::abs(seq.values[static_cast<size_t>(i)]);
        if (v == 0.0) continue;
        acc += index_weight(n, s) * (p == 1 ? v : v * v);
    }
    return p == 1 ? acc : std::sqrt(acc);
}

double norm_impl(const DecaySeq& seq, const SpaceSpec& space, int cutoff) {
    space.validate();
    if (space.kind == SpaceSpec::Kind::Intersection) {
        return lp_norm(seq, 2, 1.0, cutoff) + lp_norm(seq, 1, 0.0, cutoff);
    }
    return lp_norm(seq, space.p, space.s, cutoff);
}

} // namespace

double norm(const DecaySeq& seq, const SpaceSpec& space) {
    return norm_impl(seq, space, -1);
}

double partial_norm(const DecaySeq& seq, const SpaceSpec& space, int cutoff) {
    return norm_impl(seq, space, cutoff);
}

std::vector<std::pair<int, double>> partial_norm_profile(const DecaySeq& seq,
                                                         const SpaceSpec& space) {
    int top = 1;
    const int hi = std::max(std::abs(seq.first_index()), std::abs(seq.last_index()));
    while (top < hi) top *= 2;
    std::vector<std::pair<int, double>> profile;
    for (int t = 1; t <= top; t *= 2) {
        profile.emplace_back(t, partial_norm(seq, space, t));
    }
    if (profile.empty()) profile.emplace_back(1, 0.0);
    return profile;
}

bool profile_is_flat(const std::vector<std::pair<int, double>>& profile) {
    if (profile.size() < 3) return true;
    const double tail = profile.back().second;
    const double prev = profile[profile.size() - 3].second;
    return (tail - prev) <= std::max(0.02 * tail, 1e-9);
}

std::pair<DecaySeq, DecaySeq> tail_sums(const DecaySeq& a, const DecaySeq& b) {
    for (double v : a.values) {
        if (v <= 0.0) throw NonpositiveA("tail_sums: a_n must be positive");
    }
    const int top = std::max({a.last_index(), b.last_index(), 0});

    DecaySeq lambda, kappa;
    lambda.offset = 0;
    kappa.offset = 0;
    const int len = std::max(top, 0);
    lambda.values.assign(static_cast<size_t>(len), 0.0);
    kappa.values.assign(static_cast<size_t>(len), 0.0);

    // lambda_n = lambda_{n+1} - b_{n+1}, starting from the zero tail.
    double acc_l = 0.0, acc_k = 0.0;
    for (int n = len - 1; n >= 0; --n) {
        acc_l -= b.at(n + 1);
        const double ak = (n + 1 >= a.first_index() && n + 1 <= a.last_index()) ? a.at(n + 1) : 1.0;
        acc_k -= ak * ak - 1.0;
        lambda.values[static_cast<size_t>(n)] = acc_l;
        kappa.values[static_cast<size_t>(n)] = acc_k;
    }
    return {lambda, kappa};
}

DecaySeq tail_product(const DecaySeq& beta, const DecaySeq& gamma) {
    const int lo = std::min({0, beta.first_index(), gamma.first_index()});
    const int hi = std::max({beta.last_index(), gamma.last_index(), lo - 1});

    DecaySeq eta;
    eta.offset = lo;
    if (hi < lo) return eta;
    eta.values.assign(static_cast<size_t>(hi - lo + 1), 0.0);
    double acc = 0.0;
    for (int n = hi; n >= lo; --n) {
        acc += beta.at(n) * gamma.at(n);
        eta.values[static_cast<size_t>(n - lo)] = acc;
    }
    return eta;
}

double max_abs_diff(const DecaySeq& a, const DecaySeq& b) {
    const int lo = std::min(a.first_index(), b.first_index());
    const int hi = std::max(a.last_index(), b.last_index());
    double m = 0.0;
    for (int n = lo; n <= hi; ++n) {
        m = std::max(m, std::abs(a.at(n) - b.at(n)));
    }
    return m;
}

} // namespace szj
