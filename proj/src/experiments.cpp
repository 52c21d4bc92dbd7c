#include "szj/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <thread>

#include "szj/jacobi.hpp"
#include "szj/opuc.hpp"
#include "szj/rng.hpp"

namespace szj {

namespace {

constexpr const char* kReportNote =
    "desk-scale consistency check of the decay correspondences; "
    "not a proof-strength reproduction";

int thread_cap() {
    if (const char* env = std::getenv("SZJ_THREADS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

struct SampleRow {
    int truncation;
    double alpha_norm, logw_norm, lambda_norm, kappa_norm;
};

struct SampleOutput {
    SampleVerdict verdict;
    std::vector<SampleRow> rows;
};

std::vector<int> dyadic_cutoffs(int top) {
    std::vector<int> ts;
    int t = 1;
    while (true) {
        ts.push_back(t);
        if (t >= top) break;
        t *= 2;
    }
    return ts;
}

void fill_rows(SampleOutput& out, const DecaySeq& alpha_tail, const FourierSeries* logw,
               const DecaySeq& lambda, const DecaySeq& kappa, const SpaceSpec& space) {
    const int top = std::max({alpha_tail.last_index(), logw ? logw->halfw : 0,
                              lambda.last_index(), kappa.last_index(), 1});
    for (int t : dyadic_cutoffs(top)) {
        SampleRow row{};
        row.truncation = t;
        row.alpha_norm = partial_norm(alpha_tail, space, t);
        row.logw_norm = logw ? algebra_partial_norm(*logw, space, t) : 0.0;
        row.lambda_norm = partial_norm(lambda, space, t);
        row.kappa_norm = partial_norm(kappa, space, t);
        out.rows.push_back(row);
    }
}

SampleOutput run_forward_sample(const ExperimentConfig& cfg, int id) {
    SampleOutput out;
    out.verdict.sample_id = id;
    Rng rng(cfg.seed * 1000003ull + static_cast<uint64_t>(id));

    // Small tail data with geometric decay.
    const int support = 1 + rng.next_int(cfg.max_support);
    std::vector<double> lam(static_cast<size_t>(support + 1)), kap(lam);
    for (int n = 0; n <= support; ++n) {
        const double decay = std::pow(0.5, n);
        lam[static_cast<size_t>(n)] = rng.uniform(-0.02, 0.02) * decay;
        kap[static_cast<size_t>(n)] = rng.uniform(-0.02, 0.02) * decay;
    }
    const DecaySeq lambda(0, lam), kappa(0, kap);

    try {
        SolverOptions opts;
        opts.tol = cfg.tol;
        opts.max_iter = cfg.max_iter;
        StripSolveResult sol = solve_with_stripping(lambda, kappa, cfg.space, opts);
        const VerblunskySeq& alpha = sol.result.alpha;

        CircleMeasure mu = bernstein_szego(alpha, cfg.grid_size);
        IntervalMeasure nu = szego_forward(mu);
        ClassVReport cv = check_class_V(nu);
        GiBaxterReport gb = verify_gi_baxter(alpha, mu, cfg.space);

        FourierSeries logw = analytic_calculus(analyze(mu.weight), Calculus::Log);
        fill_rows(out, alpha.tail_part(), &logw, lambda, kappa, cfg.space);

        const bool ok = cv.eigenvalues_ok && gb.consistent && gb.alpha_flat;
        out.verdict.verdict = ok ? "consistent" : "inconsistent";
        out.verdict.details = json{{"n_stripped", sol.n_stripped},
                                   {"solver_residual", sol.result.residual},
                                   {"class_v", json{{"l", cv.l}, {"r", cv.r},
                                                    {"log_v0_norm", cv.log_v0_norm},
                                                    {"eigenvalues_ok", cv.eigenvalues_ok}}},
                                   {"gi_baxter", to_json(gb)}};
    } catch (const std::exception& e) {
        out.verdict.verdict = std::string("error: ") + e.what();
        fill_rows(out, DecaySeq(), nullptr, lambda, kappa, cfg.space);
    }
    return out;
}

SampleOutput run_reverse_sample(const ExperimentConfig& cfg, int id) {
    SampleOutput out;
    out.verdict.sample_id = id;
    Rng rng(cfg.seed * 2000003ull + static_cast<uint64_t>(id));

    // Class-type measure from a finitely supported coefficient sequence.
    const int support = 1 + rng.next_int(cfg.max_support);
    std::vector<double> av(static_cast<size_t>(support));
    for (int n = 0; n < support; ++n) {
        av[static_cast<size_t>(n)] = rng.uniform(-0.3, 0.3) * std::pow(0.6, n);
    }
    const VerblunskySeq alpha(av);
    const bool add_mass = (id % 3) == 2;

    try {
        CircleMeasure mu = bernstein_szego(alpha, cfg.grid_size);
        IntervalMeasure nu = szego_forward(mu);
        if (add_mass) {
            nu.masses.push_back({2.5, 0.1});
            nu = nu.normalized();
        }

        JacobiParams extracted = jacobi_from_measure(nu, 24);

        // Strip past any eigenvalues produced by the off-interval mass.
        int n_strip = 0;
        while (n_strip <= 16 && has_eigenvalues_off_band(strip(extracted, n_strip))) ++n_strip;
        const bool stripped_clean = n_strip <= 16;
        auto [lambda, kappa] = tail_sums(strip(extracted, n_strip));

        FourierSeries logw = analytic_calculus(analyze(mu.weight), Calculus::Log);
        fill_rows(out, alpha.tail_part(), &logw, lambda, kappa, cfg.space);

        const bool lam_flat = profile_is_flat(partial_norm_profile(lambda, cfg.space));
        const bool kap_flat = profile_is_flat(partial_norm_profile(kappa, cfg.space));
        const bool ok = stripped_clean && lam_flat && kap_flat;
        out.verdict.verdict = ok ? "consistent" : "inconsistent";
        out.verdict.details = json{{"added_mass", add_mass},
                                   {"n_stripped", n_strip},
                                   {"lambda_flat", lam_flat},
                                   {"kappa_flat", kap_flat}};
    } catch (const std::exception& e) {
        out.verdict.verdict = std::string("error: ") + e.what();
    }
    return out;
}

} // namespace

void ExperimentConfig::validate() const {
    if (grid_size < 256 || (grid_size & (grid_size - 1)) != 0) {
        throw SchemaError("config: grid_size must be a power of two >= 256");
    }
    if (!(tol > 0.0)) throw SchemaError("config: tol must be positive");
    if (max_iter < 1) throw SchemaError("config: max_iter must be >= 1");
    if (max_support < 1) throw SchemaError("config: max_support must be >= 1");
    space.validate();
}

SpaceSpec parse_space(const std::string& name) {
    if (name == "l11") return SpaceSpec::l1(1.0);
    if (name == "l21") return SpaceSpec::l2(1.0);
    if (name == "intersection") return SpaceSpec::intersection();
    if (name.rfind("l1s:", 0) == 0) {
        const double s = std::atof(name.c_str() + 4);
        if (!(s >= 0.0)) throw SchemaError("space: s must be >= 0");
        return SpaceSpec::l1(s);
    }
    throw SchemaError("space: expected l11, l21, intersection, or l1s:<s>");
}

ExperimentOutcome run_equivalence(const ExperimentConfig& config, Direction dir, int n_samples) {
    config.validate();
    if (n_samples < 1) throw SchemaError("config: need at least one sample");

    std::vector<SampleOutput> outputs(static_cast<size_t>(n_samples));
    const int pool = std::min(thread_cap(), n_samples);
    std::vector<std::thread> workers;
    std::atomic<int> next{0};
    for (int t = 0; t < pool; ++t) {
        workers.emplace_back([&] {
            while (true) {
                const int id = next.fetch_add(1);
                if (id >= n_samples) break;
                outputs[static_cast<size_t>(id)] = dir == Direction::Forward
                                                       ? run_forward_sample(config, id)
                                                       : run_reverse_sample(config, id);
            }
        });
    }
    for (std::thread& w : workers) w.join();

    const std::string tag = dir == Direction::Forward ? "forward" : "reverse";
    std::filesystem::create_directories(config.output_dir);
    ExperimentOutcome outcome;
    outcome.csv_path = config.output_dir + "/equivalence_" + tag + ".csv";
    outcome.json_path = config.output_dir + "/equivalence_" + tag + ".json";

    std::ofstream csv(outcome.csv_path);
    if (!csv) throw Error("cannot write " + outcome.csv_path);
    csv << "# " << kReportNote << "\n";
    csv << "sample_id,truncation,partial_norm_alpha,partial_norm_logw,"
           "partial_norm_lambda,partial_norm_kappa,verdict\n";
    for (const SampleOutput& so : outputs) {
        for (const SampleRow& row : so.rows) {
            csv << so.verdict.sample_id << ',' << row.truncation << ',' << fmt(row.alpha_norm)
                << ',' << fmt(row.logw_norm) << ',' << fmt(row.lambda_norm) << ','
                << fmt(row.kappa_norm) << ',' << so.verdict.verdict << "\n";
        }
    }
    csv.close();

    json samples = json::array();
    bool all_ok = true;
    for (const SampleOutput& so : outputs) {
        outcome.verdicts.push_back(so.verdict);
        all_ok = all_ok && so.verdict.verdict == "consistent";
        samples.push_back(json{{"sample", so.verdict.sample_id},
                               {"verdict", so.verdict.verdict},
                               {"details", so.verdict.details}});
    }
    outcome.all_consistent = all_ok;

    json report{{"direction", tag},
                {"seed", config.seed},
                {"grid_size", config.grid_size},
                {"space", config.space.name()},
                {"note", kReportNote},
                {"samples", samples}};
    write_file(outcome.json_path, report);
    return outcome;
}

} // namespace szj
