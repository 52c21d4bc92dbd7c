// Command-line driver for the Jacobi/circle spectral correspondence library.
//
// Subcommands:
//   forward      coefficient sequence -> Jacobi parameters and tail sums
//   solve        tail sums -> coefficient sequence (fixed-point inversion)
//   equivalence  seeded consistency sweep in either direction
//
// Exit codes: 0 success, 2 schema/config violation, 3 domain error,
// 4 no contraction, 5 iteration limit.

#include <iostream>

#include "CLI11.hpp"

#include "szj/experiments.hpp"
#include "szj/jacobi.hpp"
#include "szj/opuc.hpp"

namespace {

constexpr int kExitSchema = 2;
constexpr int kExitDomain = 3;
constexpr int kExitNoContraction = 4;
constexpr int kExitMaxIter = 5;

int cmd_forward(const std::string& alpha_file) {
    const szj::json in = szj::parse_file(alpha_file);
    const szj::VerblunskySeq alpha = szj::verblunsky_from_json(in);

    const szj::JacobiParams jp = szj::geronimus_forward(alpha);
    auto [lambda, kappa] = szj::tail_sums(jp);

    auto norms = [](const szj::DecaySeq& s) {
        return szj::json{{"l11", szj::norm(s, szj::SpaceSpec::l1(1.0))},
                         {"l21", szj::norm(s, szj::SpaceSpec::l2(1.0))},
                         {"intersection", szj::norm(s, szj::SpaceSpec::intersection())}};
    };
    szj::json out{{"a", jp.a},
                  {"b", jp.b},
                  {"lambda", szj::to_json(lambda)},
                  {"kappa", szj::to_json(kappa)},
                  {"norms",
                   {{"alpha", norms(alpha.tail_part())},
                    {"lambda", norms(lambda)},
                    {"kappa", norms(kappa)}}}};
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_solve(const std::string& data_file, double tol, int max_iter, bool no_strip,
              const std::string& space_name) {
    const szj::json in = szj::parse_file(data_file);
    if (!in.is_object() || !in.contains("lambda") || !in.contains("kappa")) {
        throw szj::SchemaError("solve: expected {\"lambda\": {...}, \"kappa\": {...}}");
    }
    const szj::DecaySeq lambda = szj::decay_seq_from_json(in["lambda"]);
    const szj::DecaySeq kappa = szj::decay_seq_from_json(in["kappa"]);
    const szj::SpaceSpec space = szj::parse_space(space_name);

    szj::SolverOptions opts;
    opts.tol = tol;
    opts.max_iter = max_iter;

    szj::StripSolveResult res;
    if (no_strip) {
        res.n_stripped = 0;
        res.result = szj::solve_verblunsky(lambda, kappa, opts, space);
    } else {
        res = szj::solve_with_stripping(lambda, kappa, space, opts);
    }

    szj::json out{{"alpha", res.result.alpha.entries()},
                  {"alpha_minus1", -1.0},
                  {"n_stripped", res.n_stripped},
                  {"residual", res.result.residual},
                  {"iterations", res.result.iterations},
                  {"boundary",
                   {{"alpha_minus1_implied", res.result.alpha_minus1},
                    {"alpha_minus2_implied", res.result.alpha_minus2},
                    {"residual", res.result.boundary_residual},
                    {"consistent", res.result.boundary_consistent}}}};
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_equivalence(const szj::ExperimentConfig& cfg, const std::string& direction,
                    int samples) {
    const szj::Direction dir =
        direction == "forward" ? szj::Direction::Forward : szj::Direction::Reverse;
    const szj::ExperimentOutcome outcome = szj::run_equivalence(cfg, dir, samples);

    szj::json out{{"csv", outcome.csv_path},
                  {"json", outcome.json_path},
                  {"all_consistent", outcome.all_consistent}};
    std::cout << out.dump(2) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Jacobi matrices with conditionally summable parameters: "
                 "coefficient maps, measure maps, and consistency sweeps"};
    app.require_subcommand(1);

    std::string alpha_file;
    CLI::App* fwd = app.add_subcommand("forward", "Coefficient sequence to Jacobi parameters");
    fwd->add_option("alpha_file", alpha_file, "JSON file with {\"alpha\": [...]}")->required();

    std::string data_file, solve_space = "l11";
    double tol = 1e-12;
    int max_iter = 500;
    bool no_strip = false;
    CLI::App* slv = app.add_subcommand("solve", "Recover coefficients from tail sums");
    slv->add_option("data_file", data_file, "JSON file with lambda and kappa")->required();
    slv->add_option("--tol", tol, "Residual threshold");
    slv->add_option("--max-iter", max_iter, "Iteration limit");
    slv->add_flag("--no-strip", no_strip, "Fail instead of stripping leading rows");
    slv->add_option("--space", solve_space, "Residual norm: l11, l21, intersection, l1s:<s>");

    std::string direction = "forward", space_name = "l11", out_dir = ".";
    int samples = 10;
    szj::ExperimentConfig cfg;
    CLI::App* eq = app.add_subcommand("equivalence", "Seeded consistency sweep");
    eq->add_option("--direction", direction, "forward or reverse")
        ->check(CLI::IsMember({"forward", "reverse"}));
    eq->add_option("--samples", samples, "Number of samples");
    eq->add_option("--seed", cfg.seed, "Seed");
    eq->add_option("--grid-size", cfg.grid_size, "Power of two >= 256");
    eq->add_option("--tol", cfg.tol, "Solver tolerance");
    eq->add_option("--max-iter", cfg.max_iter, "Solver iteration limit");
    eq->add_option("--max-support", cfg.max_support, "Largest sampled support");
    eq->add_option("--space", space_name, "l11, l21, intersection, or l1s:<s>");
    eq->add_option("--out", out_dir, "Output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitSchema;
    }

    try {
        if (fwd->parsed()) return cmd_forward(alpha_file);
        if (slv->parsed()) return cmd_solve(data_file, tol, max_iter, no_strip, solve_space);
        cfg.space = szj::parse_space(space_name);
        cfg.output_dir = out_dir;
        return cmd_equivalence(cfg, direction, samples);
    } catch (const szj::SchemaError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSchema;
    } catch (const szj::NoContraction& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNoContraction;
    } catch (const szj::MaxIterExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMaxIter;
    } catch (const szj::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
}
