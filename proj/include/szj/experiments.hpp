#pragma once

#include <string>
#include <vector>

#include "szj/json_io.hpp"

namespace szj {

/// Configuration of the equivalence sweep. grid_size must be a power of two
/// >= 256. SZJ_THREADS caps the number of concurrently running samples.
struct ExperimentConfig {
    uint64_t seed = 1;
    int grid_size = 4096;
    SpaceSpec space = SpaceSpec::l1(1.0);
    double tol = 1e-12;
    int max_iter = 500;
    int max_support = 8;
    std::string output_dir = ".";

    void validate() const; // SchemaError on violation
};

enum class Direction { Forward, Reverse };

struct SampleVerdict {
    int sample_id = 0;
    std::string verdict; // "consistent", "inconsistent", or "error: ..."
    json details;
};

struct ExperimentOutcome {
    std::vector<SampleVerdict> verdicts;
    std::string csv_path;
    std::string json_path;
    bool all_consistent = false;
};

/// Forward direction: sample small tail data (lambda, kappa), recover the
/// coefficient sequence by the fixed-point solver, build its measure, and run
/// the class membership and decay diagnostics. Reverse direction: sample
/// measures (Bernstein-Szego based, optionally with an off-interval mass),
/// extract Jacobi parameters, strip past any eigenvalues, and test the decay
/// of the tail sums. Per-sample failures are recorded, not fatal; reports are
/// byte-identical for identical config and seed.
ExperimentOutcome run_equivalence(const ExperimentConfig& config, Direction dir, int n_samples);

/// "l11", "l21", "intersection", or "l1s:<s>".
SpaceSpec parse_space(const std::string& name);

} // namespace szj
