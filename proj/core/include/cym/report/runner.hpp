#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cym/numeric/scalar.hpp"

namespace cym {

// CLI-facing run configuration.  Exit-code contract:
//   0 success, 1 named check failure under verify, 2 parse/usage error,
//   3 numeric precision failure.
struct RunConfig {
    std::string command; // validate | report | scan | verify | degenerate | presets
    std::string model;   // path or preset:<name>
    std::string points_file;
    std::string grid_spec; // "re0:re1:nre,im0:im1:nim[;...]" per modulus
    std::string out_dir = ".";
    Real tol = 0; // optional global tolerance override for verify checks (0 = defaults)
    std::uint64_t seed = 12345;
    std::vector<Real> radii; // degenerate: explicit radius ladder
    Real theta = 0.0;        // degenerate: ray angle
    bool extended_precision = false;
    int threads = 0; // 0 = hardware concurrency
};

struct RunResult {
    int exit_code = 0;
    std::vector<std::string> lines; // human-readable summary, printed by the CLI
};

RunResult run(const RunConfig& config);

} // namespace cym
