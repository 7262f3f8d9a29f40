#ifndef HOLOSPEC_CLI_HPP
#define HOLOSPEC_CLI_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace holospec {

// Knobs shared by every subcommand.  Tolerances must be strictly positive
// and caps nonzero; validate_config enforces that before any work starts.
struct RunConfig {
  double matrix_tol = 1e-9;  // canonicalization / dedup grid
  double bucket_tol = 1e-7;  // spectrum bucketing
  double quad_tol = 1e-10;   // reserved for quadrature-backed paths

  std::size_t ball_cap = 10'000'000;  // enumeration explosion guard
  long fourier_cap = 4096;            // reserved for series truncation

  std::string presentation_path;
  std::string spectrum_path;
  std::string spectral_path;
  std::string out_path;         // empty = stdout
  std::string format = "json";  // json | csv

  bool strict = false;  // escaped windows / incomplete tables -> exit 3
  int threads = 1;
};

// Throws DomainError when a tolerance is not strictly positive, a cap is
// zero, threads < 1, or format is neither "json" nor "csv".
void validate_config(const RunConfig& cfg);

// The whole command-line surface behind the binary; args excludes argv[0].
// Returns the process exit code: 0 success, 2 usage/validation/parse
// failure, 3 when --strict is set and a result is marked incomplete.
int run_command(const std::vector<std::string>& args);

}  // namespace holospec

#endif
