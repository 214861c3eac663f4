#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gmc {

/// Parsed experiment configuration; one instance per CLI invocation.
struct RunConfig {
  std::string command;
  std::uint64_t seed = 1;
  int modes = 5;        // n
  double energy = 50.0;  // E
  int reduction = 1;     // m
  std::int64_t samples = 100000;
  double squeezing = 1.0;                        // r
  std::vector<double> squeezings = {0.5, 1.0};   // figure1 curve set
  int quad_nodes = 64;                           // per quadrature leg
  int policy_nodes = 256;
  int grid_points = 40;
  double emin = 2.05;
  double emax = 10.0;
  double tol = 0.01;
  std::int64_t mc_samples = 200000;
  std::string output;
  std::string policy_output;
  std::string histogram_output;
  int workers = 0;
  bool no_timestamp = false;
  bool fixed_total = false;
  bool random_mode = false;
  bool relax_energy_bound = false;
};

/// Empty string if the config satisfies every precondition of its command;
/// otherwise a diagnostic naming the offending field.
std::string validate_config(const RunConfig& cfg);

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidationFailure = 1;
inline constexpr int kExitConfigError = 2;

/// Dispatches cfg.command; writes outputs; returns a process exit code.
int run_command(const RunConfig& cfg);

/// One line of the validation report.
struct ValidationCheck {
  std::string name;
  double tolerance = 0.0;
  double measured = 0.0;
  bool passed = false;
};

std::vector<ValidationCheck> run_validation_checks(const RunConfig& cfg);

}  // namespace gmc
