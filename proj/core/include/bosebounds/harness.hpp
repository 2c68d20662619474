#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "bosebounds/hartree.hpp"
#include "bosebounds/hylleraas.hpp"
#include "bosebounds/report.hpp"
#include "bosebounds/system.hpp"

namespace bosebounds {

enum class SeedPolicy {
  in_repo,  ///< corollary bounds seeded from values computed here
  none,     ///< no corollary, Levy-Leblond or Lieb rows
};

/// One run of the harness. The `n` field of `system` is ignored; the N range
/// is [n_min, n_max].
struct RunConfig {
  SystemSpec system;
  int n_min = 2;
  int n_max = 2;

  struct TwoBody {
    int omega = 8;
    std::optional<double> alpha;  ///< empty: golden-section search
    double alpha_tolerance = 1e-4;
  } two_body;

  struct Hartree {
    double r_max = 60.0;
    int points = 6000;
    double mixing = 0.3;
    double tolerance = 1e-12;
    int max_iterations = 2000;
  } hartree;

  struct Identity {
    int samples = 1000;
    int n_max = 10;
    int graph_n_max = 8;
    int telescope_n_max = 50;
  } identity;

  struct Limits {
    int n_coarse = 50;
    int n_fine = 100;
    double cauchy_tolerance = 1e-3;
  } limits;

  SeedPolicy seeds = SeedPolicy::in_repo;
  double lieb_constant = 1.0;
  double hall_constant = 1.0;
  std::uint64_t rng_seed = 20240611;
  std::string output_dir = "out";
  ReportFormat format = ReportFormat::csv;

  void validate() const;
  ScfOptions scf_options() const;
  TwoBodyOptions two_body_options() const;
};

RunConfig config_from_json(const nlohmann::json& j);
nlohmann::json to_json(const RunConfig& config);
RunConfig load_config(const std::filesystem::path& path);

enum class Command {
  verify,  ///< identity suite and telescoping only
  solve,   ///< two-body and Hartree energies for the configured system
  sweep,   ///< everything: identities, solves, bounds, sequences, cross checks
  limits,  ///< large-N limiting functionals and the E_H(N)/N^3 Cauchy test
};

std::string_view to_string(Command command);
Command command_from_string(std::string_view name);

/// Thresholds used by the assertions.
struct Thresholds {
  static constexpr double pair_decomposition = 1e-12;
  static constexpr double scaling = 1e-10;
  static constexpr double hydrogenic = 1e-6;
  static constexpr double intrinsic_two_body = 1e-5;
  static constexpr double hylleraas_virial = 1e-3;
  static constexpr double hartree_virial = 1e-4;
  static constexpr double grid_refinement = 1e-6;
};

// Individual suites. Each appends assertions, rows and diagnostics to
// `report`; a module error becomes an assertion with status error.
void pair_decomposition_suite(const RunConfig& config, std::mt19937_64& rng, BoundsReport& report);
void graph_identity_suite(const RunConfig& config, std::mt19937_64& rng, BoundsReport& report);
void scaling_suite(const RunConfig& config, BoundsReport& report);
void telescoping_suite(const RunConfig& config, BoundsReport& report);
void limits_suite(const RunConfig& config, BoundsReport& report);

/// Deterministic given the config; the provenance timestamp is left empty.
BoundsReport run(const RunConfig& config, Command command);

/// UTC time in ISO 8601, for the provenance block.
std::string utc_timestamp();

}  // namespace bosebounds
