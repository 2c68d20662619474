#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "bosebounds/estimate.hpp"

namespace bosebounds {

struct ReportRow {
  std::string system;
  int n = 0;
  std::string method;
  BoundKind kind = BoundKind::estimate;
  double value = 0.0;
  std::optional<double> normalized;  ///< empty where the normalizing polynomial vanishes

  bool operator==(const ReportRow&) const = default;
};

enum class AssertionStatus { pass, fail, error };

std::string_view to_string(AssertionStatus status);
AssertionStatus assertion_status_from_string(std::string_view name);

struct Assertion {
  std::string name;
  AssertionStatus status = AssertionStatus::error;
  std::optional<double> residual;  ///< measured quantity compared against the threshold
  std::optional<double> threshold;
  std::string detail;

  bool operator==(const Assertion&) const = default;
};

/// Reported but never asserted.
struct Diagnostic {
  std::string name;
  double value = 0.0;
  std::string detail;

  bool operator==(const Diagnostic&) const = default;
};

struct Provenance {
  nlohmann::json config;
  std::uint64_t rng_seed = 0;
  std::string version;
  std::vector<std::string> libraries;
  std::string timestamp;  ///< wall clock; the only nondeterministic field

  bool operator==(const Provenance&) const = default;
};

struct BoundsReport {
  std::string command;
  std::vector<ReportRow> rows;
  std::vector<Assertion> assertions;
  std::vector<Diagnostic> diagnostics;
  Provenance provenance;

  bool all_passed() const;
  bool operator==(const BoundsReport&) const = default;
};

enum class ReportFormat { csv, json };

ReportFormat report_format_from_string(std::string_view name);

/// Shortest decimal that round-trips to the same double.
std::string format_double(double x);

/// Header `system,N,method,bound_kind,value,normalized` and one line per row.
std::string to_csv(const BoundsReport& report);

nlohmann::json to_json(const BoundsReport& report);
BoundsReport report_from_json(const nlohmann::json& j);

/// Writes report.csv or report.json into `dir` via a temporary file and a
/// rename. Returns the path written.
std::filesystem::path write_report(const BoundsReport& report, ReportFormat format,
                                   const std::filesystem::path& dir);

}  // namespace bosebounds
