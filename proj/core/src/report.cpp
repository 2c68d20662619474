#include "bosebounds/report.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <system_error>

#include "bosebounds/errors.hpp"

namespace bosebounds {

std::string_view to_string(AssertionStatus status) {
  switch (status) {
    case AssertionStatus::pass: return "pass";
    case AssertionStatus::fail: return "fail";
    case AssertionStatus::error: return "error";
  }
  return "error";
}

AssertionStatus assertion_status_from_string(std::string_view name) {
  if (name == "pass") return AssertionStatus::pass;
  if (name == "fail") return AssertionStatus::fail;
  if (name == "error") return AssertionStatus::error;
  throw InvalidArgument("unknown assertion status '" + std::string(name) + "'");
}

bool BoundsReport::all_passed() const {
  return std::all_of(assertions.begin(), assertions.end(),
                     [](const Assertion& a) { return a.status == AssertionStatus::pass; });
}

ReportFormat report_format_from_string(std::string_view name) {
  if (name == "csv") return ReportFormat::csv;
  if (name == "json") return ReportFormat::json;
  throw InvalidArgument("unknown report format '" + std::string(name) + "'");
}

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string to_csv(const BoundsReport& report) {
  std::string out = "system,N,method,bound_kind,value,normalized\n";
  for (const auto& r : report.rows) {
    out += r.system + ',' + std::to_string(r.n) + ',' + r.method + ',' + std::string(to_string(r.kind)) + ',' +
           format_double(r.value) + ',' + (r.normalized ? format_double(*r.normalized) : std::string()) + '\n';
  }
  return out;
}

namespace {

template <class T>
nlohmann::json optional_json(const std::optional<T>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

std::optional<double> optional_double(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<double>();
}

}  // namespace

nlohmann::json to_json(const BoundsReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : report.rows)
    rows.push_back({{"system", r.system},
                    {"N", r.n},
                    {"method", r.method},
                    {"bound_kind", to_string(r.kind)},
                    {"value", r.value},
                    {"normalized", optional_json(r.normalized)}});
  nlohmann::json assertions = nlohmann::json::array();
  for (const auto& a : report.assertions)
    assertions.push_back({{"name", a.name},
                          {"status", to_string(a.status)},
                          {"residual", optional_json(a.residual)},
                          {"threshold", optional_json(a.threshold)},
                          {"detail", a.detail}});
  nlohmann::json diagnostics = nlohmann::json::array();
  for (const auto& d : report.diagnostics)
    diagnostics.push_back({{"name", d.name}, {"value", d.value}, {"detail", d.detail}});
  const auto& p = report.provenance;
  return {{"command", report.command},
          {"passed", report.all_passed()},
          {"rows", rows},
          {"assertions", assertions},
          {"diagnostics", diagnostics},
          {"provenance",
           {{"config", p.config},
            {"rng_seed", p.rng_seed},
            {"version", p.version},
            {"libraries", p.libraries},
            {"timestamp", p.timestamp}}}};
}

BoundsReport report_from_json(const nlohmann::json& j) {
  try {
    BoundsReport r;
    r.command = j.at("command").get<std::string>();
    for (const auto& row : j.at("rows"))
      r.rows.push_back({row.at("system").get<std::string>(), row.at("N").get<int>(),
                        row.at("method").get<std::string>(),
                        bound_kind_from_string(row.at("bound_kind").get<std::string>()),
                        row.at("value").get<double>(), optional_double(row, "normalized")});
    for (const auto& a : j.at("assertions"))
      r.assertions.push_back({a.at("name").get<std::string>(),
                              assertion_status_from_string(a.at("status").get<std::string>()),
                              optional_double(a, "residual"), optional_double(a, "threshold"),
                              a.value("detail", std::string())});
    for (const auto& d : j.at("diagnostics"))
      r.diagnostics.push_back(
          {d.at("name").get<std::string>(), d.at("value").get<double>(), d.value("detail", std::string())});
    const auto& p = j.at("provenance");
    r.provenance.config = p.at("config");
    r.provenance.rng_seed = p.at("rng_seed").get<std::uint64_t>();
    r.provenance.version = p.at("version").get<std::string>();
    r.provenance.libraries = p.at("libraries").get<std::vector<std::string>>();
    r.provenance.timestamp = p.value("timestamp", std::string());
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed report: ") + e.what());
  }
}

std::filesystem::path write_report(const BoundsReport& report, ReportFormat format,
                                   const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  const auto target = dir / (format == ReportFormat::csv ? "report.csv" : "report.json");
  auto tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::system_error(errno, std::generic_category(), "cannot open " + tmp.string());
    if (format == ReportFormat::csv)
      out << to_csv(report);
    else
      out << to_json(report).dump(2) << '\n';
    out.close();
    if (!out) throw std::system_error(errno, std::generic_category(), "cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, target);
  return target;
}

}  // namespace bosebounds
