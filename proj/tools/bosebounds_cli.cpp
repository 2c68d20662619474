// Command line front end: bosebounds {verify|solve|sweep|limits} [options]

#include <cstdio>
#include <iostream>
#include <string>
#include <utility>

#include "CLI11.hpp"

#include "bosebounds/errors.hpp"
#include "bosebounds/harness.hpp"

namespace bb = bosebounds;

namespace {

struct Flags {
  std::string config;
  std::string format;
  std::string out;
  std::uint64_t seed = 0;
  bool seed_given = false;
};

void add_flags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--config", f.config, "JSON run configuration")->check(CLI::ExistingFile);
  cmd->add_option("--format", f.format, "report format")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", f.out, "output directory");
  cmd->add_option_function<std::uint64_t>(
      "--seed", [&f](std::uint64_t s) { f.seed = s, f.seed_given = true; }, "RNG seed (overrides the config)");
}

void print_summary(const bb::BoundsReport& r) {
  for (const auto& a : r.assertions) {
    std::printf("%-5s %-40s", std::string(bb::to_string(a.status)).c_str(), a.name.c_str());
    if (a.residual) std::printf(" residual=%.3e", *a.residual);
    if (a.threshold) std::printf(" threshold=%.1e", *a.threshold);
    if (a.status == bb::AssertionStatus::error) std::printf(" %s", a.detail.c_str());
    std::printf("\n");
  }
  for (const auto& d : r.diagnostics) std::printf("info  %-40s %.10g  (%s)\n", d.name.c_str(), d.value, d.detail.c_str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Variational and lower bounds for bosonic Coulomb atoms and Newton stars"};
  app.require_subcommand(1);
  Flags flags;
  const std::pair<const char*, const char*> commands[] = {
      {"verify", "identity suite and telescoping"},
      {"solve", "two-body and Hartree energies"},
      {"sweep", "full bounds report over the N range"},
      {"limits", "large-N limiting constants"},
  };
  for (const auto& [name, help] : commands) add_flags(app.add_subcommand(name, help), flags);
  CLI11_PARSE(app, argc, argv);

  try {
    const auto command = bb::command_from_string(app.get_subcommands().front()->get_name());
    bb::RunConfig config = flags.config.empty() ? bb::RunConfig{} : bb::load_config(flags.config);
    if (flags.seed_given) config.rng_seed = flags.seed;
    if (!flags.format.empty()) config.format = bb::report_format_from_string(flags.format);
    if (!flags.out.empty()) config.output_dir = flags.out;
    config.validate();

    auto report = bb::run(config, command);
    if (config.format == bb::ReportFormat::json) report.provenance.timestamp = bb::utc_timestamp();
    const auto path = bb::write_report(report, config.format, config.output_dir);
    print_summary(report);
    std::printf("%s: %s\n", report.all_passed() ? "all assertions passed" : "assertions failed",
                path.string().c_str());
    return report.all_passed() ? 0 : 1;
  } catch (const bb::InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
}
