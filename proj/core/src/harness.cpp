#include "bosebounds/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <limits>
#include <set>

#include <Eigen/Core>
#include <boost/version.hpp>

#include "bosebounds/bounds.hpp"
#include "bosebounds/errors.hpp"
#include "bosebounds/exact.hpp"
#include "bosebounds/rational.hpp"

#ifndef BOSEBOUNDS_VERSION
#define BOSEBOUNDS_VERSION "unknown"
#endif

namespace bosebounds {

// ---------------------------------------------------------------- config

void RunConfig::validate() const {
  SystemSpec probe = system;
  probe.n = n_min;
  probe.validate();
  if (n_max < n_min) throw InvalidArgument("empty N range");
  if (n_min < chain_base(system.family))
    throw InvalidArgument("N range must start at " + std::to_string(chain_base(system.family)) + " or above for " +
                          std::string(to_string(system.family)));
  if (two_body.omega < 0) throw InvalidArgument("two_body.omega must be >= 0");
  if (two_body.alpha && !(*two_body.alpha > 0.0)) throw InvalidArgument("two_body.alpha must be > 0");
  if (!(two_body.alpha_tolerance > 0.0)) throw InvalidArgument("two_body.alpha_tolerance must be > 0");
  scf_options().grid.validate();
  if (!(hartree.mixing > 0.0 && hartree.mixing <= 1.0)) throw InvalidArgument("hartree.mixing must be in (0, 1]");
  if (!(hartree.tolerance > 0.0)) throw InvalidArgument("hartree.tolerance must be > 0");
  if (hartree.max_iterations < 1) throw InvalidArgument("hartree.max_iterations must be >= 1");
  if (identity.samples < 1) throw InvalidArgument("identity.samples must be >= 1");
  if (identity.n_max < 2) throw InvalidArgument("identity.n_max must be >= 2");
  if (identity.graph_n_max < 3) throw InvalidArgument("identity.graph_n_max must be >= 3");
  if (identity.telescope_n_max < 4) throw InvalidArgument("identity.telescope_n_max must be >= 4");
  if (limits.n_coarse < 2 || limits.n_fine <= limits.n_coarse)
    throw InvalidArgument("limits need 2 <= n_coarse < n_fine");
  if (!(limits.cauchy_tolerance > 0.0)) throw InvalidArgument("limits.cauchy_tolerance must be > 0");
  if (!(lieb_constant > 0.0) || !(hall_constant > 0.0)) throw InvalidArgument("constants must be > 0");
}

ScfOptions RunConfig::scf_options() const {
  return {{hartree.r_max, hartree.points}, hartree.mixing, hartree.tolerance, hartree.max_iterations};
}

TwoBodyOptions RunConfig::two_body_options() const {
  TwoBodyOptions o;
  o.omega = two_body.omega;
  o.alpha = two_body.alpha;
  o.search.tolerance = two_body.alpha_tolerance;
  return o;
}

namespace {

using nlohmann::json;

void check_keys(const json& j, std::initializer_list<const char*> allowed, const std::string& where) {
  if (!j.is_object()) throw InvalidArgument(where + " must be an object");
  const std::set<std::string> known(allowed.begin(), allowed.end());
  for (const auto& [key, _] : j.items())
    if (!known.contains(key)) throw InvalidArgument("unknown key '" + key + "' in " + where);
}

template <class T>
void read(const json& j, const char* key, T& out) {
  if (j.contains(key)) out = j.at(key).get<T>();
}

std::string_view to_string(SeedPolicy p) { return p == SeedPolicy::in_repo ? "in_repo" : "none"; }

SeedPolicy seed_policy_from_string(std::string_view s) {
  if (s == "in_repo") return SeedPolicy::in_repo;
  if (s == "none") return SeedPolicy::none;
  throw InvalidArgument("unknown seed policy '" + std::string(s) + "'");
}

}  // namespace

RunConfig config_from_json(const json& j) {
  RunConfig c;
  try {
    check_keys(j, {"system", "n_min", "n_max", "two_body", "hartree", "identity", "limits", "seeds", "constants",
                   "rng_seed", "output"},
               "config");
    if (j.contains("system")) {
      const auto& s = j.at("system");
      check_keys(s, {"family", "z", "beta", "gravity_scale", "pair_rescale"}, "system");
      if (s.contains("family")) c.system.family = family_from_string(s.at("family").get<std::string>());
      read(s, "z", c.system.z);
      read(s, "beta", c.system.beta);
      read(s, "gravity_scale", c.system.gravity_scale);
      read(s, "pair_rescale", c.system.pair_rescale);
    }
    read(j, "n_min", c.n_min);
    read(j, "n_max", c.n_max);
    if (j.contains("two_body")) {
      const auto& t = j.at("two_body");
      check_keys(t, {"omega", "alpha", "alpha_tolerance"}, "two_body");
      read(t, "omega", c.two_body.omega);
      if (t.contains("alpha") && !t.at("alpha").is_null()) c.two_body.alpha = t.at("alpha").get<double>();
      read(t, "alpha_tolerance", c.two_body.alpha_tolerance);
    }
    if (j.contains("hartree")) {
      const auto& h = j.at("hartree");
      check_keys(h, {"r_max", "points", "mixing", "tolerance", "max_iterations"}, "hartree");
      read(h, "r_max", c.hartree.r_max);
      read(h, "points", c.hartree.points);
      read(h, "mixing", c.hartree.mixing);
      read(h, "tolerance", c.hartree.tolerance);
      read(h, "max_iterations", c.hartree.max_iterations);
    }
    if (j.contains("identity")) {
      const auto& i = j.at("identity");
      check_keys(i, {"samples", "n_max", "graph_n_max", "telescope_n_max"}, "identity");
      read(i, "samples", c.identity.samples);
      read(i, "n_max", c.identity.n_max);
      read(i, "graph_n_max", c.identity.graph_n_max);
      read(i, "telescope_n_max", c.identity.telescope_n_max);
    }
    if (j.contains("limits")) {
      const auto& l = j.at("limits");
      check_keys(l, {"n_coarse", "n_fine", "cauchy_tolerance"}, "limits");
      read(l, "n_coarse", c.limits.n_coarse);
      read(l, "n_fine", c.limits.n_fine);
      read(l, "cauchy_tolerance", c.limits.cauchy_tolerance);
    }
    if (j.contains("seeds")) c.seeds = seed_policy_from_string(j.at("seeds").get<std::string>());
    if (j.contains("constants")) {
      const auto& k = j.at("constants");
      check_keys(k, {"lieb", "hall"}, "constants");
      read(k, "lieb", c.lieb_constant);
      read(k, "hall", c.hall_constant);
    }
    read(j, "rng_seed", c.rng_seed);
    if (j.contains("output")) {
      const auto& o = j.at("output");
      check_keys(o, {"dir", "format"}, "output");
      read(o, "dir", c.output_dir);
      if (o.contains("format")) c.format = report_format_from_string(o.at("format").get<std::string>());
    }
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed config: ") + e.what());
  }
  c.validate();
  return c;
}

json to_json(const RunConfig& c) {
  return {{"system",
           {{"family", to_string(c.system.family)},
            {"z", c.system.z},
            {"beta", c.system.beta},
            {"gravity_scale", c.system.gravity_scale},
            {"pair_rescale", c.system.pair_rescale}}},
          {"n_min", c.n_min},
          {"n_max", c.n_max},
          {"two_body",
           {{"omega", c.two_body.omega},
            {"alpha", c.two_body.alpha ? json(*c.two_body.alpha) : json(nullptr)},
            {"alpha_tolerance", c.two_body.alpha_tolerance}}},
          {"hartree",
           {{"r_max", c.hartree.r_max},
            {"points", c.hartree.points},
            {"mixing", c.hartree.mixing},
            {"tolerance", c.hartree.tolerance},
            {"max_iterations", c.hartree.max_iterations}}},
          {"identity",
           {{"samples", c.identity.samples},
            {"n_max", c.identity.n_max},
            {"graph_n_max", c.identity.graph_n_max},
            {"telescope_n_max", c.identity.telescope_n_max}}},
          {"limits",
           {{"n_coarse", c.limits.n_coarse},
            {"n_fine", c.limits.n_fine},
            {"cauchy_tolerance", c.limits.cauchy_tolerance}}},
          {"seeds", to_string(c.seeds)},
          {"constants", {{"lieb", c.lieb_constant}, {"hall", c.hall_constant}}},
          {"rng_seed", c.rng_seed},
          {"output", {{"dir", c.output_dir}, {"format", c.format == ReportFormat::csv ? "csv" : "json"}}}};
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open config " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw InvalidArgument("cannot parse " + path.string() + ": " + e.what());
  }
  return config_from_json(j);
}

std::string_view to_string(Command command) {
  switch (command) {
    case Command::verify: return "verify";
    case Command::solve: return "solve";
    case Command::sweep: return "sweep";
    case Command::limits: return "limits";
  }
  return "sweep";
}

Command command_from_string(std::string_view name) {
  if (name == "verify") return Command::verify;
  if (name == "solve") return Command::solve;
  if (name == "sweep") return Command::sweep;
  if (name == "limits") return Command::limits;
  throw InvalidArgument("unknown command '" + std::string(name) + "'");
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// ---------------------------------------------------------------- helpers

namespace {

void record(BoundsReport& r, std::string name, double residual, double threshold, std::string detail = {}) {
  const auto status = residual <= threshold ? AssertionStatus::pass : AssertionStatus::fail;
  r.assertions.push_back({std::move(name), status, residual, threshold, std::move(detail)});
}

template <class F>
void guarded(BoundsReport& r, const std::string& name, F&& body) {
  try {
    body();
  } catch (const std::exception& e) {
    r.assertions.push_back({name, AssertionStatus::error, std::nullopt, std::nullopt, e.what()});
  }
}

double relative_error(double value, double reference) { return std::abs(value - reference) / std::abs(reference); }

void add_row(BoundsReport& r, const EnergyEstimate& e, bool pair_rescale) {
  std::optional<double> normalized;
  if (pair_rescale) {
    normalized = e.value() / e.n();
  } else {
    const BigInt p = family_polynomial(e.family(), e.n());
    if (p > 0) normalized = to_double(Rational(e.value()) / Rational(p));
  }
  r.rows.push_back({std::string(to_string(e.family())), e.n(), e.method(), e.kind(), e.value(), normalized});
}

SystemSpec spec_at(const RunConfig& c, Family family, int n) {
  SystemSpec s = c.system;
  s.family = family;
  s.n = n;
  return s;
}

SystemSpec spec_at(const RunConfig& c, int n) { return spec_at(c, c.system.family, n); }

TwoBodyProblem two_body_problem(const ReducedSystem& sys) {
  if (sys.n != 2 || sys.family == Family::newton_intrinsic)
    throw InvalidArgument("two-body problem needs a centered N = 2 system");
  return {sys.central_coeff, sys.pair_coeff, sys.kinetic_coeff};
}

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-1000, 1000), den(1, 1000);
  return Rational(num(rng), den(rng));
}

constexpr Family kFamilies[] = {Family::coulomb_atom, Family::newton_fixed_grain, Family::newton_intrinsic};

}  // namespace

// ---------------------------------------------------------------- suites

void pair_decomposition_suite(const RunConfig& config, std::mt19937_64& rng, BoundsReport& report) {
  for (Family family : kFamilies) {
    const std::string name = "pair_decomposition." + std::string(to_string(family));
    guarded(report, name, [&] {
      double worst = 0.0;
      int worst_n = 0;
      for (int n = 2; n <= config.identity.n_max; ++n) {
        const auto sys = reduce(spec_at(config, family, n));
        for (int s = 0; s < config.identity.samples; ++s) {
          const auto x = random_phase_point(n, rng);
          const double h = classical_energy(sys, x);
          long double sum = 0.0L, scale = 0.0L;
          for (const auto& t : pair_terms(sys, x)) {
            sum += t.value;
            scale += std::abs(t.value);
          }
          const double res = static_cast<double>(std::abs(sum - h) / std::max<long double>(std::abs(h), scale));
          if (res > worst) {
            worst = res;
            worst_n = n;
          }
        }
      }
      record(report, name, worst, Thresholds::pair_decomposition,
             "max relative residual over N = 2.." + std::to_string(config.identity.n_max) + " (worst at N = " +
                 std::to_string(worst_n) + ")");
    });
  }
}

void graph_identity_suite(const RunConfig& config, std::mt19937_64& rng, BoundsReport& report) {
  guarded(report, "graph_identity", [&] {
    int failures = 0;
    for (int n = 3; n <= config.identity.graph_n_max; ++n) {
      BondWeights b(n);
      for (int k = 0; k < n; ++k)
        for (int l = k + 1; l < n; ++l) b.at(k, l) = random_rational(rng);
      if (!graph_identity_check(b).holds()) ++failures;
    }
    record(report, "graph_identity", failures, 0.0,
           "exact rational equality, N = 3.." + std::to_string(config.identity.graph_n_max) + "; residual counts failures");
  });
}

void scaling_suite(const RunConfig& config, BoundsReport& report) {
  guarded(report, "scaling_law", [&] {
    double worst = 0.0;
    for (double a : {1.0, 0.7}) {
      const auto phi = hydrogenic_orbital(config.scf_options().grid, a);
      RadialOrbital normalized = phi;
      const double norm = std::sqrt(phi.norm_squared());
      for (double& u : normalized.u) u /= norm;
      const auto f = evaluate_forms(normalized);
      for (double lambda : {0.5, 2.0, 3.0}) {
        const auto g = evaluate_forms(rescale(normalized, lambda));
        worst = std::max({worst, relative_error(g.kinetic, lambda * lambda * f.kinetic),
                          relative_error(g.central, lambda * f.central), relative_error(g.pair, lambda * f.pair)});
      }
    }
    record(report, "scaling_law", worst, Thresholds::scaling, "(k, c, i) -> (l^2 k, l c, l i) for l in {0.5, 2, 3}");
  });
}

void telescoping_suite(const RunConfig& config, BoundsReport& report) {
  for (Family family : kFamilies) {
    const std::string name = "chain_telescope." + std::string(to_string(family));
    guarded(report, name, [&] {
      const int base = chain_base(family);
      int failures = 0;
      for (int n = base + 1; n <= config.identity.telescope_n_max; ++n) {
        const Rational t = telescope(family, n);
        const BigInt b = n;
        const Rational closed = family == Family::newton_fixed_grain ? Rational(b * (b - 1) * (b - 2), 6)
                                                                     : Rational(b * b * (b - 1), 4);
        if (t * Rational(family_polynomial(family, base)) != Rational(family_polynomial(family, n)) ||
            t != closed || t != corollary_coefficient(family, n))
          ++failures;
      }
      record(report, name, failures, 0.0,
             "product of chain factors equals P(N)/P(base) for N <= " + std::to_string(config.identity.telescope_n_max));
    });
  }
}

void limits_suite(const RunConfig& config, BoundsReport& report) {
  const ScfOptions coarse = config.scf_options();
  ScfOptions fine = coarse;
  fine.grid.n *= 2;

  double worst_virial = 0.0;
  std::optional<double> coulomb_limit;

  struct LimitCase {
    const char* label;
    Family family;
    HartreeFunctionalCoeffs coeffs;
  };
  for (const auto& lc : {LimitCase{"coulomb", Family::coulomb_atom, coulomb_limit_coeffs()},
                         LimitCase{"newton", Family::newton_intrinsic, newton_limit_coeffs()}}) {
    const std::string name = std::string("limit_grid_refinement.") + lc.label;
    guarded(report, name, [&] {
      const auto a = scf_solve(lc.coeffs, coarse);
      const auto b = scf_solve(lc.coeffs, fine);
      worst_virial = std::max({worst_virial, a.virial_residual, b.virial_residual});
      report.rows.push_back({std::string(to_string(lc.family)), 0, "hartree_limit", BoundKind::estimate, b.energy,
                             b.energy});
      record(report, name, std::abs(a.energy - b.energy), Thresholds::grid_refinement,
             "limiting functional minimum, spacing halved");
      if (lc.family == Family::coulomb_atom) coulomb_limit = b.energy;
    });
  }

  guarded(report, "limit_cauchy.coulomb", [&] {
    std::vector<double> per_cube;
    for (int n : {config.limits.n_coarse, config.limits.n_fine}) {
      const SystemSpec spec{Family::coulomb_atom, n};
      const auto r = scf_solve(functional_coeffs(spec), coarse);
      worst_virial = std::max(worst_virial, r.virial_residual);
      add_row(report, {r.energy, BoundKind::upper, "hartree", Family::coulomb_atom, n}, false);
      per_cube.push_back(r.energy / (double(n) * n * n));
    }
    const double cauchy = relative_error(per_cube[0], per_cube[1]);
    record(report, "limit_cauchy.coulomb", cauchy, config.limits.cauchy_tolerance,
           "|e(" + std::to_string(config.limits.n_coarse) + ") - e(" + std::to_string(config.limits.n_fine) +
               ")| / |e(" + std::to_string(config.limits.n_fine) + ")| with e(N) = E_H(N)/N^3");
    if (coulomb_limit) {
      report.diagnostics.push_back({"limit_distance.coulomb", relative_error(per_cube[1], *coulomb_limit),
                                    "relative distance of e(" + std::to_string(config.limits.n_fine) +
                                        ") to the limiting minimum"});
      // e(N) = e_inf + a/N + O(1/N^2) removes the leading term
      const double nc = config.limits.n_coarse, nf = config.limits.n_fine;
      const double extrapolated = (nf * per_cube[1] - nc * per_cube[0]) / (nf - nc);
      report.diagnostics.push_back({"limit_extrapolated.coulomb", relative_error(extrapolated, *coulomb_limit),
                                    "relative distance of the 1/N-extrapolated e(N) to the limiting minimum"});
    }
  });
  record(report, "limit_virial", worst_virial, Thresholds::hartree_virial,
         "max |dE/dlambda| / |E| over the limit runs");
}

// ---------------------------------------------------------------- run

namespace {

struct SolveOutcome {
  std::vector<EnergyEstimate> hartree;  ///< over the N range
  std::optional<EnergyEstimate> two_body;
  std::optional<EnergyEstimate> seed;
};

void exact_values(BoundsReport& report) {
  guarded(report, "exact.hydrogenic", [&] {
    record(report, "exact.hydrogenic", relative_error(hydrogenic_energy({1.0, 1.0}), -0.5), Thresholds::hydrogenic,
           "closed form, mu = gamma = 1");
  });
  guarded(report, "exact.hartree_hydrogenic", [&] {
    const auto r = scf_solve({0.5, -1.0, 0.0}, {});
    record(report, "exact.hartree_hydrogenic", relative_error(r.energy, -0.5), Thresholds::hydrogenic,
           "SCF with coefficients (1/2, -1, 0)");
  });
}

SolveOutcome solve_system(const RunConfig& config, BoundsReport& report) {
  SolveOutcome out;
  const Family family = config.system.family;
  const bool rescaled = config.system.pair_rescale;

  if (family == Family::newton_intrinsic) {
    guarded(report, "exact.intrinsic_two_body", [&] {
      const auto rel = solve_relative_problem(reduce_two_body_intrinsic(), config.two_body.omega);
      const EnergyEstimate exact{intrinsic_two_body_energy(), BoundKind::exact, "exact", family, 2};
      add_row(report, exact, rescaled);
      add_row(report, {rel.energy, BoundKind::upper, "hylleraas_relative", family, 2}, rescaled);
      record(report, "exact.intrinsic_two_body", std::abs(rel.energy - exact.value()), Thresholds::intrinsic_two_body,
             "variational relative-coordinate solve against -1/4");
      out.two_body = exact;
    });
  } else {
    guarded(report, "hylleraas.virial", [&] {
      const auto sol = solve_two_body(two_body_problem(reduce(spec_at(config, 2))), config.two_body_options());
      out.two_body = EnergyEstimate{sol.energy, BoundKind::upper, "hylleraas", family, 2};
      add_row(report, *out.two_body, rescaled);
      record(report, "hylleraas.virial", sol.virial_residual, Thresholds::hylleraas_virial,
             "|2T + V| / |E| at omega = " + std::to_string(config.two_body.omega));
    });
  }

  guarded(report, "hartree.virial", [&] {
    double worst_virial = 0.0, worst_rise = 0.0;
    for (int n = config.n_min; n <= config.n_max; ++n) {
      const auto r = scf_solve(functional_coeffs(spec_at(config, n)), config.scf_options());
      worst_virial = std::max(worst_virial, r.virial_residual);
      for (std::size_t k = 1; k < r.energy_trace.size(); ++k)
        worst_rise = std::max(worst_rise, (r.energy_trace[k] - r.energy_trace[k - 1]) / std::abs(r.energy_trace[k]));
      out.hartree.emplace_back(r.energy, BoundKind::upper, "hartree", family, n);
      add_row(report, out.hartree.back(), rescaled);
    }
    record(report, "hartree.virial", worst_virial, Thresholds::hartree_virial,
           "max |dE/dlambda| / |E| over the N range");
    record(report, "hartree.energy_monotone", worst_rise, config.hartree.tolerance,
           "largest relative energy increase along the SCF iterations");
  });
  return out;
}

void bounds_and_orderings(const RunConfig& config, SolveOutcome& solved, BoundsReport& report) {
  const Family family = config.system.family;
  const bool rescaled = config.system.pair_rescale;

  // Hartree is a restricted trial class, so it cannot beat the two-body value.
  guarded(report, "order.two_body_le_hartree", [&] {
    EnergyEstimate two_body;
    if (family == Family::newton_fixed_grain) {
      const auto sol = solve_two_body(two_body_problem(reduce(spec_at(config, 2))), config.two_body_options());
      two_body = {sol.energy, BoundKind::upper, "hylleraas", family, 2};
    } else {
      if (!solved.two_body) throw InvalidArgument("two-body value unavailable");
      two_body = *solved.two_body;
    }
    const double hartree2 = scf_solve(functional_coeffs(spec_at(config, 2)), config.scf_options()).energy;
    report.diagnostics.push_back({"hartree_n2", hartree2, "Hartree energy at N = 2"});
    record(report, "order.two_body_le_hartree", two_body.value() - hartree2, 0.0,
           "two-body value minus Hartree E_H(2)");
  });

  if (config.seeds == SeedPolicy::none) return;
  if (rescaled) {
    report.diagnostics.push_back(
        {"chain_bounds_skipped", 1.0, "corollary bounds hold for the unrescaled couplings only"});
    return;
  }

  guarded(report, "order.corollary_le_hartree", [&] {
    if (family == Family::coulomb_atom) {
      if (!solved.two_body) throw InvalidArgument("two-body seed unavailable");
      solved.seed = solved.two_body->relabelled(BoundKind::estimate, "hylleraas_seed");
    } else if (family == Family::newton_intrinsic) {
      solved.seed = EnergyEstimate{intrinsic_two_body_energy(), BoundKind::exact, "exact", family, 2};
    } else {
      SystemSpec s = two_newt_seed(config.system.beta);
      s.gravity_scale *= config.system.gravity_scale;
      const auto sol = solve_two_body(two_body_problem(reduce(s)), config.two_body_options());
      const EnergyEstimate e2{sol.energy, BoundKind::estimate, "two_newt", family, 2};
      solved.seed = e2.scaled(3, "two_newt_seed", 3);
      report.diagnostics.push_back({"two_newt_energy", e2.value(), "two-body energy with grain mass halved and G doubled"});
    }
    double worst = -std::numeric_limits<double>::infinity();
    for (const auto& h : solved.hartree) {
      const auto lower = corollary_lower_bound(family, h.n(), *solved.seed);
      add_row(report, lower, false);
      worst = std::max(worst, lower.value() - h.value());
    }
    record(report, "order.corollary_le_hartree", worst, 0.0, "max over N of corollary bound minus Hartree E_H(N)");
  });

  if (family == Family::coulomb_atom && solved.seed) {
    guarded(report, "lieb", [&] {
      for (int n = config.n_min; n <= config.n_max; ++n) add_row(report, lieb_bound(n, config.lieb_constant), false);
      const auto crossover = lieb_crossover(config.lieb_constant, solved.seed->value());
      report.diagnostics.push_back({"lieb_crossover", crossover.value_or(-1.0),
                                    crossover ? "N above which the Lieb bound is the stronger one"
                                              : "the corollary bound is stronger for every N (reported as -1)"});
    });
  }

  if (family == Family::newton_intrinsic && solved.seed) {
    guarded(report, "order.levy_leblond_le_corollary", [&] {
      double worst = -std::numeric_limits<double>::infinity();
      for (int n = config.n_min; n <= config.n_max; ++n) {
        const auto ll = levy_leblond_bound(n, *solved.seed);
        add_row(report, ll, false);
        if (n >= 3) worst = std::max(worst, ll.value() - corollary_lower_bound(family, n, *solved.seed).value());
      }
      if (config.n_max >= 3)
        record(report, "order.levy_leblond_le_corollary", worst, 0.0,
               "max over N >= 3 of Levy-Leblond bound minus corollary bound");
      for (int n = config.n_min; n <= config.n_max; ++n)
        add_row(report, hall_upper_bound(n, config.hall_constant), false);
      if (!solved.hartree.empty()) {
        double lo = std::numeric_limits<double>::infinity(), hi = -lo;
        for (const auto& h : solved.hartree) {
          const double b = -h.value() / to_double(Rational(p_coul(h.n())));
          lo = std::min(lo, b);
          hi = std::max(hi, b);
        }
        report.diagnostics.push_back({"hall_constant_from_hartree", hi, "largest B with E_H(N) = -B P(N)"});
        report.diagnostics.push_back({"hall_constant_spread", hi - lo, "variation of that B across N"});
      }
    });
  }

  guarded(report, "normalized_sequence", [&] {
    const auto seq = normalized_sequence(family, solved.hartree, rescaled);
    int decreases = 0;
    for (std::size_t i = 1; i < seq.size(); ++i)
      if (seq[i].normalized < seq[i - 1].normalized - 1e-12 * std::abs(seq[i - 1].normalized)) ++decreases;
    report.diagnostics.push_back(
        {"hartree_normalized_decreases", static_cast<double>(decreases),
         "count of N where E_H(N)/P(N) drops; monotonicity is not claimed for Hartree values"});
  });
}

std::vector<std::string> library_versions() {
  return {"bosebounds " BOSEBOUNDS_VERSION,
          "Eigen " + std::to_string(EIGEN_WORLD_VERSION) + "." + std::to_string(EIGEN_MAJOR_VERSION) + "." +
              std::to_string(EIGEN_MINOR_VERSION),
          "Boost " + std::to_string(BOOST_VERSION / 100000) + "." + std::to_string(BOOST_VERSION / 100 % 1000),
          "nlohmann_json " + std::to_string(NLOHMANN_JSON_VERSION_MAJOR) + "." +
              std::to_string(NLOHMANN_JSON_VERSION_MINOR) + "." + std::to_string(NLOHMANN_JSON_VERSION_PATCH)};
}

}  // namespace

BoundsReport run(const RunConfig& config, Command command) {
  config.validate();
  BoundsReport report;
  report.command = std::string(to_string(command));
  report.provenance = {to_json(config), config.rng_seed, BOSEBOUNDS_VERSION, library_versions(), {}};

  std::mt19937_64 rng(config.rng_seed);
  if (command == Command::verify || command == Command::sweep) {
    pair_decomposition_suite(config, rng, report);
    graph_identity_suite(config, rng, report);
    scaling_suite(config, report);
    telescoping_suite(config, report);
  }
  if (command == Command::solve || command == Command::sweep) {
    exact_values(report);
    auto solved = solve_system(config, report);
    if (command == Command::sweep) bounds_and_orderings(config, solved, report);
  }
  if (command == Command::limits) limits_suite(config, report);
  return report;
}

}  // namespace bosebounds
