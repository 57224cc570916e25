// qwalk: p-diluted disordered quantum walk simulator and fitter.
//
//   qwalk simulate        --p 0.2 --maps 10000 --out run/
//   qwalk reproduce-table --mode numerical --seed 2020 --out run/
//   qwalk fit             --in run/
//   qwalk theory          --b 1.5 --sigma 2 [--k 0.05] | --phi 0.76
//
// Exit codes: 0 success, 2 configuration error, 3 runtime error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "qwalk/config.hpp"
#include "qwalk/errors.hpp"
#include "qwalk/fit.hpp"
#include "qwalk/report.hpp"
#include "qwalk/theory.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitRuntime = 3;

struct RunFlags {
  std::string config_file;
  std::vector<double> p_values;
  std::optional<std::size_t> maps;
  std::optional<int> steps;
  std::vector<int> recorded_steps;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out;
  std::optional<std::string> mode;
  std::optional<double> min_prob;
  std::optional<std::string> resample;
  std::optional<unsigned> threads;
  std::optional<int> light_cone_margin;
  std::optional<bool> exclude_origin;

  void Attach(CLI::App* app) {
    app->add_option("--config", config_file, "JSON config file")
        ->check(CLI::ExistingFile);
    app->add_option("--p", p_values, "Disorder levels in [0, 1]")->delimiter(',');
    app->add_option("--maps", maps, "Coin maps per disorder level");
    app->add_option("--steps", steps, "Walk length");
    app->add_option("--recorded", recorded_steps, "Recorded steps")->delimiter(',');
    app->add_option("--seed", seed, "Master seed");
    app->add_option("--out", out, "Output directory");
    app->add_option("--mode", mode, "experimental (400 maps) or numerical (10000)");
    app->add_option("--min-prob", min_prob, "Probability floor for profile fits");
    app->add_option("--resample", resample, "Dynamic coin draw: any or other");
    app->add_option("--threads", threads, "Worker threads (0 = all cores)");
    app->add_option("--light-cone-margin", light_cone_margin,
                    "Drop |x| > t - margin from profile fits");
    app->add_option("--exclude-origin", exclude_origin,
                    "Drop x = 0 from profile fits (true/false)");
  }

  nlohmann::json Overrides() const {
    nlohmann::json j = nlohmann::json::object();
    if (!p_values.empty()) j["p_values"] = p_values;
    if (maps) j["maps"] = *maps;
    if (steps) j["steps"] = *steps;
    if (!recorded_steps.empty()) j["recorded_steps"] = recorded_steps;
    if (seed) j["master_seed"] = *seed;
    if (out) j["output_dir"] = *out;
    if (mode) j["mode"] = *mode;
    if (min_prob) j["min_prob"] = *min_prob;
    if (resample) j["resample"] = *resample;
    if (threads) j["threads"] = *threads;
    if (light_cone_margin) j["light_cone_margin"] = *light_cone_margin;
    if (exclude_origin) j["exclude_origin"] = *exclude_origin;
    return j;
  }

  qwalk::RunConfig Resolve(const nlohmann::json& base = nlohmann::json::object()) const {
    nlohmann::json file = nlohmann::json::object();
    if (!config_file.empty()) {
      std::ifstream in(config_file);
      std::stringstream text;
      text << in.rdbuf();
      file = qwalk::ParseConfigText(text.str());
    }
    return qwalk::ResolveConfig({base, file, Overrides()});
  }
};

void RunSimulate(const qwalk::RunConfig& config) {
  const auto summaries = qwalk::RunEnsembles(config);
  qwalk::WriteFiles(config.output_dir, qwalk::DistributionFiles(config, summaries));
  for (const auto& s : summaries) {
    fmt::print("p={:<5} maps={} variance(t={})={:.6f}\n", qwalk::FormatLevel(s.spec.p),
               s.maps_completed, s.variance_series.back().t,
               s.variance_series.back().variance);
  }
  fmt::print("wrote {}\n", config.output_dir);
}

void RunReproduceTable(const qwalk::RunConfig& config) {
  const qwalk::TableArtifact table = qwalk::ReproduceTable(config);
  qwalk::WriteFiles(config.output_dir, qwalk::TableFiles(config, table));
  fmt::print("{}", table.text);
}

void RunFit(const qwalk::RunConfig& config, const std::string& in_dir) {
  const qwalk::TableArtifact table = qwalk::FitFromDirectory(config, in_dir);
  qwalk::WriteFiles(config.output_dir,
                    {{"fits.csv", table.csv}, {"fits.txt", table.text}});
  fmt::print("{}", table.text);
}

struct TheoryFlags {
  std::optional<double> b;
  double sigma = 1.0;
  std::optional<double> phi;
  std::optional<double> k;
};

void RunTheory(const TheoryFlags& flags) {
  using namespace qwalk::theory;
  if (flags.phi) {
    const double b = BFromPhi(*flags.phi);
    fmt::print("phi={:.10g} b={:.12f}\n", *flags.phi, b);
  }
  if (flags.b) {
    const TheoryProfile profile = TheoryProfile::Make(*flags.b, flags.sigma);
    fmt::print("b={:.10g} sigma={:.10g} a={:.12f} f(b)={:.12f}\n", profile.b,
               profile.sigma, profile.a, FOfB(profile.b));
    for (int n = 1; n <= 3; ++n) {
      fmt::print("E(x^{})={:.12g} quadrature={:.12g}\n", 2 * n,
                 EvenMomentFormula(n, profile), QuadratureMoment(2 * n, profile));
    }
    const GeneratorMoments g = ComputeGeneratorMoments(profile.b, profile.sigma);
    fmt::print("lambda2_integral={:.12g} lambda4_integral={:.12g} phi={:.12g}\n",
               g.lambda2_integral, g.lambda4_integral, g.phi);
    if (flags.k) {
      const CharacteristicCheck c = CharacteristicExpansionCheck(profile, *flags.k);
      fmt::print("k={:.6g} quadrature={:.15g} series={:.15g} residual={:.3e}\n",
                 c.k, c.quadrature, c.series, c.residual);
    }
  }
  if (!flags.phi && !flags.b) {
    throw qwalk::ConfigError("b", "theory needs --b and/or --phi");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"p-diluted disordered quantum walk simulator"};
  app.require_subcommand(1);

  RunFlags simulate_flags;
  auto* simulate = app.add_subcommand("simulate", "Run ensembles and write P(x,t) data");
  simulate_flags.Attach(simulate);

  RunFlags table_flags;
  auto* table = app.add_subcommand("reproduce-table", "Fit b, delta, 2d, c^2 per level");
  table_flags.Attach(table);

  RunFlags fit_flags;
  std::string fit_in;
  auto* fit = app.add_subcommand("fit", "Fit previously simulated data");
  fit_flags.Attach(fit);
  fit->add_option("--in", fit_in, "Directory written by 'simulate'")
      ->required()
      ->check(CLI::ExistingDirectory);

  TheoryFlags theory_flags;
  auto* theory = app.add_subcommand("theory", "Evaluate f(b), its inverse and moments");
  theory->add_option("--b", theory_flags.b, "Exponent b");
  theory->add_option("--sigma", theory_flags.sigma, "Standard deviation");
  theory->add_option("--phi", theory_flags.phi, "Excess kurtosis to invert");
  theory->add_option("--k", theory_flags.k, "Wavenumber for the series check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (*simulate) RunSimulate(simulate_flags.Resolve());
    if (*table) RunReproduceTable(table_flags.Resolve());
    if (*fit) {
      // The simulated run's settings are the base; --config and flags refine
      // the fit on top of them.
      const auto variance = std::filesystem::path(fit_in) / "variance.csv";
      nlohmann::json base = qwalk::ReadEmbeddedConfig(variance);
      base["output_dir"] = fit_in;
      RunFit(fit_flags.Resolve(base), fit_in);
    }
    if (*theory) RunTheory(theory_flags);
  } catch (const qwalk::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return EXIT_SUCCESS;
}
