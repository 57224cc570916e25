#include "qwalk/report.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <string_view>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "qwalk/errors.hpp"

namespace qwalk {

namespace {

constexpr std::string_view kVersion = "0.1.0";

std::string Lossless(double v) { return fmt::format("{:.17g}", v); }
std::string Short(double v) { return fmt::format("{:.6g}", v); }

std::vector<std::string> SplitCsv(std::string_view line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  for (;;) {
    const auto comma = line.find(',', start);
    fields.emplace_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

double ToDouble(const std::string& s, const std::string& file, std::size_t line) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw ParseError(line, file, fmt::format("'{}' is not a number", s));
}

// Data rows of a CSV written by this module: comments skipped, header checked.
std::vector<std::vector<double>> ReadCsv(const std::filesystem::path& path,
                                         std::string_view expected_header) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open " + path.string());
  }
  const std::string name = path.filename().string();
  std::vector<std::vector<double>> rows;
  bool seen_header = false;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line.front() == '#') continue;
    if (!seen_header) {
      if (line != expected_header) {
        throw ParseError(lineno, name,
                         fmt::format("expected header '{}'", expected_header));
      }
      seen_header = true;
      continue;
    }
    std::vector<double> row;
    for (const std::string& f : SplitCsv(line)) {
      row.push_back(ToDouble(f, name, lineno));
    }
    rows.push_back(std::move(row));
  }
  if (!seen_header) throw ParseError(lineno, name, "missing header");
  return rows;
}

void RenderTable(const RunConfig& config, TableArtifact& table) {
  std::string& csv = table.csv;
  csv = FileHeader(config);
  fmt::format_to(std::back_inserter(csv),
                 "# spatial fit at t={}; temporal fit over t={}\n",
                 config.SpatialStep(), fmt::join(config.recorded_steps, ","));
  csv += "p,t,b,stderr_b,delta,stderr_delta,two_d,stderr_two_d,c_squared\n";
  for (const TableRow& r : table.rows) {
    fmt::format_to(std::back_inserter(csv), "{},{},{},{},{},{},{},{},{}\n",
                   Short(r.p), r.spatial_step, Short(r.spatial.b),
                   Short(r.spatial.stderr_b), Short(r.spatial.delta),
                   Short(r.spatial.stderr_delta), Short(r.temporal.two_d),
                   Short(r.temporal.stderr_two_d), Short(r.temporal.c_squared));
  }

  std::string& text = table.text;
  text.clear();
  fmt::format_to(std::back_inserter(text),
                 "maps={} seed={} spatial t={} config_hash={}\n", config.maps,
                 config.master_seed, config.SpatialStep(), config.Hash());
  fmt::format_to(std::back_inserter(text), "{:>5}  {:>17}  {:>17}  {:>17}  {:>8}\n",
                 "p", "b", "delta", "2d", "c^2");
  for (const TableRow& r : table.rows) {
    fmt::format_to(std::back_inserter(text),
                   "{:>5.2f}  {:>7.3f} +- {:<7.3f}  {:>7.4f} +- {:<7.4f}  "
                   "{:>7.3f} +- {:<7.3f}  {:>8.3f}\n",
                   r.p, r.spatial.b, r.spatial.stderr_b, r.spatial.delta,
                   r.spatial.stderr_delta, r.temporal.two_d,
                   r.temporal.stderr_two_d, r.temporal.c_squared);
  }
}

}  // namespace

std::string FileHeader(const RunConfig& config) {
  return fmt::format("# qwalk {} config_hash={} master_seed={}\n# config={}\n",
                     kVersion, config.Hash(), config.master_seed,
                     config.ToJson().dump());
}

std::string FormatLevel(double p) { return fmt::format("{:g}", p); }

std::vector<EnsembleSummary> RunEnsembles(const RunConfig& config) {
  std::vector<EnsembleSummary> out;
  out.reserve(config.p_values.size());
  for (double p : config.p_values) {
    out.push_back(RunEnsemble(config.Disorder(p), {config.threads}));
  }
  return out;
}

TableRow FitLevel(const RunConfig& config, double p, const Distribution& profile,
                  std::span<const VariancePoint> series) {
  TableRow row;
  row.p = p;
  row.spatial_step = profile.step.value_or(config.SpatialStep());
  row.spatial = FitSpatialProfile(profile, config.fit.ToOptions());
  row.temporal = FitVariancePowerLaw(series);
  return row;
}

TableArtifact BuildTable(const RunConfig& config,
                         std::span<const EnsembleSummary> summaries) {
  TableArtifact table;
  for (const EnsembleSummary& s : summaries) {
    table.rows.push_back(FitLevel(config, s.spec.p,
                                  s.AtStep(config.SpatialStep()),
                                  s.variance_series));
  }
  RenderTable(config, table);
  return table;
}

TableArtifact ReproduceTable(const RunConfig& config) {
  const std::vector<EnsembleSummary> summaries = RunEnsembles(config);
  return BuildTable(config, summaries);
}

FileSet TableFiles(const RunConfig&, const TableArtifact& table) {
  return {{"table.csv", table.csv}, {"table.txt", table.text}};
}

FileSet DistributionFiles(const RunConfig& config,
                          std::span<const EnsembleSummary> summaries) {
  const std::string header = FileHeader(config);
  FileSet files;
  std::string variance = header + "p,t,variance\n";
  for (const EnsembleSummary& s : summaries) {
    const std::string level = FormatLevel(s.spec.p);
    const std::string level_line = fmt::format("# p={}\n", Lossless(s.spec.p));
    std::string mean = header + level_line + "t,x,P_mean\n";
    std::string heat = header + level_line + "t,x,P_rownorm\n";
    std::string logp = header + level_line + "t,x,abs_x,ln_P\n";
    for (std::size_t r = 0; r < s.averaged.size(); ++r) {
      const Distribution& d = s.averaged[r];
      const int t = s.spec.recorded_steps[r];
      const double peak =
          *std::max_element(d.probability.begin(), d.probability.end());
      for (std::size_t i = 0; i < d.size(); ++i) {
        const int x = d.position(i);
        const double p = d.probability[i];
        fmt::format_to(std::back_inserter(mean), "{},{},{}\n", t, x, Lossless(p));
        fmt::format_to(std::back_inserter(heat), "{},{},{}\n", t, x,
                       Lossless(peak > 0.0 ? p / peak : 0.0));
        if ((x + t) % 2 == 0 && p > 0.0) {
          fmt::format_to(std::back_inserter(logp), "{},{},{},{}\n", t, x,
                         std::abs(x), Lossless(std::log(p)));
        }
      }
      fmt::format_to(std::back_inserter(variance), "{},{},{}\n",
                     Lossless(s.spec.p), t,
                     Lossless(s.variance_series[r].variance));
    }
    files.emplace_back("distribution_p" + level + ".csv", std::move(mean));
    files.emplace_back("heatmap_p" + level + ".csv", std::move(heat));
    files.emplace_back("logprofile_p" + level + ".csv", std::move(logp));
  }
  files.emplace_back("variance.csv", std::move(variance));
  return files;
}

void WriteFiles(const std::filesystem::path& dir, const FileSet& files) {
  std::filesystem::create_directories(dir);
  for (const auto& [name, contents] : files) {
    std::ofstream out(dir / name, std::ios::binary | std::ios::trunc);
    out << contents;
    if (!out) throw std::runtime_error("failed writing " + (dir / name).string());
  }
}

nlohmann::json ReadEmbeddedConfig(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot open " + file.string());
  constexpr std::string_view kTag = "# config=";
  std::string line;
  while (std::getline(in, line) && line.starts_with('#')) {
    if (line.starts_with(kTag)) return ParseConfigText(std::string_view(line).substr(kTag.size()));
  }
  throw ParseError(0, file.filename().string(), "no '# config=' header line");
}

TableArtifact FitFromDirectory(const RunConfig& config,
                               const std::filesystem::path& dir) {
  // Level order follows variance.csv.
  std::vector<double> levels;
  std::map<double, std::vector<VariancePoint>> series;
  for (const auto& row : ReadCsv(dir / "variance.csv", "p,t,variance")) {
    if (row.size() != 3) throw ParseError(0, "variance.csv", "expected 3 columns");
    if (!series.contains(row[0])) levels.push_back(row[0]);
    series[row[0]].push_back({static_cast<int>(row[1]), row[2]});
  }
  if (levels.empty()) throw ParseError(0, "variance.csv", "no data rows");

  TableArtifact table;
  const int t_fit = config.SpatialStep();
  for (double p : levels) {
    const auto path = dir / ("distribution_p" + FormatLevel(p) + ".csv");
    std::vector<std::pair<int, double>> sites;
    int half_width = 0;
    for (const auto& row : ReadCsv(path, "t,x,P_mean")) {
      if (row.size() != 3) {
        throw ParseError(0, path.filename().string(), "expected 3 columns");
      }
      if (static_cast<int>(row[0]) != t_fit) continue;
      const int x = static_cast<int>(row[1]);
      half_width = std::max(half_width, std::abs(x));
      sites.emplace_back(x, row[2]);
    }
    if (sites.empty()) {
      throw ParseError(0, path.filename().string(),
                       fmt::format("no rows for t={}", t_fit));
    }
    Distribution d = Distribution::Zeros(half_width, t_fit);
    for (const auto& [x, prob] : sites) {
      d.probability[static_cast<std::size_t>(x + half_width)] = prob;
    }
    table.rows.push_back(FitLevel(config, p, d, series[p]));
  }
  RenderTable(config, table);
  return table;
}

}  // namespace qwalk
