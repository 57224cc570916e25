#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qwalk/config.hpp"
#include "qwalk/ensemble.hpp"
#include "qwalk/fit.hpp"

namespace qwalk {

// Relative file name and full contents.
using FileSet = std::vector<std::pair<std::string, std::string>>;

struct TableRow {
  double p = 0.0;
  int spatial_step = 0;
  SpatialFit spatial;
  TemporalFit temporal;
};

struct TableArtifact {
  std::vector<TableRow> rows;
  std::string csv;   // p,t,b,stderr_b,delta,stderr_delta,two_d,stderr_two_d,c_squared
  std::string text;  // aligned plain-text rendering of the same rows
};

// Comment block opening every emitted file: version, config hash, seed and
// the resolved config.
std::string FileHeader(const RunConfig& config);

// "0", "0.1", "1", ... as used in per-level file names.
std::string FormatLevel(double p);

std::vector<EnsembleSummary> RunEnsembles(const RunConfig& config);

TableRow FitLevel(const RunConfig& config, double p, const Distribution& profile,
                  std::span<const VariancePoint> series);

TableArtifact BuildTable(const RunConfig& config,
                         std::span<const EnsembleSummary> summaries);

// Runs every disorder level and fits it.
TableArtifact ReproduceTable(const RunConfig& config);

// table.csv and table.txt.
FileSet TableFiles(const RunConfig& config, const TableArtifact& table);

// Per level: distribution_p<p>.csv (t,x,P_mean), heatmap_p<p>.csv
// (t,x,P_rownorm; each t row scaled to max 1), logprofile_p<p>.csv
// (t,x,abs_x,ln_P on the parity support). Plus variance.csv (p,t,variance).
FileSet DistributionFiles(const RunConfig& config,
                          std::span<const EnsembleSummary> summaries);

void WriteFiles(const std::filesystem::path& dir, const FileSet& files);

// The "# config=" object from a file written with FileHeader.
nlohmann::json ReadEmbeddedConfig(const std::filesystem::path& file);

// Re-fits levels from files written by DistributionFiles.
TableArtifact FitFromDirectory(const RunConfig& config,
                               const std::filesystem::path& dir);

}  // namespace qwalk
