#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "catphase/detection.hpp"
#include "catphase/optimize.hpp"
#include "catphase/photon_statistics.hpp"

// Serialization of results as CSV and JSON.  CSV uses '.' decimals and full
// round-trip precision (17 significant digits); every file starts with a
// '# key=value' metadata block carrying the command name and the complete
// resolved configuration.  JSON outputs embed the same metadata under
// "config".  Nothing here writes timestamps, so re-runs are byte-identical.

namespace catphase::io {

using Meta = std::vector<std::pair<std::string, std::string>>;

std::string format_g17(double v);

void write_file(const std::string& path, const std::string& content);

std::string wigner_grid_csv(const Meta& meta, const std::vector<double>& xs,
                            const std::vector<double>& ps,
                            const std::vector<double>& w_row_major);

std::string distribution_csv(const Meta& meta, const PhotonDistribution& d);

struct NamedDistribution {
  std::string engine;
  PhotonDistribution dist;
};

struct DistancePair {
  std::string first, second;
  double delta;
};

std::string distributions_json(const Meta& meta,
                               const std::vector<NamedDistribution>& dists,
                               const std::vector<DistancePair>& deltas);

std::string error_report_json(const Meta& meta, const ErrorReport& report);

std::string decision_csv(const Meta& meta, const DecisionRule& rule);

struct NegativityRow {
  double r, db, v_analytic;
  bool valid;
  double margin;
  std::optional<double> v_numeric;
};

std::string negativity_csv(const Meta& meta,
                           const std::vector<NegativityRow>& rows);

std::string landscape_csv(const Meta& meta, const Landscape& l);
std::string landscape_minima_csv(const Meta& meta, const Landscape& l);
std::string landscape_json(const Meta& meta, const Landscape& l);

std::string sweep_csv(const Meta& meta, const std::vector<SweepCell>& cells);
std::string sweep_json(const Meta& meta, const std::vector<SweepCell>& cells);

std::string manifest_json(const std::string& command, const Meta& meta);

}  // namespace catphase::io
