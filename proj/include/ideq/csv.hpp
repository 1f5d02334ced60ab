#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "ideq/regions.hpp"
#include "ideq/sim.hpp"

namespace ideq {

// Shortest decimal form at 12 significant digits (%.12g). All numeric CSV
// fields use this so outputs are byte-stable.
std::string fmt_g12(double v);

// Frontier CSV: header pe,rate,n,p1,p2; one row per hull vertex, witness
// columns empty when the vertex has none.
std::string frontier_csv(const Frontier& f);

// Detection report CSV: header
// seed,trials,D,empirical_p1,empirical_p2,empirical_pd,analytic_pd,std_err
// and a single data row.
std::string detection_report_csv(const DetectionReport& r);

// Write text to path, creating parent directories. Throws on I/O failure.
void write_text_file(const std::filesystem::path& path, const std::string& text);
std::string read_text_file(const std::filesystem::path& path);

// Manifest JSON accompanying CSV outputs: command name, tool version,
// resolved parameter values, seed when used, and the list of CSV files it
// vouches for. Exactly one manifest per command invocation. Bundles built
// from embedded presets omit the params block (the preset id lives in
// settings instead).
struct Manifest {
  std::string command;
  std::optional<IdeParams> params;
  std::vector<std::string> outputs;  // file names relative to the manifest
  // Extra resolved settings (grid, flags, seed, ...) as key -> value strings.
  std::vector<std::pair<std::string, std::string>> settings;
};

std::string manifest_json(const Manifest& m);

}  // namespace ideq
