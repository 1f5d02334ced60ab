#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "ideq/regions.hpp"

namespace ideq {

// Built-in parameter presets for the three worked examples shipped with the
// tool.

// Perfect-vs-fully-depolarizing pair on d = 16, equal detection priors,
// anomaly prior theta1.
IdeParams example1_params(double theta1);

// Partially depolarizing pairs with matched erasure 0.1 on d = 16: branch 1
// fixed at (0.8, 0.1, 0.1), branch 2 at (alpha2, 0.9 - alpha2, 0.1).
IdeParams example2_params(double alpha2);

// Write the full CSV bundle (plus one manifest.json) for example id in
// {1,2,3} into dir. Returns the file names written, manifest last.
std::vector<std::string> write_example_bundle(int id,
                                              const std::filesystem::path& dir,
                                              const GridConfig& grid = {});

}  // namespace ideq
