#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "ideq/regions.hpp"

namespace ideq {

// Exit codes shared by all commands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInvalidParams = 2;
inline constexpr int kExitIo = 3;

// Environment variable naming the default output directory (falls back to
// the current directory).
inline constexpr const char* kOutDirEnvVar = "IDEQ_OUT_DIR";

std::filesystem::path default_out_dir();

struct RegionOptions {
  std::filesystem::path config;
  bool entangled = false;
  int grid = 512;
  std::optional<std::filesystem::path> out;  // CSV path
};

struct ExampleOptions {
  int id = 1;
  std::optional<std::filesystem::path> out_dir;
};

struct SimulateOptions {
  std::filesystem::path config;
  std::string dist = "uniform";  // uniform | e1 | twovalue:<n>:<p1>
  bool entangled = false;
  long trials = 1000000;
  uint64_t seed = 0;
  std::optional<std::filesystem::path> out;  // CSV path
};

struct ConverseOptions {
  std::filesystem::path config;
  // computational-basis | repeated-maximally-mixed | path to an ensemble file
  std::string ensemble = "computational-basis";
};

// Command bodies. Each returns a process exit code and reports errors on
// stderr; invalid parameters exit 2 with the violated constraint named,
// unreadable/unwritable files exit 3.
int cmd_region(const RegionOptions& opt);
int cmd_example(const ExampleOptions& opt);
int cmd_simulate(const SimulateOptions& opt);
int cmd_converse(const ConverseOptions& opt);

// argv-style entry used by the binary and by tests.
int run_cli(int argc, const char* const* argv);

}  // namespace ideq
