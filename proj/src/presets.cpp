#include "ideq/presets.hpp"

#include <sstream>

#include "ideq/csv.hpp"

namespace ideq {

IdeParams example1_params(double theta1) {
  IdeParams p;
  p.d = 16;
  p.alpha = {1.0, 0.0};
  p.beta = {0.0, 1.0};
  p.gamma = {0.0, 0.0};
  p.theta = {theta1, 1.0 - theta1};
  p.pi = {0.5, 0.5};
  p.validate();
  return p;
}

IdeParams example2_params(double alpha2) {
  IdeParams p;
  p.d = 16;
  p.alpha = {0.8, alpha2};
  p.beta = {0.1, 0.9 - alpha2};
  p.gamma = {0.1, 0.1};
  p.theta = {0.5, 0.5};
  p.pi = {0.5, 0.5};
  p.validate();
  return p;
}

namespace {

void emit(const std::filesystem::path& dir, const std::string& name,
          const Frontier& f, std::vector<std::string>& names) {
  write_text_file(dir / name, frontier_csv(f));
  names.push_back(name);
}

}  // namespace

std::vector<std::string> write_example_bundle(int id,
                                              const std::filesystem::path& dir,
                                              const GridConfig& grid) {
  std::vector<std::string> names;
  Manifest man;
  man.command = "example";
  man.settings.push_back({"example", std::to_string(id)});
  man.settings.push_back({"grid", std::to_string(grid.p1_samples)});

  switch (id) {
    case 1: {
      for (double theta1 : {0.01, 0.02, 0.05}) {
        IdeParams p = example1_params(theta1);
        std::string tag = "example1_theta1_" + fmt_g12(theta1);
        emit(dir, tag + "_unentangled.csv", frontier_two_value(p.d, p, grid),
             names);
        emit(dir, tag + "_entangled.csv",
             frontier_two_value(p.d * p.d, p, grid), names);
      }
      break;
    }
    case 2: {
      for (double alpha2 : {0.2, 0.4, 0.6, 0.8}) {
        IdeParams p = example2_params(alpha2);
        std::string tag = "example2_alpha2_" + fmt_g12(alpha2);
        emit(dir, tag + "_unentangled.csv", frontier_two_value(p.d, p, grid),
             names);
        emit(dir, tag + "_entangled.csv",
             frontier_two_value(p.d * p.d, p, grid), names);
      }
      break;
    }
    case 3: {
      for (double theta1 : {0.05, 0.5}) {
        IdeParams p = example1_params(theta1);
        std::string tag = "example3_theta1_" + fmt_g12(theta1);
        emit(dir, tag + "_entangled.csv",
             frontier_two_value(p.d * p.d, p, grid), names);
        for (double at : {0.95, 0.8, 0.5}) {
          emit(dir, tag + "_unreliable_" + fmt_g12(at) + ".csv",
               unreliable_frontier(p, at, grid), names);
        }
        emit(dir, tag + "_unentangled.csv", frontier_two_value(p.d, p, grid),
             names);
      }
      break;
    }
    default:
      throw ValidationError("example id must be 1, 2, or 3");
  }

  man.outputs = names;
  write_text_file(dir / "manifest.json", manifest_json(man));
  names.push_back("manifest.json");
  return names;
}

}  // namespace ideq
