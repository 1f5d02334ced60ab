#include "ideq/cli.hpp"

#include <cstdlib>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ideq/csv.hpp"
#include "ideq/presets.hpp"
#include "ideq/sim.hpp"
#include "ideq/version.hpp"

namespace ideq {

namespace {

template <typename Fn>
int run_guarded(Fn fn) {
  try {
    return fn();
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidParams;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

std::filesystem::path manifest_path_for(const std::filesystem::path& csv) {
  return csv.string() + ".manifest.json";
}

ProbVec parse_dist(const std::string& spec, int D) {
  if (spec == "uniform") return ProbVec::uniform(D);
  if (spec == "e1") return ProbVec::point_mass(D, 0);
  if (spec.rfind("twovalue:", 0) == 0) {
    std::string rest = spec.substr(9);
    size_t colon = rest.find(':');
    if (colon != std::string::npos) {
      try {
        size_t used = 0;
        int n = std::stoi(rest.substr(0, colon), &used);
        std::string p1s = rest.substr(colon + 1);
        size_t used2 = 0;
        double p1 = std::stod(p1s, &used2);
        if (used == colon && used2 == p1s.size()) {
          double p2 = n == D ? 0.0 : (1.0 - n * p1) / (D - n);
          return TwoValueDist{n, p1, p2}.expand(D);
        }
      } catch (const ValidationError&) {
        throw;
      } catch (const std::exception&) {
        // fall through to the format error below
      }
    }
  }
  throw ValidationError(
      "distribution must be uniform, e1, or twovalue:<n>:<p1>; got " + spec);
}

}  // namespace

std::filesystem::path default_out_dir() {
  const char* env = std::getenv(kOutDirEnvVar);
  if (env != nullptr && *env != '\0') return std::filesystem::path(env);
  return std::filesystem::current_path();
}

int cmd_region(const RegionOptions& opt) {
  return run_guarded([&] {
    IdeParams p = IdeParams::from_config_file(opt.config);
    int D = opt.entangled ? p.d * p.d : p.d;
    GridConfig grid;
    if (opt.grid < 2) throw ValidationError("grid must be >= 2 samples");
    grid.p1_samples = opt.grid;
    Frontier f = frontier_two_value(D, p, grid);

    std::filesystem::path out =
        opt.out ? *opt.out : default_out_dir() / "region.csv";
    write_text_file(out, frontier_csv(f));

    Manifest man;
    man.command = "region";
    man.params = p;
    man.settings = {{"entangled", opt.entangled ? "true" : "false"},
                    {"grid", std::to_string(opt.grid)},
                    {"D", std::to_string(D)}};
    man.outputs = {out.filename().string()};
    write_text_file(manifest_path_for(out), manifest_json(man));

    std::cout << "wrote " << out.string() << " (" << f.points().size()
              << " vertices, pe in [" << fmt_g12(f.pe_min()) << ", "
              << fmt_g12(f.pe_star()) << "], r_max " << fmt_g12(f.r_max())
              << ")\n";
    return kExitOk;
  });
}

int cmd_example(const ExampleOptions& opt) {
  return run_guarded([&] {
    std::filesystem::path dir =
        opt.out_dir ? *opt.out_dir
                    : default_out_dir() / ("example" + std::to_string(opt.id));
    std::vector<std::string> files = write_example_bundle(opt.id, dir);
    std::cout << "wrote " << files.size() << " files to " << dir.string()
              << "\n";
    return kExitOk;
  });
}

int cmd_simulate(const SimulateOptions& opt) {
  return run_guarded([&] {
    IdeParams p = IdeParams::from_config_file(opt.config);
    int D = opt.entangled ? p.d * p.d : p.d;
    SimConfig cfg;
    cfg.params = p;
    cfg.D = D;
    cfg.px = parse_dist(opt.dist, D);
    cfg.trials = opt.trials;
    cfg.seed = opt.seed;
    DetectionReport rep = run_detection_trials(cfg);
    double mi = empirical_mutual_information(p, D, cfg.px, opt.trials, opt.seed);
    double rb = rate_bound(D, average_params(p), cfg.px);

    std::cout << detection_report_csv(rep);
    std::cout << "mi_estimate=" << fmt_g12(mi) << " rate_bound=" << fmt_g12(rb)
              << "\n";

    if (opt.out) {
      write_text_file(*opt.out, detection_report_csv(rep));
      Manifest man;
      man.command = "simulate";
      man.params = p;
      man.settings = {{"dist", opt.dist},
                      {"entangled", opt.entangled ? "true" : "false"},
                      {"trials", std::to_string(opt.trials)},
                      {"seed", std::to_string(opt.seed)},
                      {"mi_estimate", fmt_g12(mi)},
                      {"rate_bound", fmt_g12(rb)}};
      man.outputs = {opt.out->filename().string()};
      write_text_file(manifest_path_for(*opt.out), manifest_json(man));
    }
    return kExitOk;
  });
}

int cmd_converse(const ConverseOptions& opt) {
  return run_guarded([&] {
    IdeParams p = IdeParams::from_config_file(opt.config);
    std::vector<DensityOperator> ensemble;
    if (opt.ensemble == "computational-basis") {
      for (int k = 0; k < p.d; ++k) {
        ensemble.push_back(DensityOperator::basis_projector(p.d, k));
      }
    } else if (opt.ensemble == "repeated-maximally-mixed") {
      for (int k = 0; k < p.d; ++k) {
        ensemble.push_back(DensityOperator::maximally_mixed(p.d));
      }
    } else {
      // Ensemble file: header "M d", then M matrices row-major, each entry a
      // "re im" pair, whitespace separated.
      std::istringstream in(read_text_file(opt.ensemble));
      long M = 0;
      int d = 0;
      if (!(in >> M >> d) || M < 1 || d < 1) {
        throw ValidationError("ensemble file needs a header: M d");
      }
      for (long w = 0; w < M; ++w) {
        ComplexMatrix m(d, d);
        for (int r = 0; r < d; ++r) {
          for (int c = 0; c < d; ++c) {
            double re = 0.0, im = 0.0;
            if (!(in >> re >> im)) {
              throw ValidationError("ensemble file is truncated");
            }
            m(r, c) = Complex(re, im);
          }
        }
        ensemble.push_back(DensityOperator(m));
      }
    }
    RatePoint pt = outer_bound_point(p, ensemble);
    std::cout << "rate_upper,pe_lower\n"
              << fmt_g12(pt.rate) << ',' << fmt_g12(pt.pe) << "\n";
    return kExitOk;
  });
}

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"rate vs detection-error tradeoff regions for "
               "identity-depolarizing-erasure channel pairs"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  RegionOptions region;
  CLI::App* cr = app.add_subcommand(
      "region", "compute a tradeoff frontier and write it as CSV");
  cr->add_option("config", region.config, "channel parameter file")->required();
  cr->add_flag("--entangled", region.entangled,
               "dense-coding alphabet (d^2 symbols) instead of d");
  cr->add_option("--grid", region.grid, "p1 samples per block size")
      ->default_val(512);
  std::string region_out;
  cr->add_option("--out", region_out, "output CSV path");

  ExampleOptions example;
  CLI::App* ce = app.add_subcommand(
      "example", "write the CSV bundle for a built-in example");
  ce->add_option("id", example.id, "example id (1, 2, or 3)")->required();
  std::string example_out;
  ce->add_option("--out", example_out, "output directory");

  SimulateOptions sim;
  CLI::App* cs = app.add_subcommand(
      "simulate", "Monte Carlo detection and mutual-information check");
  cs->add_option("config", sim.config, "channel parameter file")->required();
  cs->add_option("--dist", sim.dist,
                 "input distribution: uniform | e1 | twovalue:<n>:<p1>")
      ->default_val("uniform");
  cs->add_flag("--entangled", sim.entangled,
               "dense-coding alphabet (d^2 symbols) instead of d");
  cs->add_option("--trials", sim.trials, "number of trials")->default_val(1000000);
  cs->add_option("--seed", sim.seed, "master seed")->default_val(0);
  std::string sim_out;
  cs->add_option("--out", sim_out, "detection report CSV path");

  ConverseOptions conv;
  CLI::App* cc = app.add_subcommand(
      "converse", "outer-bound point for an input ensemble");
  cc->add_option("config", conv.config, "channel parameter file")->required();
  cc->add_option("--ensemble", conv.ensemble,
                 "computational-basis | repeated-maximally-mixed | <file>")
      ->default_val("computational-basis");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  if (cr->parsed()) {
    if (!region_out.empty()) region.out = region_out;
    return cmd_region(region);
  }
  if (ce->parsed()) {
    if (!example_out.empty()) example.out_dir = example_out;
    return cmd_example(example);
  }
  if (cs->parsed()) {
    if (!sim_out.empty()) sim.out = sim_out;
    return cmd_simulate(sim);
  }
  if (cc->parsed()) {
    return cmd_converse(conv);
  }
  return kExitUsage;
}

}  // namespace ideq
