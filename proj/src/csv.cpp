#include "ideq/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ideq/version.hpp"

namespace ideq {

std::string fmt_g12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string frontier_csv(const Frontier& f) {
  std::ostringstream os;
  os << "pe,rate,n,p1,p2\n";
  for (const FrontierPoint& v : f.points()) {
    os << fmt_g12(v.pe) << ',' << fmt_g12(v.rate) << ',';
    if (v.witness) {
      os << v.witness->n << ',' << fmt_g12(v.witness->p1) << ','
         << fmt_g12(v.witness->p2);
    } else {
      os << ",,";
    }
    os << '\n';
  }
  return os.str();
}

std::string detection_report_csv(const DetectionReport& r) {
  std::ostringstream os;
  os << "seed,trials,D,empirical_p1,empirical_p2,empirical_pd,analytic_pd,std_err\n"
     << r.seed << ',' << r.trials << ',' << r.D << ','
     << fmt_g12(r.empirical_p1) << ',' << fmt_g12(r.empirical_p2) << ','
     << fmt_g12(r.empirical_pd) << ',' << fmt_g12(r.analytic_pd) << ','
     << fmt_g12(r.std_err) << '\n';
  return os.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::ios_base::failure("cannot open " + path.string() + " for writing");
  }
  out << text;
  if (!out) {
    throw std::ios_base::failure("write to " + path.string() + " failed");
  }
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::ios_base::failure("cannot open " + path.string() + " for reading");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string manifest_json(const Manifest& m) {
  nlohmann::ordered_json j;
  j["command"] = m.command;
  j["version"] = kVersion;
  if (m.params) {
    nlohmann::ordered_json params;
    params["d"] = m.params->d;
    params["alpha1"] = m.params->alpha[0];
    params["beta1"] = m.params->beta[0];
    params["gamma1"] = m.params->gamma[0];
    params["alpha2"] = m.params->alpha[1];
    params["beta2"] = m.params->beta[1];
    params["gamma2"] = m.params->gamma[1];
    params["theta1"] = m.params->theta[0];
    params["pi1"] = m.params->pi[0];
    j["params"] = params;
  }
  nlohmann::ordered_json settings = nlohmann::ordered_json::object();
  for (const auto& [k, v] : m.settings) settings[k] = v;
  j["settings"] = settings;
  j["outputs"] = m.outputs;
  return j.dump(2) + "\n";
}

}  // namespace ideq
