#include "ideq/channels.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

namespace ideq {

namespace {

void check_unit(double v, const char* name) {
  if (!(v >= 0.0 && v <= 1.0)) {
    std::ostringstream os;
    os << name << " = " << v << " violates 0 <= " << name << " <= 1";
    throw ValidationError(os.str());
  }
}

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

void IdeParams::validate(double tol) const {
  if (d < 1) {
    throw ValidationError("d must be a positive integer");
  }
  for (int s = 0; s < 2; ++s) {
    const char* an = s == 0 ? "alpha1" : "alpha2";
    const char* bn = s == 0 ? "beta1" : "beta2";
    const char* gn = s == 0 ? "gamma1" : "gamma2";
    check_unit(alpha[s], an);
    check_unit(beta[s], bn);
    check_unit(gamma[s], gn);
    double sum = alpha[s] + beta[s] + gamma[s];
    if (std::abs(sum - 1.0) > tol) {
      std::ostringstream os;
      os << an << " + " << bn << " + " << gn << " = " << sum
         << " violates the unit-sum constraint";
      throw ValidationError(os.str());
    }
  }
  check_unit(theta[0], "theta1");
  check_unit(theta[1], "theta2");
  if (std::abs(theta[0] + theta[1] - 1.0) > tol) {
    throw ValidationError("theta1 + theta2 must equal 1");
  }
  if (!(pi[0] > 0.0 && pi[0] < 1.0)) {
    std::ostringstream os;
    os << "pi1 = " << pi[0] << " violates 0 < pi1 < 1";
    throw ValidationError(os.str());
  }
  if (!(pi[1] > 0.0 && pi[1] < 1.0)) {
    std::ostringstream os;
    os << "pi2 = " << pi[1] << " violates 0 < pi2 < 1";
    throw ValidationError(os.str());
  }
  if (std::abs(pi[0] + pi[1] - 1.0) > tol) {
    throw ValidationError("pi1 + pi2 must equal 1");
  }
}

IdeParams IdeParams::from_config_text(const std::string& text) {
  std::map<std::string, double> kv;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    size_t eq = t.find('=');
    if (eq == std::string::npos) {
      std::ostringstream os;
      os << "config line " << lineno << " is not key=value: " << t;
      throw ValidationError(os.str());
    }
    std::string key = trim(t.substr(0, eq));
    std::string val = trim(t.substr(eq + 1));
    try {
      size_t used = 0;
      double x = std::stod(val, &used);
      if (used != val.size()) throw std::invalid_argument(val);
      kv[key] = x;
    } catch (const std::exception&) {
      std::ostringstream os;
      os << "config value for " << key << " is not a number: " << val;
      throw ValidationError(os.str());
    }
  }

  static const char* required[] = {"d",      "alpha1", "beta1", "gamma1",
                                   "alpha2", "beta2",  "gamma2", "theta1",
                                   "pi1"};
  for (const char* k : required) {
    if (!kv.count(k)) {
      std::ostringstream os;
      os << "config is missing required key " << k;
      throw ValidationError(os.str());
    }
  }
  for (const auto& [k, v] : kv) {
    bool known = false;
    for (const char* r : required) known = known || k == r;
    if (!known) {
      std::ostringstream os;
      os << "config has unknown key " << k;
      throw ValidationError(os.str());
    }
  }

  IdeParams p;
  double draw = kv["d"];
  if (draw != std::floor(draw) || draw < 1) {
    throw ValidationError("d must be a positive integer");
  }
  p.d = static_cast<int>(draw);
  p.alpha = {kv["alpha1"], kv["alpha2"]};
  p.beta = {kv["beta1"], kv["beta2"]};
  p.gamma = {kv["gamma1"], kv["gamma2"]};
  p.theta = {kv["theta1"], 1.0 - kv["theta1"]};
  p.pi = {kv["pi1"], 1.0 - kv["pi1"]};
  p.validate();
  return p;
}

IdeParams IdeParams::from_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::ios_base::failure("cannot read config file " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_config_text(buf.str());
}

std::string IdeParams::to_config_text() const {
  std::ostringstream os;
  os.precision(17);
  os << "d = " << d << "\n"
     << "alpha1 = " << alpha[0] << "\n"
     << "beta1 = " << beta[0] << "\n"
     << "gamma1 = " << gamma[0] << "\n"
     << "alpha2 = " << alpha[1] << "\n"
     << "beta2 = " << beta[1] << "\n"
     << "gamma2 = " << gamma[1] << "\n"
     << "theta1 = " << theta[0] << "\n"
     << "pi1 = " << pi[0] << "\n";
  return os.str();
}

void IdeParams::write_config_file(const std::filesystem::path& path) const {
  std::ofstream out(path);
  if (!out) {
    throw std::ios_base::failure("cannot write config file " + path.string());
  }
  out << to_config_text();
}

AvgParams average_params(const IdeParams& p) {
  AvgParams a;
  a.alpha_bar = p.theta[0] * p.alpha[0] + p.theta[1] * p.alpha[1];
  a.beta_bar = p.theta[0] * p.beta[0] + p.theta[1] * p.beta[1];
  a.gamma_bar = p.theta[0] * p.gamma[0] + p.theta[1] * p.gamma[1];
  return a;
}

namespace {

DensityOperator apply_triple(double alpha, double beta, double gamma,
                             const DensityOperator& rho) {
  int d = rho.dim();
  ComplexMatrix body = alpha * rho.matrix();
  body += (beta / d) * ComplexMatrix::Identity(d, d);
  ComplexMatrix flag = ComplexMatrix::Zero(d + 1, d + 1);
  flag(d, d) = gamma;
  return DensityOperator(boxplus(body, flag));
}

}  // namespace

DensityOperator apply_ide(const IdeParams& p, int s, const DensityOperator& rho) {
  p.validate();
  if (s != 1 && s != 2) throw ValidationError("channel state must be 1 or 2");
  if (rho.dim() != p.d) {
    std::ostringstream os;
    os << "input dimension " << rho.dim() << " does not match d = " << p.d;
    throw ValidationError(os.str());
  }
  return apply_triple(p.alpha[s - 1], p.beta[s - 1], p.gamma[s - 1], rho);
}

DensityOperator apply_ide_avg(const IdeParams& p, const DensityOperator& rho) {
  p.validate();
  if (rho.dim() != p.d) {
    std::ostringstream os;
    os << "input dimension " << rho.dim() << " does not match d = " << p.d;
    throw ValidationError(os.str());
  }
  AvgParams a = average_params(p);
  return apply_triple(a.alpha_bar, a.beta_bar, a.gamma_bar, rho);
}

DensityOperator lift_entangled_output(const IdeParams& p, int s, int x) {
  p.validate();
  if (s != 1 && s != 2) throw ValidationError("channel state must be 1 or 2");
  int dsq = p.d * p.d;
  if (x < 1 || x > dsq) {
    std::ostringstream os;
    os << "message index " << x << " outside [1, " << dsq << "]";
    throw ValidationError(os.str());
  }
  int i = (x - 1) / p.d;
  int j = (x - 1) % p.d;
  ComplexVector phi = bell_state(p.d, i, j);
  double alpha = p.alpha[s - 1];
  double beta = p.beta[s - 1];
  double gamma = p.gamma[s - 1];
  ComplexMatrix body = alpha * (phi * phi.adjoint());
  body += (beta / dsq) * ComplexMatrix::Identity(dsq, dsq);
  ComplexMatrix flag = ComplexMatrix::Zero(dsq + 1, dsq + 1);
  flag(dsq, dsq) = gamma;
  return DensityOperator(boxplus(body, flag));
}

CondPmfTable::CondPmfTable(int D, bool per_state) : D_(D), per_state_(per_state) {
  if (D < 1) throw ValidationError("alphabet size must be >= 1");
  v_.assign(static_cast<size_t>(2) * D * (D + 1), 0.0);
}

double CondPmfTable::at(int s, int x, int y) const {
  return const_cast<CondPmfTable*>(this)->at(s, x, y);
}

double& CondPmfTable::at(int s, int x, int y) {
  if (s != 1 && s != 2) throw ValidationError("channel state must be 1 or 2");
  if (x < 1 || x > D_) throw ValidationError("input symbol outside [1, D]");
  if (y < 0 || y > D_) throw ValidationError("output symbol outside {0} U [1, D]");
  size_t idx = ((static_cast<size_t>(s - 1) * D_) + (x - 1)) * (D_ + 1) + y;
  return v_[idx];
}

double CondPmfTable::output_prob(int s, int y, const ProbVec& px) const {
  if (px.size() != D_) {
    throw ValidationError("input pmf length does not match alphabet size");
  }
  double acc = 0.0;
  for (int x = 1; x <= D_; ++x) acc += px[x - 1] * at(s, x, y);
  return acc;
}

void CondPmfTable::validate(double tol) const {
  for (int s = 1; s <= 2; ++s) {
    for (int x = 1; x <= D_; ++x) {
      double sum = 0.0;
      for (int y = 0; y <= D_; ++y) {
        double v = at(s, x, y);
        if (!(v >= 0.0)) {
          throw ValidationError("conditional pmf has a negative entry");
        }
        sum += v;
      }
      if (std::abs(sum - 1.0) > tol) {
        std::ostringstream os;
        os << "conditional pmf row (s=" << s << ", x=" << x << ") sums to "
           << sum << ", not 1";
        throw ValidationError(os.str());
      }
    }
  }
}

CondPmfTable induced_classical_channel(const IdeParams& p, int D, PmfMode mode) {
  p.validate();
  if (D != p.d && D != p.d * p.d) {
    std::ostringstream os;
    os << "alphabet size " << D << " must be d or d^2 for d = " << p.d;
    throw ValidationError(os.str());
  }
  CondPmfTable t(D, mode == PmfMode::kPerState);
  AvgParams avg = average_params(p);
  for (int s = 1; s <= 2; ++s) {
    double alpha = mode == PmfMode::kPerState ? p.alpha[s - 1] : avg.alpha_bar;
    double beta = mode == PmfMode::kPerState ? p.beta[s - 1] : avg.beta_bar;
    double gamma = mode == PmfMode::kPerState ? p.gamma[s - 1] : avg.gamma_bar;
    for (int x = 1; x <= D; ++x) {
      t.at(s, x, 0) = gamma;
      for (int y = 1; y <= D; ++y) {
        t.at(s, x, y) = beta / D + (y == x ? alpha : 0.0);
      }
    }
  }
  return t;
}

IdeParams compose_unreliable(const IdeParams& p, double alpha_tilde) {
  p.validate();
  check_unit(alpha_tilde, "alpha_tilde");
  double beta_tilde = 1.0 - alpha_tilde;
  IdeParams out = p;
  for (int s = 0; s < 2; ++s) {
    out.alpha[s] = p.alpha[s] * alpha_tilde;
    out.beta[s] = p.alpha[s] * beta_tilde + p.beta[s];
  }
  out.validate();
  return out;
}

}  // namespace ideq
