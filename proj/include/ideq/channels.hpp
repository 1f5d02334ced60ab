#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>

#include "ideq/qmath.hpp"

namespace ideq {

// Parameters of a two-state identity-depolarizing-erasure channel pair on a
// d-dimensional input. State s acts as
//   N^(s)(rho) = alpha_s rho  (+)  (beta_s/d) I_d  (+)  gamma_s |0><0|
// where (+) is boxplus, so outputs live in dimension d+1 with the erasure
// flag on the last diagonal entry. theta_s is the prior of state s used for
// rate averaging, pi_s the prior used for detection.
struct IdeParams {
  int d = 2;
  std::array<double, 2> alpha{1.0, 1.0};
  std::array<double, 2> beta{0.0, 0.0};
  std::array<double, 2> gamma{0.0, 0.0};
  std::array<double, 2> theta{0.5, 0.5};
  std::array<double, 2> pi{0.5, 0.5};

  // Throws ValidationError naming the violated constraint.
  void validate(double tol = kProbTol) const;

  // key=value config format; keys: d, alpha1, beta1, gamma1, alpha2, beta2,
  // gamma2, theta1, pi1. theta2 and pi2 are derived as complements.
  static IdeParams from_config_file(const std::filesystem::path& path);
  static IdeParams from_config_text(const std::string& text);
  std::string to_config_text() const;
  void write_config_file(const std::filesystem::path& path) const;
};

struct AvgParams {
  double alpha_bar = 0.0;
  double beta_bar = 0.0;
  double gamma_bar = 0.0;
};

// theta-weighted averages of the branch parameters.
AvgParams average_params(const IdeParams& p);

// Apply branch s in {1,2} of the channel pair to rho (dim d -> d+1).
DensityOperator apply_ide(const IdeParams& p, int s, const DensityOperator& rho);
// Apply the theta-averaged channel.
DensityOperator apply_ide_avg(const IdeParams& p, const DensityOperator& rho);

// Output of branch s on half of a maximally entangled pair indexed by the
// dense-coding message x in [d^2]: the d^2-dimensional Bell-basis block plus
// an erasure flag (dim d^2+1). x maps to shift/phase indices
// i = floor((x-1)/d), j = (x-1) mod d.
DensityOperator lift_entangled_output(const IdeParams& p, int s, int x);

// Conditional pmf table P(y | x, s) for the induced classical channel on D
// input symbols: y = x with prob alpha_s + beta_s/D, y = x' != x with prob
// beta_s/D, y = 0 (erasure) with prob gamma_s. Layout: slice s in {1,2},
// row x in [D], column y in {0} union [D] with y = 0 stored at column 0.
class CondPmfTable {
 public:
  CondPmfTable(int D, bool per_state);

  int D() const { return D_; }
  // True when the two s-slices can differ; marginal tables carry the
  // theta-averaged pmf in both slices.
  bool per_state() const { return per_state_; }

  double at(int s, int x, int y) const;
  double& at(int s, int x, int y);
  // P(y | x, s) accumulated against an input distribution: sum_x p(x) P(y|x,s).
  double output_prob(int s, int y, const ProbVec& px) const;

  void validate(double tol = kProbTol) const;

 private:
  int D_;
  bool per_state_;
  std::vector<double> v_;  // [s][x-1][y], y in 0..D
};

enum class PmfMode { kPerState, kMarginal };

// Induced classical channel of the IDE pair on D symbols. D is the coding
// dimension: d for unentangled use, d^2 for dense coding (the induced law has
// the same alpha/beta/gamma in either case).
CondPmfTable induced_classical_channel(const IdeParams& p, int D, PmfMode mode);

// Composition with an entanglement-distribution IDE channel that has
// parameters (alpha_tilde, beta_tilde = 1 - alpha_tilde, 0): the share of the
// entangled pair is depolarized before coding. Branch s of the composite is
// (alpha_s * alpha_tilde, alpha_s * (1 - alpha_tilde) + beta_s, gamma_s).
IdeParams compose_unreliable(const IdeParams& p, double alpha_tilde);

}  // namespace ideq
