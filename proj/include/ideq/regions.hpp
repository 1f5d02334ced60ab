#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ideq/channels.hpp"

namespace ideq {

// Two-value input distribution on [D]: n symbols carry mass p1 each, the
// remaining D-n carry p2 each, with n*p1 + (D-n)*p2 = 1.
struct TwoValueDist {
  int n = 1;
  double p1 = 1.0;
  double p2 = 0.0;

  // Expand to a full length-D distribution (first n symbols at p1).
  ProbVec expand(int D) const;
};

struct RatePoint {
  double pe = 0.0;
  double rate = 0.0;
};

struct FrontierPoint {
  double pe = 0.0;
  double rate = 0.0;
  std::optional<TwoValueDist> witness;
};

struct FrontierMeta {
  IdeParams params;
  int D = 0;
  int grid = 0;
  // Set for frontiers built from a composed (unreliable-entanglement) pair.
  std::optional<double> alpha_tilde;
};

// Achievable rate against the theta-averaged channel for input pmf p:
// mutual information between a source X ~ p and the induced classical output,
// in bits. Erasure mass cancels and contributes nothing.
double rate_bound(int D, const AvgParams& avg, const ProbVec& p);

// Instantaneous-detection error of the optimal (MAP) state detector run on a
// single channel output when the input pmf is p:
//   sum_y min_s pi_s P(y | x-average, s).
double detection_bound(int D, const IdeParams& p, const ProbVec& px);

struct ClosedForms {
  double r_max = 0.0;    // rate at the uniform input
  double pe_min = 0.0;   // detection error of a deterministic input
  double pe_star = 0.0;  // detection error of the uniform input
  // Interior threshold where the two branch likelihoods cross; absent when
  // the branch likelihood slopes coincide.
  std::optional<double> p_th;
  // True when detection error is constant over the simplex, so (pe_min,
  // r_max) is achievable with no tradeoff.
  bool no_tradeoff = false;
};

ClosedForms closed_forms(int D, const IdeParams& p);

struct GridConfig {
  int p1_samples = 512;   // samples per n along the feasible p1 interval
  bool refine = true;     // local refinement pass around hull vertices
  int refine_samples = 32;
};

// Upper concave envelope (vertices with strictly increasing pe) of a point
// cloud; points dominated in rate at equal-or-lower pe are dropped, and the
// hull is truncated after the global rate maximum (beyond it the frontier is
// flat). Witnesses of surviving vertices are preserved.
std::vector<FrontierPoint> upper_convex_hull(std::vector<FrontierPoint> pts);

// Rate-vs-detection-error frontier: hull vertices with nondecreasing rate,
// pe strictly increasing from pe_min to pe_star.
class Frontier {
 public:
  Frontier(std::vector<FrontierPoint> hull, FrontierMeta meta);

  const std::vector<FrontierPoint>& points() const { return points_; }
  const FrontierMeta& meta() const { return meta_; }

  double pe_min() const { return points_.front().pe; }
  double pe_star() const { return points_.back().pe; }
  double r_max() const { return points_.back().rate; }

  // Linear interpolation on the hull; beyond pe_star the frontier is flat at
  // r_max; below pe_min no rate is achievable (nullopt).
  std::optional<double> rate_at(double pe) const;

 private:
  std::vector<FrontierPoint> points_;
  FrontierMeta meta_;
};

// Frontier over two-value input distributions: sweep n in [D] and a uniform
// p1 grid over the feasible interval for each n, then take the upper hull.
// Embarrassingly parallel over n; merged deterministically in n order.
Frontier frontier_two_value(int D, const IdeParams& p, const GridConfig& grid = {});

// Oracle frontier over the full simplex: the same hull built from `samples`
// random input pmfs (mixed Dirichlet concentrations) plus structured ones
// (vertices, uniform, two-vertex mixtures). Witnesses are not two-value, so
// hull vertices carry none.
Frontier frontier_bruteforce(int D, const IdeParams& p, long samples,
                             uint64_t seed);

// One point of the converse outer bound for a given uniform-prior input
// ensemble {sigma_w}: rate_upper = H(Navg(sigma)) - mean_w H(Navg(sigma_w)),
// pe_lower = (1/2)(1 - ||pi_1 N1(sigma) - pi_2 N2(sigma)||_1) with sigma the
// ensemble average.
RatePoint outer_bound_point(const IdeParams& p,
                            const std::vector<DensityOperator>& ensemble);

// Frontier with unreliable entanglement of survival weight alpha_tilde:
// upper hull of the union of the dense-coding frontier of the composed pair
// on d^2 symbols and the unentangled frontier of the original pair on d.
// Union-hull vertices carry no witness (the two branches index different
// alphabets).
Frontier unreliable_frontier(const IdeParams& p, double alpha_tilde,
                             const GridConfig& grid = {});

}  // namespace ideq
