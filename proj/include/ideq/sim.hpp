#pragma once

#include <cstdint>
#include <vector>

#include "ideq/channels.hpp"

namespace ideq {

// Counter-based deterministic RNG: every trial derives an independent draw
// stream from (master seed, operation tag, trial index), so results are
// bit-identical for a given seed regardless of how trials are partitioned
// across workers.
uint64_t mix64(uint64_t z);
uint64_t derive_key(uint64_t a, uint64_t b);

class DrawStream {
 public:
  explicit DrawStream(uint64_t seed) : state_(seed) {}
  uint64_t next_u64();
  // Uniform double in [0, 1).
  double next_unit();

 private:
  uint64_t state_;
};

// Stream for one trial of one operation.
DrawStream trial_stream(uint64_t master_seed, uint64_t op_tag, uint64_t trial);

// Inverse-CDF sampler over a fixed pmf (0-based index).
class PmfSampler {
 public:
  explicit PmfSampler(const ProbVec& p);
  int sample(double unit) const;

 private:
  std::vector<double> cdf_;
};

struct SimConfig {
  IdeParams params;
  int D = 2;                        // coding alphabet size: d or d*d
  ProbVec px = ProbVec::uniform(2); // input distribution on [D]
  long trials = 0;
  uint64_t seed = 0;
  int threads = 0;    // 0 = hardware default
};

struct DetectionReport {
  uint64_t seed = 0;
  long trials = 0;
  int D = 0;
  double empirical_p1 = 0.0;  // type-I error rate (true state 1 called 2)
  double empirical_p2 = 0.0;  // type-II error rate (true state 2 called 1)
  double empirical_pd = 0.0;  // pi1*p1 + pi2*p2
  double analytic_pd = 0.0;   // detection_bound at the same inputs
  double std_err = 0.0;       // delta-method standard error of empirical_pd
};

// MAP state detector: given output symbol y (0 = erasure), the per-state
// table and the input pmf, return the state in {1,2} maximizing
// pi_s sum_x px(x) P(y|x,s). Ties resolve to 1.
int map_detect(int y, const CondPmfTable& table, const ProbVec& px,
               double pi1, double pi2);

// Monte Carlo detection experiment: each trial draws s ~ pi, x ~ px, then an
// output by sampling the channel mechanism (identity / depolarize / erase
// branch), and runs the MAP detector.
DetectionReport run_detection_trials(const SimConfig& cfg);

// Empirical conditional pmf table from mechanism sampling at uniformly drawn
// (x, s) pairs. Unsampled (x, s) rows are all-zero.
CondPmfTable empirical_channel_estimate(const IdeParams& p, int D, long trials,
                                        uint64_t seed, int threads = 0);

// Plug-in mutual information estimate (bits) between X ~ px and the output of
// the theta-averaged induced channel, from mechanism sampling.
double empirical_mutual_information(const IdeParams& p, int D,
                                    const ProbVec& px, long trials,
                                    uint64_t seed, int threads = 0);

// Exact Bell-basis measurement statistics of the lifted entangled output for
// message x in [d^2] under branch s: Born probabilities over {0} union [d^2]
// (index 0 = erasure). Cross-validates the induced classical channel.
ProbVec quantum_measurement_sim(const IdeParams& p, int d, int s, int x);

// Random codebook: M codewords of length T with iid symbols ~ px (1-based
// symbols). Deterministic in (seed, M, T).
struct Codebook {
  long M = 0;
  long T = 0;
  std::vector<int> symbols;  // row-major, symbols[w*T + t]

  int at(long w, long t) const { return symbols[static_cast<size_t>(w * T + t)]; }
};

Codebook sample_codebook(const ProbVec& px, long M, long T, uint64_t seed);

}  // namespace ideq
