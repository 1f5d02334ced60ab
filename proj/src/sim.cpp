#include "ideq/sim.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <thread>

#include "ideq/regions.hpp"

namespace ideq {

uint64_t mix64(uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

uint64_t derive_key(uint64_t a, uint64_t b) {
  return mix64(a ^ mix64(b + 0x632BE59BD9B4E019ULL));
}

uint64_t DrawStream::next_u64() {
  uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double DrawStream::next_unit() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

DrawStream trial_stream(uint64_t master_seed, uint64_t op_tag, uint64_t trial) {
  return DrawStream(derive_key(derive_key(master_seed, op_tag), trial));
}

PmfSampler::PmfSampler(const ProbVec& p) {
  cdf_.resize(static_cast<size_t>(p.size()));
  double acc = 0.0;
  for (int i = 0; i < p.size(); ++i) {
    acc += p[i];
    cdf_[static_cast<size_t>(i)] = acc;
  }
  cdf_.back() = 1.0;  // guard against rounding shortfall at the top
}

int PmfSampler::sample(double unit) const {
  auto it = std::upper_bound(cdf_.begin(), cdf_.end(), unit);
  if (it == cdf_.end()) --it;
  return static_cast<int>(it - cdf_.begin());
}

namespace {

constexpr uint64_t kDetectTag = 0x64657463ULL;   // "detc"
constexpr uint64_t kChannelTag = 0x6368616EULL;  // "chan"
constexpr uint64_t kMiTag = 0x6D690000ULL;       // "mi"
constexpr uint64_t kCodeTag = 0x636F6465ULL;     // "code"

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Run fn(worker, begin, end) over a static partition of [0, total); results
// must be merged by the caller in worker order (summation makes the merge
// order irrelevant for tallies).
template <typename Fn>
void parallel_trials(long total, int threads, Fn fn) {
  threads = static_cast<int>(std::max<long>(1, std::min<long>(threads, total)));
  if (threads == 1) {
    fn(0, 0L, total);
    return;
  }
  std::vector<std::thread> pool;
  long chunk = (total + threads - 1) / threads;
  for (int w = 0; w < threads; ++w) {
    long begin = w * chunk;
    long end = std::min(total, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([=] { fn(w, begin, end); });
  }
  for (std::thread& t : pool) t.join();
}

// One mechanism draw of the induced channel under branch parameters: returns
// the output symbol in {0} union [D] for input x in [D].
int mechanism_draw(double alpha, double beta, int D, int x, DrawStream& g) {
  double u = g.next_unit();
  if (u < alpha) return x;
  if (u < alpha + beta) {
    int y = 1 + static_cast<int>(g.next_unit() * D);
    return y > D ? D : y;
  }
  return 0;
}

}  // namespace

int map_detect(int y, const CondPmfTable& table, const ProbVec& px, double pi1,
               double pi2) {
  if (!table.per_state()) {
    throw ValidationError("MAP detection needs a per-state table");
  }
  double l1 = pi1 * table.output_prob(1, y, px);
  double l2 = pi2 * table.output_prob(2, y, px);
  return l1 >= l2 ? 1 : 2;
}

DetectionReport run_detection_trials(const SimConfig& cfg) {
  cfg.params.validate();
  if (cfg.trials < 1) throw ValidationError("detection needs trials >= 1");
  const int D = cfg.D;
  if (D != cfg.params.d && D != cfg.params.d * cfg.params.d) {
    throw ValidationError("alphabet size must be d or d^2");
  }
  if (cfg.px.size() != D) {
    throw ValidationError("input pmf length does not match alphabet size");
  }

  CondPmfTable table = induced_classical_channel(cfg.params, D, PmfMode::kPerState);
  std::vector<int> decide(static_cast<size_t>(D + 1));
  for (int y = 0; y <= D; ++y) {
    decide[static_cast<size_t>(y)] =
        map_detect(y, table, cfg.px, cfg.params.pi[0], cfg.params.pi[1]);
  }

  PmfSampler xs(cfg.px);
  const double pi1_prior = cfg.params.pi[0];
  int threads = resolve_threads(cfg.threads);
  std::vector<std::array<long, 4>> tallies(static_cast<size_t>(threads),
                                           {0, 0, 0, 0});  // n1, err1, n2, err2
  parallel_trials(cfg.trials, threads, [&](int w, long begin, long end) {
    auto& t = tallies[static_cast<size_t>(w)];
    for (long i = begin; i < end; ++i) {
      DrawStream g = trial_stream(cfg.seed, kDetectTag, static_cast<uint64_t>(i));
      int s = g.next_unit() < pi1_prior ? 1 : 2;
      int x = 1 + xs.sample(g.next_unit());
      int y = mechanism_draw(cfg.params.alpha[s - 1], cfg.params.beta[s - 1], D,
                             x, g);
      int shat = decide[static_cast<size_t>(y)];
      if (s == 1) {
        ++t[0];
        if (shat != 1) ++t[1];
      } else {
        ++t[2];
        if (shat != 2) ++t[3];
      }
    }
  });

  long n1 = 0, e1 = 0, n2 = 0, e2 = 0;
  for (const auto& t : tallies) {
    n1 += t[0];
    e1 += t[1];
    n2 += t[2];
    e2 += t[3];
  }

  DetectionReport r;
  r.seed = cfg.seed;
  r.trials = cfg.trials;
  r.D = D;
  r.empirical_p1 = n1 > 0 ? double(e1) / n1 : 0.0;
  r.empirical_p2 = n2 > 0 ? double(e2) / n2 : 0.0;
  double pi1 = cfg.params.pi[0];
  double pi2 = cfg.params.pi[1];
  r.empirical_pd = pi1 * r.empirical_p1 + pi2 * r.empirical_p2;
  r.analytic_pd = detection_bound(D, cfg.params, cfg.px);
  double var = 0.0;
  if (n1 > 0) var += pi1 * pi1 * r.empirical_p1 * (1.0 - r.empirical_p1) / n1;
  if (n2 > 0) var += pi2 * pi2 * r.empirical_p2 * (1.0 - r.empirical_p2) / n2;
  r.std_err = std::sqrt(var);
  return r;
}

CondPmfTable empirical_channel_estimate(const IdeParams& p, int D, long trials,
                                        uint64_t seed, int threads) {
  p.validate();
  if (trials < 1) throw ValidationError("channel estimate needs trials >= 1");
  if (D != p.d && D != p.d * p.d) {
    throw ValidationError("alphabet size must be d or d^2");
  }
  int nt = resolve_threads(threads);
  size_t cells = static_cast<size_t>(2) * D * (D + 1);
  std::vector<std::vector<long>> counts(static_cast<size_t>(nt),
                                        std::vector<long>(cells, 0));
  parallel_trials(trials, nt, [&](int w, long begin, long end) {
    auto& c = counts[static_cast<size_t>(w)];
    for (long i = begin; i < end; ++i) {
      DrawStream g = trial_stream(seed, kChannelTag, static_cast<uint64_t>(i));
      int x = 1 + static_cast<int>(g.next_unit() * D);
      if (x > D) x = D;
      int s = g.next_unit() < 0.5 ? 1 : 2;
      int y = mechanism_draw(p.alpha[s - 1], p.beta[s - 1], D, x, g);
      size_t idx = ((static_cast<size_t>(s - 1) * D) + (x - 1)) * (D + 1) +
                   static_cast<size_t>(y);
      ++c[idx];
    }
  });

  std::vector<long> total(cells, 0);
  for (const auto& c : counts) {
    for (size_t i = 0; i < cells; ++i) total[i] += c[i];
  }
  CondPmfTable t(D, true);
  for (int s = 1; s <= 2; ++s) {
    for (int x = 1; x <= D; ++x) {
      long row = 0;
      size_t base = ((static_cast<size_t>(s - 1) * D) + (x - 1)) * (D + 1);
      for (int y = 0; y <= D; ++y) row += total[base + static_cast<size_t>(y)];
      if (row == 0) continue;
      for (int y = 0; y <= D; ++y) {
        t.at(s, x, y) = double(total[base + static_cast<size_t>(y)]) / row;
      }
    }
  }
  return t;
}

double empirical_mutual_information(const IdeParams& p, int D,
                                    const ProbVec& px, long trials,
                                    uint64_t seed, int threads) {
  p.validate();
  if (trials < 1) throw ValidationError("mutual information needs trials >= 1");
  if (D != p.d && D != p.d * p.d) {
    throw ValidationError("alphabet size must be d or d^2");
  }
  if (px.size() != D) {
    throw ValidationError("input pmf length does not match alphabet size");
  }
  AvgParams avg = average_params(p);
  PmfSampler xs(px);
  int nt = resolve_threads(threads);
  size_t cells = static_cast<size_t>(D) * (D + 1);
  std::vector<std::vector<long>> counts(static_cast<size_t>(nt),
                                        std::vector<long>(cells, 0));
  parallel_trials(trials, nt, [&](int w, long begin, long end) {
    auto& c = counts[static_cast<size_t>(w)];
    for (long i = begin; i < end; ++i) {
      DrawStream g = trial_stream(seed, kMiTag, static_cast<uint64_t>(i));
      int x = 1 + xs.sample(g.next_unit());
      int y = mechanism_draw(avg.alpha_bar, avg.beta_bar, D, x, g);
      ++c[static_cast<size_t>(x - 1) * (D + 1) + static_cast<size_t>(y)];
    }
  });

  std::vector<long> joint(cells, 0);
  for (const auto& c : counts) {
    for (size_t i = 0; i < cells; ++i) joint[i] += c[i];
  }
  std::vector<long> row(static_cast<size_t>(D), 0);
  std::vector<long> col(static_cast<size_t>(D + 1), 0);
  for (int x = 0; x < D; ++x) {
    for (int y = 0; y <= D; ++y) {
      long c = joint[static_cast<size_t>(x) * (D + 1) + static_cast<size_t>(y)];
      row[static_cast<size_t>(x)] += c;
      col[static_cast<size_t>(y)] += c;
    }
  }
  double n = double(trials);
  double mi = 0.0;
  for (int x = 0; x < D; ++x) {
    for (int y = 0; y <= D; ++y) {
      long c = joint[static_cast<size_t>(x) * (D + 1) + static_cast<size_t>(y)];
      if (c == 0) continue;
      double pxy = c / n;
      double marg = (row[static_cast<size_t>(x)] / n) * (col[static_cast<size_t>(y)] / n);
      mi += pxy * std::log2(pxy / marg);
    }
  }
  return mi;
}

ProbVec quantum_measurement_sim(const IdeParams& p, int d, int s, int x) {
  p.validate();
  if (d != p.d) throw ValidationError("dimension does not match d");
  DensityOperator omega = lift_entangled_output(p, s, x);
  int dsq = d * d;
  std::vector<double> probs(static_cast<size_t>(dsq) + 1, 0.0);
  probs[0] = omega.matrix()(dsq, dsq).real();
  const ComplexMatrix body = omega.matrix().topLeftCorner(dsq, dsq);
  for (int y = 1; y <= dsq; ++y) {
    ComplexVector phi = bell_state(d, (y - 1) / d, (y - 1) % d);
    probs[static_cast<size_t>(y)] = (phi.adjoint() * body * phi)(0, 0).real();
  }
  for (double& v : probs) {
    if (v < 0.0 && v > -kStructuralTol) v = 0.0;
  }
  return ProbVec(std::move(probs), 1e-9);
}

Codebook sample_codebook(const ProbVec& px, long M, long T, uint64_t seed) {
  if (M < 1 || T < 1) throw ValidationError("codebook needs M >= 1 and T >= 1");
  Codebook cb;
  cb.M = M;
  cb.T = T;
  cb.symbols.resize(static_cast<size_t>(M * T));
  PmfSampler xs(px);
  for (long w = 0; w < M; ++w) {
    for (long t = 0; t < T; ++t) {
      DrawStream g = trial_stream(seed, kCodeTag, static_cast<uint64_t>(w * T + t));
      cb.symbols[static_cast<size_t>(w * T + t)] = 1 + xs.sample(g.next_unit());
    }
  }
  return cb;
}

}  // namespace ideq
