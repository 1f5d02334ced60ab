#include "ideq/regions.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ideq/sim.hpp"

namespace ideq {

namespace {

double eta(double t) { return t > 0.0 ? -t * std::log2(t) : 0.0; }

struct DetectionPieces {
  // min_s pi_s (alpha_s t + beta_s / D) evaluated per symbol mass t.
  double pi1a, pi1b, pi2a, pi2b;  // pi_s alpha_s, pi_s beta_s / D
  double erasure_term;            // min_s pi_s gamma_s

  explicit DetectionPieces(int D, const IdeParams& p)
      : pi1a(p.pi[0] * p.alpha[0]),
        pi1b(p.pi[0] * p.beta[0] / D),
        pi2a(p.pi[1] * p.alpha[1]),
        pi2b(p.pi[1] * p.beta[1] / D),
        erasure_term(std::min(p.pi[0] * p.gamma[0], p.pi[1] * p.gamma[1])) {}

  double symbol_term(double t) const {
    return std::min(pi1a * t + pi1b, pi2a * t + pi2b);
  }
};

struct RatePieces {
  double a, b;       // alpha_bar, beta_bar / D
  double base;       // subtracted conditional-entropy part
  explicit RatePieces(int D, const AvgParams& avg)
      : a(avg.alpha_bar),
        b(avg.beta_bar / D),
        base(eta(avg.alpha_bar + avg.beta_bar / D) +
             (D - 1) * eta(avg.beta_bar / D)) {}

  double symbol_term(double t) const { return eta(a * t + b); }
};

}  // namespace

ProbVec TwoValueDist::expand(int D) const {
  if (n < 1 || n > D) throw ValidationError("two-value n outside [1, D]");
  std::vector<double> v(static_cast<size_t>(D), p2);
  for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = p1;
  return ProbVec(std::move(v), 1e-9);
}

double rate_bound(int D, const AvgParams& avg, const ProbVec& p) {
  if (p.size() != D) {
    throw ValidationError("input pmf length does not match alphabet size");
  }
  RatePieces rp(D, avg);
  double acc = 0.0;
  for (int i = 0; i < D; ++i) acc += rp.symbol_term(p[i]);
  double r = acc - rp.base;
  return r < 0.0 ? 0.0 : r;  // clamp -0.0 / rounding residue at the zero edge
}

double detection_bound(int D, const IdeParams& p, const ProbVec& px) {
  p.validate();
  if (px.size() != D) {
    throw ValidationError("input pmf length does not match alphabet size");
  }
  DetectionPieces dp(D, p);
  double acc = dp.erasure_term;
  for (int i = 0; i < D; ++i) acc += dp.symbol_term(px[i]);
  return acc;
}

ClosedForms closed_forms(int D, const IdeParams& p) {
  p.validate();
  if (D < 1) throw ValidationError("alphabet size must be >= 1");
  AvgParams avg = average_params(p);
  double ab = avg.alpha_bar;
  double bb = avg.beta_bar;

  ClosedForms out;
  out.r_max = -(ab + bb) * ((ab + bb) > 0.0 ? std::log2((ab + bb) / D) : 0.0) +
              (ab + bb / D) * ((ab + bb / D) > 0.0 ? std::log2(ab + bb / D) : 0.0) +
              (double(D - 1) / D) * bb * (bb > 0.0 ? std::log2(bb / D) : 0.0);
  if (out.r_max < 0.0) out.r_max = 0.0;

  double g = std::min(p.pi[0] * p.gamma[0], p.pi[1] * p.gamma[1]);
  out.pe_min = std::min(p.pi[0] * (p.alpha[0] + p.beta[0] / D),
                        p.pi[1] * (p.alpha[1] + p.beta[1] / D)) +
               (double(D - 1) / D) * std::min(p.pi[0] * p.beta[0], p.pi[1] * p.beta[1]) +
               g;
  out.pe_star = std::min(p.pi[0] * (p.alpha[0] + p.beta[0]),
                         p.pi[1] * (p.alpha[1] + p.beta[1])) +
                g;

  double slope_diff = p.pi[0] * p.alpha[0] - p.pi[1] * p.alpha[1];
  if (slope_diff == 0.0) {
    out.no_tradeoff = true;
  } else {
    double p_th = (p.pi[1] * p.beta[1] - p.pi[0] * p.beta[0]) / (slope_diff * D);
    out.p_th = p_th;
    out.no_tradeoff = (p_th <= 0.0 || p_th >= 1.0);
  }
  return out;
}

std::vector<FrontierPoint> upper_convex_hull(std::vector<FrontierPoint> pts) {
  std::erase_if(pts, [](const FrontierPoint& p) {
    return std::isnan(p.pe) || std::isnan(p.rate);
  });
  if (pts.empty()) throw ValidationError("hull of an empty point set");
  std::sort(pts.begin(), pts.end(), [](const FrontierPoint& a, const FrontierPoint& b) {
    if (a.pe != b.pe) return a.pe < b.pe;
    return a.rate > b.rate;
  });

  // Collapse pe values within 1e-12 to one representative of maximal rate;
  // keeps the hull robust against last-ulp detection noise.
  std::vector<FrontierPoint> dedup;
  for (const FrontierPoint& p : pts) {
    if (!dedup.empty() && p.pe - dedup.back().pe <= 1e-12) {
      if (p.rate > dedup.back().rate) dedup.back() = p;
      continue;
    }
    dedup.push_back(p);
  }

  auto cross = [](const FrontierPoint& o, const FrontierPoint& a,
                  const FrontierPoint& b) {
    return (a.pe - o.pe) * (b.rate - o.rate) - (a.rate - o.rate) * (b.pe - o.pe);
  };
  std::vector<FrontierPoint> hull;
  for (const FrontierPoint& p : dedup) {
    while (hull.size() >= 2 &&
           cross(hull[hull.size() - 2], hull[hull.size() - 1], p) >= 0.0) {
      hull.pop_back();
    }
    hull.push_back(p);
  }

  // Truncate after the rate maximum: further right the frontier is flat.
  size_t best = 0;
  for (size_t i = 1; i < hull.size(); ++i) {
    if (hull[i].rate >= hull[best].rate) best = i;
  }
  hull.resize(best + 1);
  return hull;
}

Frontier::Frontier(std::vector<FrontierPoint> hull, FrontierMeta meta)
    : points_(std::move(hull)), meta_(std::move(meta)) {
  if (points_.empty()) throw ValidationError("frontier needs at least one point");
  for (size_t i = 1; i < points_.size(); ++i) {
    if (!(points_[i].pe > points_[i - 1].pe)) {
      throw ValidationError("frontier pe values must be strictly increasing");
    }
    if (points_[i].rate < points_[i - 1].rate - 1e-12) {
      throw ValidationError("frontier rate values must be nondecreasing");
    }
  }
}

std::optional<double> Frontier::rate_at(double pe) const {
  const double lo = points_.front().pe;
  if (pe < lo - kProbTol) return std::nullopt;
  if (pe <= lo) return points_.front().rate;
  if (pe >= points_.back().pe) return points_.back().rate;
  auto it = std::lower_bound(
      points_.begin(), points_.end(), pe,
      [](const FrontierPoint& p, double v) { return p.pe < v; });
  // it points at the first vertex with vertex.pe >= pe and cannot be begin().
  const FrontierPoint& hi = *it;
  const FrontierPoint& lo_pt = *(it - 1);
  if (hi.pe == pe) return hi.rate;
  double t = (pe - lo_pt.pe) / (hi.pe - lo_pt.pe);
  return lo_pt.rate + t * (hi.rate - lo_pt.rate);
}

namespace {

void sweep_two_value(int D, const DetectionPieces& dp, const RatePieces& rp,
                     int n, double lo, double hi, int samples,
                     std::vector<FrontierPoint>& out) {
  for (int k = 0; k < samples; ++k) {
    double p1 = samples == 1 ? lo : lo + (hi - lo) * k / (samples - 1);
    double p2 = n == D ? 0.0 : (1.0 - n * p1) / (D - n);
    if (p2 < 0.0) p2 = 0.0;
    double pe = n * dp.symbol_term(p1) + (D - n) * dp.symbol_term(p2) +
                dp.erasure_term;
    double rate = n * rp.symbol_term(p1) + (D - n) * rp.symbol_term(p2) - rp.base;
    if (rate < 0.0) rate = 0.0;
    out.push_back({pe, rate, TwoValueDist{n, p1, p2}});
  }
}

void feasible_interval(int D, int n, double& lo, double& hi) {
  lo = std::max(0.0, (1.0 - double(D - n)) / n);
  hi = std::min(1.0, 1.0 / n);
}

}  // namespace

Frontier frontier_two_value(int D, const IdeParams& p, const GridConfig& grid) {
  p.validate();
  if (D < 1) throw ValidationError("alphabet size must be >= 1");
  if (grid.p1_samples < 2) throw ValidationError("grid needs >= 2 samples");
  DetectionPieces dp(D, p);
  RatePieces rp(D, average_params(p));

  std::vector<FrontierPoint> cloud;
  cloud.reserve(static_cast<size_t>(D) * grid.p1_samples);
  for (int n = 1; n <= D; ++n) {
    double lo, hi;
    feasible_interval(D, n, lo, hi);
    int samples = hi > lo ? grid.p1_samples : 1;
    sweep_two_value(D, dp, rp, n, lo, hi, samples, cloud);
  }
  std::vector<FrontierPoint> hull = upper_convex_hull(std::move(cloud));

  if (grid.refine && grid.refine_samples > 1) {
    std::vector<FrontierPoint> refined = hull;
    for (const FrontierPoint& v : hull) {
      if (!v.witness) continue;
      int n = v.witness->n;
      double lo, hi;
      feasible_interval(D, n, lo, hi);
      if (!(hi > lo)) continue;
      double step = (hi - lo) / (grid.p1_samples - 1);
      double wlo = std::max(lo, v.witness->p1 - step);
      double whi = std::min(hi, v.witness->p1 + step);
      sweep_two_value(D, dp, rp, n, wlo, whi, grid.refine_samples, refined);
    }
    hull = upper_convex_hull(std::move(refined));
  }

  return Frontier(std::move(hull),
                  FrontierMeta{p, D, grid.p1_samples, std::nullopt});
}

namespace {

// Marsaglia-Tsang gamma sampler on a deterministic draw stream.
double sample_gamma(DrawStream& g, double shape) {
  if (shape < 1.0) {
    double u = g.next_unit();
    while (u <= 0.0) u = g.next_unit();
    return sample_gamma(g, shape + 1.0) * std::pow(u, 1.0 / shape);
  }
  double d = shape - 1.0 / 3.0;
  double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double u1 = g.next_unit();
    double u2 = g.next_unit();
    while (u1 <= 0.0) u1 = g.next_unit();
    double z = std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
    double v = 1.0 + c * z;
    if (v <= 0.0) continue;
    v = v * v * v;
    double u = g.next_unit();
    if (u < 1.0 - 0.0331 * z * z * z * z) return d * v;
    if (u > 0.0 && std::log(u) < 0.5 * z * z + d * (1.0 - v + std::log(v))) {
      return d * v;
    }
  }
}

ProbVec sample_dirichlet(DrawStream& g, int D, double conc) {
  std::vector<double> v(static_cast<size_t>(D));
  double sum = 0.0;
  for (int i = 0; i < D; ++i) {
    v[static_cast<size_t>(i)] = sample_gamma(g, conc);
    sum += v[static_cast<size_t>(i)];
  }
  if (sum <= 0.0) return ProbVec::uniform(D);
  for (double& x : v) x /= sum;
  return ProbVec(std::move(v), 1e-6);
}

}  // namespace

Frontier frontier_bruteforce(int D, const IdeParams& p, long samples,
                             uint64_t seed) {
  p.validate();
  if (D < 1) throw ValidationError("alphabet size must be >= 1");
  if (samples < 1) throw ValidationError("bruteforce needs samples >= 1");
  AvgParams avg = average_params(p);

  std::vector<FrontierPoint> cloud;
  auto add = [&](const ProbVec& px) {
    cloud.push_back({detection_bound(D, p, px), rate_bound(D, avg, px),
                     std::nullopt});
  };

  // Structured anchors: vertices, uniform, vertex-vertex and vertex-uniform
  // mixtures (the latter reproduce the n = 1 two-value family).
  for (int i = 0; i < D; ++i) add(ProbVec::point_mass(D, i));
  add(ProbVec::uniform(D));
  const int t_grid = 65;
  for (int k = 0; k <= t_grid; ++k) {
    double t = double(k) / t_grid;
    if (D >= 2) {
      std::vector<double> v(static_cast<size_t>(D), 0.0);
      v[0] = t;
      v[1] = 1.0 - t;
      add(ProbVec(std::move(v), 1e-9));
    }
    std::vector<double> w(static_cast<size_t>(D), (1.0 - t) / D);
    w[0] += t;
    add(ProbVec(std::move(w), 1e-9));
  }

  static constexpr double kConcentrations[] = {1.0, 0.3, 3.0};
  static constexpr uint64_t kBruteforceTag = 0x62727574u;  // "brut"
  for (long i = 0; i < samples; ++i) {
    DrawStream g = trial_stream(seed, kBruteforceTag, static_cast<uint64_t>(i));
    double conc = kConcentrations[i % 3];
    add(sample_dirichlet(g, D, conc));
  }

  std::vector<FrontierPoint> hull = upper_convex_hull(std::move(cloud));
  return Frontier(std::move(hull), FrontierMeta{p, D, 0, std::nullopt});
}

RatePoint outer_bound_point(const IdeParams& p,
                            const std::vector<DensityOperator>& ensemble) {
  p.validate();
  if (ensemble.empty()) {
    throw ValidationError("ensemble must contain at least one state");
  }
  for (const DensityOperator& rho : ensemble) {
    if (rho.dim() != p.d) {
      std::ostringstream os;
      os << "ensemble state dimension " << rho.dim() << " does not match d = "
         << p.d;
      throw ValidationError(os.str());
    }
  }
  ComplexMatrix acc = ComplexMatrix::Zero(p.d, p.d);
  for (const DensityOperator& rho : ensemble) acc += rho.matrix();
  DensityOperator sigma(acc / double(ensemble.size()));

  double h_avg = von_neumann_entropy(apply_ide_avg(p, sigma));
  double h_cond = 0.0;
  for (const DensityOperator& rho : ensemble) {
    h_cond += von_neumann_entropy(apply_ide_avg(p, rho));
  }
  h_cond /= double(ensemble.size());
  double rate_upper = h_avg - h_cond;
  if (rate_upper < 0.0) rate_upper = 0.0;

  ComplexMatrix diff = p.pi[0] * apply_ide(p, 1, sigma).matrix() -
                       p.pi[1] * apply_ide(p, 2, sigma).matrix();
  double pe_lower = 0.5 * (1.0 - trace_norm(diff));
  if (pe_lower < 0.0) pe_lower = 0.0;
  return RatePoint{pe_lower, rate_upper};
}

Frontier unreliable_frontier(const IdeParams& p, double alpha_tilde,
                             const GridConfig& grid) {
  IdeParams composed = compose_unreliable(p, alpha_tilde);
  Frontier ent = frontier_two_value(p.d * p.d, composed, grid);
  Frontier unent = frontier_two_value(p.d, p, grid);

  std::vector<FrontierPoint> merged;
  merged.reserve(ent.points().size() + unent.points().size());
  for (const FrontierPoint& v : ent.points()) merged.push_back({v.pe, v.rate, std::nullopt});
  for (const FrontierPoint& v : unent.points()) merged.push_back({v.pe, v.rate, std::nullopt});
  std::vector<FrontierPoint> hull = upper_convex_hull(std::move(merged));
  return Frontier(std::move(hull),
                  FrontierMeta{p, p.d * p.d, grid.p1_samples, alpha_tilde});
}

}  // namespace ideq
