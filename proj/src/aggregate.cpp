#include "cwoful/aggregate.hpp"

#include <algorithm>
#include <cmath>

#include "cwoful/errors.hpp"

namespace cwoful {

CurveInput curve_input(const EpisodeResult& episode) {
  CurveInput in;
  in.seed = episode.seed;
  const std::size_t n = episode.records.size();
  in.cumulative_regret.reserve(n);
  in.corruption.reserve(n);
  in.potential.reserve(n);
  double corruption = 0.0;
  double potential = 0.0;
  for (const RoundRecord& r : episode.records) {
    corruption += std::abs(r.corruption);
    potential += std::min(1.0, r.weight * r.bonus * r.bonus);
    in.cumulative_regret.push_back(r.cum_regret);
    in.corruption.push_back(corruption);
    in.potential.push_back(potential);
    in.confidence_violated = in.confidence_violated || !r.confidence_ok;
  }
  return in;
}

CurveStats curve_stats(std::span<const std::vector<double>> rows) {
  CurveStats s;
  if (rows.empty()) return s;
  const std::size_t K = rows.front().size();
  const double n = static_cast<double>(rows.size());
  s.mean.assign(K, 0.0);
  s.std.assign(K, 0.0);
  s.min.assign(K, 0.0);
  s.max.assign(K, 0.0);
  for (std::size_t k = 0; k < K; ++k) {
    double sum = 0.0;
    double lo = rows.front()[k];
    double hi = lo;
    for (const auto& row : rows) {
      sum += row[k];
      lo = std::min(lo, row[k]);
      hi = std::max(hi, row[k]);
    }
    const double mean = sum / n;
    double ss = 0.0;
    for (const auto& row : rows) ss += (row[k] - mean) * (row[k] - mean);
    s.mean[k] = mean;
    s.std[k] = std::sqrt(ss / n);
    s.min[k] = lo;
    s.max[k] = hi;
  }
  return s;
}

RegretCurve aggregate(std::vector<CurveInput> curves) {
  if (curves.empty()) throw ContractError("aggregate: no curves");
  const std::size_t K = curves.front().cumulative_regret.size();
  for (const CurveInput& c : curves) {
    if (c.cumulative_regret.size() != K || c.corruption.size() != K ||
        c.potential.size() != K) {
      throw ContractError("aggregate: curves have mismatched horizons");
    }
  }
  std::stable_sort(curves.begin(), curves.end(),
                   [](const CurveInput& a, const CurveInput& b) {
                     return a.seed < b.seed;
                   });

  RegretCurve out;
  std::vector<std::vector<double>> corruption;
  std::vector<std::vector<double>> potential;
  for (CurveInput& c : curves) {
    out.seeds.push_back(c.seed);
    out.confidence_violations += c.confidence_violated ? 1 : 0;
    out.per_seed.push_back(std::move(c.cumulative_regret));
    corruption.push_back(std::move(c.corruption));
    potential.push_back(std::move(c.potential));
  }
  out.regret = curve_stats(out.per_seed);
  out.corruption = curve_stats(corruption);
  out.potential = curve_stats(potential);
  return out;
}

RegretCurve aggregate(std::span<const EpisodeResult> episodes) {
  std::vector<CurveInput> inputs;
  inputs.reserve(episodes.size());
  for (const EpisodeResult& e : episodes) inputs.push_back(curve_input(e));
  return aggregate(std::move(inputs));
}

AffineFit affine_fit(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw ContractError("affine_fit: need >= 2 paired points");
  }
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0.0) throw ContractError("affine_fit: x values are all equal");
  AffineFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.r_squared = syy > 0.0 ? (sxy * sxy) / (sxx * syy) : 1.0;
  return fit;
}

double loglog_slope(std::span<const double> x, std::span<const double> y) {
  std::vector<double> lx, ly;
  for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0)) {
      throw ContractError("loglog_slope: values must be positive");
    }
    lx.push_back(std::log(x[i]));
    ly.push_back(std::log(y[i]));
  }
  return affine_fit(lx, ly).slope;
}

}  // namespace cwoful
