#include "adcmodel/energy_model.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "adcmodel/errors.hpp"
#include "adcmodel/stats.hpp"

namespace adcmodel {

namespace {

double eval_min_bound(const MinEnergyBound& b, double log_tech, double enob) {
  return b.intercept + b.tech_slope * log_tech + b.enob_slope * enob;
}

double eval_tradeoff_bound(const TradeoffBound& b, double log_tech, double enob,
                           double log_throughput) {
  return b.intercept + b.tech_slope * log_tech + b.enob_slope * enob +
         b.throughput_slope * log_throughput;
}

void check_query(const EnergyQueryPoint& q) {
  if (!(q.tech_nm > 0.0) || !(q.enob > 0.0) || !(q.per_adc_throughput_sps > 0.0)) {
    throw ConfigError("energy query fields must all be > 0");
  }
}

}  // namespace

bool energy_model_valid(const EnergyModel& model) {
  return model.tradeoff_bound.throughput_slope > 0.0 &&
         model.min_bound.enob_slope > 0.0 &&
         model.tradeoff_bound.enob_slope > 0.0 &&
         model.tradeoff_bound.enob_slope >= model.min_bound.enob_slope &&
         std::isfinite(model.quantile_shift);
}

void check_energy_model(const EnergyModel& model) {
  if (!energy_model_valid(model)) {
    throw FitError(
        "energy model violates invariants (need throughput_slope > 0, "
        "enob slopes > 0, tradeoff enob slope >= min-bound enob slope)");
  }
}

double predict_log_energy(const EnergyModel& model, const EnergyQueryPoint& q) {
  check_query(q);
  const double log_tech = std::log10(q.tech_nm);
  const double log_thr = std::log10(q.per_adc_throughput_sps);
  const double floor_bound = eval_min_bound(model.min_bound, log_tech, q.enob);
  const double tradeoff =
      eval_tradeoff_bound(model.tradeoff_bound, log_tech, q.enob, log_thr);
  return std::max(floor_bound, tradeoff) + model.quantile_shift;
}

double predict_energy_pj(const EnergyModel& model, const EnergyQueryPoint& q) {
  return std::pow(10.0, predict_log_energy(model, q));
}

EnergyBound active_energy_bound(const EnergyModel& model, const EnergyQueryPoint& q) {
  check_query(q);
  const double log_tech = std::log10(q.tech_nm);
  const double log_thr = std::log10(q.per_adc_throughput_sps);
  const double floor_bound = eval_min_bound(model.min_bound, log_tech, q.enob);
  const double tradeoff =
      eval_tradeoff_bound(model.tradeoff_bound, log_tech, q.enob, log_thr);
  return tradeoff > floor_bound ? EnergyBound::tradeoff : EnergyBound::minimum;
}

double corner_throughput(const EnergyModel& model, double tech_nm, double enob) {
  if (!(tech_nm > 0.0) || !(enob > 0.0)) {
    throw ConfigError("corner_throughput: tech and enob must be > 0");
  }
  const MinEnergyBound& a = model.min_bound;
  const TradeoffBound& b = model.tradeoff_bound;
  const double log_tech = std::log10(tech_nm);
  const double exponent = (a.intercept - b.intercept +
                           (a.tech_slope - b.tech_slope) * log_tech +
                           (a.enob_slope - b.enob_slope) * enob) /
                          b.throughput_slope;
  return std::pow(10.0, exponent);
}

bool within_fit_range(const EnergyModel& model, const EnergyQueryPoint& q) {
  const PredictorRanges& r = model.fit_meta.ranges;
  if (r.throughput_max <= 0.0) return true;  // no fit ranges recorded
  return q.tech_nm >= r.tech_nm_min && q.tech_nm <= r.tech_nm_max &&
         q.enob >= r.enob_min && q.enob <= r.enob_max &&
         q.per_adc_throughput_sps >= r.throughput_min &&
         q.per_adc_throughput_sps <= r.throughput_max;
}

namespace {

struct FitPoint {
  double log_tech;
  double enob;
  double log_throughput;
  double log_energy;
};

enum class Assignment { min_bound, tradeoff };

// Initial partition: within each integer-rounded ENOB bucket, records at or
// below the bucket's median throughput seed the min bound, the rest seed the
// tradeoff bound.
std::vector<Assignment> initial_assignment(const std::vector<FitPoint>& pts) {
  std::map<long, std::vector<std::size_t>> buckets;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    buckets[std::lround(pts[i].enob)].push_back(i);
  }
  std::vector<Assignment> assign(pts.size(), Assignment::min_bound);
  for (auto& [bucket, members] : buckets) {
    std::vector<double> thr;
    thr.reserve(members.size());
    for (const std::size_t i : members) thr.push_back(pts[i].log_throughput);
    const double median = stats::quantile(thr, 0.5);
    for (const std::size_t i : members) {
      assign[i] = pts[i].log_throughput <= median ? Assignment::min_bound
                                                  : Assignment::tradeoff;
    }
  }
  return assign;
}

MinEnergyBound solve_min_bound(const std::vector<FitPoint>& pts,
                               const std::vector<Assignment>& assign,
                               double* rmse) {
  std::vector<std::vector<double>> rows;
  std::vector<double> y;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (assign[i] != Assignment::min_bound) continue;
    rows.push_back({1.0, pts[i].log_tech, pts[i].enob});
    y.push_back(pts[i].log_energy);
  }
  const stats::OlsResult ols = stats::ols_fit(rows, y);
  if (rmse) {
    double ss = 0.0;
    for (const double r : ols.residuals) ss += r * r;
    *rmse = std::sqrt(ss / static_cast<double>(ols.residuals.size()));
  }
  return {ols.coeffs[0], ols.coeffs[1], ols.coeffs[2]};
}

TradeoffBound solve_tradeoff_bound(const std::vector<FitPoint>& pts,
                                   const std::vector<Assignment>& assign,
                                   double* rmse) {
  std::vector<std::vector<double>> rows;
  std::vector<double> y;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (assign[i] != Assignment::tradeoff) continue;
    rows.push_back({1.0, pts[i].log_tech, pts[i].enob, pts[i].log_throughput});
    y.push_back(pts[i].log_energy);
  }
  const stats::OlsResult ols = stats::ols_fit(rows, y);
  if (rmse) {
    double ss = 0.0;
    for (const double r : ols.residuals) ss += r * r;
    *rmse = std::sqrt(ss / static_cast<double>(ols.residuals.size()));
  }
  return {ols.coeffs[0], ols.coeffs[1], ols.coeffs[2], ols.coeffs[3]};
}

std::size_t count_assigned(const std::vector<Assignment>& assign, Assignment which) {
  return static_cast<std::size_t>(
      std::count(assign.begin(), assign.end(), which));
}

}  // namespace

EnergyModel fit_energy_model(const Corpus& corpus, const EnergyFitOptions& options) {
  constexpr std::size_t kMinBoundCoeffs = 3;
  constexpr std::size_t kTradeoffCoeffs = 4;
  constexpr std::size_t kTotalCoeffs = kMinBoundCoeffs + kTradeoffCoeffs;

  const std::vector<AdcRecord>& records = corpus.records;
  if (records.size() < 2 * kTotalCoeffs) {
    throw CorpusError("degenerate corpus: need at least " +
                      std::to_string(2 * kTotalCoeffs) + " records, got " +
                      std::to_string(records.size()));
  }
  std::set<double> enobs, techs;
  double thr_min = records.front().throughput_sps;
  double thr_max = thr_min;
  for (const AdcRecord& r : records) {
    enobs.insert(r.enob);
    techs.insert(r.tech_nm);
    thr_min = std::min(thr_min, r.throughput_sps);
    thr_max = std::max(thr_max, r.throughput_sps);
  }
  if (enobs.size() < 2) {
    throw CorpusError("degenerate corpus: needs >= 2 distinct enob values");
  }
  if (techs.size() < 2) {
    throw CorpusError(
        "degenerate corpus: needs >= 2 distinct tech nodes (tech slope is "
        "unidentifiable on a single-node corpus)");
  }
  if (std::log10(thr_max / thr_min) < 2.0) {
    throw CorpusError("degenerate corpus: throughput must span >= 2 decades");
  }

  std::vector<FitPoint> pts;
  pts.reserve(records.size());
  for (const AdcRecord& r : records) {
    pts.push_back({std::log10(r.tech_nm), r.enob, std::log10(r.throughput_sps),
                   std::log10(r.energy_pj)});
  }

  EnergyModel model;
  EnergyFitMeta& meta = model.fit_meta;
  meta.quantile = options.quantile;

  std::vector<Assignment> assign = initial_assignment(pts);
  bool converged = false;
  int iteration = 0;
  for (; iteration < options.max_iterations; ++iteration) {
    if (count_assigned(assign, Assignment::min_bound) < kMinBoundCoeffs ||
        count_assigned(assign, Assignment::tradeoff) < kTradeoffCoeffs) {
      if (iteration == 0) {
        throw CorpusError("degenerate corpus: a bound partition is too small");
      }
      meta.warnings.push_back(
          "partition collapsed during reassignment; kept previous iterate");
      break;
    }
    try {
      model.min_bound = solve_min_bound(pts, assign, &meta.min_bound_rmse);
      model.tradeoff_bound =
          solve_tradeoff_bound(pts, assign, &meta.tradeoff_rmse);
    } catch (const FitError& e) {
      if (iteration == 0) {
        throw CorpusError(std::string("degenerate corpus: ") + e.what());
      }
      meta.warnings.push_back(std::string("partition became degenerate (") +
                              e.what() + "); kept previous iterate");
      break;
    }

    // Reassign each record to the bound with the smaller absolute residual;
    // ties go to the min bound to keep the flat region maximal.
    std::vector<Assignment> next(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const double r_min = pts[i].log_energy -
                           eval_min_bound(model.min_bound, pts[i].log_tech,
                                          pts[i].enob);
      const double r_thr =
          pts[i].log_energy -
          eval_tradeoff_bound(model.tradeoff_bound, pts[i].log_tech,
                              pts[i].enob, pts[i].log_throughput);
      next[i] = std::abs(r_thr) < std::abs(r_min) ? Assignment::tradeoff
                                                  : Assignment::min_bound;
    }
    if (next == assign) {
      converged = true;
      ++iteration;
      break;
    }
    assign = std::move(next);
  }
  meta.iterations = iteration;
  meta.converged = converged;
  if (!converged && meta.warnings.empty()) {
    meta.warnings.push_back("assignment did not stabilize within " +
                            std::to_string(options.max_iterations) +
                            " iterations; returning last iterate");
  }
  meta.min_bound_records = count_assigned(assign, Assignment::min_bound);
  meta.tradeoff_records = count_assigned(assign, Assignment::tradeoff);

  // Project onto the invariant region if least squares stepped outside it.
  if (model.tradeoff_bound.throughput_slope <= 0.0) {
    model.tradeoff_bound.throughput_slope = 1e-6;
    meta.warnings.push_back("projected throughput_slope up to 1e-6");
  }
  if (model.min_bound.enob_slope <= 0.0) {
    model.min_bound.enob_slope = 1e-6;
    meta.warnings.push_back("projected min-bound enob_slope up to 1e-6");
  }
  if (model.tradeoff_bound.enob_slope < model.min_bound.enob_slope) {
    model.tradeoff_bound.enob_slope = model.min_bound.enob_slope;
    meta.warnings.push_back(
        "projected tradeoff enob_slope up to the min-bound slope");
  }

  // Pin the configured lower quantile of the residuals to the surface so
  // the model tracks best-case energy.
  std::vector<double> residuals;
  residuals.reserve(pts.size());
  for (const FitPoint& p : pts) {
    const double surface =
        std::max(eval_min_bound(model.min_bound, p.log_tech, p.enob),
                 eval_tradeoff_bound(model.tradeoff_bound, p.log_tech, p.enob,
                                     p.log_throughput));
    residuals.push_back(p.log_energy - surface);
  }
  model.quantile_shift = stats::quantile(residuals, options.quantile);

  meta.ranges.tech_nm_min = *techs.begin();
  meta.ranges.tech_nm_max = *techs.rbegin();
  meta.ranges.enob_min = *enobs.begin();
  meta.ranges.enob_max = *enobs.rbegin();
  meta.ranges.throughput_min = thr_min;
  meta.ranges.throughput_max = thr_max;

  check_energy_model(model);
  return model;
}

EnergyModel calibrate_energy(const EnergyModel& model, const EnergyQueryPoint& reference,
                             double measured_pj) {
  if (!(measured_pj > 0.0) || !std::isfinite(measured_pj)) {
    throw ConfigError("calibrate_energy: measured energy must be > 0");
  }
  // Shift by the linear-space ratio so calibrating to the model's own
  // prediction is an exact no-op (ratio == 1 -> log10 == 0).
  const double ratio = measured_pj / predict_energy_pj(model, reference);
  EnergyModel out = model;
  out.quantile_shift += std::log10(ratio);
  return out;
}

}  // namespace adcmodel
