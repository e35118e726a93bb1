#ifndef ADCMODEL_ENERGY_MODEL_HPP
#define ADCMODEL_ENERGY_MODEL_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "adcmodel/record.hpp"

namespace adcmodel {

/// Throughput-independent energy floor, linear in log10 space:
///   log10 E(pJ) = intercept + tech_slope * log10(tech_nm) + enob_slope * enob
struct MinEnergyBound {
  double intercept = 0.0;   // log10 pJ
  double tech_slope = 0.0;  // per decade of tech_nm
  double enob_slope = 0.0;  // per ENOB bit
};

/// High-throughput regime where energy rises with per-ADC throughput:
///   log10 E = intercept + tech_slope * log10(tech) + enob_slope * enob
///             + throughput_slope * log10(throughput)
struct TradeoffBound {
  double intercept = 0.0;
  double tech_slope = 0.0;
  double enob_slope = 0.0;
  double throughput_slope = 0.0;  // must stay > 0
};

/// Closed ranges of the fitting corpus, kept so queries outside the
/// supporting data can be flagged as extrapolation.
struct PredictorRanges {
  double tech_nm_min = 0.0, tech_nm_max = 0.0;
  double enob_min = 0.0, enob_max = 0.0;
  double throughput_min = 0.0, throughput_max = 0.0;
};

struct EnergyFitMeta {
  std::size_t min_bound_records = 0;
  std::size_t tradeoff_records = 0;
  int iterations = 0;
  bool converged = true;
  double min_bound_rmse = 0.0;   // log10 residual RMS on assigned records
  double tradeoff_rmse = 0.0;
  double quantile = 0.10;        // lower quantile used for the shift
  PredictorRanges ranges;
  std::vector<std::string> warnings;
};

/// Best-case per-conversion energy model: the maximum of two log-space
/// linear bounds, shifted so a configured lower quantile of the fitting
/// corpus sits on the surface.
struct EnergyModel {
  MinEnergyBound min_bound;
  TradeoffBound tradeoff_bound;
  double quantile_shift = 0.0;  // log10 offset applied to both bounds
  EnergyFitMeta fit_meta;
};

struct EnergyQueryPoint {
  double tech_nm = 0.0;
  double enob = 0.0;
  double per_adc_throughput_sps = 0.0;
};

/// Which bound attains the max at a query. Ties report `minimum`.
enum class EnergyBound { minimum, tradeoff };

/// Invariants every usable model satisfies: positive enob slopes, positive
/// throughput slope, tradeoff enob slope >= min-bound enob slope.
bool energy_model_valid(const EnergyModel& model);
void check_energy_model(const EnergyModel& model);  // throws FitError

/// log10 of the predicted pJ per conversion at a query point.
double predict_log_energy(const EnergyModel& model, const EnergyQueryPoint& q);

/// Predicted pJ per conversion (10^predict_log_energy).
double predict_energy_pj(const EnergyModel& model, const EnergyQueryPoint& q);

EnergyBound active_energy_bound(const EnergyModel& model, const EnergyQueryPoint& q);

/// Throughput where the two bounds intersect for a given tech/enob.
double corner_throughput(const EnergyModel& model, double tech_nm, double enob);

/// True when the query lies inside the fitted predictor ranges.
bool within_fit_range(const EnergyModel& model, const EnergyQueryPoint& q);

struct EnergyFitOptions {
  double quantile = 0.10;   // lower quantile pinned to the surface
  int max_iterations = 20;  // residual-reassignment passes
};

/// Fits the two bounds by iterated partitioned least squares in log10
/// space: split each integer-ENOB bucket at its median throughput, solve
/// each side, reassign records to the bound with the smaller absolute
/// residual, repeat until stable. Coefficients that land outside the
/// invariant region are projected back and noted in fit_meta.warnings.
EnergyModel fit_energy_model(const Corpus& corpus, const EnergyFitOptions& options = {});

/// Shifts the model so its prediction at `reference` equals `measured_pj`.
/// All slopes stay fixed, so trends across throughput/ENOB/tech persist.
EnergyModel calibrate_energy(const EnergyModel& model, const EnergyQueryPoint& reference,
                             double measured_pj);

}  // namespace adcmodel

#endif
