#ifndef ADCMODEL_AREA_MODEL_HPP
#define ADCMODEL_AREA_MODEL_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "adcmodel/record.hpp"

namespace adcmodel {

struct AreaFitMeta {
  bool has_comparison = false;  // r values below are meaningful
  double r_energy = 0.0;        // predicted vs actual log10 area, energy predictor
  double r_enob = 0.0;          // same fit with enob replacing log energy
  std::size_t records = 0;      // records with area used by the fit
  std::vector<std::string> warnings;
};

/// Power-law area regression in log10 space:
///   area(um^2) = decile_factor * 10^(log_intercept
///                                    + tech_exponent * log10(tech_nm)
///                                    + throughput_exponent * log10(throughput)
///                                    + energy_exponent * log10(energy_pj))
/// The decile factor drops the surface onto the lowest-area tenth of the
/// corpus so the model tracks best-case area.
struct AreaModel {
  double log_intercept = 0.0;        // log10 um^2
  double tech_exponent = 0.0;
  double throughput_exponent = 0.0;
  double energy_exponent = 0.0;
  double decile_factor = 1.0;
  AreaFitMeta fit_meta;
};

/// Published reference coefficients: 21.1 * tech^1.0 * throughput^0.2 *
/// energy^0.3 with no best-case reduction. Usable without any dataset.
AreaModel reference_area_model();

bool area_model_valid(const AreaModel& model);
void check_area_model(const AreaModel& model);  // throws FitError

/// Predicted ADC area in um^2. All inputs must be > 0.
double predict_area(const AreaModel& model, double tech_nm, double throughput_sps,
                    double energy_pj);

struct AreaFitOptions {
  double quantile = 0.10;  // best-case calibration quantile
};

/// Least squares on records that report area, using the supplied per-record
/// energies (index-aligned with the corpus) as the third predictor, then
/// calibrates the decile factor to the configured lowest-area quantile of
/// the actual/predicted ratios. fit_meta captures the correlation of this
/// fit and of the comparison fit that uses enob instead of energy.
AreaModel fit_area_model(const Corpus& corpus, std::span<const double> energy_pj,
                         const AreaFitOptions& options = {});

/// Convenience overload fitting against each record's own reported energy.
AreaModel fit_area_model(const Corpus& corpus, const AreaFitOptions& options = {});

struct CorrelationReport {
  double r_energy = 0.0;
  double r_enob = 0.0;
  double difference = 0.0;  // r_energy - r_enob
  std::size_t records = 0;
};

/// The energy-vs-enob predictor comparison for a fitted model. Throws
/// FitError when the model carries no comparison metadata (e.g. the
/// reference model).
CorrelationReport correlation_report(const AreaModel& model);

/// Rescales the decile factor so the prediction at the reference point
/// equals `measured_um2`; exponents stay fixed.
AreaModel calibrate_area(const AreaModel& model, double tech_nm, double throughput_sps,
                         double energy_pj, double measured_um2);

}  // namespace adcmodel

#endif
