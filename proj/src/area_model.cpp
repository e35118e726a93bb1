#include "adcmodel/area_model.hpp"

#include <cmath>

#include "adcmodel/errors.hpp"
#include "adcmodel/stats.hpp"

namespace adcmodel {

namespace {
constexpr std::size_t kMinAreaRecords = 20;
}

AreaModel reference_area_model() {
  AreaModel model;
  model.log_intercept = std::log10(21.1);
  model.tech_exponent = 1.0;
  model.throughput_exponent = 0.2;
  model.energy_exponent = 0.3;
  model.decile_factor = 1.0;
  return model;
}

bool area_model_valid(const AreaModel& model) {
  return model.tech_exponent >= 0.0 && model.throughput_exponent >= 0.0 &&
         model.energy_exponent >= 0.0 && model.decile_factor > 0.0 &&
         std::isfinite(model.log_intercept);
}

void check_area_model(const AreaModel& model) {
  if (!area_model_valid(model)) {
    throw FitError(
        "area model violates invariants (exponents must be >= 0, "
        "decile factor > 0)");
  }
}

double predict_area(const AreaModel& model, double tech_nm, double throughput_sps,
                    double energy_pj) {
  if (!(tech_nm > 0.0) || !(throughput_sps > 0.0) || !(energy_pj > 0.0)) {
    throw ConfigError("predict_area: all inputs must be > 0");
  }
  const double log_area = model.log_intercept +
                          model.tech_exponent * std::log10(tech_nm) +
                          model.throughput_exponent * std::log10(throughput_sps) +
                          model.energy_exponent * std::log10(energy_pj);
  return model.decile_factor * std::pow(10.0, log_area);
}

AreaModel fit_area_model(const Corpus& corpus, std::span<const double> energy_pj,
                         const AreaFitOptions& options) {
  if (energy_pj.size() != corpus.records.size()) {
    throw ConfigError("fit_area_model: energy values must align with records");
  }

  std::vector<std::vector<double>> rows_energy;
  std::vector<std::vector<double>> rows_enob;
  std::vector<double> log_area;
  for (std::size_t i = 0; i < corpus.records.size(); ++i) {
    const AdcRecord& r = corpus.records[i];
    if (!r.area_um2) continue;
    if (!(energy_pj[i] > 0.0)) {
      throw ConfigError("fit_area_model: energy values must be > 0");
    }
    const double log_tech = std::log10(r.tech_nm);
    const double log_thr = std::log10(r.throughput_sps);
    rows_energy.push_back({1.0, log_tech, log_thr, std::log10(energy_pj[i])});
    rows_enob.push_back({1.0, log_tech, log_thr, r.enob});
    log_area.push_back(std::log10(*r.area_um2));
  }
  if (log_area.size() < kMinAreaRecords) {
    throw CorpusError("fit_area_model: need at least " +
                      std::to_string(kMinAreaRecords) +
                      " records with area, got " + std::to_string(log_area.size()));
  }

  const stats::OlsResult ols = stats::ols_fit(rows_energy, log_area);

  AreaModel model;
  model.log_intercept = ols.coeffs[0];
  model.tech_exponent = ols.coeffs[1];
  model.throughput_exponent = ols.coeffs[2];
  model.energy_exponent = ols.coeffs[3];
  model.fit_meta.records = log_area.size();

  if (model.tech_exponent < 0.0 || model.throughput_exponent < 0.0 ||
      model.energy_exponent < 0.0) {
    model.fit_meta.warnings.push_back("projected negative exponent(s) to 0");
    model.tech_exponent = std::max(model.tech_exponent, 0.0);
    model.throughput_exponent = std::max(model.throughput_exponent, 0.0);
    model.energy_exponent = std::max(model.energy_exponent, 0.0);
  }

  // Best-case calibration: the configured quantile of actual/predicted
  // ratios, interpolated in linear space.
  std::vector<double> ratios;
  ratios.reserve(log_area.size());
  for (std::size_t i = 0; i < log_area.size(); ++i) {
    const double predicted = model.log_intercept +
                             model.tech_exponent * rows_energy[i][1] +
                             model.throughput_exponent * rows_energy[i][2] +
                             model.energy_exponent * rows_energy[i][3];
    ratios.push_back(std::pow(10.0, log_area[i] - predicted));
  }
  model.decile_factor = stats::quantile(ratios, options.quantile);
  if (model.decile_factor > 1.0) {
    // Fewer than the configured share of records sit below the surface.
    model.fit_meta.warnings.push_back("quantile ratio exceeded 1; clamped");
    model.decile_factor = 1.0;
  }

  // Correlation of predicted vs actual log10 area, for this fit and for the
  // comparison fit with enob as the third predictor.
  std::vector<double> fitted(log_area.size());
  for (std::size_t i = 0; i < log_area.size(); ++i) {
    fitted[i] = log_area[i] - ols.residuals[i];
  }
  model.fit_meta.r_energy = stats::pearson_r(fitted, log_area);

  const stats::OlsResult ols_enob = stats::ols_fit(rows_enob, log_area);
  for (std::size_t i = 0; i < log_area.size(); ++i) {
    fitted[i] = log_area[i] - ols_enob.residuals[i];
  }
  model.fit_meta.r_enob = stats::pearson_r(fitted, log_area);
  model.fit_meta.has_comparison = true;

  check_area_model(model);
  return model;
}

AreaModel fit_area_model(const Corpus& corpus, const AreaFitOptions& options) {
  std::vector<double> energies;
  energies.reserve(corpus.records.size());
  for (const AdcRecord& r : corpus.records) {
    energies.push_back(r.energy_pj);
  }
  return fit_area_model(corpus, energies, options);
}

CorrelationReport correlation_report(const AreaModel& model) {
  if (!model.fit_meta.has_comparison) {
    throw FitError("correlation_report: model has no comparison metadata");
  }
  CorrelationReport report;
  report.r_energy = model.fit_meta.r_energy;
  report.r_enob = model.fit_meta.r_enob;
  report.difference = report.r_energy - report.r_enob;
  report.records = model.fit_meta.records;
  return report;
}

AreaModel calibrate_area(const AreaModel& model, double tech_nm, double throughput_sps,
                         double energy_pj, double measured_um2) {
  if (!(measured_um2 > 0.0) || !std::isfinite(measured_um2)) {
    throw ConfigError("calibrate_area: measured area must be > 0");
  }
  const double current = predict_area(model, tech_nm, throughput_sps, energy_pj);
  AreaModel out = model;
  out.decile_factor = model.decile_factor * (measured_um2 / current);
  return out;
}

}  // namespace adcmodel
