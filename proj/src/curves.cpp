#include "adcmodel/curves.hpp"

#include <cmath>

#include "adcmodel/errors.hpp"

namespace adcmodel {

namespace {

std::vector<double> log_grid(double lo, double hi, int points_per_decade) {
  if (!(lo > 0.0) || !(hi > 0.0) || hi < lo) {
    throw ConfigError("export_curves: throughput range must satisfy 0 < min <= max");
  }
  if (points_per_decade < 1) {
    throw ConfigError("export_curves: points_per_decade must be >= 1");
  }
  if (lo == hi) {
    return {lo};
  }
  const double decades = std::log10(hi / lo);
  const auto count = static_cast<long>(std::llround(decades * points_per_decade));
  if (count < 1) {
    return {lo};
  }
  std::vector<double> xs;
  xs.reserve(static_cast<std::size_t>(count));
  for (long i = 0; i < count; ++i) {
    xs.push_back(lo * std::pow(10.0, static_cast<double>(i) / points_per_decade));
  }
  return xs;
}

}  // namespace

std::vector<CurvePoint> export_curves(const EnergyModel& energy, const AreaModel& area,
                                      const CurveOptions& options) {
  if (options.enobs.empty()) {
    throw ConfigError("export_curves: enob list must be non-empty");
  }
  for (const double e : options.enobs) {
    if (!(e > 0.0)) throw ConfigError("export_curves: enob values must be > 0");
  }
  const std::vector<double> xs =
      log_grid(options.throughput_min, options.throughput_max, options.points_per_decade);

  std::vector<CurvePoint> points;
  points.reserve(2 * options.enobs.size() * xs.size());
  for (const CurveQuantity quantity : {CurveQuantity::energy, CurveQuantity::area}) {
    for (const double enob : options.enobs) {
      for (const double x : xs) {
        const EnergyQueryPoint q{options.tech_nm, enob, x};
        const double energy_pj = predict_energy_pj(energy, q);
        CurvePoint p;
        p.quantity = quantity;
        p.enob = enob;
        p.throughput_sps = x;
        p.bound = active_energy_bound(energy, q);
        p.value = quantity == CurveQuantity::energy
                      ? energy_pj
                      : predict_area(area, options.tech_nm, x, energy_pj);
        points.push_back(p);
      }
    }
  }
  return points;
}

}  // namespace adcmodel
