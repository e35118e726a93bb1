#ifndef ADCMODEL_CURVES_HPP
#define ADCMODEL_CURVES_HPP

#include <vector>

#include "adcmodel/area_model.hpp"
#include "adcmodel/energy_model.hpp"

namespace adcmodel {

enum class CurveQuantity { energy, area };

/// One sample of a model trend line: energy or area versus throughput for
/// one ENOB series, annotated with the energy bound active at that point.
struct CurvePoint {
  CurveQuantity quantity = CurveQuantity::energy;
  double enob = 0.0;
  double throughput_sps = 0.0;
  double value = 0.0;  // pJ per conversion or um^2
  EnergyBound bound = EnergyBound::minimum;
};

struct CurveOptions {
  double tech_nm = 32.0;
  std::vector<double> enobs = {4.0, 8.0, 12.0};
  double throughput_min = 0.0;
  double throughput_max = 0.0;
  int points_per_decade = 50;
};

/// Samples both models on a log-spaced throughput grid: points start at
/// throughput_min with points_per_decade resolution and exclude the upper
/// endpoint (equal endpoints give a single sample). Rows are grouped by
/// quantity, then ENOB, with throughput strictly increasing in each series.
std::vector<CurvePoint> export_curves(const EnergyModel& energy, const AreaModel& area,
                                      const CurveOptions& options);

}  // namespace adcmodel

#endif
