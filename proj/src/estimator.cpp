#include "adcmodel/estimator.hpp"

#include <cmath>

#include "adcmodel/errors.hpp"

namespace adcmodel {

void check_query(const AdcQuery& q) {
  if (q.n_adcs < 1) {
    throw ConfigError("query: n_adcs must be >= 1");
  }
  if (!(q.total_throughput_sps > 0.0) || !std::isfinite(q.total_throughput_sps)) {
    throw ConfigError("query: total throughput must be > 0");
  }
  if (!(q.tech_nm > 0.0) || !std::isfinite(q.tech_nm)) {
    throw ConfigError("query: tech_nm must be > 0");
  }
  if (!(q.enob > 0.0) || !std::isfinite(q.enob)) {
    throw ConfigError("query: enob must be > 0");
  }
}

double per_adc_throughput(const AdcQuery& q) {
  check_query(q);
  return q.total_throughput_sps / static_cast<double>(q.n_adcs);
}

AdcEstimate estimate(const AdcQuery& q, const EnergyModel& energy, const AreaModel& area) {
  AdcEstimate out;
  out.per_adc_throughput_sps = per_adc_throughput(q);

  const EnergyQueryPoint point{q.tech_nm, q.enob, out.per_adc_throughput_sps};
  out.energy_pj_per_convert = predict_energy_pj(energy, point);
  out.energy_bound_active = active_energy_bound(energy, point);

  out.area_um2_per_adc = predict_area(area, q.tech_nm, out.per_adc_throughput_sps,
                                      out.energy_pj_per_convert);
  out.total_area_um2 = static_cast<double>(q.n_adcs) * out.area_um2_per_adc;
  return out;
}

}  // namespace adcmodel
