#ifndef ADCMODEL_ESTIMATOR_HPP
#define ADCMODEL_ESTIMATOR_HPP

#include <cstdint>

#include "adcmodel/area_model.hpp"
#include "adcmodel/energy_model.hpp"

namespace adcmodel {

/// The four architecture-level inputs: how many ADCs run in parallel, the
/// aggregate conversion rate they sustain, and the per-ADC node/resolution.
struct AdcQuery {
  std::int64_t n_adcs = 1;
  double total_throughput_sps = 0.0;
  double tech_nm = 0.0;
  double enob = 0.0;
};

struct AdcEstimate {
  double per_adc_throughput_sps = 0.0;
  double energy_pj_per_convert = 0.0;
  double area_um2_per_adc = 0.0;
  double total_area_um2 = 0.0;
  EnergyBound energy_bound_active = EnergyBound::minimum;
};

void check_query(const AdcQuery& q);  // throws ConfigError

/// total_throughput_sps / n_adcs.
double per_adc_throughput(const AdcQuery& q);

/// Chains per-ADC throughput -> energy -> area: the energy estimate feeds
/// the area model's energy input.
AdcEstimate estimate(const AdcQuery& q, const EnergyModel& energy, const AreaModel& area);

}  // namespace adcmodel

#endif
