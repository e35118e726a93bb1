#include <doctest.h>

#include <cmath>

#include "adcmodel/errors.hpp"
#include "adcmodel/estimator.hpp"
#include "support/synthetic.hpp"

using namespace adcmodel;

namespace {

EnergyModel toy_energy() {
  EnergyModel m;
  m.min_bound = {0.0, 0.0, 0.3};
  m.tradeoff_bound = {-9.0, 0.0, 0.3, 1.0};
  return m;
}

}  // namespace

TEST_CASE("per-ADC throughput splits the total evenly") {
  CHECK(per_adc_throughput({4, 1e10, 32, 8}) == doctest::Approx(2.5e9).epsilon(1e-15));
  CHECK(per_adc_throughput({2, 1.3e9, 32, 8}) == doctest::Approx(6.5e8).epsilon(1e-15));
  CHECK(per_adc_throughput({1, 7.7e8, 32, 8}) == 7.7e8);

  CHECK_THROWS_AS(per_adc_throughput({0, 1e9, 32, 8}), ConfigError);
  CHECK_THROWS_AS(per_adc_throughput({-2, 1e9, 32, 8}), ConfigError);
  CHECK_THROWS_AS(per_adc_throughput({1, 0.0, 32, 8}), ConfigError);
  CHECK_THROWS_AS(per_adc_throughput({1, 1e9, 32, 0.0}), ConfigError);
}

TEST_CASE("estimate chains energy into the area model") {
  const EnergyModel energy = toy_energy();
  const AreaModel area = reference_area_model();

  // At tech 1, enob 8, one ADC at 1e9 conversions/s: the corner point.
  const AdcEstimate e = estimate({1, 1e9, 1.0, 8.0}, energy, area);
  CHECK(e.per_adc_throughput_sps == 1e9);
  CHECK(e.energy_pj_per_convert == doctest::Approx(std::pow(10.0, 2.4)).epsilon(1e-12));
  // 21.1 * 1^1 * (1e9)^0.2 * (10^2.4)^0.3 = 21.1 * 10^(1.8 + 0.72)
  CHECK(e.area_um2_per_adc ==
        doctest::Approx(21.1 * std::pow(10.0, 2.52)).epsilon(1e-12));
  CHECK(e.total_area_um2 == e.area_um2_per_adc);

  // Clearly below the corner the floor is active.
  const AdcEstimate cold = estimate({1, 5e8, 1.0, 8.0}, energy, area);
  CHECK(cold.energy_bound_active == EnergyBound::minimum);
  CHECK(cold.energy_pj_per_convert ==
        doctest::Approx(std::pow(10.0, 2.4)).epsilon(1e-12));

  // Past the corner the tradeoff bound drives the energy, and the larger
  // energy feeds the area prediction.
  const AdcEstimate hot = estimate({1, 1e10, 1.0, 8.0}, energy, area);
  CHECK(hot.energy_bound_active == EnergyBound::tradeoff);
  CHECK(hot.energy_pj_per_convert ==
        doctest::Approx(std::pow(10.0, 3.4)).epsilon(1e-12));
  CHECK(hot.area_um2_per_adc ==
        doctest::Approx(predict_area(area, 1.0, 1e10, hot.energy_pj_per_convert))
            .epsilon(1e-15));
}

TEST_CASE("doubling the ADC count below the corner trades area for slack") {
  const EnergyModel energy = toy_energy();
  const AreaModel area = reference_area_model();

  const AdcEstimate one = estimate({1, 2e8, 1.0, 8.0}, energy, area);
  const AdcEstimate two = estimate({2, 2e8, 1.0, 8.0}, energy, area);

  // Both operating points sit in the flat regime: energy is unchanged.
  CHECK(one.energy_bound_active == EnergyBound::minimum);
  CHECK(two.energy_bound_active == EnergyBound::minimum);
  CHECK(two.energy_pj_per_convert ==
        doctest::Approx(one.energy_pj_per_convert).epsilon(1e-12));

  // Per-ADC area falls by 2^-0.2 (the throughput exponent); the total grows
  // by 2 * 2^-0.2 = 2^0.8.
  CHECK(two.area_um2_per_adc / one.area_um2_per_adc ==
        doctest::Approx(std::pow(2.0, -0.2)).epsilon(1e-12));
  CHECK(two.total_area_um2 / one.total_area_um2 ==
        doctest::Approx(std::pow(2.0, 0.8)).epsilon(1e-12));
}

TEST_CASE("estimate is a pure function of its inputs") {
  const EnergyModel energy = toy_energy();
  const AreaModel area = reference_area_model();
  const AdcQuery query{8, 4.4e9, 28.0, 9.5};

  const AdcEstimate a = estimate(query, energy, area);
  const AdcEstimate b = estimate(query, energy, area);
  CHECK(a.per_adc_throughput_sps == b.per_adc_throughput_sps);
  CHECK(a.energy_pj_per_convert == b.energy_pj_per_convert);
  CHECK(a.area_um2_per_adc == b.area_um2_per_adc);
  CHECK(a.total_area_um2 == b.total_area_um2);
  CHECK(a.energy_bound_active == b.energy_bound_active);
}

TEST_CASE("per-ADC area never grows as ADCs are added") {
  testsupport::Rng rng(20240814);
  for (int trial = 0; trial < 30; ++trial) {
    const EnergyModel energy = testsupport::random_valid_energy_model(rng);
    const AreaModel area = testsupport::random_valid_area_model(rng);
    const double tech = rng.uniform(10.0, 130.0);
    const double enob = rng.uniform(3.0, 12.0);
    const double total = std::pow(10.0, rng.uniform(8.0, 11.0));

    double prev_per_adc = 0.0;
    double prev_energy = 0.0;
    for (const std::int64_t n : {1, 2, 4, 8, 16}) {
      const AdcEstimate e = estimate({n, total, tech, enob}, energy, area);
      CHECK(e.total_area_um2 ==
            doctest::Approx(static_cast<double>(n) * e.area_um2_per_adc)
                .epsilon(1e-15));
      if (n > 1) {
        CHECK(e.area_um2_per_adc <= prev_per_adc * (1.0 + 1e-12));
        CHECK(e.energy_pj_per_convert <= prev_energy * (1.0 + 1e-12));
      }
      prev_per_adc = e.area_um2_per_adc;
      prev_energy = e.energy_pj_per_convert;
    }
  }
}
