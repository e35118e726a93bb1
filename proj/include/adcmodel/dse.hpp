#ifndef ADCMODEL_DSE_HPP
#define ADCMODEL_DSE_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "adcmodel/estimator.hpp"

namespace adcmodel {

/// One accelerator configuration: the analog summing width feeding each ADC
/// conversion, the ADC parameters, and flat costs for everything that is
/// not an ADC.
struct ArchConfig {
  std::string name;
  std::int64_t sum_size = 1;  // max analog values summed per conversion
  double adc_enob = 0.0;
  std::int64_t n_adcs = 1;
  double tech_nm = 0.0;
  double total_adc_throughput_sps = 0.0;
  double non_adc_energy_pj_per_mac = 0.0;
  double non_adc_area_um2 = 0.0;
};

/// A DNN-layer-shaped workload: total multiply-accumulates and the length
/// of the dimension that analog summing can reduce over.
struct Workload {
  std::string name;
  std::int64_t total_macs = 0;
  std::int64_t reduction_dim = 0;
};

void check_config(const ArchConfig& a);  // throws ConfigError
void check_workload(const Workload& w);

/// The S/M/L/XL sum-size presets: (128, 6b), (512, 7b), (2048, 8b),
/// (8192, 9b). ADC count, node, throughput and non-ADC costs come from
/// `base`.
std::vector<ArchConfig> sum_size_presets(const ArchConfig& base);

struct ConvertCount {
  std::int64_t converts = 0;
  double utilization = 0.0;  // filled fraction of the analog sum, in (0, 1]
};

/// How many ADC conversions the workload needs on this configuration. The
/// reduction dimension caps how much of the sum width is usable; partial
/// sums still cost a full conversion (ceiling division).
ConvertCount adc_converts(const Workload& w, const ArchConfig& a);

struct DseResult {
  std::string workload;
  std::string config;
  std::int64_t n_adcs = 0;
  double total_adc_throughput_sps = 0.0;
  std::int64_t converts = 0;
  double utilization = 0.0;
  double adc_energy_pj = 0.0;
  double non_adc_energy_pj = 0.0;
  double total_energy_pj = 0.0;
  double total_area_um2 = 0.0;
  double eap_pj_um2 = 0.0;  // total energy x total area
};

/// Full-accelerator cost of running `w` on `a` with the given models.
DseResult evaluate(const Workload& w, const ArchConfig& a, const EnergyModel& energy,
                   const AreaModel& area);

struct NAdcsSummary {
  double total_adc_throughput_sps = 0.0;
  std::int64_t best_n_adcs = 0;  // argmin EAP; ties take the smaller count
  double eap_ratio = 1.0;        // max/min EAP across ADC counts
};

struct NAdcsSweep {
  std::vector<DseResult> grid;  // throughput-major, ADC-count-minor order
  std::vector<NAdcsSummary> summary;
};

/// Cartesian sweep of ADC count x total throughput around `base`.
NAdcsSweep sweep_n_adcs(const Workload& w, const ArchConfig& base,
                        std::span<const std::int64_t> n_values,
                        std::span<const double> throughput_values,
                        const EnergyModel& energy, const AreaModel& area);

/// Default sweep axes: 1..16 ADCs, 20 log-spaced total throughputs across
/// the 1.3-40 Gconversions/s band.
std::vector<std::int64_t> default_n_adcs_values();
std::vector<double> default_throughput_values();

/// Workload x config table, workload-major order.
std::vector<DseResult> sweep_configs(std::span<const Workload> workloads,
                                     std::span<const ArchConfig> configs,
                                     const EnergyModel& energy, const AreaModel& area);

/// JSON config loaders ({"configs": [...]} / {"workloads": [...]}).
std::vector<ArchConfig> load_arch_configs(const std::string& path);
std::vector<Workload> load_workloads(const std::string& path);

}  // namespace adcmodel

#endif
