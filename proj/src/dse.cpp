#include "adcmodel/dse.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include <json.hpp>

#include "adcmodel/errors.hpp"

namespace adcmodel {

void check_config(const ArchConfig& a) {
  const auto fail = [&](const std::string& what) {
    throw ConfigError("config '" + a.name + "': " + what);
  };
  if (a.sum_size < 1) fail("sum_size must be >= 1");
  if (!(a.adc_enob > 0.0)) fail("adc_enob must be > 0");
  if (a.n_adcs < 1) fail("n_adcs must be >= 1");
  if (!(a.tech_nm > 0.0)) fail("tech_nm must be > 0");
  if (!(a.total_adc_throughput_sps > 0.0)) fail("total_adc_throughput_sps must be > 0");
  if (a.non_adc_energy_pj_per_mac < 0.0) fail("non_adc_energy_pj_per_mac must be >= 0");
  if (a.non_adc_area_um2 < 0.0) fail("non_adc_area_um2 must be >= 0");
}

void check_workload(const Workload& w) {
  const auto fail = [&](const std::string& what) {
    throw ConfigError("workload '" + w.name + "': " + what);
  };
  if (w.total_macs < 1) fail("total_macs must be >= 1");
  if (w.reduction_dim < 1) fail("reduction_dim must be >= 1");
  if (w.reduction_dim > w.total_macs) fail("reduction_dim must be <= total_macs");
}

std::vector<ArchConfig> sum_size_presets(const ArchConfig& base) {
  struct Preset {
    const char* name;
    std::int64_t sum_size;
    double enob;
  };
  static constexpr Preset kPresets[] = {
      {"S", 128, 6.0}, {"M", 512, 7.0}, {"L", 2048, 8.0}, {"XL", 8192, 9.0}};
  std::vector<ArchConfig> out;
  out.reserve(4);
  for (const Preset& p : kPresets) {
    ArchConfig c = base;
    c.name = p.name;
    c.sum_size = p.sum_size;
    c.adc_enob = p.enob;
    out.push_back(std::move(c));
  }
  return out;
}

ConvertCount adc_converts(const Workload& w, const ArchConfig& a) {
  check_workload(w);
  check_config(a);
  const std::int64_t effective_sum = std::min(a.sum_size, w.reduction_dim);
  ConvertCount out;
  out.utilization =
      static_cast<double>(effective_sum) / static_cast<double>(a.sum_size);
  out.converts = (w.total_macs + effective_sum - 1) / effective_sum;
  return out;
}

DseResult evaluate(const Workload& w, const ArchConfig& a, const EnergyModel& energy,
                   const AreaModel& area) {
  const ConvertCount cc = adc_converts(w, a);

  AdcQuery query;
  query.n_adcs = a.n_adcs;
  query.total_throughput_sps = a.total_adc_throughput_sps;
  query.tech_nm = a.tech_nm;
  query.enob = a.adc_enob;
  const AdcEstimate adc = estimate(query, energy, area);

  DseResult r;
  r.workload = w.name;
  r.config = a.name;
  r.n_adcs = a.n_adcs;
  r.total_adc_throughput_sps = a.total_adc_throughput_sps;
  r.converts = cc.converts;
  r.utilization = cc.utilization;
  r.adc_energy_pj = static_cast<double>(cc.converts) * adc.energy_pj_per_convert;
  r.non_adc_energy_pj =
      static_cast<double>(w.total_macs) * a.non_adc_energy_pj_per_mac;
  r.total_energy_pj = r.adc_energy_pj + r.non_adc_energy_pj;
  r.total_area_um2 = adc.total_area_um2 + a.non_adc_area_um2;
  r.eap_pj_um2 = r.total_energy_pj * r.total_area_um2;
  return r;
}

NAdcsSweep sweep_n_adcs(const Workload& w, const ArchConfig& base,
                        std::span<const std::int64_t> n_values,
                        std::span<const double> throughput_values,
                        const EnergyModel& energy, const AreaModel& area) {
  if (n_values.empty() || throughput_values.empty()) {
    throw ConfigError("sweep_n_adcs: sweep axes must be non-empty");
  }
  for (const double t : throughput_values) {
    if (!(t > 0.0)) throw ConfigError("sweep_n_adcs: throughputs must be > 0");
  }
  for (const std::int64_t n : n_values) {
    if (n < 1) throw ConfigError("sweep_n_adcs: ADC counts must be >= 1");
  }

  NAdcsSweep sweep;
  sweep.grid.reserve(n_values.size() * throughput_values.size());
  for (const double throughput : throughput_values) {
    NAdcsSummary summary;
    summary.total_adc_throughput_sps = throughput;
    double best_eap = 0.0, worst_eap = 0.0;
    for (const std::int64_t n : n_values) {
      ArchConfig point = base;
      point.n_adcs = n;
      point.total_adc_throughput_sps = throughput;
      const DseResult r = evaluate(w, point, energy, area);
      if (summary.best_n_adcs == 0 || r.eap_pj_um2 < best_eap) {
        best_eap = r.eap_pj_um2;
        summary.best_n_adcs = n;
      }
      worst_eap = std::max(worst_eap, r.eap_pj_um2);
      sweep.grid.push_back(r);
    }
    summary.eap_ratio = worst_eap / best_eap;
    sweep.summary.push_back(summary);
  }
  return sweep;
}

std::vector<std::int64_t> default_n_adcs_values() { return {1, 2, 4, 8, 16}; }

std::vector<double> default_throughput_values() {
  constexpr double kLow = 1.3e9;
  constexpr double kHigh = 40e9;
  constexpr int kPoints = 20;
  std::vector<double> out;
  out.reserve(kPoints);
  const double step = std::log10(kHigh / kLow) / (kPoints - 1);
  for (int i = 0; i < kPoints; ++i) {
    out.push_back(kLow * std::pow(10.0, step * i));
  }
  return out;
}

std::vector<DseResult> sweep_configs(std::span<const Workload> workloads,
                                     std::span<const ArchConfig> configs,
                                     const EnergyModel& energy, const AreaModel& area) {
  if (workloads.empty() || configs.empty()) {
    throw ConfigError("sweep_configs: workload and config lists must be non-empty");
  }
  std::vector<DseResult> table;
  table.reserve(workloads.size() * configs.size());
  for (const Workload& w : workloads) {
    for (const ArchConfig& a : configs) {
      table.push_back(evaluate(w, a, energy, area));
    }
  }
  return table;
}

namespace {

nlohmann::json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("config file not found: " + path);
  }
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

double require_number(const nlohmann::json& obj, const char* key,
                      const std::string& context) {
  if (!obj.contains(key) || !obj[key].is_number()) {
    throw ConfigError(context + ": missing or non-numeric field '" + key + "'");
  }
  return obj[key].get<double>();
}

std::int64_t require_integer(const nlohmann::json& obj, const char* key,
                             const std::string& context) {
  if (!obj.contains(key) || !obj[key].is_number_integer()) {
    throw ConfigError(context + ": missing or non-integer field '" + key + "'");
  }
  return obj[key].get<std::int64_t>();
}

std::string require_name(const nlohmann::json& obj, const std::string& context) {
  if (!obj.contains("name") || !obj["name"].is_string()) {
    throw ConfigError(context + ": missing 'name'");
  }
  return obj["name"].get<std::string>();
}

}  // namespace

std::vector<ArchConfig> load_arch_configs(const std::string& path) {
  const nlohmann::json doc = load_json(path);
  if (!doc.contains("configs") || !doc["configs"].is_array()) {
    throw ConfigError(path + ": expected top-level 'configs' array");
  }
  std::vector<ArchConfig> out;
  for (const auto& entry : doc["configs"]) {
    const std::string context = path + " config";
    ArchConfig c;
    c.name = require_name(entry, context);
    const std::string ctx = path + " config '" + c.name + "'";
    c.sum_size = require_integer(entry, "sum_size", ctx);
    c.adc_enob = require_number(entry, "adc_enob", ctx);
    c.n_adcs = require_integer(entry, "n_adcs", ctx);
    c.tech_nm = require_number(entry, "tech_nm", ctx);
    c.total_adc_throughput_sps = require_number(entry, "total_adc_throughput_sps", ctx);
    if (entry.contains("non_adc_energy_pj_per_mac")) {
      c.non_adc_energy_pj_per_mac =
          require_number(entry, "non_adc_energy_pj_per_mac", ctx);
    }
    if (entry.contains("non_adc_area_um2")) {
      c.non_adc_area_um2 = require_number(entry, "non_adc_area_um2", ctx);
    }
    check_config(c);
    out.push_back(std::move(c));
  }
  if (out.empty()) {
    throw ConfigError(path + ": 'configs' array is empty");
  }
  return out;
}

std::vector<Workload> load_workloads(const std::string& path) {
  const nlohmann::json doc = load_json(path);
  if (!doc.contains("workloads") || !doc["workloads"].is_array()) {
    throw ConfigError(path + ": expected top-level 'workloads' array");
  }
  std::vector<Workload> out;
  for (const auto& entry : doc["workloads"]) {
    Workload w;
    w.name = require_name(entry, path + " workload");
    const std::string ctx = path + " workload '" + w.name + "'";
    w.total_macs = require_integer(entry, "total_macs", ctx);
    w.reduction_dim = require_integer(entry, "reduction_dim", ctx);
    check_workload(w);
    out.push_back(std::move(w));
  }
  if (out.empty()) {
    throw ConfigError(path + ": 'workloads' array is empty");
  }
  return out;
}

}  // namespace adcmodel
