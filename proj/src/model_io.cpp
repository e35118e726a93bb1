#include "adcmodel/model_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "adcmodel/errors.hpp"

namespace adcmodel {

using ordered_json = nlohmann::ordered_json;

ModelDocument default_document() {
  ModelDocument doc;
  // Default energy bounds shaped like the survey trends: energy roughly
  // doubling per ENOB bit on the floor, climbing one decade per decade of
  // throughput past the corner, linear in node. The corner for an 8-bit
  // ADC at 32nm sits at 1e9 conversions/s.
  doc.energy.min_bound = {-4.4, 1.0, 0.30};
  doc.energy.tradeoff_bound = {-14.6, 1.0, 0.45, 1.0};
  doc.energy.quantile_shift = 0.0;
  doc.area = reference_area_model();
  return doc;
}

namespace {

ordered_json ranges_to_json(const PredictorRanges& r) {
  return ordered_json{{"tech_nm", {r.tech_nm_min, r.tech_nm_max}},
                      {"enob", {r.enob_min, r.enob_max}},
                      {"throughput_sps", {r.throughput_min, r.throughput_max}}};
}

PredictorRanges ranges_from_json(const ordered_json& j) {
  PredictorRanges r;
  r.tech_nm_min = j.at("tech_nm").at(0).get<double>();
  r.tech_nm_max = j.at("tech_nm").at(1).get<double>();
  r.enob_min = j.at("enob").at(0).get<double>();
  r.enob_max = j.at("enob").at(1).get<double>();
  r.throughput_min = j.at("throughput_sps").at(0).get<double>();
  r.throughput_max = j.at("throughput_sps").at(1).get<double>();
  return r;
}

ordered_json energy_to_json(const EnergyModel& m) {
  const EnergyFitMeta& meta = m.fit_meta;
  return ordered_json{
      {"min_bound",
       {{"intercept", m.min_bound.intercept},
        {"tech_slope", m.min_bound.tech_slope},
        {"enob_slope", m.min_bound.enob_slope}}},
      {"tradeoff_bound",
       {{"intercept", m.tradeoff_bound.intercept},
        {"tech_slope", m.tradeoff_bound.tech_slope},
        {"enob_slope", m.tradeoff_bound.enob_slope},
        {"throughput_slope", m.tradeoff_bound.throughput_slope}}},
      {"quantile_shift", m.quantile_shift},
      {"fit_meta",
       {{"min_bound_records", meta.min_bound_records},
        {"tradeoff_records", meta.tradeoff_records},
        {"iterations", meta.iterations},
        {"converged", meta.converged},
        {"min_bound_rmse", meta.min_bound_rmse},
        {"tradeoff_rmse", meta.tradeoff_rmse},
        {"quantile", meta.quantile},
        {"ranges", ranges_to_json(meta.ranges)},
        {"warnings", meta.warnings}}}};
}

EnergyModel energy_from_json(const ordered_json& j) {
  EnergyModel m;
  const auto& minb = j.at("min_bound");
  m.min_bound.intercept = minb.at("intercept").get<double>();
  m.min_bound.tech_slope = minb.at("tech_slope").get<double>();
  m.min_bound.enob_slope = minb.at("enob_slope").get<double>();
  const auto& trade = j.at("tradeoff_bound");
  m.tradeoff_bound.intercept = trade.at("intercept").get<double>();
  m.tradeoff_bound.tech_slope = trade.at("tech_slope").get<double>();
  m.tradeoff_bound.enob_slope = trade.at("enob_slope").get<double>();
  m.tradeoff_bound.throughput_slope = trade.at("throughput_slope").get<double>();
  m.quantile_shift = j.at("quantile_shift").get<double>();
  const auto& meta = j.at("fit_meta");
  m.fit_meta.min_bound_records = meta.at("min_bound_records").get<std::size_t>();
  m.fit_meta.tradeoff_records = meta.at("tradeoff_records").get<std::size_t>();
  m.fit_meta.iterations = meta.at("iterations").get<int>();
  m.fit_meta.converged = meta.at("converged").get<bool>();
  m.fit_meta.min_bound_rmse = meta.at("min_bound_rmse").get<double>();
  m.fit_meta.tradeoff_rmse = meta.at("tradeoff_rmse").get<double>();
  m.fit_meta.quantile = meta.at("quantile").get<double>();
  m.fit_meta.ranges = ranges_from_json(meta.at("ranges"));
  m.fit_meta.warnings = meta.at("warnings").get<std::vector<std::string>>();
  return m;
}

ordered_json area_to_json(const AreaModel& m) {
  const AreaFitMeta& meta = m.fit_meta;
  return ordered_json{{"log_intercept", m.log_intercept},
                      {"tech_exponent", m.tech_exponent},
                      {"throughput_exponent", m.throughput_exponent},
                      {"energy_exponent", m.energy_exponent},
                      {"decile_factor", m.decile_factor},
                      {"fit_meta",
                       {{"has_comparison", meta.has_comparison},
                        {"r_energy", meta.r_energy},
                        {"r_enob", meta.r_enob},
                        {"records", meta.records},
                        {"warnings", meta.warnings}}}};
}

AreaModel area_from_json(const ordered_json& j) {
  AreaModel m;
  m.log_intercept = j.at("log_intercept").get<double>();
  m.tech_exponent = j.at("tech_exponent").get<double>();
  m.throughput_exponent = j.at("throughput_exponent").get<double>();
  m.energy_exponent = j.at("energy_exponent").get<double>();
  m.decile_factor = j.at("decile_factor").get<double>();
  const auto& meta = j.at("fit_meta");
  m.fit_meta.has_comparison = meta.at("has_comparison").get<bool>();
  m.fit_meta.r_energy = meta.at("r_energy").get<double>();
  m.fit_meta.r_enob = meta.at("r_enob").get<double>();
  m.fit_meta.records = meta.at("records").get<std::size_t>();
  m.fit_meta.warnings = meta.at("warnings").get<std::vector<std::string>>();
  return m;
}

ordered_json calibration_to_json(const CalibrationEvent& e) {
  ordered_json j{{"target", e.target},
                 {"tech_nm", e.tech_nm},
                 {"throughput_sps", e.throughput_sps}};
  if (e.target == "energy") {
    j["enob"] = e.enob;
  } else {
    j["energy_pj"] = e.energy_pj;
  }
  j["measured"] = e.measured;
  return j;
}

CalibrationEvent calibration_from_json(const ordered_json& j) {
  CalibrationEvent e;
  e.target = j.at("target").get<std::string>();
  e.tech_nm = j.at("tech_nm").get<double>();
  e.throughput_sps = j.at("throughput_sps").get<double>();
  if (j.contains("enob")) e.enob = j.at("enob").get<double>();
  if (j.contains("energy_pj")) e.energy_pj = j.at("energy_pj").get<double>();
  e.measured = j.at("measured").get<double>();
  return e;
}

}  // namespace

std::string serialize_model(const ModelDocument& doc) {
  ordered_json j;
  j["format_version"] = doc.format_version;
  j["provenance"] = ordered_json{{"dataset_path", doc.provenance.dataset_path},
                                 {"dataset_rows", doc.provenance.dataset_rows},
                                 {"clock", doc.provenance.clock}};
  j["energy_model"] = energy_to_json(doc.energy);
  j["area_model"] = area_to_json(doc.area);
  ordered_json cals = ordered_json::array();
  for (const CalibrationEvent& e : doc.calibrations) {
    cals.push_back(calibration_to_json(e));
  }
  j["calibrations"] = cals;
  return j.dump(2) + "\n";
}

ModelDocument parse_model(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string("model document is not valid JSON: ") + e.what());
  }
  try {
    const int version = j.at("format_version").get<int>();
    if (version != kModelFormatVersion) {
      throw ConfigError("unsupported model format_version " +
                        std::to_string(version) + " (expected " +
                        std::to_string(kModelFormatVersion) + ")");
    }
    ModelDocument doc;
    doc.format_version = version;
    const auto& prov = j.at("provenance");
    doc.provenance.dataset_path = prov.at("dataset_path").get<std::string>();
    doc.provenance.dataset_rows = prov.at("dataset_rows").get<std::size_t>();
    doc.provenance.clock = prov.at("clock").get<std::string>();
    doc.energy = energy_from_json(j.at("energy_model"));
    doc.area = area_from_json(j.at("area_model"));
    for (const auto& e : j.at("calibrations")) {
      doc.calibrations.push_back(calibration_from_json(e));
    }
    check_energy_model(doc.energy);
    check_area_model(doc.area);
    return doc;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed model document: ") + e.what());
  }
}

void save_model(const ModelDocument& doc, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw ConfigError("cannot write model file: " + path);
  }
  out << serialize_model(doc);
  if (!out) {
    throw ConfigError("write failed: " + path);
  }
}

ModelDocument load_model(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ConfigError("model file not found: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_model(buffer.str());
}

}  // namespace adcmodel
