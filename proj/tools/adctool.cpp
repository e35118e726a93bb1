// adctool: fit / estimate / export-curves / dse / calibrate front end for the
// ADC cost models. All data output is deterministic: numbers are printed with
// six significant digits (model files keep full precision) and nothing here
// reads a clock unless the user passes --clock.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "adcmodel/curves.hpp"
#include "adcmodel/dataset.hpp"
#include "adcmodel/dse.hpp"
#include "adcmodel/errors.hpp"
#include "adcmodel/estimator.hpp"
#include "adcmodel/model_io.hpp"

namespace {

using namespace adcmodel;
using ordered_json = nlohmann::ordered_json;

std::string fmt6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

// Machine output uses the same six-significant-digit contract as text.
double round6(double v) { return std::strtod(fmt6(v).c_str(), nullptr); }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) {
    return s;
  }
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

const char* bound_name(EnergyBound b) {
  return b == EnergyBound::minimum ? "minimum" : "tradeoff";
}

const char* quantity_name(CurveQuantity q) {
  return q == CurveQuantity::energy ? "energy" : "area";
}

ModelDocument load_or_default(const std::string& model_path) {
  return model_path.empty() ? default_document() : load_model(model_path);
}

// ---------------------------------------------------------------- fit ----

struct FitArgs {
  std::string dataset;
  std::string schema;
  std::string output = "adc_model.json";
  std::string clock;
  double quantile = 0.10;
  double pareto_slack = 0.0;  // 0 = no filtering
};

int run_fit(const FitArgs& args) {
  ColumnSchema schema;
  if (!args.schema.empty()) {
    schema = load_schema(args.schema);
  }
  const LoadResult loaded = load_corpus(args.dataset, schema);
  for (const RowDiagnostic& d : loaded.diagnostics) {
    std::cerr << format_diagnostic(d) << "\n";
  }

  Corpus corpus = loaded.corpus;
  if (args.pareto_slack > 0.0) {
    corpus = pareto_filter(corpus, args.pareto_slack);
  }

  EnergyFitOptions energy_options;
  energy_options.quantile = args.quantile;
  AreaFitOptions area_options;
  area_options.quantile = args.quantile;

  ModelDocument doc;
  doc.energy = fit_energy_model(corpus, energy_options);
  doc.area = fit_area_model(corpus, area_options);
  doc.provenance.dataset_path = args.dataset;
  doc.provenance.dataset_rows = corpus.records.size();
  doc.provenance.clock = args.clock;
  save_model(doc, args.output);

  const EnergyFitMeta& em = doc.energy.fit_meta;
  const AreaFitMeta& am = doc.area.fit_meta;
  std::cout << "rows             " << loaded.corpus.provenance.rows_total << " read, "
            << loaded.corpus.records.size() << " valid, " << loaded.diagnostics.size()
            << " rejected\n";
  std::cout << "records fit      " << corpus.records.size() << "\n";
  std::cout << "energy bounds    " << em.min_bound_records << " min / "
            << em.tradeoff_records << " tradeoff\n";
  std::cout << "iterations       " << em.iterations
            << (em.converged ? " (converged)" : " (did not converge)") << "\n";
  std::cout << "rmse log10       " << fmt6(em.min_bound_rmse) << " min / "
            << fmt6(em.tradeoff_rmse) << " tradeoff\n";
  std::cout << "quantile shift   " << fmt6(doc.energy.quantile_shift) << " (quantile "
            << fmt6(em.quantile) << ")\n";
  std::cout << "area records     " << am.records << "\n";
  std::cout << "decile factor    " << fmt6(doc.area.decile_factor) << "\n";
  std::cout << "r energy         " << fmt6(am.r_energy) << "\n";
  std::cout << "r enob           " << fmt6(am.r_enob) << "\n";
  std::cout << "model            " << args.output << "\n";
  for (const std::string& w : em.warnings) {
    std::cerr << "warning: energy fit: " << w << "\n";
  }
  for (const std::string& w : am.warnings) {
    std::cerr << "warning: area fit: " << w << "\n";
  }
  return doc.energy.fit_meta.converged ? 0 : 3;
}

// ----------------------------------------------------------- estimate ----

struct EstimateArgs {
  std::string model;
  std::string format = "text";
  std::int64_t n_adcs = 1;
  double total_throughput = 0.0;
  double tech_nm = 0.0;
  double enob = 0.0;
};

int run_estimate(const EstimateArgs& args) {
  const ModelDocument doc = load_or_default(args.model);
  const AdcQuery query{args.n_adcs, args.total_throughput, args.tech_nm, args.enob};
  const AdcEstimate e = estimate(query, doc.energy, doc.area);

  const EnergyQueryPoint point{args.tech_nm, args.enob, e.per_adc_throughput_sps};
  if (!within_fit_range(doc.energy, point)) {
    std::cerr << "note: query lies outside the fitted predictor ranges; "
                 "extrapolating the power laws\n";
  }

  if (args.format == "text") {
    std::cout << "per_adc_throughput_sps  " << fmt6(e.per_adc_throughput_sps) << "\n";
    std::cout << "energy_pj_per_convert   " << fmt6(e.energy_pj_per_convert) << "\n";
    std::cout << "area_um2_per_adc        " << fmt6(e.area_um2_per_adc) << "\n";
    std::cout << "total_area_um2          " << fmt6(e.total_area_um2) << "\n";
    std::cout << "energy_bound            " << bound_name(e.energy_bound_active) << "\n";
  } else if (args.format == "csv") {
    std::cout << "n_adcs,total_throughput_sps,tech_nm,enob,per_adc_throughput_sps,"
                 "energy_pj_per_convert,area_um2_per_adc,total_area_um2,energy_bound\n";
    std::cout << args.n_adcs << ',' << fmt6(args.total_throughput) << ','
              << fmt6(args.tech_nm) << ',' << fmt6(args.enob) << ','
              << fmt6(e.per_adc_throughput_sps) << ',' << fmt6(e.energy_pj_per_convert)
              << ',' << fmt6(e.area_um2_per_adc) << ',' << fmt6(e.total_area_um2) << ','
              << bound_name(e.energy_bound_active) << "\n";
  } else {
    ordered_json j;
    j["n_adcs"] = args.n_adcs;
    j["total_throughput_sps"] = round6(args.total_throughput);
    j["tech_nm"] = round6(args.tech_nm);
    j["enob"] = round6(args.enob);
    j["per_adc_throughput_sps"] = round6(e.per_adc_throughput_sps);
    j["energy_pj_per_convert"] = round6(e.energy_pj_per_convert);
    j["area_um2_per_adc"] = round6(e.area_um2_per_adc);
    j["total_area_um2"] = round6(e.total_area_um2);
    j["energy_bound"] = bound_name(e.energy_bound_active);
    std::cout << j.dump(2) << "\n";
  }
  return 0;
}

// ------------------------------------------------------- export-curves ----

struct CurvesArgs {
  std::string model;
  std::string format = "csv";
  double tech_nm = 32.0;
  std::vector<double> enobs = {4.0, 8.0, 12.0};
  double throughput_min = 0.0;
  double throughput_max = 0.0;
  int points_per_decade = 50;
};

int run_export_curves(const CurvesArgs& args) {
  const ModelDocument doc = load_or_default(args.model);
  CurveOptions options;
  options.tech_nm = args.tech_nm;
  options.enobs = args.enobs;
  options.throughput_min = args.throughput_min;
  options.throughput_max = args.throughput_max;
  options.points_per_decade = args.points_per_decade;
  const std::vector<CurvePoint> points = export_curves(doc.energy, doc.area, options);

  if (args.format == "json") {
    ordered_json rows = ordered_json::array();
    for (const CurvePoint& p : points) {
      rows.push_back(ordered_json{{"quantity", quantity_name(p.quantity)},
                                  {"enob", round6(p.enob)},
                                  {"throughput_sps", round6(p.throughput_sps)},
                                  {"value", round6(p.value)},
                                  {"bound", bound_name(p.bound)}});
    }
    std::cout << rows.dump(2) << "\n";
  } else {
    std::cout << "quantity,enob,throughput_sps,value,bound\n";
    for (const CurvePoint& p : points) {
      std::cout << quantity_name(p.quantity) << ',' << fmt6(p.enob) << ','
                << fmt6(p.throughput_sps) << ',' << fmt6(p.value) << ','
                << bound_name(p.bound) << "\n";
    }
  }
  return 0;
}

// ----------------------------------------------------------------- dse ----

struct DseArgs {
  std::string model;
  std::string workloads;
  std::string configs;
  std::string mode = "configs";
  std::string format = "csv";
};

void print_result_csv_header() {
  std::cout << "workload,config,n_adcs,total_adc_throughput_sps,converts,utilization,"
               "adc_energy_pj,non_adc_energy_pj,total_energy_pj,total_area_um2,"
               "eap_pj_um2\n";
}

void print_result_csv(const DseResult& r) {
  std::cout << csv_field(r.workload) << ',' << csv_field(r.config) << ',' << r.n_adcs
            << ',' << fmt6(r.total_adc_throughput_sps) << ',' << r.converts << ','
            << fmt6(r.utilization) << ',' << fmt6(r.adc_energy_pj) << ','
            << fmt6(r.non_adc_energy_pj) << ',' << fmt6(r.total_energy_pj) << ','
            << fmt6(r.total_area_um2) << ',' << fmt6(r.eap_pj_um2) << "\n";
}

ordered_json result_to_json(const DseResult& r) {
  return ordered_json{{"workload", r.workload},
                      {"config", r.config},
                      {"n_adcs", r.n_adcs},
                      {"total_adc_throughput_sps", round6(r.total_adc_throughput_sps)},
                      {"converts", r.converts},
                      {"utilization", round6(r.utilization)},
                      {"adc_energy_pj", round6(r.adc_energy_pj)},
                      {"non_adc_energy_pj", round6(r.non_adc_energy_pj)},
                      {"total_energy_pj", round6(r.total_energy_pj)},
                      {"total_area_um2", round6(r.total_area_um2)},
                      {"eap_pj_um2", round6(r.eap_pj_um2)}};
}

int run_dse(const DseArgs& args) {
  const ModelDocument doc = load_or_default(args.model);
  const std::vector<Workload> workloads = load_workloads(args.workloads);
  const std::vector<ArchConfig> configs = load_arch_configs(args.configs);

  if (args.mode == "configs") {
    const std::vector<DseResult> table =
        sweep_configs(workloads, configs, doc.energy, doc.area);
    if (args.format == "json") {
      ordered_json rows = ordered_json::array();
      for (const DseResult& r : table) rows.push_back(result_to_json(r));
      std::cout << ordered_json{{"results", rows}}.dump(2) << "\n";
    } else {
      print_result_csv_header();
      for (const DseResult& r : table) print_result_csv(r);
    }
    return 0;
  }

  // n-adcs mode: sweep the default ADC-count x throughput grid around the
  // first config, on the first workload.
  const std::vector<std::int64_t> ns = default_n_adcs_values();
  const std::vector<double> fs = default_throughput_values();
  const NAdcsSweep sweep =
      sweep_n_adcs(workloads.front(), configs.front(), ns, fs, doc.energy, doc.area);

  if (args.format == "json") {
    ordered_json grid = ordered_json::array();
    for (const DseResult& r : sweep.grid) grid.push_back(result_to_json(r));
    ordered_json summary = ordered_json::array();
    for (const NAdcsSummary& s : sweep.summary) {
      summary.push_back(
          ordered_json{{"total_adc_throughput_sps", round6(s.total_adc_throughput_sps)},
                       {"best_n_adcs", s.best_n_adcs},
                       {"eap_ratio", round6(s.eap_ratio)}});
    }
    std::cout << ordered_json{{"grid", grid}, {"summary", summary}}.dump(2) << "\n";
  } else {
    print_result_csv_header();
    for (const DseResult& r : sweep.grid) print_result_csv(r);
    std::cout << "\ntotal_adc_throughput_sps,best_n_adcs,eap_ratio\n";
    for (const NAdcsSummary& s : sweep.summary) {
      std::cout << fmt6(s.total_adc_throughput_sps) << ',' << s.best_n_adcs << ','
                << fmt6(s.eap_ratio) << "\n";
    }
  }
  return 0;
}

// ------------------------------------------------------------ calibrate ----

struct CalibrateArgs {
  std::string model;
  std::string output;
  std::string target;
  double tech_nm = 0.0;
  double throughput = 0.0;  // per-ADC conversions/s at the reference point
  double enob = 0.0;
  double energy_pj = 0.0;
  double measured = 0.0;
};

int run_calibrate(const CalibrateArgs& args) {
  ModelDocument doc = load_model(args.model);
  bool changed = false;

  CalibrationEvent event;
  event.target = args.target;
  event.tech_nm = args.tech_nm;
  event.throughput_sps = args.throughput;
  event.measured = args.measured;

  if (args.target == "energy") {
    if (!(args.enob > 0.0)) {
      throw ConfigError("calibrate: --enob is required for --target energy");
    }
    event.enob = args.enob;
    const EnergyQueryPoint ref{args.tech_nm, args.enob, args.throughput};
    const EnergyModel updated = calibrate_energy(doc.energy, ref, args.measured);
    std::cout << "quantile_shift  " << fmt6(doc.energy.quantile_shift) << " -> "
              << fmt6(updated.quantile_shift) << "\n";
    changed = updated.quantile_shift != doc.energy.quantile_shift;
    doc.energy = updated;
  } else {
    if (!(args.energy_pj > 0.0)) {
      throw ConfigError("calibrate: --energy-pj is required for --target area");
    }
    event.energy_pj = args.energy_pj;
    const AreaModel updated = calibrate_area(doc.area, args.tech_nm, args.throughput,
                                             args.energy_pj, args.measured);
    std::cout << "decile_factor   " << fmt6(doc.area.decile_factor) << " -> "
              << fmt6(updated.decile_factor) << "\n";
    changed = updated.decile_factor != doc.area.decile_factor;
    doc.area = updated;
  }

  // A calibration that lands exactly on the current prediction is a no-op:
  // the document (including its event list) is left untouched.
  if (changed) {
    doc.calibrations.push_back(event);
  }
  save_model(doc, args.output.empty() ? args.model : args.output);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ADC energy/area cost models: fitting, estimation, and DSE"};
  app.require_subcommand(1);
  int exit_code = 0;

  FitArgs fit_args;
  CLI::App* fit = app.add_subcommand("fit", "Fit both models from a dataset");
  fit->add_option("--dataset", fit_args.dataset, "Delimited-text ADC survey file")
      ->required();
  fit->add_option("--schema", fit_args.schema, "Column-name mapping (key = value)");
  fit->add_option("--output", fit_args.output, "Model file to write");
  fit->add_option("--quantile", fit_args.quantile, "Best-case quantile")
      ->check(CLI::Range(0.0, 0.5));
  fit->add_option("--pareto-slack", fit_args.pareto_slack,
                  "Pre-filter to the Pareto front with this slack factor (>= 1)");
  fit->add_option("--clock", fit_args.clock, "Provenance timestamp string");
  fit->callback([&] { exit_code = run_fit(fit_args); });

  EstimateArgs est_args;
  CLI::App* est = app.add_subcommand("estimate", "Estimate one ADC configuration");
  est->add_option("--model", est_args.model, "Model file (default: built-in reference)");
  est->add_option("--n-adcs", est_args.n_adcs, "Parallel ADC count")->required();
  est->add_option("--total-throughput", est_args.total_throughput,
                  "Aggregate conversions/s")
      ->required();
  est->add_option("--tech-nm", est_args.tech_nm, "Technology node, nm")->required();
  est->add_option("--enob", est_args.enob, "Effective number of bits")->required();
  est->add_option("--format", est_args.format, "text, csv, or json")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  est->callback([&] { exit_code = run_estimate(est_args); });

  CurvesArgs curve_args;
  CLI::App* curves =
      app.add_subcommand("export-curves", "Sample model trend lines vs throughput");
  curves->add_option("--model", curve_args.model,
                     "Model file (default: built-in reference)");
  curves->add_option("--tech-nm", curve_args.tech_nm, "Technology node, nm");
  curves->add_option("--enobs", curve_args.enobs, "ENOB series list")
      ->delimiter(',');
  curves->add_option("--throughput-min", curve_args.throughput_min,
                     "Grid start, conversions/s")
      ->required();
  curves->add_option("--throughput-max", curve_args.throughput_max,
                     "Grid end (excluded), conversions/s")
      ->required();
  curves->add_option("--points-per-decade", curve_args.points_per_decade,
                     "Samples per decade");
  curves->add_option("--format", curve_args.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  curves->callback([&] { exit_code = run_export_curves(curve_args); });

  DseArgs dse_args;
  CLI::App* dse = app.add_subcommand("dse", "Workload x config tables and sweeps");
  dse->add_option("--model", dse_args.model, "Model file (default: built-in reference)");
  dse->add_option("--workloads", dse_args.workloads, "Workload list (JSON)")->required();
  dse->add_option("--configs", dse_args.configs, "Config list (JSON)")->required();
  dse->add_option("--mode", dse_args.mode,
                  "configs: full table; n-adcs: default ADC-count/throughput grid")
      ->check(CLI::IsMember({"configs", "n-adcs"}));
  dse->add_option("--format", dse_args.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  dse->callback([&] { exit_code = run_dse(dse_args); });

  CalibrateArgs cal_args;
  CLI::App* cal =
      app.add_subcommand("calibrate", "Shift a model to one measured data point");
  cal->add_option("--model", cal_args.model, "Model file to calibrate")->required();
  cal->add_option("--output", cal_args.output, "Write here instead of in place");
  cal->add_option("--target", cal_args.target, "energy or area")
      ->required()
      ->check(CLI::IsMember({"energy", "area"}));
  cal->add_option("--tech-nm", cal_args.tech_nm, "Reference node, nm")->required();
  cal->add_option("--throughput", cal_args.throughput,
                  "Reference per-ADC conversions/s")
      ->required();
  cal->add_option("--enob", cal_args.enob, "Reference ENOB (energy target)");
  cal->add_option("--energy-pj", cal_args.energy_pj,
                  "Reference energy per convert (area target)");
  cal->add_option("--measured", cal_args.measured, "Measured value to match")
      ->required();
  cal->callback([&] { exit_code = run_calibrate(cal_args); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const adcmodel::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
