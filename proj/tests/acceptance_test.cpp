// End-to-end acceptance checks. Each numbered check prints exactly one
// PASS/FAIL line; the process exits nonzero if any fail. Runs against the
// bundled dataset, model, and config files plus fixed-seed synthetic data.

#include <sys/wait.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "adcmodel/curves.hpp"
#include "adcmodel/dse.hpp"
#include "adcmodel/errors.hpp"
#include "adcmodel/estimator.hpp"
#include "adcmodel/model_io.hpp"
#include "support/synthetic.hpp"
#include "support/tempfile.hpp"

using namespace adcmodel;

namespace {

bool g_all_passed = true;

void report(int number, const std::string& name, bool passed, const std::string& detail) {
  g_all_passed = g_all_passed && passed;
  std::printf("%d. %-24s %s  %s\n", number, name.c_str(), passed ? "PASS" : "FAIL",
              detail.c_str());
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

double rel_err(double got, double want) {
  return std::abs(got - want) / std::abs(want);
}

const std::string kData = DATA_DIR;
const std::string kModelPath = kData + "/default_model.json";

// --- 1: reference area coefficients reproduce the published power law ----

void check_reference_area() {
  const AreaModel ref = reference_area_model();
  const double got = predict_area(ref, 32.0, 1e9, 1.0);
  const double want = 21.1 * 32.0 * std::pow(10.0, 1.8);  // ~4.26e4 um^2
  const double err = rel_err(got, want);
  report(1, "reference-area-oracle", err < 1e-9,
         "predicted " + fmt(got) + " um^2, rel err " + fmt(err));
}

// --- 2: noiseless fits recover the generating coefficients ---------------

void check_fit_recovery() {
  const EnergyModel energy_truth = testsupport::make_true_energy_model();
  AreaModel area_truth = reference_area_model();
  const Corpus corpus = testsupport::make_corpus(energy_truth, area_truth, 500, 99001);

  double worst = 0.0;
  std::string detail;
  bool ok = true;
  try {
    const EnergyModel e = fit_energy_model(corpus);
    const AreaModel a = fit_area_model(corpus);
    const std::pair<double, double> coeffs[] = {
        {e.min_bound.intercept, -4.4},
        {e.min_bound.tech_slope, 1.0},
        {e.min_bound.enob_slope, 0.30},
        {e.tradeoff_bound.intercept, -14.6},
        {e.tradeoff_bound.tech_slope, 1.0},
        {e.tradeoff_bound.enob_slope, 0.45},
        {e.tradeoff_bound.throughput_slope, 1.0},
        {a.log_intercept, std::log10(21.1)},
        {a.tech_exponent, 1.0},
        {a.throughput_exponent, 0.2},
        {a.energy_exponent, 0.3},
    };
    for (const auto& [got, want] : coeffs) {
      worst = std::max(worst, rel_err(got, want));
    }
    ok = worst < 1e-6 && std::abs(e.quantile_shift) < 1e-9 &&
         std::abs(a.decile_factor - 1.0) < 1e-9 && a.fit_meta.r_energy > 1.0 - 1e-9;
    detail = "500 records, max coefficient rel err " + fmt(worst) + ", r " +
             fmt(a.fit_meta.r_energy);
  } catch (const Error& err) {
    ok = false;
    detail = err.what();
  }
  report(2, "noiseless-fit-recovery", ok, detail);
}

// --- 3: energy explains area better than enob when they decouple ---------

void check_correlation_ordering() {
  const EnergyModel energy_truth = testsupport::make_true_energy_model();
  AreaModel area_truth = reference_area_model();
  testsupport::CorpusNoise noise;
  noise.energy_sigma = 0.25;  // area tracks the noisy energy exactly
  const Corpus corpus =
      testsupport::make_corpus(energy_truth, area_truth, 500, 99002, noise);

  bool ok = true;
  std::string detail;
  try {
    const AreaModel a = fit_area_model(corpus);
    const CorrelationReport r = correlation_report(a);
    ok = r.r_energy > r.r_enob;
    detail = "r_energy " + fmt(r.r_energy) + " vs r_enob " + fmt(r.r_enob);
  } catch (const Error& err) {
    ok = false;
    detail = err.what();
  }
  report(3, "correlation-ordering", ok, detail);
}

// --- 4: two-bound shape and the single knee in the area curve ------------

bool check_curve_knee(const EnergyModel& energy, const AreaModel& area,
                      std::string* why) {
  const double tech = 32.0, enob = 8.0;
  const double corner = corner_throughput(energy, tech, enob);
  const double c_lo = area.throughput_exponent;
  const double c_hi = area.throughput_exponent +
                      area.energy_exponent * energy.tradeoff_bound.throughput_slope;

  CurveOptions opt;
  opt.tech_nm = tech;
  opt.enobs = {enob};
  opt.throughput_min = corner / 10.0;
  opt.throughput_max = corner * 10.0;
  opt.points_per_decade = 200;
  const std::vector<CurvePoint> pts = export_curves(energy, area, opt);

  // Area rows are the second half; classify each finite-difference slope.
  const std::size_t n = pts.size() / 2;
  int state = 0;  // 0 = low plateau, 1 = transition cell, 2 = high plateau
  int transitions = 0, low_cells = 0, high_cells = 0;
  for (std::size_t i = n + 1; i < 2 * n; ++i) {
    const double slope =
        testsupport::loglog_slope(pts[i - 1].throughput_sps, pts[i - 1].value,
                                  pts[i].throughput_sps, pts[i].value);
    const bool is_lo = std::abs(slope - c_lo) < 1e-6;
    const bool is_hi = std::abs(slope - c_hi) < 1e-6;
    if (is_lo && state != 0) {
      *why = "slope returned to the low plateau after the knee";
      return false;
    }
    if (is_lo) low_cells++;
    if (is_hi) {
      if (state != 2) transitions++;
      state = 2;
      high_cells++;
    } else if (!is_lo) {
      if (state == 2) {
        *why = "off-plateau slope after the knee";
        return false;
      }
      if (state == 1) {
        *why = "more than one transition cell";
        return false;
      }
      state = 1;
    }
  }
  if (transitions != 1 || low_cells == 0 || high_cells == 0) {
    *why = "expected exactly one slope change, saw " + std::to_string(transitions);
    return false;
  }
  return true;
}

void check_two_bound_shape() {
  std::vector<std::pair<EnergyModel, AreaModel>> models;
  const ModelDocument bundled = load_model(kModelPath);
  models.emplace_back(bundled.energy, bundled.area);
  testsupport::Rng rng(99003);
  for (int i = 0; i < 9; ++i) {
    models.emplace_back(testsupport::random_valid_energy_model(rng),
                        testsupport::random_valid_area_model(rng));
  }

  bool ok = true;
  std::string detail = "10 models, 1000 queries, knee slopes within 1e-06";
  int queries = 0;
  for (const auto& [energy, area] : models) {
    for (int k = 0; k < 100 && ok; ++k) {
      const double tech = rng.uniform(10.0, 130.0);
      const double enob = rng.uniform(3.0, 12.0);
      const double f1 = std::pow(10.0, rng.uniform(5.0, 10.0));
      const double f2 = f1 * std::pow(10.0, rng.uniform(0.0, 2.0));
      ++queries;

      // Energy never falls as throughput rises.
      if (predict_log_energy(energy, {tech, enob, f2}) <
          predict_log_energy(energy, {tech, enob, f1}) - 1e-12) {
        ok = false;
        detail = "energy decreased with throughput";
      }
      // The corner never rises with resolution.
      if (corner_throughput(energy, tech, enob + 1.0) >
          corner_throughput(energy, tech, enob) * (1.0 + 1e-9)) {
        ok = false;
        detail = "corner throughput increased with enob";
      }
      // Log energy is linear in enob on the flat region.
      const double flat = corner_throughput(energy, tech, 6.0) / 10.0;
      const double d1 = predict_log_energy(energy, {tech, 5.0, flat}) -
                        predict_log_energy(energy, {tech, 4.0, flat});
      const double d2 = predict_log_energy(energy, {tech, 6.0, flat}) -
                        predict_log_energy(energy, {tech, 5.0, flat});
      if (std::abs(d1 - d2) > 1e-9) {
        ok = false;
        detail = "log energy not linear in enob on the flat region";
      }
    }
    std::string why;
    if (ok && !check_curve_knee(energy, area, &why)) {
      ok = false;
      detail = why;
    }
    if (!ok) break;
  }
  (void)queries;
  report(4, "two-bound-shape", ok, detail);
}

// --- 5: EAP-optimal ADC count crosses over with throughput ---------------

void check_dse_crossover() {
  bool ok = true;
  std::string detail;
  try {
    const ModelDocument doc = load_model(kModelPath);
    const std::vector<Workload> workloads =
        load_workloads(kData + "/sample_workloads.json");
    const std::vector<ArchConfig> configs =
        load_arch_configs(kData + "/sample_configs.json");
    const std::vector<std::int64_t> ns = default_n_adcs_values();
    const std::vector<double> fs = default_throughput_values();
    const NAdcsSweep sweep =
        sweep_n_adcs(workloads.front(), configs.front(), ns, fs, doc.energy, doc.area);

    double max_ratio = 0.0;
    for (std::size_t i = 0; i < sweep.summary.size(); ++i) {
      max_ratio = std::max(max_ratio, sweep.summary[i].eap_ratio);
      if (i > 0 &&
          sweep.summary[i].best_n_adcs < sweep.summary[i - 1].best_n_adcs) {
        ok = false;
        detail = "argmin ADC count decreased with throughput";
      }
    }
    if (ok && sweep.summary.front().best_n_adcs >= sweep.summary.back().best_n_adcs) {
      ok = false;
      detail = "no crossover: argmin constant across the band";
    }
    if (ok && max_ratio < 2.0) {
      ok = false;
      detail = "max EAP ratio " + fmt(max_ratio) + " < 2";
    }
    if (ok) {
      detail = "argmin " + std::to_string(sweep.summary.front().best_n_adcs) + " -> " +
               std::to_string(sweep.summary.back().best_n_adcs) +
               " across the band; max EAP ratio " + fmt(max_ratio);
    }
  } catch (const Error& err) {
    ok = false;
    detail = err.what();
  }
  report(5, "dse-crossover", ok, detail);
}

// --- 6: sum-size tradeoff reverses between deep and shallow layers -------

void check_sum_size_tradeoff() {
  bool ok = true;
  std::string detail;
  try {
    const ModelDocument doc = load_model(kModelPath);
    const std::vector<ArchConfig> configs =
        load_arch_configs(kData + "/sample_configs.json");
    const std::vector<ArchConfig> presets = sum_size_presets(configs.front());
    const ArchConfig& s = presets.front();
    const ArchConfig& xl = presets.back();

    const Workload deep{"deep", 8192 * 512, 8192};
    const Workload shallow{"shallow", 128 * 512, 128};
    const double deep_s = evaluate(deep, s, doc.energy, doc.area).adc_energy_pj;
    const double deep_xl = evaluate(deep, xl, doc.energy, doc.area).adc_energy_pj;
    const double shallow_s = evaluate(shallow, s, doc.energy, doc.area).adc_energy_pj;
    const double shallow_xl = evaluate(shallow, xl, doc.energy, doc.area).adc_energy_pj;

    ok = deep_xl < deep_s && shallow_s < shallow_xl;
    detail = "deep: XL " + fmt(deep_xl) + " < S " + fmt(deep_s) + " pJ; shallow: S " +
             fmt(shallow_s) + " < XL " + fmt(shallow_xl) + " pJ";
  } catch (const Error& err) {
    ok = false;
    detail = err.what();
  }
  report(6, "sum-size-tradeoff", ok, detail);
}

// --- 7: calibration identities -------------------------------------------

void check_calibration_identities() {
  bool ok = true;
  std::string detail = "no-op file bit-identical; 2x scales predictions by 2";
  try {
    const ModelDocument doc = load_model(kModelPath);
    const std::string before = serialize_model(doc);

    // Calibrating to the model's own prediction changes nothing at all.
    const EnergyQueryPoint ref{32.0, 8.0, 1.3e9};
    ModelDocument noop = doc;
    noop.energy = calibrate_energy(doc.energy, ref, predict_energy_pj(doc.energy, ref));
    noop.area = calibrate_area(doc.area, 32.0, 1.3e9, 0.5,
                               predict_area(doc.area, 32.0, 1.3e9, 0.5));
    if (serialize_model(noop) != before) {
      ok = false;
      detail = "self-calibration changed the serialized document";
    }

    // Calibrating to 2x doubles every prediction and preserves argmins.
    const EnergyModel e2 =
        calibrate_energy(doc.energy, ref, 2.0 * predict_energy_pj(doc.energy, ref));
    const AreaModel a2 = calibrate_area(doc.area, 32.0, 1.3e9, 0.5,
                                        2.0 * predict_area(doc.area, 32.0, 1.3e9, 0.5));
    testsupport::Rng rng(99004);
    std::size_t argmin_before = 0, argmin_after = 0;
    double best_before = 0.0, best_after = 0.0;
    for (std::size_t k = 0; k < 50; ++k) {
      const EnergyQueryPoint q{rng.uniform(16.0, 130.0), rng.uniform(3.0, 13.0),
                               std::pow(10.0, rng.uniform(6.0, 10.5))};
      const double e_old = predict_energy_pj(doc.energy, q);
      const double e_new = predict_energy_pj(e2, q);
      if (rel_err(e_new, 2.0 * e_old) > 1e-12) {
        ok = false;
        detail = "energy 2x calibration is not an exact doubling";
      }
      const double a_old = predict_area(doc.area, q.tech_nm, q.per_adc_throughput_sps,
                                        e_old);
      const double a_new = predict_area(a2, q.tech_nm, q.per_adc_throughput_sps, e_old);
      if (a_new != 2.0 * a_old) {
        ok = false;
        detail = "area 2x calibration is not bit-exact doubling";
      }
      if (k == 0 || e_old < best_before) {
        best_before = e_old;
        argmin_before = k;
      }
      if (k == 0 || e_new < best_after) {
        best_after = e_new;
        argmin_after = k;
      }
    }
    if (argmin_before != argmin_after) {
      ok = false;
      detail = "2x calibration moved an argmin";
    }
  } catch (const Error& err) {
    ok = false;
    detail = err.what();
  }
  report(7, "calibration-identities", ok, detail);
}

// --- 8: every CLI verb is byte-deterministic ------------------------------

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool run_twice_identical(const std::string& args, const std::string& tag) {
  const std::string out1 = testsupport::temp_path("acc_" + tag + "_1.txt");
  const std::string out2 = testsupport::temp_path("acc_" + tag + "_2.txt");
  const std::string base = std::string(ADCTOOL_PATH) + " " + args;
  if (std::system((base + " > " + out1 + " 2>/dev/null").c_str()) == -1) return false;
  if (std::system((base + " > " + out2 + " 2>/dev/null").c_str()) == -1) return false;
  return slurp(out1) == slurp(out2) && !slurp(out1).empty();
}

void check_cli_determinism() {
  bool ok = true;
  std::string failed;

  const std::string fit_model = testsupport::temp_path("acc_fit_model.json");
  if (!run_twice_identical(
          "fit --dataset " + kData + "/sample_adcs.csv --output " + fit_model, "fit")) {
    ok = false;
    failed = "fit";
  }
  if (ok) {
    // The model file itself must also be reproduced byte for byte.
    const std::string first = slurp(fit_model);
    const int rc =
        std::system((std::string(ADCTOOL_PATH) + " fit --dataset " + kData +
                     "/sample_adcs.csv --output " + fit_model + " >/dev/null 2>/dev/null")
                        .c_str());
    if (rc != 0 || first.empty() || slurp(fit_model) != first) {
      ok = false;
      failed = "fit model file";
    }
  }
  if (ok && !run_twice_identical(
                "estimate --model " + kModelPath +
                    " --n-adcs 4 --total-throughput 5.2e9 --tech-nm 32 --enob 8",
                "estimate")) {
    ok = false;
    failed = "estimate";
  }
  if (ok && !run_twice_identical("export-curves --model " + kModelPath +
                                     " --throughput-min 1e8 --throughput-max 1e10",
                                 "curves")) {
    ok = false;
    failed = "export-curves";
  }
  if (ok && !run_twice_identical("dse --model " + kModelPath + " --workloads " + kData +
                                     "/sample_workloads.json --configs " + kData +
                                     "/sample_configs.json --mode n-adcs",
                                 "dse")) {
    ok = false;
    failed = "dse";
  }
  report(8, "cli-determinism", ok,
         ok ? "fit, estimate, export-curves, dse byte-identical across runs"
            : failed + " output differed between runs");
}

}  // namespace

int main() {
  check_reference_area();
  check_fit_recovery();
  check_correlation_ordering();
  check_two_bound_shape();
  check_dse_crossover();
  check_sum_size_tradeoff();
  check_calibration_identities();
  check_cli_determinism();
  return g_all_passed ? 0 : 1;
}
