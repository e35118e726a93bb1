#ifndef ADCMODEL_TESTS_SYNTHETIC_HPP
#define ADCMODEL_TESTS_SYNTHETIC_HPP

// Shared test fixtures: a portable RNG (identical streams on every
// platform), corpus generators driven by known ground-truth models, and
// small independent oracles used to cross-check library results.

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "adcmodel/area_model.hpp"
#include "adcmodel/energy_model.hpp"
#include "adcmodel/record.hpp"

namespace testsupport {

// mt19937_64 with explicit scaling instead of std distributions, whose
// streams differ between standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform() {  // [0, 1)
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  double normal(double mean = 0.0, double sigma = 1.0) {
    if (have_spare_) {
      have_spare_ = false;
      return mean + sigma * spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * M_PI * u2;
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return mean + sigma * radius * std::cos(angle);
  }

  std::int64_t index(std::int64_t n) {
    return static_cast<std::int64_t>(uniform() * static_cast<double>(n));
  }

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// Ground-truth surface for corpus generation: the same two-bound shape the
// library fits, evaluated directly.
inline double true_log_energy(const adcmodel::EnergyModel& m, double tech_nm,
                              double enob, double throughput_sps) {
  const double lt = std::log10(tech_nm);
  const double lf = std::log10(throughput_sps);
  const double lo = m.min_bound.intercept + m.min_bound.tech_slope * lt +
                    m.min_bound.enob_slope * enob;
  const double hi = m.tradeoff_bound.intercept + m.tradeoff_bound.tech_slope * lt +
                    m.tradeoff_bound.enob_slope * enob +
                    m.tradeoff_bound.throughput_slope * lf;
  return std::max(lo, hi) + m.quantile_shift;
}

inline double true_log_area(const adcmodel::AreaModel& m, double tech_nm,
                            double throughput_sps, double energy_pj) {
  return std::log10(m.decile_factor) + m.log_intercept +
         m.tech_exponent * std::log10(tech_nm) +
         m.throughput_exponent * std::log10(throughput_sps) +
         m.energy_exponent * std::log10(energy_pj);
}

// The synthetic generator model used throughout: corner for an 8-bit ADC
// at 32nm lands at 1e9 conversions/s, well inside the sampled ranges.
inline adcmodel::EnergyModel make_true_energy_model() {
  adcmodel::EnergyModel m;
  m.min_bound = {-4.4, 1.0, 0.30};
  m.tradeoff_bound = {-14.6, 1.0, 0.45, 1.0};
  m.quantile_shift = 0.0;
  return m;
}

struct CorpusNoise {
  double energy_sigma = 0.0;  // log10 sigma added to energy
  double area_sigma = 0.0;    // log10 sigma added to area
};

// Draws records across several nodes, ENOBs 3..13 and six decades of
// throughput, energies/areas on the given ground-truth surfaces plus
// optional log-space noise.
inline adcmodel::Corpus make_corpus(const adcmodel::EnergyModel& energy_truth,
                                    const adcmodel::AreaModel& area_truth,
                                    std::size_t n, std::uint64_t seed,
                                    const CorpusNoise& noise = {}) {
  static const double kNodes[] = {16, 22, 28, 32, 45, 65, 90, 130};
  Rng rng(seed);
  adcmodel::Corpus corpus;
  corpus.provenance.source_path = "<synthetic>";
  corpus.provenance.rows_total = n;
  corpus.provenance.rows_valid = n;
  for (std::size_t i = 0; i < n; ++i) {
    adcmodel::AdcRecord r;
    r.id = "syn" + std::to_string(i);
    r.tech_nm = kNodes[rng.index(std::size(kNodes))];
    r.enob = rng.uniform(3.0, 13.0);
    r.throughput_sps = std::pow(10.0, rng.uniform(5.0, 11.0));
    const double log_e =
        true_log_energy(energy_truth, r.tech_nm, r.enob, r.throughput_sps) +
        rng.normal(0.0, noise.energy_sigma);
    r.energy_pj = std::pow(10.0, log_e);
    const double log_a =
        true_log_area(area_truth, r.tech_nm, r.throughput_sps, r.energy_pj) +
        rng.normal(0.0, noise.area_sigma);
    r.area_um2 = std::pow(10.0, log_a);
    corpus.records.push_back(std::move(r));
  }
  return corpus;
}

// Brute-force slack-dominance oracle written straight from the definition;
// kept independent of the library implementation.
inline bool oracle_dominates(const adcmodel::AdcRecord& s, const adcmodel::AdcRecord& r,
                             double slack) {
  if (r.area_um2 && !s.area_um2) return false;
  const bool both_area = s.area_um2 && r.area_um2;
  const bool no_worse = s.energy_pj <= r.energy_pj &&
                        s.throughput_sps >= r.throughput_sps && s.enob >= r.enob &&
                        (!both_area || *s.area_um2 <= *r.area_um2);
  if (!no_worse) return false;
  if (s.energy_pj < r.energy_pj && r.energy_pj >= slack * s.energy_pj) return true;
  if (s.throughput_sps > r.throughput_sps &&
      s.throughput_sps >= slack * r.throughput_sps) {
    return true;
  }
  if (s.enob > r.enob && s.enob >= slack * r.enob) return true;
  if (both_area && *s.area_um2 < *r.area_um2 && *r.area_um2 >= slack * *s.area_um2) {
    return true;
  }
  return false;
}

// log-log slope between consecutive points, the finite-difference oracle
// for exported curves.
inline double loglog_slope(double x0, double y0, double x1, double y1) {
  return (std::log10(y1) - std::log10(y0)) / (std::log10(x1) - std::log10(x0));
}

// Random valid energy models for property tests: slopes drawn inside the
// invariant region, tradeoff intercept solved so the 8-bit corner at 32nm
// lands between 1e6 and 1e10 conversions/s.
inline adcmodel::EnergyModel random_valid_energy_model(Rng& rng) {
  adcmodel::EnergyModel m;
  m.min_bound.intercept = rng.uniform(-6.0, 0.0);
  m.min_bound.tech_slope = rng.uniform(0.0, 1.5);
  m.min_bound.enob_slope = rng.uniform(0.1, 0.5);
  m.tradeoff_bound.tech_slope = rng.uniform(0.0, 1.5);
  m.tradeoff_bound.enob_slope = m.min_bound.enob_slope + rng.uniform(0.0, 0.4);
  m.tradeoff_bound.throughput_slope = rng.uniform(0.4, 1.5);
  const double corner_exponent = rng.uniform(6.0, 10.0);
  const double log_tech = std::log10(32.0);
  m.tradeoff_bound.intercept =
      m.min_bound.intercept +
      (m.min_bound.tech_slope - m.tradeoff_bound.tech_slope) * log_tech +
      (m.min_bound.enob_slope - m.tradeoff_bound.enob_slope) * 8.0 -
      m.tradeoff_bound.throughput_slope * corner_exponent;
  m.quantile_shift = rng.uniform(-0.5, 0.2);
  return m;
}

inline adcmodel::AreaModel random_valid_area_model(Rng& rng) {
  adcmodel::AreaModel m;
  m.log_intercept = rng.uniform(0.0, 2.0);
  m.tech_exponent = rng.uniform(0.3, 1.5);
  m.throughput_exponent = rng.uniform(0.05, 0.4);
  m.energy_exponent = rng.uniform(0.1, 0.5);
  m.decile_factor = rng.uniform(0.2, 1.0);
  return m;
}

}  // namespace testsupport

#endif
