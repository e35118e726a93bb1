// Regenerates data/sample_adcs.csv: a synthetic ADC survey drawn from known
// two-bound energy and power-law area surfaces with one-sided log-space
// scatter (real parts sit at or above the best-case envelopes). Fixed seed,
// fixed formatting; running it twice produces identical bytes.
//
//   make_sample_dataset [output.csv]

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <string>

namespace {

// Explicit scaling instead of std distributions so the stream is identical
// on every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  double normal(double sigma) {
    if (have_spare_) {
      have_spare_ = false;
      return sigma * spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * M_PI * u2;
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return sigma * radius * std::cos(angle);
  }

  std::int64_t index(std::int64_t n) {
    return static_cast<std::int64_t>(uniform() * static_cast<double>(n));
  }

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

std::string fmt6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

// Best-case energy surface: max of the floor and the throughput tradeoff.
double log_energy(double log_tech, double enob, double log_thr) {
  const double floor_bound = -4.4 + 1.0 * log_tech + 0.30 * enob;
  const double tradeoff = -14.6 + 1.0 * log_tech + 0.45 * enob + 1.0 * log_thr;
  return std::max(floor_bound, tradeoff);
}

// Best-case area surface with the published exponents.
double log_area(double log_tech, double log_thr, double log_energy_pj) {
  return std::log10(21.1) + 1.0 * log_tech + 0.2 * log_thr + 0.3 * log_energy_pj;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string path = argc > 1 ? argv[1] : "data/sample_adcs.csv";
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "cannot write " << path << "\n";
    return 1;
  }

  static const double kNodes[] = {16, 22, 28, 32, 45, 65, 90, 130};
  constexpr int kRows = 520;
  Rng rng(20250814);

  out << "id,tech_nm,enob,throughput_sps,energy_pj,area_um2\n";
  for (int i = 0; i < kRows; ++i) {
    const double tech = kNodes[rng.index(std::size(kNodes))];
    const double enob = rng.uniform(3.0, 13.0);
    const double log_thr = rng.uniform(5.5, 10.8);
    const double log_tech = std::log10(tech);

    const double energy_uplift = std::abs(rng.normal(0.25));
    const double log_e = log_energy(log_tech, enob, log_thr) + energy_uplift;

    const double area_uplift = std::abs(rng.normal(0.30));
    const double log_a = log_area(log_tech, log_thr, log_e) + area_uplift;
    const bool has_area = rng.uniform() < 0.8;

    char id[16];
    std::snprintf(id, sizeof(id), "s%03d", i + 1);
    out << id << ',' << fmt6(tech) << ',' << fmt6(enob) << ','
        << fmt6(std::pow(10.0, log_thr)) << ',' << fmt6(std::pow(10.0, log_e)) << ','
        << (has_area ? fmt6(std::pow(10.0, log_a)) : "") << "\n";
  }
  std::cout << "wrote " << kRows << " rows to " << path << "\n";
  return 0;
}
