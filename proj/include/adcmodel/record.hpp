#ifndef ADCMODEL_RECORD_HPP
#define ADCMODEL_RECORD_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace adcmodel {

/// One published ADC design point from a survey export.
/// Records without a reported area are usable for energy fitting only.
struct AdcRecord {
  std::string id;
  double tech_nm = 0.0;         // technology node, nanometers
  double enob = 0.0;            // effective number of bits
  double throughput_sps = 0.0;  // conversions per second
  double energy_pj = 0.0;       // energy per conversion, picojoules
  std::optional<double> area_um2;
};

/// ENOB is accepted within this closed interval; rows outside are rejected.
inline constexpr double kEnobMin = 1.0;
inline constexpr double kEnobMax = 16.0;

struct CorpusProvenance {
  std::string source_path;
  std::size_t rows_total = 0;  // data rows seen in the file
  std::size_t rows_valid = 0;  // rows that became records
};

struct Corpus {
  std::vector<AdcRecord> records;
  CorpusProvenance provenance;
};

/// One rejected input row. Rendered as "row <n>: <field>: <reason>"
/// with `row` counting data rows from 1 (header excluded).
struct RowDiagnostic {
  std::size_t row = 0;
  std::string field;
  std::string reason;
};

std::string format_diagnostic(const RowDiagnostic& d);

}  // namespace adcmodel

#endif
