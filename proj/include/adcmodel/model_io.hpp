#ifndef ADCMODEL_MODEL_IO_HPP
#define ADCMODEL_MODEL_IO_HPP

#include <string>
#include <vector>

#include "adcmodel/area_model.hpp"
#include "adcmodel/energy_model.hpp"

namespace adcmodel {

inline constexpr int kModelFormatVersion = 1;

/// Where the fitted coefficients came from. `clock` is a caller-supplied
/// stamp (empty by default) so identical runs write identical files.
struct DocumentProvenance {
  std::string dataset_path;
  std::size_t dataset_rows = 0;
  std::string clock;
};

/// One user calibration applied to the document, kept for provenance.
/// Energy events record the reference (tech, enob, throughput); area events
/// record (tech, throughput, energy).
struct CalibrationEvent {
  std::string target;  // "energy" or "area"
  double tech_nm = 0.0;
  double throughput_sps = 0.0;
  double enob = 0.0;
  double energy_pj = 0.0;
  double measured = 0.0;
};

/// The on-disk container holding both models plus provenance.
struct ModelDocument {
  int format_version = kModelFormatVersion;
  EnergyModel energy;
  AreaModel area;
  DocumentProvenance provenance;
  std::vector<CalibrationEvent> calibrations;
};

/// Built-in model requiring no dataset: the published reference area
/// coefficients and default energy bounds representative of survey trends.
ModelDocument default_document();

/// JSON round-trip. Doubles are written in shortest round-trip form, so
/// save followed by load reproduces every coefficient bit-exactly.
void save_model(const ModelDocument& doc, const std::string& path);
ModelDocument load_model(const std::string& path);

std::string serialize_model(const ModelDocument& doc);
ModelDocument parse_model(const std::string& text);

}  // namespace adcmodel

#endif
