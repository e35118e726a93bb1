#ifndef ADCMODEL_DATASET_HPP
#define ADCMODEL_DATASET_HPP

#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "adcmodel/record.hpp"

namespace adcmodel {

/// Maps canonical record fields to the column names used by a particular
/// survey export. Unmapped fields default to their canonical names, so a
/// canonically-labeled file loads with an empty schema.
struct ColumnSchema {
  std::unordered_map<std::string, std::string> columns;
  char delimiter = ',';

  /// Column name for a canonical field (id, tech_nm, enob, throughput_sps,
  /// energy_pj, area_um2).
  std::string column_for(const std::string& canonical_field) const;
};

/// Parses a schema sidecar file: one `canonical_field = column_name` per
/// line, `#` comments, optional `delimiter = ;` entry.
ColumnSchema load_schema(const std::string& path);

struct LoadResult {
  Corpus corpus;
  std::vector<RowDiagnostic> diagnostics;
};

/// Loads a delimited-text survey file. Every data row either becomes a
/// record or produces exactly one diagnostic. Throws CorpusError on a
/// missing file or when no row is valid, ConfigError when the schema names
/// a column absent from the header.
LoadResult load_corpus(const std::string& path, const ColumnSchema& schema = {});

/// Drops records that some other record beats by at least `slack` in one of
/// (lower energy, lower area, higher throughput, higher enob) while being no
/// worse in the rest. slack 1.0 keeps the exact Pareto front. The area axis
/// is compared only between records that both report area.
Corpus pareto_filter(const Corpus& corpus, double slack = 1.25);

struct NodeScalingOptions {
  double energy_exponent = 1.0;  // energy scales by (target/tech)^p
  double area_exponent = 1.0;
};

/// Returns a copy of `record` moved to `target_nm`, scaling energy and area
/// by the configured power of the node ratio. Throughput and ENOB are
/// process-normalized already in the survey sense and stay unchanged.
AdcRecord scale_to_node(const AdcRecord& record, double target_nm,
                        const NodeScalingOptions& options = {});

/// Default ENOB buckets used when grouping survey points for plots.
inline constexpr double kDefaultEnobBuckets[] = {4.0, 8.0, 12.0};

/// Nearest bucket; midpoints round to the lower bucket.
double bucket_enob(double enob, std::span<const double> buckets = kDefaultEnobBuckets);

}  // namespace adcmodel

#endif
