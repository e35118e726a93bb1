#include "adcmodel/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "adcmodel/errors.hpp"

namespace adcmodel {

namespace {

const char* const kCanonicalFields[] = {"id",             "tech_nm",
                                        "enob",           "throughput_sps",
                                        "energy_pj",      "area_um2"};

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

// Splits one delimited line. Double-quoted fields may contain the delimiter;
// doubled quotes inside a quoted field escape a literal quote.
std::vector<std::string> split_line(const std::string& line, char delimiter) {
  std::vector<std::string> fields;
  std::string current;
  bool in_quotes = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          current.push_back('"');
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        current.push_back(c);
      }
    } else if (c == '"') {
      in_quotes = true;
    } else if (c == delimiter) {
      fields.push_back(trim(current));
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  fields.push_back(trim(current));
  return fields;
}

bool parse_double(const std::string& text, double& out) {
  const std::string t = trim(text);
  if (t.empty()) return false;
  const char* begin = t.data();
  const char* end = begin + t.size();
  auto [ptr, ec] = std::from_chars(begin, end, out);
  return ec == std::errc() && ptr == end;
}

}  // namespace

std::string format_diagnostic(const RowDiagnostic& d) {
  std::ostringstream os;
  os << "row " << d.row << ": " << d.field << ": " << d.reason;
  return os.str();
}

std::string ColumnSchema::column_for(const std::string& canonical_field) const {
  const auto it = columns.find(canonical_field);
  return it != columns.end() ? it->second : canonical_field;
}

ColumnSchema load_schema(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("schema file not found: " + path);
  }
  ColumnSchema schema;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(path + ":" + std::to_string(lineno) +
                        ": expected 'field = column'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "delimiter") {
      if (value.size() != 1) {
        throw ConfigError(path + ":" + std::to_string(lineno) +
                          ": delimiter must be a single character");
      }
      schema.delimiter = value[0];
      continue;
    }
    const bool known =
        std::any_of(std::begin(kCanonicalFields), std::end(kCanonicalFields),
                    [&](const char* f) { return key == f; });
    if (!known) {
      throw ConfigError(path + ":" + std::to_string(lineno) +
                        ": unknown schema key '" + key + "'");
    }
    if (value.empty()) {
      throw ConfigError(path + ":" + std::to_string(lineno) +
                        ": empty column name for '" + key + "'");
    }
    schema.columns[key] = value;
  }
  return schema;
}

LoadResult load_corpus(const std::string& path, const ColumnSchema& schema) {
  std::ifstream in(path);
  if (!in) {
    throw CorpusError("dataset file not found: " + path);
  }

  std::string header_line;
  if (!std::getline(in, header_line)) {
    throw CorpusError("dataset file is empty: " + path);
  }
  const std::vector<std::string> header = split_line(header_line, schema.delimiter);

  // Resolve canonical field -> column index. Area is optional.
  std::unordered_map<std::string, std::size_t> index;
  for (const char* field : kCanonicalFields) {
    const std::string column = schema.column_for(field);
    const auto it = std::find(header.begin(), header.end(), column);
    if (it == header.end()) {
      if (std::string(field) == "area_um2" && schema.columns.count(field) == 0) {
        continue;  // area column simply absent
      }
      throw ConfigError("column '" + column + "' (for field '" + field +
                        "') not found in " + path);
    }
    index[field] = static_cast<std::size_t>(it - header.begin());
  }

  LoadResult result;
  result.corpus.provenance.source_path = path;
  std::unordered_set<std::string> seen_ids;

  const auto reject = [&](std::size_t row, const std::string& field,
                          const std::string& reason) {
    result.diagnostics.push_back({row, field, reason});
  };

  std::string line;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;  // blank lines are not data rows
    ++row;
    const std::vector<std::string> cells = split_line(line, schema.delimiter);
    if (cells.size() != header.size()) {
      reject(row, "line",
             "expected " + std::to_string(header.size()) + " fields, got " +
                 std::to_string(cells.size()));
      continue;
    }

    AdcRecord rec;
    rec.id = cells[index.at("id")];
    if (rec.id.empty()) {
      reject(row, "id", "empty id");
      continue;
    }
    if (!seen_ids.insert(rec.id).second) {
      reject(row, "id", "duplicate id '" + rec.id + "'");
      continue;
    }

    const auto read_positive = [&](const char* field, double& out) {
      const std::string& cell = cells[index.at(field)];
      if (!parse_double(cell, out)) {
        reject(row, field, "not a number: '" + cell + "'");
        return false;
      }
      if (!std::isfinite(out) || out <= 0.0) {
        reject(row, field, "must be finite and > 0, got '" + cell + "'");
        return false;
      }
      return true;
    };

    const bool ok = read_positive("tech_nm", rec.tech_nm) &&
                    read_positive("enob", rec.enob) &&
                    read_positive("throughput_sps", rec.throughput_sps) &&
                    read_positive("energy_pj", rec.energy_pj);
    if (!ok) {
      seen_ids.erase(rec.id);
      continue;
    }
    if (rec.enob < kEnobMin || rec.enob > kEnobMax) {
      reject(row, "enob",
             "outside [" + std::to_string(kEnobMin) + ", " +
                 std::to_string(kEnobMax) + "]");
      seen_ids.erase(rec.id);
      continue;
    }
    if (index.count("area_um2")) {
      const std::string& cell = cells[index.at("area_um2")];
      if (!trim(cell).empty()) {
        double area = 0.0;
        if (!read_positive("area_um2", area)) {
          seen_ids.erase(rec.id);
          continue;
        }
        rec.area_um2 = area;
      }
    }
    result.corpus.records.push_back(std::move(rec));
  }

  result.corpus.provenance.rows_total = row;
  result.corpus.provenance.rows_valid = result.corpus.records.size();
  if (result.corpus.records.empty()) {
    throw CorpusError("no valid rows in " + path + " (" +
                      std::to_string(result.diagnostics.size()) + " rejected)");
  }
  return result;
}

namespace {

// True when `s` beats `r` by at least `slack` on one axis and is no worse on
// every comparable axis. Axes: lower energy, lower area, higher throughput,
// higher enob.
bool dominates(const AdcRecord& s, const AdcRecord& r, double slack) {
  const bool compare_area = s.area_um2.has_value() && r.area_um2.has_value();
  if (r.area_um2.has_value() && !s.area_um2.has_value()) {
    return false;  // s's area unknown, cannot certify "no worse"
  }
  if (s.energy_pj > r.energy_pj) return false;
  if (s.throughput_sps < r.throughput_sps) return false;
  if (s.enob < r.enob) return false;
  if (compare_area && *s.area_um2 > *r.area_um2) return false;

  // "better by slack": for minimized axes the loser is >= slack x the
  // winner, for maximized axes the winner is >= slack x the loser.
  const auto lower_by_slack = [slack](double winner, double loser) {
    return winner < loser && loser >= slack * winner;
  };
  if (lower_by_slack(s.energy_pj, r.energy_pj)) return true;
  if (lower_by_slack(r.throughput_sps, s.throughput_sps)) return true;
  if (lower_by_slack(r.enob, s.enob)) return true;
  if (compare_area && lower_by_slack(*s.area_um2, *r.area_um2)) return true;
  return false;
}

}  // namespace

Corpus pareto_filter(const Corpus& corpus, double slack) {
  if (corpus.records.empty()) {
    throw CorpusError("pareto_filter: empty corpus");
  }
  if (slack < 1.0) {
    throw ConfigError("pareto_filter: slack must be >= 1.0");
  }
  Corpus out;
  out.provenance = corpus.provenance;
  for (const AdcRecord& r : corpus.records) {
    const bool dominated =
        std::any_of(corpus.records.begin(), corpus.records.end(),
                    [&](const AdcRecord& s) {
                      return &s != &r && dominates(s, r, slack);
                    });
    if (!dominated) {
      out.records.push_back(r);
    }
  }
  out.provenance.rows_valid = out.records.size();
  return out;
}

AdcRecord scale_to_node(const AdcRecord& record, double target_nm,
                        const NodeScalingOptions& options) {
  if (!(target_nm > 0.0) || !std::isfinite(target_nm)) {
    throw ConfigError("scale_to_node: target node must be > 0");
  }
  AdcRecord out = record;
  const double ratio = target_nm / record.tech_nm;
  out.tech_nm = target_nm;
  out.energy_pj = record.energy_pj * std::pow(ratio, options.energy_exponent);
  if (record.area_um2) {
    out.area_um2 = *record.area_um2 * std::pow(ratio, options.area_exponent);
  }
  return out;
}

double bucket_enob(double enob, std::span<const double> buckets) {
  if (buckets.empty()) {
    throw ConfigError("bucket_enob: empty bucket set");
  }
  double best = buckets[0];
  double best_dist = std::abs(enob - buckets[0]);
  for (const double b : buckets.subspan(1)) {
    const double dist = std::abs(enob - b);
    if (dist < best_dist) {  // ties keep the earlier (lower) bucket
      best = b;
      best_dist = dist;
    }
  }
  return best;
}

}  // namespace adcmodel
