#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sclaw/config.hpp"

namespace sclaw {

/// CSV table: header row, then rows of already formatted cells.
struct Table {
  std::string name;  // file stem
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void add(std::vector<std::string> row) { rows.push_back(std::move(row)); }
  void write(std::ostream& os) const;
};

/// 17 significant digits, "nan"/"inf" spelled out.
std::string csv_number(double x);

struct AnalysisOutcome {
  std::string name;
  bool passed = false;
  std::string detail;  // one-line summary of what was checked
  std::vector<Table> tables;
};

AnalysisOutcome analyze_times(const RunConfig& config);
AnalysisOutcome analyze_validate(const RunConfig& config, unsigned threads);
AnalysisOutcome analyze_seminorm(const RunConfig& config, unsigned threads);
AnalysisOutcome analyze_nondegeneracy(const RunConfig& config, unsigned threads);
AnalysisOutcome analyze_lemmas(const RunConfig& config);
AnalysisOutcome analyze_tiling(const RunConfig& config);

/// Dispatches on an entry of known_analyses().
AnalysisOutcome run_analysis(const std::string& name, const RunConfig& config, unsigned threads);

struct RunReport {
  std::string config_hash;
  std::string version;
  std::vector<AnalysisOutcome> outcomes;

  bool passed() const;
};

std::string library_version();

/// Runs the requested analyses in order, writes <out>/<table>.csv for every table and <out>/manifest.
RunReport run(const RunConfig& config, unsigned threads);

void write_manifest(std::ostream& os, const RunReport& report);

/// Writes the tables of one outcome into `dir` (created if missing).
void write_tables(const std::string& dir, const AnalysisOutcome& outcome);

}  // namespace sclaw
