#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "projlab/limits.hpp"
#include "projlab/report/bound_report.hpp"

namespace projlab::lab {

struct ParamSpec {
  enum class Kind { integer, rational, text };
  std::string name;
  Kind kind = Kind::integer;
  std::string default_value;  // empty with required = true means mandatory
  bool required = false;
  std::string help;
};

struct ExperimentInfo {
  std::string name;
  std::string summary;
  std::vector<ParamSpec> params;
};

const std::vector<ExperimentInfo>& experiment_catalog();

struct ExperimentConfig {
  std::string experiment;
  std::map<std::string, std::string> params;  // validated, defaults filled
  std::uint64_t seed = 1;
  std::string output;
  std::uint64_t cap = kDefaultCap;
  unsigned jobs = 1;
};

// "key = value" lines; reserved keys: experiment, seed, output, cap.
// Everything else is an experiment parameter. ConfigError on any violation.
ExperimentConfig parse_experiment_config(const std::string& text);
ExperimentConfig read_experiment_config(const std::string& path);
// Checks params against the schema and fills defaults.
void validate(ExperimentConfig& config);

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct ExperimentResult {
  std::vector<BoundReport> reports;  // item order
  std::map<std::string, Table> tables;
  bool blocking_failure = false;
};

// Pure computation; deterministic in (config, seed) independent of jobs.
ExperimentResult execute(const ExperimentConfig& config);

struct SummaryRow {
  std::string bound_id;
  std::size_t instances = 0;
  std::size_t violations = 0;
  std::string max_ratio;
  std::string min_ratio;
};
std::vector<SummaryRow> summarize(const std::vector<BoundReport>& reports);

void write_jsonl(std::ostream& out, const std::vector<BoundReport>& reports);
void write_summary_csv(std::ostream& out, const std::vector<SummaryRow>& rows);
void write_table_csv(std::ostream& out, const Table& table);

// Executes and writes <output> (JSON lines), <stem>.csv (summary) and
// <stem>.<table>.csv. Returns 0 when no blocking report failed, 1 otherwise.
int run_experiment(const ExperimentConfig& config);

}  // namespace projlab::lab
