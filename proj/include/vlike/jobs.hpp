#pragma once

// Batch jobs: a JSON description in, a CSV or JSON artifact out.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "vlike/functionals.hpp"
#include "vlike/hw_engine.hpp"

namespace vlike {

/// Schema violation in a job description.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class OutputFormat { Csv, Json };

struct JobConfig {
  std::string command;
  std::optional<nlohmann::json> functional;
  nlohmann::json params;
  std::string outpath;  // empty: caller decides
  OutputFormat format = OutputFormat::Json;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitPrecondition = 3;

JobConfig parse_job(const nlohmann::json& doc);

/// {"det": 1, "terms": [{"alpha": "p/q", "coeffs": ["p/q", ...]}, ...]}
ExpPolyFunctional parse_functional(const nlohmann::json& doc);
nlohmann::json functional_to_json(const ExpPolyFunctional& psi);

/// Artifact bytes for a validated job. Throws ConfigError or PreconditionError.
std::string render_job(const JobConfig& config);

std::string emit_dimension_table(std::vector<DimensionReport> reports, OutputFormat format);

/// Error document written when a job fails.
std::string error_json(const std::string& kind, const std::string& name, const std::string& message);

struct JobOutcome {
  int exitcode = kExitOk;
  std::string bytes;  // artifact on success, error JSON otherwise
};

/// Parses and runs a job, mapping failures onto exit codes. Writes nothing.
JobOutcome run_job(const nlohmann::json& doc);

/// run_job plus file output to config.output.path (or `outpath` if given).
int run_job_file(const std::string& configpath, const std::optional<std::string>& outpath);

}  // namespace vlike
