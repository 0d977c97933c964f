#include <optional>
#include <string>

#include <CLI11.hpp>

#include "vlike/jobs.hpp"

int main(int argc, char** argv) {
  CLI::App app{"vlike: exact computations for modules over the Virasoro-like algebra"};
  std::string config;
  std::string output;
  app.add_option("config", config, "job description (JSON)")->required()->check(CLI::ExistingFile);
  app.add_option("-o,--output", output, "override output.path; '-' writes to stdout");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return vlike::kExitConfig;
  }
  return vlike::run_job_file(config, output.empty() ? std::nullopt : std::optional<std::string>(output));
}
