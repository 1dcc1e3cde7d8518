#pragma once

#include <iosfwd>
#include <stdexcept>
#include <optional>
#include <string>
#include <vector>

namespace dimdatum::cli {

inline constexpr const char* kToolName = "dimdatum";
inline constexpr const char* kToolVersion = "1.0.0";

enum ExitCode : int { kPass = 0, kMismatch = 1, kUsage = 2 };

struct RunConfig {
  std::string command;
  std::optional<long> n;
  std::optional<long> m;
  std::optional<long> bound;
  std::optional<std::string> cutoff;  // "p/q"
  std::optional<std::string> group;
  std::optional<std::string> subgroup;
  std::optional<std::string> tau;
  std::optional<std::string> rho;
  std::optional<std::string> lambda;
  std::optional<std::string> scaling;
  bool mismatch = false;
  std::string format;  // json | csv | text; empty picks the command default
  std::string out;     // empty: stdout
};

/// Thrown for invalid arguments; maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Runs one command. The report goes to cfg.out (or `out` when empty);
/// diagnostics go to `err`.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

int cmdVerifyLemma(const RunConfig& cfg, std::string& report);
int cmdVerifyProp(const RunConfig& cfg, std::string& report);
int cmdBranch(const RunConfig& cfg, std::string& report);
int cmdCompareBundles(const RunConfig& cfg, std::string& report);
int cmdSpectrum(const RunConfig& cfg, std::string& report);

/// argv front end (CLI11). Returns the process exit code.
int main(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace dimdatum::cli
